"""Command-line interface.

Usage:
    paulicomp check-pair --a 1,0,0 --b 0,0,1
    paulicomp check-set --vectors dirs.csv --json
    paulicomp pvm --dir 0,0,1
    paulicomp triple --first 0,0,1 --seed 3
    paulicomp simulate --a 1,0,0 --b 0,0,1 --shots 100000 --seed 7
    paulicomp sweep --steps 180 --out sweep.csv

Exit codes: 0 when the checked property holds (or the command succeeded),
1 when a complementarity verdict is false, 2 on input errors.
"""

from __future__ import annotations

import argparse
import math
import sys
from pathlib import Path


from . import report
from .algebra import E1, BlochDirection, InputError, adjoint, max_abs
from .complementarity import (
    DEFAULT_TOL,
    check_pair_exhaustive,
    check_set,
    gram_residual,
    orthonormal_triple,
)
from .simulation import OUTCOMES, empirical_conditionals, exact_conditionals, simulate
from .spectral import eigenvector, outer_projector, pvm

EXIT_OK = 0
EXIT_FALSE = 1
EXIT_INPUT = 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_INPUT)


def parse_triple(text: str) -> tuple[float, float, float]:
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != 3:
        raise ValueError(f"expected 3 comma-separated numbers, got {len(parts)}")
    try:
        values = tuple(float(p) for p in parts)
    except ValueError:
        raise ValueError(f"not a number in {text!r}") from None
    if not all(math.isfinite(v) for v in values):
        raise ValueError(f"non-finite component in {text!r}")
    return values


def _direction_arg(text: str):
    try:
        return parse_triple(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _positive_float(text: str) -> float:
    try:
        x = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not (x > 0 and math.isfinite(x)):
        raise argparse.ArgumentTypeError(f"must be positive, got {text!r}")
    return x


def _nonneg_int(text: str) -> int:
    try:
        x = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if x < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {text!r}")
    return x


def _to_direction(values, flag: str, normalize: bool) -> BlochDirection:
    try:
        return BlochDirection.from_vector(values, normalize=normalize)
    except InputError as exc:
        hint = "" if normalize else " (pass --normalize to rescale)"
        raise InputError(f"{flag}: {exc}{hint}") from None


def read_vectors(path: Path) -> list[tuple[float, float, float]]:
    """One ``x,y,z`` per line; blank lines and ``#`` comments are skipped."""
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"--vectors: cannot read {path}: {exc.strerror}") from None
    out = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        try:
            out.append(parse_triple(line))
        except ValueError as exc:
            raise InputError(f"--vectors: {path}, line {lineno}: {exc}") from None
    return out


def _g(x: float) -> str:
    return f"{x:.6g}"


def _print_pair_table(r) -> None:
    print(f"alpha = ({', '.join(_g(c) for c in r.alpha.components)})")
    print(f"beta  = ({', '.join(_g(c) for c in r.beta.components)})")
    print(f"{'S1':>8} {'S2':>8} {'trace':>12} {'target':>12} {'deviation':>12}")
    for e in r.entries:
        flag = "  <-- fails" if e.deviation > r.tol else ""
        print(f"{e.s1.label():>8} {e.s2.label():>8} {_g(e.trace_value):>12} "
              f"{_g(e.target):>12} {_g(e.deviation):>12}{flag}")
    print(f"inner product <alpha,beta> = {_g(r.inner_product)}")
    print(f"max deviation = {_g(r.max_deviation)} (tol {_g(r.tol)})")
    print(f"verdict: {'complementary' if r.verdict else 'NOT complementary'}")


def cmd_check_pair(args) -> int:
    a = _to_direction(args.a, "--a", args.normalize)
    b = _to_direction(args.b, "--b", args.normalize)
    r = check_pair_exhaustive(a, b, args.tol)
    if args.json:
        print(report.dumps(report.pair_doc(r)))
    else:
        _print_pair_table(r)
    return EXIT_OK if r.verdict else EXIT_FALSE


def cmd_check_set(args) -> int:
    raw = list(args.v or [])
    if args.vectors is not None:
        raw.extend(read_vectors(args.vectors))
    if len(raw) < 2:
        raise InputError(f"need at least 2 directions, got {len(raw)}")
    dirs = [_to_direction(v, f"vector {k}", args.normalize) for k, v in enumerate(raw)]
    r = check_set(dirs, args.tol)
    if args.json:
        print(report.dumps(report.set_doc(r)))
    else:
        print(f"{'i':>3} {'j':>3} {'inner':>12} {'max dev':>12}  verdict")
        for (i, j), rep in zip(r.pairs, r.pair_reports):
            print(f"{i:>3} {j:>3} {_g(rep.inner_product):>12} {_g(rep.max_deviation):>12}  "
                  f"{'yes' if rep.verdict else 'no'}")
        if r.first_failure is not None:
            print(f"first failing pair: {r.pairs[r.first_failure]}")
        print(f"verdict: {'complementary' if r.verdict else 'NOT complementary'}")
    return EXIT_OK if r.verdict else EXIT_FALSE


def cmd_pvm(args) -> int:
    d = _to_direction(args.dir, "--dir", args.normalize)
    m = pvm(d)
    psi = {s: eigenvector(d, s) for s in OUTCOMES}
    residuals = {}
    for name, p in (("e_plus", m.e_plus), ("e_minus", m.e_minus)):
        residuals[f"{name}_idempotent"] = max_abs(p @ p - p)
        residuals[f"{name}_hermitian"] = max_abs(p - adjoint(p))
    residuals["outer_vs_closed_form"] = max(
        max_abs(outer_projector(psi[1]) - m.e_plus),
        max_abs(outer_projector(psi[-1]) - m.e_minus),
    )
    if args.json:
        print(report.dumps(report.pvm_doc(d, m.e_plus, m.e_minus, psi[1], psi[-1], residuals)))
        return EXIT_OK

    def show(mat):
        return "[" + ", ".join("[" + ", ".join(_g_c(z) for z in row) + "]" for row in mat) + "]"

    print(f"direction = ({', '.join(_g(c) for c in d.components)})")
    print(f"E({{+1}}) = {show(m.e_plus)}")
    print(f"E({{-1}}) = {show(m.e_minus)}")
    print(f"psi+ = ({', '.join(_g_c(z) for z in psi[1])})")
    print(f"psi- = ({', '.join(_g_c(z) for z in psi[-1])})")
    for k, v in residuals.items():
        print(f"residual {k}: {v:.3e}")
    return EXIT_OK


def _g_c(z: complex) -> str:
    z = complex(z)
    if z.imag == 0:
        return _g(z.real)
    return f"{_g(z.real)}{'+' if z.imag >= 0 else '-'}{_g(abs(z.imag))}i"


def cmd_triple(args) -> int:
    first = None if args.first is None else _to_direction(args.first, "--first", args.normalize)
    dirs = orthonormal_triple(first, args.seed)
    res = gram_residual(dirs)
    if args.json:
        print(report.dumps(report.triple_doc(dirs, args.seed, res)))
    else:
        for name, d in zip(("alpha", "beta", "gamma"), dirs):
            print(f"{name:<5} = ({', '.join(f'{c:.17g}' for c in d.components)})")
        print(f"gram residual max|G - I| = {res:.3e}")
    return EXIT_OK


def cmd_simulate(args) -> int:
    if args.shots < 1:
        raise InputError(f"--shots: must be >= 1, got {args.shots}")
    a = _to_direction(args.a, "--a", args.normalize)
    b = _to_direction(args.b, "--b", args.normalize)
    h = simulate(a, b, args.shots, args.seed)
    exact = exact_conditionals(a, b)
    try:
        emp = empirical_conditionals(h)
    except InputError as exc:
        raise InputError(f"--shots: {exc}") from None
    if args.json:
        print(report.dumps(report.simulation_doc(a, b, h, args.seed, emp, exact)))
        return EXIT_OK
    print(f"shots = {h.shots}, seed = {args.seed}")
    print(f"{'a':>3} {'b':>3} {'count':>8} {'p(b|a) emp':>12} {'p(b|a) exact':>13}")
    for (x, y), n in h.counts.items():
        print(f"{x:>+3d} {y:>+3d} {n:>8d} {_g(emp[(x, y)]):>12} {_g(exact[(x, y)]):>13}")
    return EXIT_OK


def sweep_rows(steps: int):
    """Angle sweep alpha = e1, beta = (cos t, sin t, 0) for t = k pi / steps.

    Multiples of pi/2 use exact cosines so the orthogonal grid point gives
    a deviation of exactly zero.
    """
    rows = []
    for k in range(steps + 1):
        theta = math.pi * k / steps
        if (2 * k) % steps == 0:
            quarter = (2 * k) // steps
            c, s = ((1.0, 0.0), (0.0, 1.0), (-1.0, 0.0))[quarter]
        else:
            c, s = math.cos(theta), math.sin(theta)
        beta = BlochDirection.from_vector((c, s, 0.0))
        r = check_pair_exhaustive(E1, beta)
        rows.append((theta, r.inner_product, r.max_deviation))
    return rows


def cmd_sweep(args) -> int:
    if args.steps < 1:
        raise InputError(f"--steps: must be >= 1, got {args.steps}")
    lines = [",".join(report.SWEEP_HEADER)] + [report.csv_row(r) for r in sweep_rows(args.steps)]
    text = "\n".join(lines) + "\n"
    if args.out is None:
        sys.stdout.write(text)
    else:
        try:
            Path(args.out).write_text(text, encoding="utf-8")
        except OSError as exc:
            raise InputError(f"--out: cannot write {args.out}: {exc.strerror}") from None
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="paulicomp", description="Accardi complementarity of Pauli observables.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp, json=True):
        sp.add_argument("--normalize", action="store_true", help="rescale non-unit directions")
        if json:
            sp.add_argument("--json", action="store_true", help="emit a JSON document")

    sp = sub.add_parser("check-pair", help="check a pair over all 16 subset pairs")
    sp.add_argument("--a", type=_direction_arg, required=True, metavar="X,Y,Z")
    sp.add_argument("--b", type=_direction_arg, required=True, metavar="X,Y,Z")
    sp.add_argument("--tol", type=_positive_float, default=DEFAULT_TOL)
    common(sp)
    sp.set_defaults(func=cmd_check_pair)

    sp = sub.add_parser("check-set", help="check every pair of a set of directions")
    sp.add_argument("--vectors", type=Path, metavar="FILE")
    sp.add_argument("--v", type=_direction_arg, action="append", metavar="X,Y,Z")
    sp.add_argument("--tol", type=_positive_float, default=DEFAULT_TOL)
    common(sp)
    sp.set_defaults(func=cmd_check_set)

    sp = sub.add_parser("pvm", help="print spectral projections and eigenvectors")
    sp.add_argument("--dir", type=_direction_arg, required=True, metavar="X,Y,Z")
    common(sp)
    sp.set_defaults(func=cmd_pvm)

    sp = sub.add_parser("triple", help="build an orthonormal (complementary) triple")
    sp.add_argument("--first", type=_direction_arg, metavar="X,Y,Z")
    sp.add_argument("--seed", type=_nonneg_int, required=True)
    common(sp)
    sp.set_defaults(func=cmd_triple)

    sp = sub.add_parser("simulate", help="simulate sequential spin measurements")
    sp.add_argument("--a", type=_direction_arg, required=True, metavar="X,Y,Z")
    sp.add_argument("--b", type=_direction_arg, required=True, metavar="X,Y,Z")
    sp.add_argument("--shots", type=int, required=True)
    sp.add_argument("--seed", type=_nonneg_int, required=True)
    common(sp)
    sp.set_defaults(func=cmd_simulate)

    sp = sub.add_parser("sweep", help="CSV of max deviation versus angle")
    sp.add_argument("--steps", type=int, required=True)
    sp.add_argument("--out", metavar="FILE")
    sp.set_defaults(func=cmd_sweep)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"paulicomp {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    raise SystemExit(main())
