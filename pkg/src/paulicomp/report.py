"""Machine-readable rendering of reports (JSON documents and CSV rows).

Floats are written with 17 significant digits so that parse -> serialize
is byte-identical. Every document carries ``"schema": 1`` and a ``kind``.
"""

from __future__ import annotations

import json
import math

from .complementarity import ComplementarityReport, SetReport
from .simulation import ConditionalTable, JointHistogram

SCHEMA_VERSION = 1


def fmt_float(x: float) -> str:
    if not math.isfinite(x):
        raise ValueError(f"cannot serialize non-finite float {x!r}")
    s = f"{x:.17g}"
    if not any(ch in s for ch in ".en"):
        s += ".0"
    return s


def dumps(obj, indent: int = 2, _level: int = 0) -> str:
    """``json.dumps`` with fixed 17-digit floats; key order is preserved."""
    pad = " " * (indent * (_level + 1))
    end = " " * (indent * _level)
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        return fmt_float(obj)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{pad}{json.dumps(str(k))}: {dumps(v, indent, _level + 1)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + end + "}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        items = [pad + dumps(v, indent, _level + 1) for v in obj]
        return "[\n" + ",\n".join(items) + "\n" + end + "]"
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def _vec(d) -> list[float]:
    return [float(c) for c in d.components]


def _complex(z: complex) -> list[float]:
    return [float(z.real), float(z.imag)]


def matrix_doc(m) -> list:
    """Row-major 2x2 matrix as [[re, im], ...] pairs."""
    return [[_complex(complex(m[i, j])) for j in range(2)] for i in range(2)]


def pair_doc(r: ComplementarityReport, envelope: bool = True) -> dict:
    body = {
        "alpha": _vec(r.alpha),
        "beta": _vec(r.beta),
        "inner_product": float(r.inner_product),
        "tol": float(r.tol),
        "max_deviation": float(r.max_deviation),
        "verdict": bool(r.verdict),
        "entries": [
            {
                "s1": e.s1.label(),
                "s2": e.s2.label(),
                "trace": e.trace_value,
                "target": e.target,
                "deviation": e.deviation,
            }
            for e in r.entries
        ],
    }
    if not envelope:
        return body
    return {"schema": SCHEMA_VERSION, "kind": "pair", **body}


def set_doc(r: SetReport) -> dict:
    return {
        "schema": SCHEMA_VERSION,
        "kind": "set",
        "directions": [_vec(d) for d in r.directions],
        "verdict": bool(r.verdict),
        "first_failure": None if r.first_failure is None else list(r.pairs[r.first_failure]),
        "pairs": [
            {"i": i, "j": j, **pair_doc(rep, envelope=False)}
            for (i, j), rep in zip(r.pairs, r.pair_reports)
        ],
    }


def _table(t: ConditionalTable) -> dict:
    return {
        "marginals": {f"{a:+d}": float(p) for a, p in t.marginals.items()},
        "conditionals": {f"{b:+d}|{a:+d}": float(p) for (a, b), p in t.conditionals.items()},
    }


def simulation_doc(alpha, beta, h: JointHistogram, seed: int,
                   empirical: ConditionalTable, exact: ConditionalTable) -> dict:
    return {
        "schema": SCHEMA_VERSION,
        "kind": "simulation",
        "alpha": _vec(alpha),
        "beta": _vec(beta),
        "seed": seed,
        "shots": h.shots,
        "counts": {f"{a:+d},{b:+d}": n for (a, b), n in h.counts.items()},
        "empirical": _table(empirical),
        "exact": _table(exact),
    }


def pvm_doc(dir, e_plus, e_minus, psi_plus, psi_minus, residuals: dict) -> dict:
    return {
        "schema": SCHEMA_VERSION,
        "kind": "pvm",
        "direction": _vec(dir),
        "e_plus": matrix_doc(e_plus),
        "e_minus": matrix_doc(e_minus),
        "psi_plus": [_complex(complex(z)) for z in psi_plus],
        "psi_minus": [_complex(complex(z)) for z in psi_minus],
        "residuals": {k: float(v) for k, v in residuals.items()},
    }


def triple_doc(dirs, seed: int, residual: float) -> dict:
    return {
        "schema": SCHEMA_VERSION,
        "kind": "triple",
        "seed": seed,
        "directions": [_vec(d) for d in dirs],
        "gram_residual": float(residual),
    }


SWEEP_HEADER = ("theta", "inner_product", "max_deviation")


def csv_row(values) -> str:
    return ",".join(fmt_float(float(v)) for v in values)


_num = {"type": "number"}
_vec3 = {"type": "array", "items": _num, "minItems": 3, "maxItems": 3}
_cplx = {"type": "array", "items": _num, "minItems": 2, "maxItems": 2}
_subset = {"enum": ["{}", "{-1}", "{+1}", "{-1,+1}"]}
_prob_table = {
    "type": "object",
    "required": ["marginals", "conditionals"],
    "properties": {
        "marginals": {
            "type": "object",
            "required": ["+1", "-1"],
            "additionalProperties": False,
            "properties": {"+1": _num, "-1": _num},
        },
        "conditionals": {
            "type": "object",
            "required": ["+1|+1", "-1|+1", "+1|-1", "-1|-1"],
            "additionalProperties": False,
            "patternProperties": {r"^[+-]1\|[+-]1$": _num},
        },
    },
}
_pair_body = {
    "alpha": _vec3,
    "beta": _vec3,
    "inner_product": _num,
    "tol": {"type": "number", "exclusiveMinimum": 0},
    "max_deviation": {"type": "number", "minimum": 0},
    "verdict": {"type": "boolean"},
    "entries": {
        "type": "array",
        "minItems": 16,
        "maxItems": 16,
        "items": {
            "type": "object",
            "required": ["s1", "s2", "trace", "target", "deviation"],
            "additionalProperties": False,
            "properties": {
                "s1": _subset,
                "s2": _subset,
                "trace": {"type": "number", "minimum": 0, "maximum": 1},
                "target": {"type": "number", "minimum": 0, "maximum": 1},
                "deviation": {"type": "number", "minimum": 0},
            },
        },
    },
}
_envelope = {"schema": {"const": SCHEMA_VERSION}}
_matrix = {"type": "array", "minItems": 2, "maxItems": 2,
           "items": {"type": "array", "minItems": 2, "maxItems": 2, "items": _cplx}}

SCHEMAS = {
    "pair": {
        "type": "object",
        "required": ["schema", "kind", *_pair_body],
        "additionalProperties": False,
        "properties": {**_envelope, "kind": {"const": "pair"}, **_pair_body},
    },
    "set": {
        "type": "object",
        "required": ["schema", "kind", "directions", "verdict", "first_failure", "pairs"],
        "additionalProperties": False,
        "properties": {
            **_envelope,
            "kind": {"const": "set"},
            "directions": {"type": "array", "minItems": 2, "items": _vec3},
            "verdict": {"type": "boolean"},
            "first_failure": {
                "oneOf": [
                    {"type": "null"},
                    {"type": "array", "items": {"type": "integer", "minimum": 0},
                     "minItems": 2, "maxItems": 2},
                ]
            },
            "pairs": {
                "type": "array",
                "items": {
                    "type": "object",
                    "required": ["i", "j", *_pair_body],
                    "additionalProperties": False,
                    "properties": {"i": {"type": "integer"}, "j": {"type": "integer"}, **_pair_body},
                },
            },
        },
    },
    "simulation": {
        "type": "object",
        "required": ["schema", "kind", "alpha", "beta", "seed", "shots", "counts", "empirical", "exact"],
        "additionalProperties": False,
        "properties": {
            **_envelope,
            "kind": {"const": "simulation"},
            "alpha": _vec3,
            "beta": _vec3,
            "seed": {"type": "integer"},
            "shots": {"type": "integer", "minimum": 1},
            "counts": {
                "type": "object",
                "required": ["+1,+1", "+1,-1", "-1,+1", "-1,-1"],
                "additionalProperties": False,
                "patternProperties": {r"^[+-]1,[+-]1$": {"type": "integer", "minimum": 0}},
            },
            "empirical": _prob_table,
            "exact": _prob_table,
        },
    },
    "pvm": {
        "type": "object",
        "required": ["schema", "kind", "direction", "e_plus", "e_minus", "psi_plus", "psi_minus", "residuals"],
        "additionalProperties": False,
        "properties": {
            **_envelope,
            "kind": {"const": "pvm"},
            "direction": _vec3,
            "e_plus": _matrix,
            "e_minus": _matrix,
            "psi_plus": {"type": "array", "items": _cplx, "minItems": 2, "maxItems": 2},
            "psi_minus": {"type": "array", "items": _cplx, "minItems": 2, "maxItems": 2},
            "residuals": {"type": "object", "additionalProperties": {"type": "number", "minimum": 0}},
        },
    },
    "triple": {
        "type": "object",
        "required": ["schema", "kind", "seed", "directions", "gram_residual"],
        "additionalProperties": False,
        "properties": {
            **_envelope,
            "kind": {"const": "triple"},
            "seed": {"type": "integer"},
            "directions": {"type": "array", "items": _vec3, "minItems": 3, "maxItems": 3},
            "gram_residual": {"type": "number", "minimum": 0},
        },
    },
}
