import numpy as np
import pytest
from hypothesis import strategies as st

from paulicomp import BlochDirection

finite = st.floats(min_value=-10.0, max_value=10.0, allow_nan=False, allow_infinity=False)
vec3 = st.tuples(finite, finite, finite)
unit_vec3 = vec3.filter(lambda v: np.linalg.norm(v) > 1e-3).map(
    lambda v: BlochDirection.from_vector(v, normalize=True))


def eigh_projectors(matrix):
    """Oracle: spectral projectors of a Hermitian 2x2 from LAPACK, keyed by eigenvalue sign."""
    w, v = np.linalg.eigh(matrix)
    out = {}
    for k in range(2):
        out[1 if w[k] > 0 else -1] = np.outer(v[:, k], v[:, k].conj())
    return out


def luders_conditional(alpha_matrix, a, beta_matrix, b):
    """Oracle: p(b | a) from rho = I/2, Luders collapse, full matrix traces."""
    ea = eigh_projectors(alpha_matrix)[a]
    fb = eigh_projectors(beta_matrix)[b]
    rho = np.eye(2) / 2
    pa = np.trace(rho @ ea).real
    post = ea @ rho @ ea / pa
    return np.trace(post @ fb).real


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def random_unit(rng, n):
    v = rng.standard_normal((n, 3))
    v /= np.linalg.norm(v, axis=1, keepdims=True)
    return [BlochDirection(tuple(map(float, x))) for x in v]


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, title): acceptance criterion n")
    config._criteria = {}


def pytest_runtest_makereport(item, call):
    marker = item.get_closest_marker("criterion")
    if marker is None or call.when != "call":
        return
    n, title = marker.args
    ok = call.excinfo is None
    prev = item.config._criteria.get(n, (title, True))
    item.config._criteria[n] = (title, prev[1] and ok)


def pytest_terminal_summary(terminalreporter, config):
    results = getattr(config, "_criteria", {})
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(results):
        title, ok = results[n]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] AC{n:>2}  {title}")
