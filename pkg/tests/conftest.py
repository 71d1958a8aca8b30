import numpy as np
import pytest
from hypothesis import strategies as st

from jonespauli.algebra import CMatrix
from jonespauli.pauli import Axis, pauli

SX, SY, SZ = (pauli(a) for a in Axis)
I2 = CMatrix.identity(2)

finite = st.floats(min_value=-1e3, max_value=1e3, allow_nan=False, allow_infinity=False)
complexes = st.builds(complex, finite, finite)


def cmatrices(dim=2):
    return st.lists(complexes, min_size=dim * dim, max_size=dim * dim).map(
        lambda xs: CMatrix(np.array(xs).reshape(dim, dim)))


def hermitians():
    def build(xs):
        a = np.array(xs[:4]).reshape(2, 2)
        return CMatrix(a + a.conj().T)
    return st.lists(complexes, min_size=4, max_size=4).map(build)


def assert_matrix(m, expected, tol=1e-12):
    expected = np.asarray(expected, dtype=complex)
    assert np.max(np.abs(m.array - expected)) <= tol, f"{m!r} != {expected!r}"


@pytest.fixture
def rng():
    return np.random.default_rng(20261018)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line[1])
