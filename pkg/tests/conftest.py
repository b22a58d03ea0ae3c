import random
from fractions import Fraction

import pytest
from hypothesis import strategies as st

from nilorbits.exactla import ExactMatrix


small_fraction = st.fractions(min_value=-5, max_value=5, max_denominator=4)


@st.composite
def rational_matrices(draw, rows=None, cols=None, max_size=4):
    m = rows or draw(st.integers(1, max_size))
    n = cols or draw(st.integers(1, max_size))
    vals = draw(st.lists(small_fraction, min_size=m * n, max_size=m * n))
    return ExactMatrix([vals[i * n:(i + 1) * n] for i in range(m)])


nonzero_fraction = small_fraction.filter(lambda v: v != 0)


@st.composite
def invertible_matrices(draw, n):
    """Permuted L U with unit-diagonal L and nonzero pivots in U."""
    low = draw(st.lists(small_fraction, min_size=n * n, max_size=n * n))
    up = draw(st.lists(small_fraction, min_size=n * n, max_size=n * n))
    piv = draw(st.lists(nonzero_fraction, min_size=n, max_size=n))
    perm = draw(st.permutations(range(n)))
    lower = ExactMatrix([[1 if i == j else (low[i * n + j] if j < i else 0) for j in range(n)]
                         for i in range(n)])
    upper = ExactMatrix([[piv[i] if i == j else (up[i * n + j] if j > i else 0) for j in range(n)]
                         for i in range(n)])
    pm = ExactMatrix([[int(perm[i] == j) for j in range(n)] for i in range(n)])
    return pm @ lower @ upper


@st.composite
def symmetric_matrices(draw, max_size=4):
    a = draw(rational_matrices(max_size=max_size))
    n = min(a.rows, a.cols)
    a = a.submatrix(range(n), range(n))
    return a + a.T


def random_vector(rng: random.Random, n: int, lo=-3, hi=3):
    return [Fraction(rng.randint(lo, hi)) for _ in range(n)]


def reflection(form: ExactMatrix, v) -> ExactMatrix:
    """w -> w - 2 B(v,w)/B(v,v) v."""
    n = form.rows
    bv = form @ tuple(v)
    q = sum(a * b for a, b in zip(v, bv))
    rows = [[Fraction(int(i == j)) - 2 * v[i] * bv[j] / q for j in range(n)] for i in range(n)]
    return ExactMatrix(rows)


def random_isometry(rng: random.Random, form: ExactMatrix, steps=None) -> ExactMatrix:
    """Product of random reflections in non-isotropic rational vectors."""
    n = form.rows
    g = ExactMatrix.identity(n)
    for _ in range(steps if steps is not None else rng.randint(0, 2 * n)):
        while True:
            v = random_vector(rng, n)
            if sum(a * b for a, b in zip(v, form @ tuple(v))) != 0:
                break
        g = reflection(form, v) @ g
    return g


@pytest.fixture
def rng():
    return random.Random(12345)


# one line per acceptance criterion, printed after the run
ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def acceptance_report():
    def record(number: int, ok: bool, summary: str):
        ACCEPTANCE_LINES.append(f"{'PASS' if ok else 'FAIL'}  criterion {number}: {summary}")
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split("criterion ")[1].split(":")[0])):
            terminalreporter.write_line(line)
