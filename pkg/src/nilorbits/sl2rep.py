"""Irreducible sl(2,R)-modules V_r with fixed invariant forms B_r, the
negation intertwiners u_r, tensor products of forms, and the component
homomorphisms sigma/tau of indefinite orthogonal groups.

Basis convention on V_r: e_0 .. e_r with H e_i = (r - 2i) e_i,
Y e_i = e_{i+1} and X e_i = i (r - i + 1) e_{i-1}.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, reduce

from .exactla import ExactMatrix, congruence_diagonalize, conj, to_scalar


@dataclass(frozen=True)
class IrreducibleModel:
    r: int
    matX: ExactMatrix
    matY: ExactMatrix
    matH: ExactMatrix

    @property
    def dim(self) -> int:
        return self.r + 1


@dataclass(frozen=True)
class InvariantFormModel:
    r: int
    matB: ExactMatrix

    @property
    def b0(self) -> int:
        """B_r(e_0, e_r), which is also B_r(e_0, Y^r e_0)."""
        return self.matB[0, self.r]


@lru_cache(maxsize=None)
def build_irreducible(r: int) -> IrreducibleModel:
    if r < 0:
        raise ValueError("highest weight must be >= 0")
    n = r + 1
    x = [[0] * n for _ in range(n)]
    y = [[0] * n for _ in range(n)]
    for i in range(n):
        if i >= 1:
            x[i - 1][i] = i * (r - i + 1)
        if i + 1 < n:
            y[i + 1][i] = 1
    h = ExactMatrix.diag([r - 2 * i for i in range(n)])
    return IrreducibleModel(r, ExactMatrix(x), ExactMatrix(y), h)


def form_b0(r: int) -> int:
    m, odd = divmod(r, 2)
    return (-1) ** (m + 1) if odd else (-1) ** m


@lru_cache(maxsize=None)
def build_invariant_form(r: int) -> InvariantFormModel:
    """Antidiagonal form with B[i, r-i] = (-1)^i b0.

    Invariance under Y forces b_{i+1} = -b_i.  The sign b0 makes the
    weight-zero line positive for even r, and makes B(v, Xv) >= 0 on the
    weight -1 line for odd r.
    """
    if r < 0:
        raise ValueError("highest weight must be >= 0")
    n = r + 1
    b0 = form_b0(r)
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        rows[i][r - i] = (-1) ** i * b0
    return InvariantFormModel(r, ExactMatrix(rows))


def build_negation_intertwiner(r: int, unimodular: bool = False) -> ExactMatrix:
    """u_r = diag((-1)^i); the unimodular variant (-1)^(r/2) u_r for even r."""
    if unimodular and r % 2:
        raise ValueError("the unimodular intertwiner exists only for even r")
    sign = (-1) ** (r // 2) if unimodular else 1
    return ExactMatrix.diag([sign * (-1) ** i for i in range(r + 1)])


class Symmetry(enum.Enum):
    SYMMETRIC = "symmetric"
    SKEW = "skew-symmetric"
    HERMITIAN = "Hermitian"
    SKEW_HERMITIAN = "skew-Hermitian"

    @property
    def sesquilinear(self) -> bool:
        return self in (Symmetry.HERMITIAN, Symmetry.SKEW_HERMITIAN)

    @property
    def even(self) -> bool:
        return self in (Symmetry.SYMMETRIC, Symmetry.HERMITIAN)


@dataclass(frozen=True)
class Form:
    matrix: ExactMatrix
    symmetry: Symmetry

    def __post_init__(self):
        if not has_symmetry(self.matrix, self.symmetry):
            raise ValueError(f"matrix is not {self.symmetry.value}")


def has_symmetry(m: ExactMatrix, kind: Symmetry) -> bool:
    if not m.is_square:
        return False
    sign = 1 if kind.even else -1
    tr = conj if kind.sesquilinear else (lambda v: v)
    n = m.rows
    return all(m[i, j] == sign * tr(m[j, i]) for i in range(n) for j in range(i, n))


def sl2_form(r: int) -> Form:
    kind = Symmetry.SYMMETRIC if r % 2 == 0 else Symmetry.SKEW
    return Form(build_invariant_form(r).matB, kind)


def tensor_form(b1: Form, b2: Form) -> Form:
    """Kronecker product of a real bilinear form with a bilinear or
    sesquilinear one.  The two symmetry parities multiply."""
    if b1.symmetry.sesquilinear:
        raise ValueError("the first factor must be a real bilinear form")
    if b1.matrix.is_zero() or b2.matrix.is_zero():
        raise ValueError("tensor factors must be nonzero")
    even = b1.symmetry.even == b2.symmetry.even
    if b2.symmetry.sesquilinear:
        kind = Symmetry.HERMITIAN if even else Symmetry.SKEW_HERMITIAN
    else:
        kind = Symmetry.SYMMETRIC if even else Symmetry.SKEW
    return Form(b1.matrix.kron(b2.matrix), kind)


class NotAnIsometry(ValueError):
    pass


def _sign(v) -> int:
    return 1 if v > 0 else -1


def sigma_tau(g: ExactMatrix, form: ExactMatrix) -> tuple[int, int]:
    """(sigma, tau) of an isometry g of a nondegenerate symmetric form.

    With ``c^T F c = diag(d)`` splitting the space into a positive part P
    and a negative part N, sigma is the sign of det of the P->P
    compression of g and tau that of the N->N compression.  The
    compression in the c-frame is ``diag(d_P)^-1 c_P^T F g c_P``, so the
    signs reduce to determinants of ``c_P^T F g c_P`` (times (-1)^|N| for
    the negative block).
    """
    if not (g.is_square and form.is_square and g.rows == form.rows):
        raise ValueError("size mismatch")
    if not form.is_real() or not g.is_real():
        raise ValueError("sigma/tau need real matrices")
    if g.T @ form @ g != form:
        raise NotAnIsometry("g does not preserve the form")
    c, d = congruence_diagonalize(form)
    if any(v == 0 for v in d):
        raise ValueError("form is degenerate")
    pos = [j for j, v in enumerate(d) if v > 0]
    neg = [j for j, v in enumerate(d) if v < 0]
    fg = form @ g
    ct = c.T

    def block_det(idx):
        if not idx:
            return Fraction(1)
        cp = c.submatrix(range(c.rows), idx)
        return (ct.submatrix(idx, range(c.rows)) @ fg @ cp).det()

    dp, dn = block_det(pos), block_det(neg)
    if dp == 0 or dn == 0:
        raise AssertionError("compression of an isometry must be invertible")
    sigma = _sign(dp)
    tau = _sign(dn) * (-1) ** len(neg)
    return sigma, tau


def sigma_tau_direct_sum(parts) -> tuple[int, int]:
    parts = list(parts)
    if not parts:
        raise ValueError("empty direct sum")
    return reduce(lambda a, b: (a[0] * b[0], a[1] * b[1]), parts)


def sigma_tau_tensor_negation(r: int, r_prime: int | None = None) -> tuple[int, int]:
    """Closed-form (sigma, tau) of the negation intertwiner.

    Even r alone: the unimodular u~_r on (V_r, B_r).  Two odd weights:
    u_r (x) u_r' on V_r (x) V_r' with the product form.
    """
    if r_prime is None:
        if r % 2:
            raise ValueError("a single weight must be even")
        m = r // 2
        e = m // 2 if m % 2 == 0 else (m + 1) // 2
        s = (-1) ** e
        return s, s
    if r % 2 == 0 or r_prime % 2 == 0:
        raise ValueError("paired weights must both be odd")
    s = (-1) ** ((r + 1) * (r_prime + 1) // 4)
    return s, s


def form_matrix_from_diag(values) -> ExactMatrix:
    return ExactMatrix.diag([to_scalar(v) for v in values])


def standard_symplectic(k: int) -> ExactMatrix:
    """[[0, I_k], [-I_k, 0]]."""
    n = 2 * k
    rows = [[0] * n for _ in range(n)]
    for i in range(k):
        rows[i][k + i] = 1
        rows[k + i][i] = -1
    return ExactMatrix(rows)
