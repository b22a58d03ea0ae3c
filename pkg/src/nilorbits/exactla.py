"""Exact dense linear algebra over Q and Q(i).

Scalars are :class:`fractions.Fraction` for rationals and :class:`Gaussian`
for Gaussian rationals with nonzero imaginary part.  Arithmetic on
Gaussians collapses back to ``Fraction`` whenever the imaginary part
vanishes, so a matrix only carries Gaussians where it has to.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import isqrt
from typing import Iterable, Sequence

__all__ = [
    "Gaussian",
    "ExactMatrix",
    "to_scalar",
    "conj",
    "real_part",
    "imag_part",
    "format_scalar",
    "parse_scalar",
    "kernel_basis",
    "solve_linear",
    "rank",
    "congruence_diagonalize",
    "signature_symmetric",
    "signature_hermitian",
    "symplectic_basis",
    "is_rational_square",
    "rational_sqrt",
    "square_class",
]


class Gaussian:
    """Gaussian rational ``re + im*i``."""

    __slots__ = ("re", "im")

    def __init__(self, re, im=0):
        object.__setattr__(self, "re", Fraction(re))
        object.__setattr__(self, "im", Fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("Gaussian is immutable")

    def __repr__(self):
        return f"Gaussian({self.re}, {self.im})"

    def __str__(self):
        return format_scalar(self)

    def __eq__(self, other):
        if isinstance(other, Gaussian):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __neg__(self):
        return Gaussian(-self.re, -self.im)

    def __add__(self, other):
        o = _as_pair(other)
        if o is None:
            return NotImplemented
        return _mk(self.re + o[0], self.im + o[1])

    __radd__ = __add__

    def __sub__(self, other):
        o = _as_pair(other)
        if o is None:
            return NotImplemented
        return _mk(self.re - o[0], self.im - o[1])

    def __rsub__(self, other):
        o = _as_pair(other)
        if o is None:
            return NotImplemented
        return _mk(o[0] - self.re, o[1] - self.im)

    def __mul__(self, other):
        o = _as_pair(other)
        if o is None:
            return NotImplemented
        a, b = self.re, self.im
        c, d = o
        return _mk(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = _as_pair(other)
        if o is None:
            return NotImplemented
        c, d = o
        den = c * c + d * d
        if den == 0:
            raise ZeroDivisionError("Gaussian division by zero")
        a, b = self.re, self.im
        return _mk((a * c + b * d) / den, (b * c - a * d) / den)

    def __rtruediv__(self, other):
        o = _as_pair(other)
        if o is None:
            return NotImplemented
        return Gaussian(o[0], o[1]) / self

    def conjugate(self):
        return Gaussian(self.re, -self.im)

    def __complex__(self):
        return complex(float(self.re), float(self.im))


I = Gaussian(0, 1)


def _as_pair(x):
    if isinstance(x, Gaussian):
        return x.re, x.im
    if isinstance(x, (int, Fraction)):
        return Fraction(x), Fraction(0)
    return None


def _mk(re, im):
    if im == 0:
        return Fraction(re)
    return Gaussian(re, im)


def to_scalar(x):
    """Coerce ints, Fractions, Gaussians, numeric strings and Python complex
    numbers with integral parts into an exact scalar."""
    if isinstance(x, Gaussian):
        return _mk(x.re, x.im)
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("bool is not a scalar")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return parse_scalar(x)
    if isinstance(x, complex):
        return _mk(Fraction(x.real), Fraction(x.imag))
    raise TypeError(f"cannot convert {type(x).__name__} to an exact scalar")


def conj(x):
    return x.conjugate() if isinstance(x, Gaussian) else x


def real_part(x):
    return x.re if isinstance(x, Gaussian) else Fraction(x)


def imag_part(x):
    return x.im if isinstance(x, Gaussian) else Fraction(0)


def _fmt_q(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def format_scalar(x) -> str:
    """Text form used in JSON: ``a/b`` or ``a/b+c/d*i``."""
    x = to_scalar(x)
    if isinstance(x, Gaussian):
        sign = "-" if x.im < 0 else "+"
        return f"{_fmt_q(x.re)}{sign}{_fmt_q(abs(x.im))}*i"
    return _fmt_q(x)


_Q = r"[0-9]+(?:/[0-9]+)?"
_SCALAR_RE = re.compile(
    rf"^(?P<re>[+-]?{_Q})?(?:(?P<isign>[+-])?(?:(?P<im>{_Q})\*)?i)?$"
)


def parse_scalar(text: str):
    s = text.strip().replace(" ", "")
    if not s:
        raise ValueError("empty scalar literal")
    m = _SCALAR_RE.match(s)
    if m is None or (m.group("re") is None and not s.endswith("i")):
        raise ValueError(f"malformed scalar literal: {text!r}")
    re_part = Fraction(m.group("re")) if m.group("re") else Fraction(0)
    if not s.endswith("i"):
        return re_part
    im_part = Fraction(m.group("im")) if m.group("im") else Fraction(1)
    if m.group("isign") == "-":
        im_part = -im_part
    elif m.group("isign") is None and m.group("re") is not None:
        # "2i" style without operator is ambiguous next to a real part
        raise ValueError(f"malformed scalar literal: {text!r}")
    return _mk(re_part, im_part)


class ExactMatrix:
    """Immutable dense matrix of exact scalars."""

    __slots__ = ("rows", "cols", "_a")

    def __init__(self, data: Iterable[Iterable]):
        a = tuple(tuple(to_scalar(v) for v in row) for row in data)
        if not a or not a[0]:
            raise ValueError("matrix must have at least one row and column")
        cols = len(a[0])
        if any(len(row) != cols for row in a):
            raise ValueError("ragged matrix data")
        object.__setattr__(self, "_a", a)
        object.__setattr__(self, "rows", len(a))
        object.__setattr__(self, "cols", cols)

    @classmethod
    def _raw(cls, a):
        m = object.__new__(cls)
        object.__setattr__(m, "_a", tuple(tuple(r) for r in a))
        object.__setattr__(m, "rows", len(a))
        object.__setattr__(m, "cols", len(a[0]))
        return m

    def __setattr__(self, name, value):
        raise AttributeError("ExactMatrix is immutable")

    # construction helpers

    @classmethod
    def zeros(cls, rows: int, cols: int | None = None) -> "ExactMatrix":
        cols = rows if cols is None else cols
        z = Fraction(0)
        return cls._raw([[z] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls.diag([1] * n)

    @classmethod
    def diag(cls, values: Sequence) -> "ExactMatrix":
        vals = [to_scalar(v) for v in values]
        n = len(vals)
        z = Fraction(0)
        return cls._raw([[vals[i] if i == j else z for j in range(n)] for i in range(n)])

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence]) -> "ExactMatrix":
        cols = [[to_scalar(v) for v in c] for c in columns]
        return cls._raw([list(r) for r in zip(*cols)])

    @classmethod
    def block_diag(cls, blocks: Sequence["ExactMatrix"]) -> "ExactMatrix":
        n = sum(b.rows for b in blocks)
        m = sum(b.cols for b in blocks)
        z = Fraction(0)
        out = [[z] * m for _ in range(n)]
        i0 = j0 = 0
        for b in blocks:
            for i in range(b.rows):
                out[i0 + i][j0:j0 + b.cols] = b._a[i]
            i0 += b.rows
            j0 += b.cols
        return cls._raw(out)

    # access

    def __getitem__(self, idx):
        i, j = idx
        return self._a[i][j]

    def row(self, i: int) -> tuple:
        return self._a[i]

    def column(self, j: int) -> tuple:
        return tuple(r[j] for r in self._a)

    def columns(self) -> list[tuple]:
        return [self.column(j) for j in range(self.cols)]

    def tolist(self) -> list[list]:
        return [list(r) for r in self._a]

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_zero(self) -> bool:
        return all(v == 0 for r in self._a for v in r)

    def is_real(self) -> bool:
        return not any(isinstance(v, Gaussian) for r in self._a for v in r)

    def __repr__(self):
        body = "; ".join(" ".join(format_scalar(v) for v in r) for r in self._a)
        return f"ExactMatrix[{body}]"

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self._a == other._a

    def __hash__(self):
        return hash(self._a)

    # arithmetic

    def _check_same(self, other):
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._check_same(other)
        return ExactMatrix._raw(
            [[a + b for a, b in zip(r, s)] for r, s in zip(self._a, other._a)]
        )

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._check_same(other)
        return ExactMatrix._raw(
            [[a - b for a, b in zip(r, s)] for r, s in zip(self._a, other._a)]
        )

    def __neg__(self) -> "ExactMatrix":
        return ExactMatrix._raw([[-a for a in r] for r in self._a])

    def scale(self, c) -> "ExactMatrix":
        c = to_scalar(c)
        return ExactMatrix._raw([[c * a for a in r] for r in self._a])

    def __mul__(self, c):
        if isinstance(c, ExactMatrix):
            raise TypeError("use @ for matrix products")
        return self.scale(c)

    __rmul__ = __mul__

    def __matmul__(self, other):
        if isinstance(other, ExactMatrix):
            if self.cols != other.rows:
                raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
            return ExactMatrix._raw(_matmul(self._a, other._a, other.cols))
        vec = [to_scalar(v) for v in other]
        if len(vec) != self.cols:
            raise ValueError("vector length mismatch")
        return tuple(_dot(r, vec) for r in self._a)

    @property
    def T(self) -> "ExactMatrix":
        return ExactMatrix._raw([list(c) for c in zip(*self._a)])

    @property
    def H(self) -> "ExactMatrix":
        return ExactMatrix._raw([[conj(v) for v in c] for c in zip(*self._a)])

    def conjugate(self) -> "ExactMatrix":
        return ExactMatrix._raw([[conj(v) for v in r] for r in self._a])

    def kron(self, other: "ExactMatrix") -> "ExactMatrix":
        out = []
        for ra in self._a:
            for rb in other._a:
                out.append([a * b for a in ra for b in rb])
        return ExactMatrix._raw(out)

    def trace(self):
        if not self.is_square:
            raise ValueError("trace of a non-square matrix")
        s = Fraction(0)
        for i in range(self.rows):
            s = s + self._a[i][i]
        return s

    def commutator(self, other: "ExactMatrix") -> "ExactMatrix":
        return self @ other - other @ self

    def power(self, k: int) -> "ExactMatrix":
        out = ExactMatrix.identity(self.rows)
        for _ in range(k):
            out = out @ self
        return out

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "ExactMatrix":
        return ExactMatrix._raw([[self._a[i][j] for j in cols] for i in rows])

    def det(self):
        if not self.is_square:
            raise ValueError("determinant of a non-square matrix")
        a = [list(r) for r in self._a]
        n = len(a)
        d = Fraction(1)
        for k in range(n):
            p = next((i for i in range(k, n) if a[i][k] != 0), None)
            if p is None:
                return Fraction(0)
            if p != k:
                a[k], a[p] = a[p], a[k]
                d = -d
            piv = a[k][k]
            d = d * piv
            for i in range(k + 1, n):
                f = a[i][k]
                if f == 0:
                    continue
                f = f / piv
                ri, rk = a[i], a[k]
                for j in range(k + 1, n):
                    if rk[j] != 0:
                        ri[j] = ri[j] - f * rk[j]
        return d

    def inverse(self) -> "ExactMatrix":
        if not self.is_square:
            raise ValueError("inverse of a non-square matrix")
        n = self.rows
        aug = [list(r) + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(self._a)]
        red, piv = _rref(aug, n)
        if len(piv) < n:
            raise ZeroDivisionError("matrix is singular")
        return ExactMatrix._raw([r[n:] for r in red])

    def to_numpy(self):
        import numpy as np

        if self.is_real():
            return np.array([[float(v) for v in r] for r in self._a], dtype=float)
        return np.array([[complex(v) for v in r] for r in self._a], dtype=complex)


def _dot(r, v):
    s = Fraction(0)
    for a, b in zip(r, v):
        if a != 0 and b != 0:
            s = s + a * b
    return s


def _matmul(a, b, bcols):
    z = Fraction(0)
    out = []
    for ra in a:
        acc = [z] * bcols
        for k, aik in enumerate(ra):
            if aik == 0:
                continue
            rb = b[k]
            for j in range(bcols):
                bkj = rb[j]
                if bkj != 0:
                    acc[j] = acc[j] + aik * bkj
        out.append(acc)
    return out


def _rref(a: list[list], ncols: int | None = None):
    """In-place reduced row echelon form; pivots searched in the first
    ``ncols`` columns.  Returns (rows, pivot columns)."""
    rows = len(a)
    width = len(a[0]) if rows else 0
    ncols = width if ncols is None else ncols
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, rows) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        piv = a[r][c]
        if piv != 1:
            a[r] = [v / piv if v != 0 else v for v in a[r]]
        rr = a[r]
        for i in range(rows):
            if i == r:
                continue
            f = a[i][c]
            if f == 0:
                continue
            ri = a[i]
            for j in range(c, width):
                if rr[j] != 0:
                    ri[j] = ri[j] - f * rr[j]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return a, pivots


def _rows_of(m) -> list[list]:
    if isinstance(m, ExactMatrix):
        return m.tolist()
    return [[to_scalar(v) for v in r] for r in m]


def rank(m) -> int:
    rows = _rows_of(m)
    if not rows:
        return 0
    return len(_rref(rows)[1])


def kernel_basis(m) -> list[tuple]:
    """Basis of the right null space, one tuple per vector.

    Vectors come out in the usual free-variable form: each has a 1 in one
    free column and zeros in the other free columns.
    """
    rows = _rows_of(m)
    n = len(rows[0])
    red, piv = _rref(rows)
    free = [c for c in range(n) if c not in set(piv)]
    basis = []
    for f in free:
        v = [Fraction(0)] * n
        v[f] = Fraction(1)
        for i, pc in enumerate(piv):
            v[pc] = -red[i][f]
        basis.append(tuple(v))
    return basis


def solve_linear(a, b) -> tuple | None:
    """One exact solution of ``a @ x = b`` or ``None`` when inconsistent."""
    rows = _rows_of(a)
    bvec = [to_scalar(v) for v in b]
    if len(bvec) != len(rows):
        raise ValueError("right-hand side length mismatch")
    n = len(rows[0])
    aug = [r + [bv] for r, bv in zip(rows, bvec)]
    red, piv = _rref(aug, n)
    for i in range(len(piv), len(red)):
        if red[i][n] != 0:
            return None
    x = [Fraction(0)] * n
    for i, pc in enumerate(piv):
        x[pc] = red[i][n]
    return tuple(x)


def _is_selfadjoint(s: ExactMatrix, hermitian: bool) -> bool:
    f = conj if hermitian else (lambda v: v)
    return all(
        s[i, j] == f(s[j, i]) for i in range(s.rows) for j in range(i, s.cols)
    )


def congruence_diagonalize(s: ExactMatrix, hermitian: bool = False):
    """Exact congruence diagonalization.

    Returns ``(c, d)`` with ``c`` invertible and ``c^* s c = diag(d)``
    (``c^T s c`` in the symmetric case).  Zero-diagonal pivots are handled
    by folding in a partner column that pairs nontrivially with the pivot.
    """
    if not s.is_square:
        raise ValueError("form matrix must be square")
    if not _is_selfadjoint(s, hermitian):
        raise ValueError("matrix is not " + ("Hermitian" if hermitian else "symmetric"))
    n = s.rows
    a = s.tolist()
    # c stored by columns: basis vectors in original coordinates
    c = [[Fraction(int(i == j)) for i in range(n)] for j in range(n)]
    cj = conj if hermitian else (lambda v: v)

    def add_col(k, j, t):
        # basis_k += t * basis_j, updating a = E^* a E
        for i in range(n):
            if a[i][j] != 0:
                a[i][k] = a[i][k] + a[i][j] * t
        tb = cj(t)
        for i in range(n):
            if a[j][i] != 0:
                a[k][i] = a[k][i] + tb * a[j][i]
        c[k] = [x + t * y if y != 0 else x for x, y in zip(c[k], c[j])]

    def swap(k, j):
        a[k], a[j] = a[j], a[k]
        for r in a:
            r[k], r[j] = r[j], r[k]
        c[k], c[j] = c[j], c[k]

    d = []
    for k in range(n):
        if a[k][k] == 0:
            j = next((j for j in range(k + 1, n) if a[j][j] != 0), None)
            if j is not None:
                swap(k, j)
            else:
                j = next((j for j in range(k + 1, n) if a[k][j] != 0), None)
                if j is not None:
                    add_col(k, j, cj(a[k][j]))
        piv = a[k][k]
        if piv != 0:
            for j in range(k + 1, n):
                if a[k][j] != 0:
                    add_col(j, k, -a[k][j] / piv)
        d.append(piv)
    return ExactMatrix.from_columns(c), d


def _inertia(d) -> tuple[int, int, int]:
    p = sum(1 for v in d if v > 0)
    q = sum(1 for v in d if v < 0)
    return p, q, len(d) - p - q


def signature_symmetric(s: ExactMatrix) -> tuple[int, int, int]:
    """(positive, negative, zero) inertia of a rational symmetric matrix."""
    if not s.is_real():
        raise ValueError("symmetric signature needs a rational matrix")
    _, d = congruence_diagonalize(s, hermitian=False)
    return _inertia(d)


def signature_hermitian(s: ExactMatrix) -> tuple[int, int, int]:
    _, d = congruence_diagonalize(s, hermitian=True)
    # diagonal of a Hermitian congruence is real
    return _inertia([real_part(v) for v in d])


def symplectic_basis(g: ExactMatrix) -> ExactMatrix:
    """Columns ``e_1..e_k, f_1..f_k`` with ``g(e_i, f_j) = delta_ij`` and all
    other pairings zero, for a nondegenerate antisymmetric rational ``g``."""
    n = g.rows
    if n % 2 or any(g[i, j] != -g[j, i] for i in range(n) for j in range(n)):
        raise ValueError("form is not antisymmetric of even size")

    def pair(u, v):
        return _dot(u, g @ v)

    remaining = [tuple(Fraction(int(i == j)) for i in range(n)) for j in range(n)]
    es, fs = [], []
    while remaining:
        e = remaining.pop(0)
        idx = next((i for i, v in enumerate(remaining) if pair(e, v) != 0), None)
        if idx is None:
            raise ValueError("form is degenerate")
        f = remaining.pop(idx)
        w = pair(e, f)
        f = tuple(v / w for v in f)
        es.append(e)
        fs.append(f)
        new = []
        for v in remaining:
            # v + g(f, v) e - g(e, v) f is orthogonal to both e and f
            a, b = pair(f, v), pair(e, v)
            new.append(tuple(x + a * ee - b * fe for x, ee, fe in zip(v, e, f)))
        remaining = new
    return ExactMatrix.from_columns(es + fs)


def _isqrt_exact(n: int) -> int | None:
    if n < 0:
        return None
    r = isqrt(n)
    return r if r * r == n else None


def is_rational_square(q) -> bool:
    return rational_sqrt(q) is not None


def rational_sqrt(q) -> Fraction | None:
    q = Fraction(q)
    if q < 0:
        return None
    a, b = _isqrt_exact(q.numerator), _isqrt_exact(q.denominator)
    if a is None or b is None:
        return None
    return Fraction(a, b)


def square_class(q) -> int:
    """Squarefree integer representing ``|q|`` modulo rational squares."""
    q = abs(Fraction(q))
    if q == 0:
        raise ValueError("zero has no square class")
    n = q.numerator * q.denominator
    out, p = 1, 2
    while p * p <= n:
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        if e % 2:
            out *= p
        p += 1
    return out * n
