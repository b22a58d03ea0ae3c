"""Exact matrix-level engine for sl(n,R), so(p,q), sp(2n,R) and su(p,q).

Pipeline: nilpotent x -> standard triple (x, y, h) -> isotypic frame
V = sum_r V_r (x) W_r -> multiplicity datum, negation conjugator and
centralizer component data.  Nothing here consults the combinatorial
criteria in :mod:`nilorbits.orbits`; the two must agree independently.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .core import (
    MATRIX_FAMILIES,
    AlgebraDescriptor,
    DatumError,
    Dim,
    Family,
    MultiplicityDatum,
    NegationVerdict,
    Reason,
    Sig,
    check_datum,
    is_zero_datum,
)
from .exactla import (
    ExactMatrix,
    Gaussian,
    conj,
    congruence_diagonalize,
    imag_part,
    kernel_basis,
    rank,
    rational_sqrt,
    real_part,
    signature_hermitian,
    signature_symmetric,
    solve_linear,
    square_class,
    symplectic_basis,
)
from .sl2rep import (
    build_invariant_form,
    build_irreducible,
    build_negation_intertwiner,
    sigma_tau,
    standard_symplectic,
)

I = Gaussian(0, 1)


class FormKind(enum.Enum):
    NO_FORM = "none"
    SYMMETRIC = "symmetric"
    SYMPLECTIC = "symplectic"
    HERMITIAN = "hermitian"


_FAMILY_KIND = {
    Family.SL_R: FormKind.NO_FORM,
    Family.SO_R: FormKind.SYMMETRIC,
    Family.SP_R: FormKind.SYMPLECTIC,
    Family.SU: FormKind.HERMITIAN,
}


class TripleError(ValueError):
    """Input matrix or triple violates a precondition."""


class NotConjugateInFullGroup(Exception):
    """No isometry of the ambient form conjugates x to -x."""


class ConjugatorNotRational(Exception):
    """A conjugator exists over R but none is built over the rationals."""


@dataclass(frozen=True)
class AmbientSpace:
    alg: AlgebraDescriptor
    form: ExactMatrix | None
    kind: FormKind

    def __post_init__(self):
        fam = self.alg.family
        if fam not in MATRIX_FAMILIES:
            raise TripleError(f"no matrix model for {fam.value}")
        if self.kind is not _FAMILY_KIND[fam]:
            raise TripleError(f"{fam.value} needs a {_FAMILY_KIND[fam].value} form")
        n = self.size
        if self.kind is FormKind.NO_FORM:
            if self.form is not None:
                raise TripleError("sl(n,R) carries no form")
            return
        f = self.form
        if f is None or f.shape != (n, n):
            raise TripleError(f"form must be {n}x{n}")
        if self.kind is FormKind.SYMMETRIC:
            if not f.is_real() or f != f.T:
                raise TripleError("form is not real symmetric")
            sig = signature_symmetric(f)
        elif self.kind is FormKind.SYMPLECTIC:
            if not f.is_real() or f != -f.T:
                raise TripleError("form is not real antisymmetric")
            if f.det() == 0:
                raise TripleError("form is degenerate")
            return
        else:
            if f != f.H:
                raise TripleError("form is not Hermitian")
            sig = signature_hermitian(f)
        if sig != (self.alg.p, self.alg.q, 0):
            raise TripleError(f"form has inertia {sig}, expected ({self.alg.p},{self.alg.q},0)")

    @property
    def size(self) -> int:
        return self.alg.ambient_dim

    @property
    def sesquilinear(self) -> bool:
        return self.kind is FormKind.HERMITIAN

    def pair(self, u: Sequence, v: Sequence):
        """B(u, v), antilinear in u for Hermitian forms."""
        fv = self.form @ v
        s = Fraction(0)
        for a, b in zip(u, fv):
            if a != 0 and b != 0:
                s = s + (conj(a) if self.sesquilinear else a) * b
        return s

    def adjoint_pullback(self, g: ExactMatrix) -> ExactMatrix:
        """g^* B g (g^T B g for bilinear forms)."""
        gt = g.H if self.sesquilinear else g.T
        return gt @ self.form @ g


def standard_ambient(alg: AlgebraDescriptor) -> AmbientSpace:
    fam = alg.family
    if fam is Family.SL_R:
        return AmbientSpace(alg, None, FormKind.NO_FORM)
    if fam in (Family.SO_R, Family.SU):
        form = ExactMatrix.diag([1] * alg.p + [-1] * alg.q)
        return AmbientSpace(alg, form, _FAMILY_KIND[fam])
    if fam is Family.SP_R:
        return AmbientSpace(alg, standard_symplectic(alg.n), FormKind.SYMPLECTIC)
    raise TripleError(f"no matrix model for {fam.value}")


def _theta(z: ExactMatrix, ambient: AmbientSpace, form_inv: ExactMatrix) -> ExactMatrix:
    zt = z.H if ambient.sesquilinear else z.T
    return -(form_inv @ zt @ ambient.form)


def algebra_membership(z: ExactMatrix, ambient: AmbientSpace) -> bool:
    n = ambient.size
    if z.shape != (n, n):
        raise TripleError(f"expected a {n}x{n} matrix, got {z.rows}x{z.cols}")
    if ambient.kind is not FormKind.HERMITIAN and not z.is_real():
        return False
    if ambient.kind in (FormKind.NO_FORM, FormKind.HERMITIAN) and z.trace() != 0:
        return False
    if ambient.kind is FormKind.NO_FORM:
        return True
    zt = z.H if ambient.sesquilinear else z.T
    return (zt @ ambient.form + ambient.form @ z).is_zero()


def _unit(n, i, j, value=1) -> ExactMatrix:
    rows = [[0] * n for _ in range(n)]
    rows[i][j] = value
    return ExactMatrix(rows)


def algebra_basis(ambient: AmbientSpace) -> list[ExactMatrix]:
    """A basis of the algebra as a real vector space."""
    n = ambient.size
    kind = ambient.kind
    if kind is FormKind.NO_FORM:
        out = [_unit(n, i, j) for i in range(n) for j in range(n) if i != j]
        out += [_unit(n, i, i) - _unit(n, n - 1, n - 1) for i in range(n - 1)]
        return out
    finv = ambient.form.inverse()
    if kind is FormKind.SYMMETRIC:
        ks = [_unit(n, i, j) - _unit(n, j, i) for i in range(n) for j in range(i + 1, n)]
        return [finv @ k for k in ks]
    if kind is FormKind.SYMPLECTIC:
        ks = [_unit(n, i, j) + _unit(n, j, i) for i in range(n) for j in range(i + 1, n)]
        ks += [_unit(n, i, i) for i in range(n)]
        return [finv @ k for k in ks]
    ks = [_unit(n, i, j) - _unit(n, j, i) for i in range(n) for j in range(i + 1, n)]
    ks += [_unit(n, i, j, I) + _unit(n, j, i, I) for i in range(n) for j in range(i + 1, n)]
    ks += [_unit(n, i, i, I) for i in range(n)]
    u = [finv @ k for k in ks]
    # cut u(p,q) down to su(p,q); traces here are purely imaginary
    traces = [imag_part(z.trace()) for z in u]
    k0 = next(i for i, t in enumerate(traces) if t != 0)
    out = []
    for i, z in enumerate(u):
        if i == k0:
            continue
        out.append(z - u[k0].scale(traces[i] / traces[k0]) if traces[i] != 0 else z)
    return out


@dataclass(frozen=True)
class StandardTriple:
    x: ExactMatrix
    y: ExactMatrix
    h: ExactMatrix
    ambient: AmbientSpace

    def __post_init__(self):
        x, y, h = self.x, self.y, self.h
        two = Fraction(2)
        if h.commutator(x) != x.scale(two):
            raise TripleError("[h, x] != 2x")
        if h.commutator(y) != y.scale(-two):
            raise TripleError("[h, y] != -2y")
        if x.commutator(y) != h:
            raise TripleError("[x, y] != h")
        for name, z in (("x", x), ("y", y), ("h", h)):
            if not algebra_membership(z, self.ambient):
                raise TripleError(f"{name} is not in the algebra")
        n = h.rows
        total = sum(n - rank(h - ExactMatrix.identity(n).scale(k)) for k in range(-n + 1, n))
        if total != n:
            raise TripleError("h is not diagonalizable with integer eigenvalues")

    def negated(self) -> "StandardTriple":
        return StandardTriple(-self.x, -self.y, self.h, self.ambient)


# triple completion

def _stack(vectors) -> list[list]:
    return [list(v) for v in vectors]


def jordan_chains(x: ExactMatrix, rng: random.Random | None = None) -> list[tuple[tuple, int]]:
    """Jordan chains of a nilpotent x as (top vector v, length s); the chain
    is v, xv, ..., x^(s-1) v with x^s v = 0."""
    n = x.rows
    powers = [ExactMatrix.identity(n)]
    while not powers[-1].is_zero():
        powers.append(powers[-1] @ x)
        if len(powers) > n + 1:
            raise TripleError("x is not nilpotent")
    k = len(powers) - 1
    kernels = [[]] + [kernel_basis(powers[j]) for j in range(1, k + 1)]
    chains: list[tuple[tuple, int]] = []
    for s in range(k, 0, -1):
        span = list(kernels[s - 1])
        for v, length in chains:
            if length > s:
                span.append(powers[length - s] @ v)
        base = kernels[s]
        cands = []
        if rng is not None:
            for _ in range(len(base)):
                coeffs = [rng.randint(-3, 3) for _ in base]
                cands.append(tuple(
                    sum((c * b[i] for c, b in zip(coeffs, base)), Fraction(0)) for i in range(n)
                ))
        cands.extend(base)
        current = rank(_stack(span)) if span else 0
        for c in cands:
            if all(v == 0 for v in c):
                continue
            r = rank(_stack(span + [c]))
            if r > current:
                span.append(c)
                current = r
                chains.append((c, s))
    return chains


def _chain_frame(x: ExactMatrix, chains) -> tuple[ExactMatrix, list[int]]:
    """Columns e_i = c_i x^(r-i) v per chain, with c_i = prod_j j(r-j+1), so
    that x acts as the model X on each chain."""
    cols, weights = [], []
    for v, s in chains:
        r = s - 1
        vecs = [v]
        for _ in range(r):
            vecs.append(x @ vecs[-1])
        c = Fraction(1)
        for i in range(r + 1):
            if i >= 1:
                c *= i * (r - i + 1)
            cols.append(tuple(c * t for t in vecs[r - i]))
        weights.append(r)
    return ExactMatrix.from_columns(cols), weights


def gl_triple(x: ExactMatrix, rng: random.Random | None = None):
    """(h', y') with (x, y', h') a standard triple in gl(n)."""
    chains = jordan_chains(x, rng)
    p, weights = _chain_frame(x, chains)
    hs, ys = [], []
    for r in weights:
        mod = build_irreducible(r)
        hs.append(mod.matH)
        ys.append(mod.matY)
    pinv = p.inverse()
    h = p @ ExactMatrix.block_diag(hs) @ pinv
    y = p @ ExactMatrix.block_diag(ys) @ pinv
    return h, y


def _flatten_real(m: ExactMatrix) -> list[Fraction]:
    out = []
    for r in m.tolist():
        for v in r:
            out.append(real_part(v))
            out.append(imag_part(v))
    return out


def _solve_in_algebra(x, h0, ambient: AmbientSpace) -> ExactMatrix | None:
    basis = algebra_basis(ambient)
    two = Fraction(2)
    columns = []
    for z in basis:
        columns.append(_flatten_real(x.commutator(z)) + _flatten_real(h0.commutator(z) + z.scale(two)))
    rhs = _flatten_real(h0) + [Fraction(0)] * (2 * h0.rows * h0.cols)
    a = [list(r) for r in zip(*columns)]
    sol = solve_linear(a, rhs)
    if sol is None:
        return None
    y = ExactMatrix.zeros(ambient.size)
    for c, z in zip(sol, basis):
        if c != 0:
            y = y + z.scale(c)
    return y


def complete_standard_triple(x: ExactMatrix, ambient: AmbientSpace,
                             rng: random.Random | None = None) -> StandardTriple:
    """Standard triple through a nonzero nilpotent x of the algebra.

    A gl-level triple from a Jordan basis gives h'; averaging h' with its
    image under the Cartan-type involution fixing the algebra keeps
    [h, x] = 2x and puts h in the algebra; y then solves a linear system
    inside the algebra.
    """
    n = ambient.size
    if x.shape != (n, n):
        raise TripleError(f"expected a {n}x{n} matrix, got {x.rows}x{x.cols}")
    if x.is_zero():
        raise TripleError("x must be nonzero")
    if not algebra_membership(x, ambient):
        raise TripleError("x is not in the algebra")
    if not x.power(n).is_zero():
        raise TripleError("x is not nilpotent")
    h1, _ = gl_triple(x, rng)
    if ambient.kind is FormKind.NO_FORM:
        h0 = h1
    else:
        h0 = (h1 + _theta(h1, ambient, ambient.form.inverse())).scale(Fraction(1, 2))
    y = _solve_in_algebra(x, h0, ambient)
    if y is None:
        raise AssertionError("no y completes the triple; Morozov's lemma violated")
    return StandardTriple(x, y, h0, ambient)


# isotypic frame and data

@dataclass(frozen=True)
class IsotypicBlock:
    r: int
    basis: tuple[tuple, ...]      # highest-weight vectors spanning W_r
    gram: ExactMatrix | None      # phi_r in that basis

    @property
    def mult(self) -> int:
        return len(self.basis)


@dataclass(frozen=True)
class IsotypicFrame:
    """Columns y^i a_j (V-index major) identifying sum_r V_r (x) W_r with V."""

    matrix: ExactMatrix
    blocks: tuple[IsotypicBlock, ...]


def isotypic_frame(t: StandardTriple) -> IsotypicFrame:
    x, y, h = t.x, t.y, t.h
    n = x.rows
    amb = t.ambient
    xrows = x.tolist()
    blocks, cols = [], []
    for r in range(n):
        hr = (h - ExactMatrix.identity(n).scale(r)).tolist()
        w = kernel_basis(xrows + hr)
        if not w:
            continue
        chains = []
        for a in w:
            vecs = [a]
            for _ in range(r):
                vecs.append(y @ vecs[-1])
            chains.append(vecs)
        for i in range(r + 1):
            for vecs in chains:
                cols.append(vecs[i])
        gram = None
        if amb.kind is not FormKind.NO_FORM:
            b0 = build_invariant_form(r).b0
            gram = ExactMatrix([[amb.pair(a, vecs_l[r]) / b0 for vecs_l in chains] for a in w])
        blocks.append(IsotypicBlock(r, tuple(w), gram))
    if len(cols) != n:
        raise TripleError("highest-weight vectors do not generate V")
    p = ExactMatrix.from_columns(cols)
    if p.det() == 0:
        raise TripleError("isotypic frame is singular")
    if amb.kind is not FormKind.NO_FORM:
        expect = ExactMatrix.block_diag(
            [build_invariant_form(b.r).matB.kron(b.gram) for b in blocks]
        )
        if amb.adjoint_pullback(p) != expect:
            raise AssertionError("form does not split as sum of B_r (x) phi_r")
    return IsotypicFrame(p, tuple(blocks))


def _block_entry(fam: Family, block: IsotypicBlock):
    r, g, k = block.r, block.gram, block.mult
    if fam is Family.SL_R:
        return Dim(k)
    even = r % 2 == 0
    if fam is Family.SU:
        herm = g if even else g.scale(-I)
        p, q, z = signature_hermitian(herm)
    elif (fam is Family.SO_R) == even:
        p, q, z = signature_symmetric(g)
    else:
        if g != -g.T or g.det() == 0:
            raise TripleError(f"phi_{r} is not a nondegenerate symplectic form")
        return Dim(k)
    if z:
        raise TripleError(f"phi_{r} is degenerate")
    return Sig(p, q)


def extract_datum(t: StandardTriple) -> MultiplicityDatum:
    frame = isotypic_frame(t)
    fam = t.ambient.alg.family
    return MultiplicityDatum(tuple((b.r, _block_entry(fam, b)) for b in frame.blocks))


def _phi_model(fam: Family, r: int, e) -> ExactMatrix | None:
    if fam is Family.SL_R:
        return None
    if isinstance(e, Dim):
        return standard_symplectic(e.n // 2)
    signs = [1] * e.p + [-1] * e.q
    if fam is Family.SU and r % 2:
        return ExactMatrix.diag([I * s for s in signs])
    return ExactMatrix.diag(signs)


def build_model(alg: AlgebraDescriptor, d: MultiplicityDatum) -> StandardTriple:
    """Block-diagonal triple on sum_r V_r (x) W_r with form sum_r B_r (x) phi_r."""
    if alg.family not in MATRIX_FAMILIES:
        raise TripleError(f"no matrix model for {alg.family.value}")
    check_datum(alg, d)
    if is_zero_datum(d):
        raise TripleError("x must be nonzero: the zero orbit has no standard triple")
    xs, ys, hs, forms = [], [], [], []
    for r, e in d.entries:
        mod = build_irreducible(r)
        ident = ExactMatrix.identity(e.size)
        xs.append(mod.matX.kron(ident))
        ys.append(mod.matY.kron(ident))
        hs.append(mod.matH.kron(ident))
        phi = _phi_model(alg.family, r, e)
        if phi is not None:
            forms.append(build_invariant_form(r).matB.kron(phi))
    kind = _FAMILY_KIND[alg.family]
    form = ExactMatrix.block_diag(forms) if forms else None
    amb = AmbientSpace(alg, form, kind)
    return StandardTriple(
        ExactMatrix.block_diag(xs), ExactMatrix.block_diag(ys), ExactMatrix.block_diag(hs), amb
    )


# negation conjugators

def _pair_flip(dvals) -> ExactMatrix:
    """S with S^* diag(d) S = -diag(d), pairing positive with negative
    entries of equal square class."""
    pos = [i for i, v in enumerate(dvals) if v > 0]
    neg = [i for i, v in enumerate(dvals) if v < 0]
    if len(pos) != len(neg) or len(pos) + len(neg) != len(dvals):
        raise NotConjugateInFullGroup(
            f"odd-weight form has signature ({len(pos)},{len(neg)}), not split"
        )
    buckets: dict[int, list[int]] = {}
    for j in neg:
        buckets.setdefault(square_class(dvals[j]), []).append(j)
    k = len(dvals)
    s = [[Fraction(0)] * k for _ in range(k)]
    for i in pos:
        bucket = buckets.get(square_class(dvals[i]))
        if not bucket:
            raise ConjugatorNotRational("split form is not rationally isometric to its negative "
                                        "in this frame")
        j = bucket.pop()
        a = rational_sqrt(Fraction(dvals[i]) / -Fraction(dvals[j]))
        s[j][i] = a          # S e_i = a e_j
        s[i][j] = 1 / a      # S e_j = e_i / a
    return ExactMatrix(s)


def _flip_matrix(fam: Family, block: IsotypicBlock) -> ExactMatrix:
    """S on W_r with S^* phi S = (-1)^r phi."""
    k = block.mult
    if fam is Family.SL_R or block.r % 2 == 0:
        return ExactMatrix.identity(k)
    g = block.gram
    if fam is Family.SO_R:
        c = symplectic_basis(g)
        s = ExactMatrix.diag([1] * (k // 2) + [-1] * (k // 2))
    elif fam is Family.SP_R:
        c, dvals = congruence_diagonalize(g)
        s = _pair_flip(dvals)
    else:
        c, dvals = congruence_diagonalize(g.scale(-I), hermitian=True)
        s = _pair_flip([real_part(v) for v in dvals])
    return c @ s @ c.inverse()


def _lift(frame: IsotypicFrame, per_block: Sequence[ExactMatrix]) -> ExactMatrix:
    p = frame.matrix
    return p @ ExactMatrix.block_diag(list(per_block)) @ p.inverse()


def build_negation_conjugator(t: StandardTriple, frame: IsotypicFrame | None = None) -> ExactMatrix:
    """Isometry A of the ambient form with A x A^-1 = -x.

    On each V_r (x) W_r it is u_r (x) S_r (the unimodular u~_r for even r in
    so(p,q)), with S_r reversing phi_r for odd r.
    """
    frame = frame or isotypic_frame(t)
    fam = t.ambient.alg.family
    parts = []
    for b in frame.blocks:
        u = build_negation_intertwiner(b.r, unimodular=(fam is Family.SO_R and b.r % 2 == 0))
        parts.append(u.kron(_flip_matrix(fam, b)))
    a = _lift(frame, parts)
    if a @ t.x != -(t.x @ a):
        raise AssertionError("conjugator does not send x to -x")
    if t.ambient.kind is not FormKind.NO_FORM and t.ambient.adjoint_pullback(a) != t.ambient.form:
        raise AssertionError("conjugator is not an isometry")
    return a


def _check_centralizes(g: ExactMatrix, t: StandardTriple) -> None:
    for z in (t.x, t.y, t.h):
        if g @ z != z @ g:
            raise AssertionError("centralizer element fails to commute with the triple")


def centralizer_generators(t: StandardTriple, frame: IsotypicFrame | None = None) -> list[ExactMatrix]:
    """Elements id (x) R of the triple centralizer, one per diagonal
    reflection R of phi_r on even-weight blocks; odd weights contribute
    connected symplectic factors and are skipped."""
    frame = frame or isotypic_frame(t)
    fam = t.ambient.alg.family
    gens = []
    for idx, b in enumerate(frame.blocks):
        if b.r % 2:
            continue
        if fam is Family.SL_R:
            c, dvals = ExactMatrix.identity(b.mult), [1] * b.mult
            refl_indices = [0]
        else:
            c, dvals = congruence_diagonalize(b.gram)
            refl_indices = range(b.mult)
        cinv = c.inverse()
        for i in refl_indices:
            refl = c @ ExactMatrix.diag([-1 if j == i else 1 for j in range(b.mult)]) @ cinv
            parts = [ExactMatrix.identity(bb.mult * (bb.r + 1)) for bb in frame.blocks]
            parts[idx] = ExactMatrix.identity(b.r + 1).kron(refl)
            g = _lift(frame, parts)
            _check_centralizes(g, t)
            gens.append(g)
    return gens


def _generated_subgroup(elems) -> frozenset:
    group = {(1, 1)}
    frontier = set(elems)
    while frontier:
        new = {(a[0] * b[0], a[1] * b[1]) for a in group for b in frontier} - group
        group |= frontier | new
        frontier = new
    return frozenset(group)


@dataclass
class MatrixReport:
    datum: MultiplicityDatum
    datum_of_negative: MultiplicityDatum
    verdict: NegationVerdict
    conjugator: ExactMatrix | None = None
    conjugator_det: Fraction | None = None
    conjugator_components: tuple[int, int] | None = None
    centralizer_components: frozenset | None = None
    centralizer_dets: list = field(default_factory=list)
    notes: list[str] = field(default_factory=list)


def analyze_triple(t: StandardTriple) -> MatrixReport:
    fam = t.ambient.alg.family
    frame = isotypic_frame(t)
    d = extract_datum(t)
    dn = extract_datum(t.negated())
    if fam in (Family.SP_R, Family.SU):
        stable = d == dn
        if stable:
            detail = "datum of -x equals datum of x"
            reason = Reason.ODD_SIGNATURES_SPLIT
        else:
            detail = "datum of -x differs from datum of x"
            reason = Reason.ODD_SIGNATURE_NOT_SPLIT
        rep = MatrixReport(d, dn, NegationVerdict(stable, reason, detail))
        if stable:
            try:
                rep.conjugator = build_negation_conjugator(t, frame)
                rep.conjugator_det = rep.conjugator.det()
            except ConjugatorNotRational as exc:
                rep.notes.append(str(exc))
        if fam is Family.SU:
            rep.notes.append("U(p,q)-conjugacy reported; SU(p,q) Z(U(p,q)) = U(p,q)")
        return rep
    if d != dn:
        raise AssertionError("negation changed the datum in a family without signed odd weights")
    a = build_negation_conjugator(t, frame)
    det_a = a.det()
    gens = centralizer_generators(t, frame)
    if fam is Family.SL_R:
        dets = [g.det() for g in gens]
        stable = det_a > 0 or any(v < 0 for v in dets)
        detail = f"det(conjugator) = {det_a}; centralizer reaches det < 0: {any(v < 0 for v in dets)}"
        rep = MatrixReport(d, dn, NegationVerdict(stable, Reason.JORDAN_BLOCK_CRITERION, detail),
                           conjugator=a, conjugator_det=det_a, centralizer_dets=dets)
        return rep
    form = t.ambient.form
    comp_a = sigma_tau(a, form)
    comps = _generated_subgroup(sigma_tau(g, form) for g in gens)
    stable = comp_a in comps
    detail = f"(sigma,tau)(A) = {comp_a}; centralizer components {sorted(comps)}"
    return MatrixReport(d, dn, NegationVerdict(stable, Reason.SOPQ_COMPONENT_CRITERION, detail),
                        conjugator=a, conjugator_det=det_a, conjugator_components=comp_a,
                        centralizer_components=comps)


def decide_negation_matrix(t: StandardTriple) -> NegationVerdict:
    return analyze_triple(t).verdict


def parse_matrix(rows) -> ExactMatrix:
    if not isinstance(rows, list) or not rows or not all(isinstance(r, list) for r in rows):
        raise TripleError("matrix must be a nonempty list of rows")
    try:
        return ExactMatrix(rows)
    except (TypeError, ValueError) as exc:
        raise TripleError(f"bad matrix: {exc}") from exc


def ambient_from_obj(alg: AlgebraDescriptor, form_rows=None) -> AmbientSpace:
    if form_rows is None:
        return standard_ambient(alg)
    if alg.family not in MATRIX_FAMILIES:
        raise TripleError(f"no matrix model for {alg.family.value}")
    return AmbientSpace(alg, parse_matrix(form_rows), _FAMILY_KIND[alg.family])


__all__ = [
    "AmbientSpace",
    "ConjugatorNotRational",
    "DatumError",
    "FormKind",
    "IsotypicFrame",
    "MatrixReport",
    "NotConjugateInFullGroup",
    "StandardTriple",
    "TripleError",
    "algebra_basis",
    "algebra_membership",
    "analyze_triple",
    "build_model",
    "build_negation_conjugator",
    "centralizer_generators",
    "complete_standard_triple",
    "decide_negation_matrix",
    "extract_datum",
    "gl_triple",
    "isotypic_frame",
    "jordan_chains",
    "standard_ambient",
]
