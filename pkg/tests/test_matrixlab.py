import random
from fractions import Fraction

import pytest
from hypothesis import HealthCheck, assume, given, settings
from hypothesis import strategies as st

from nilorbits.core import AlgebraDescriptor, DatumError, Dim, MultiplicityDatum, Sig, is_zero_datum
from nilorbits.exactla import ExactMatrix, Gaussian, rank, signature_symmetric
from nilorbits.matrixlab import (
    AmbientSpace,
    ConjugatorNotRational,
    FormKind,
    NotConjugateInFullGroup,
    StandardTriple,
    TripleError,
    algebra_basis,
    algebra_membership,
    analyze_triple,
    build_model,
    build_negation_conjugator,
    complete_standard_triple,
    decide_negation_matrix,
    extract_datum,
    jordan_chains,
    standard_ambient,
)
from nilorbits.orbits import enumerate_orbit_data, negation_stable
from nilorbits.sl2rep import build_invariant_form, sigma_tau, standard_symplectic

from conftest import invertible_matrices

A = AlgebraDescriptor
I = Gaussian(0, 1)


def D(mapping):
    return MultiplicityDatum.of(mapping)


def algebras_up_to(dim):
    out = [A.sl_r(n) for n in range(2, dim + 1)] + [A.sp_r(n) for n in range(1, dim // 2 + 1)]
    for s in range(2, dim + 1):
        for q in range(1, s):
            out += [A.su(s - q, q), A.so_r(s - q, q)]
    return out


def nonzero_data(dim):
    return [(alg, d) for alg in algebras_up_to(dim) for d in enumerate_orbit_data(alg) if not is_zero_datum(d)]


class TestMembership:
    def test_sl2(self):
        assert algebra_membership(ExactMatrix([[0, 1], [0, 0]]), standard_ambient(A.sl_r(2)))
        assert not algebra_membership(ExactMatrix.identity(2), standard_ambient(A.sl_r(2)))

    def test_identity_not_in_so21(self):
        assert not algebra_membership(ExactMatrix.identity(3), standard_ambient(A.so_r(2, 1)))

    def test_projection_lands_in_algebra(self):
        amb = standard_ambient(A.so_r(2, 2))
        b = amb.form
        z = ExactMatrix([[1, 2, 0, -1], [3, 0, 1, 1], [0, 5, 2, 0], [1, 1, 1, 1]])
        proj = (z - b.inverse() @ z.T @ b).scale(Fraction(1, 2))
        assert algebra_membership(proj, amb)

    def test_su_needs_trace_zero(self):
        amb = standard_ambient(A.su(1, 1))
        assert not algebra_membership(ExactMatrix.diag([I, I]), amb)
        assert algebra_membership(ExactMatrix.diag([I, -I]), amb)

    def test_size_mismatch(self):
        with pytest.raises(TripleError):
            algebra_membership(ExactMatrix.identity(3), standard_ambient(A.sl_r(2)))

    @pytest.mark.parametrize("alg,dim", [
        (A.sl_r(3), 8), (A.so_r(2, 1), 3), (A.so_r(3, 2), 10), (A.sp_r(2), 10), (A.su(2, 1), 8), (A.su(1, 1), 3),
    ])
    def test_basis_dimension(self, alg, dim):
        amb = standard_ambient(alg)
        basis = algebra_basis(amb)
        assert len(basis) == dim
        assert all(algebra_membership(z, amb) for z in basis)


class TestAmbient:
    def test_wrong_signature(self):
        with pytest.raises(TripleError):
            AmbientSpace(A.so_r(2, 1), ExactMatrix.diag([1, 1, 1]), FormKind.SYMMETRIC)

    def test_degenerate_symplectic(self):
        with pytest.raises(TripleError):
            AmbientSpace(A.sp_r(1), ExactMatrix.zeros(2), FormKind.SYMPLECTIC)

    def test_kind_mismatch(self):
        with pytest.raises(TripleError):
            AmbientSpace(A.sp_r(1), standard_symplectic(1), FormKind.SYMMETRIC)

    def test_quaternionic(self):
        with pytest.raises(TripleError):
            standard_ambient(A.sp_hq(1, 1))


class TestCompletion:
    def test_sl2(self):
        t = complete_standard_triple(ExactMatrix([[0, 1], [0, 0]]), standard_ambient(A.sl_r(2)))
        assert t.h == ExactMatrix.diag([1, -1])
        assert t.y == ExactMatrix([[0, 0], [1, 0]])

    def test_jordan_block(self):
        x = ExactMatrix([[0, 1, 0], [0, 0, 1], [0, 0, 0]])
        t = complete_standard_triple(x, standard_ambient(A.sl_r(3)))
        assert t.h == ExactMatrix.diag([2, 0, -2])
        assert t.y == ExactMatrix([[0, 0, 0], [2, 0, 0], [0, 2, 0]])

    def test_so21_weights(self):
        m = build_model(A.so_r(2, 1), D({2: Sig(1, 0)}))
        t = complete_standard_triple(m.x, m.ambient, random.Random(3))
        assert all(rank(t.h - ExactMatrix.identity(3).scale(k)) == 2 for k in (2, 0, -2))

    def test_rejects_zero(self):
        with pytest.raises(TripleError, match="nonzero"):
            complete_standard_triple(ExactMatrix.zeros(2), standard_ambient(A.sl_r(2)))

    def test_rejects_non_nilpotent(self):
        with pytest.raises(TripleError, match="nilpotent"):
            complete_standard_triple(ExactMatrix.diag([1, -1]), standard_ambient(A.sl_r(2)))

    def test_rejects_non_member(self):
        with pytest.raises(TripleError, match="not in the algebra"):
            complete_standard_triple(ExactMatrix([[0, 1, 0], [0, 0, 0], [0, 0, 0]]),
                                     standard_ambient(A.so_r(2, 1)))

    def test_triple_validation(self):
        amb = standard_ambient(A.sl_r(2))
        x, y, h = ExactMatrix([[0, 1], [0, 0]]), ExactMatrix([[0, 0], [1, 0]]), ExactMatrix.diag([1, -1])
        StandardTriple(x, y, h, amb)
        with pytest.raises(TripleError, match=r"\[h, x\]"):
            StandardTriple(x, y, -h, amb)
        with pytest.raises(TripleError, match=r"\[x, y\]"):
            StandardTriple(x, y.scale(2), h, amb)

    def test_jordan_chains_cover_space(self):
        x = ExactMatrix([[0, 1, 0, 0], [0, 0, 0, 0], [0, 0, 0, 1], [0, 0, 0, 0]])
        chains = jordan_chains(x, random.Random(0))
        assert sorted(s for _, s in chains) == [2, 2]


class TestExtractAndModel:
    def test_sl2(self):
        t = complete_standard_triple(ExactMatrix([[0, 1], [0, 0]]), standard_ambient(A.sl_r(2)))
        assert extract_datum(t) == D({1: Dim(1)})

    def test_sp4_split(self):
        x = ExactMatrix([[0, 1, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0], [0, 0, -1, 0]])
        t = complete_standard_triple(x, standard_ambient(A.sp_r(2)))
        assert extract_datum(t) == D({1: Sig(1, 1)})

    def test_so21_model_form(self):
        t = build_model(A.so_r(2, 1), D({2: Sig(1, 0)}))
        assert signature_symmetric(t.ambient.form) == (2, 1, 0)
        assert extract_datum(t) == D({2: Sig(1, 0)})

    def test_sp4_model_form(self):
        t = build_model(A.sp_r(2), D({1: Sig(1, 1)}))
        f = t.ambient.form
        assert f == -f.T and f == build_invariant_form(1).matB.kron(ExactMatrix.diag([1, -1]))

    def test_zero_datum_rejected(self):
        with pytest.raises(TripleError, match="nonzero"):
            build_model(A.sl_r(2), D({0: Dim(2)}))

    def test_invalid_datum(self):
        with pytest.raises(DatumError):
            build_model(A.so_r(2, 1), D({1: Dim(1)}))

    def test_quaternionic_rejected(self):
        with pytest.raises(TripleError):
            build_model(A.sl_h(2), D({1: Dim(1)}))

    @pytest.mark.parametrize("alg,d", nonzero_data(5), ids=lambda v: str(v))
    def test_round_trip(self, alg, d):
        assert extract_datum(build_model(alg, d)) == d


class TestConjugators:
    def test_sl2(self):
        t = build_model(A.sl_r(2), D({1: Dim(1)}))
        assert build_negation_conjugator(t) == ExactMatrix.diag([1, -1])
        assert not decide_negation_matrix(t).stable

    def test_so21(self):
        t = build_model(A.so_r(2, 1), D({2: Sig(1, 0)}))
        a = build_negation_conjugator(t)
        assert a == ExactMatrix.diag([-1, 1, -1])
        assert a.det() == 1
        assert sigma_tau(a, t.ambient.form) == (-1, -1)
        rep = analyze_triple(t)
        assert rep.centralizer_components == {(1, 1), (1, -1)}
        assert not rep.verdict.stable

    def test_sp4(self):
        t = build_model(A.sp_r(2), D({1: Sig(1, 1)}))
        rep = analyze_triple(t)
        a = rep.conjugator
        assert rep.verdict.stable
        assert a @ t.x @ a.inverse() == -t.x
        assert a.T @ t.ambient.form @ a == t.ambient.form

    def test_not_conjugate(self):
        t = build_model(A.sp_r(1), D({1: Sig(1, 0)}))
        with pytest.raises(NotConjugateInFullGroup):
            build_negation_conjugator(t)
        assert not decide_negation_matrix(t).stable

    def test_irrational_pairing(self):
        # phi_1 = <1, -3> is split but not rationally isometric to its negative
        b1 = build_invariant_form(1).matB
        form = b1.kron(ExactMatrix.diag([1, -3]))
        amb = AmbientSpace(A.sp_r(2), form, FormKind.SYMPLECTIC)
        m = build_model(A.sp_r(2), D({1: Sig(1, 1)}))
        t = StandardTriple(m.x, m.y, m.h, amb)
        with pytest.raises(ConjugatorNotRational):
            build_negation_conjugator(t)
        rep = analyze_triple(t)
        assert rep.verdict.stable and rep.conjugator is None and rep.notes

    @pytest.mark.parametrize("alg,d", nonzero_data(5), ids=lambda v: str(v))
    def test_conjugator_identities(self, alg, d):
        t = build_model(alg, d)
        try:
            a = build_negation_conjugator(t)
        except (NotConjugateInFullGroup, ConjugatorNotRational):
            return
        assert a @ t.x + t.x @ a == ExactMatrix.zeros(t.x.rows)
        if t.ambient.form is not None:
            assert t.ambient.adjoint_pullback(a) == t.ambient.form

    @pytest.mark.parametrize("alg,d", nonzero_data(5), ids=lambda v: str(v))
    def test_oracle_agreement(self, alg, d):
        assert decide_negation_matrix(build_model(alg, d)).stable == negation_stable(alg, d).stable


def _conjugate_triple(t, g):
    """The same orbit type seen through a change of basis g."""
    gi = g.inverse()
    amb = t.ambient
    form = None
    if amb.form is not None:
        gih = gi.H if amb.sesquilinear else gi.T
        form = gih @ amb.form @ gi
    new_amb = AmbientSpace(amb.alg, form, amb.kind)
    return g @ t.x @ gi, new_amb


small_data = [(alg, d) for alg, d in nonzero_data(4)]


@settings(max_examples=40, deadline=None, suppress_health_check=[HealthCheck.too_slow])
@given(st.sampled_from(small_data), st.data(), st.integers(0, 1000))
def test_invariance_under_change_of_basis(case, data, seed):
    alg, d = case
    t = build_model(alg, d)
    g = data.draw(invertible_matrices(t.x.rows))
    if alg.family.value == "su":
        g2 = data.draw(invertible_matrices(t.x.rows))
        g = g + g2.scale(I)
        assume(g.det() != 0)
    x, amb = _conjugate_triple(t, g)
    t2 = complete_standard_triple(x, amb, random.Random(seed))
    assert extract_datum(t2) == d
    assert decide_negation_matrix(t2).stable == negation_stable(alg, d).stable


@pytest.mark.parametrize("seed", range(5))
def test_independent_completions_agree(seed):
    alg, d = A.so_r(3, 2), D({0: Sig(1, 0), 1: Dim(2)})
    t = build_model(alg, d)
    a = complete_standard_triple(t.x, t.ambient, random.Random(seed))
    b = complete_standard_triple(t.x, t.ambient, random.Random(seed + 100))
    assert extract_datum(a) == extract_datum(b) == d
