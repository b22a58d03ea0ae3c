import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from nilorbits.core import (
    AlgebraDescriptor,
    DatumError,
    Dim,
    Family,
    MultiplicityDatum,
    NegationVerdict,
    Reason,
    Sig,
    alg_from_obj,
    check_datum,
    datum_from_json,
    datum_to_json,
    is_zero_datum,
    validate_datum,
    zero_datum,
)
from nilorbits.orbits import enumerate_orbit_data


def D(**kw):
    return MultiplicityDatum.of({int(k[1:]): v for k, v in kw.items()})


class TestDescriptor:
    def test_parameters(self):
        assert AlgebraDescriptor.so_r(2, 1).params == {"p": 2, "q": 1}
        assert AlgebraDescriptor.sp_r(2).ambient_dim == 4
        assert AlgebraDescriptor.su(2, 1).label() == "su(2,1)"

    @pytest.mark.parametrize("make", [
        lambda: AlgebraDescriptor.sl_r(0),
        lambda: AlgebraDescriptor.so_r(0, 0),
        lambda: AlgebraDescriptor.so_r(-1, 2),
        lambda: AlgebraDescriptor(Family.SO_R, n=3),
        lambda: AlgebraDescriptor(Family.SL_R, p=1, q=1),
    ])
    def test_invalid(self, make):
        with pytest.raises(DatumError):
            make()

    def test_degenerate_signature_is_legal(self):
        alg = AlgebraDescriptor.so_r(3, 0)
        assert enumerate_orbit_data(alg) == [zero_datum(alg)]


class TestDatum:
    def test_canonical_form_strips_zero_entries(self):
        a = MultiplicityDatum.of({2: Sig(1, 0), 0: Sig(0, 0), 1: Dim(0)})
        assert a == MultiplicityDatum.of({2: Sig(1, 0)})
        assert a.weights() == [2]

    def test_order_independent(self):
        assert MultiplicityDatum(((2, Dim(1)), (0, Dim(1)))) == MultiplicityDatum(((0, Dim(1)), (2, Dim(1))))

    def test_duplicates_rejected(self):
        with pytest.raises(DatumError):
            MultiplicityDatum(((1, Dim(1)), (1, Dim(2))))

    def test_negative_counts_rejected(self):
        with pytest.raises((DatumError, ValueError)):
            Sig(-1, 0)

    def test_zero_datum(self):
        alg = AlgebraDescriptor.so_r(2, 2)
        assert zero_datum(alg) == D(r0=Sig(2, 2))
        assert is_zero_datum(zero_datum(alg))
        assert not is_zero_datum(D(r1=Dim(2)))


class TestValidate:
    def test_so21_valid(self):
        assert validate_datum(AlgebraDescriptor.so_r(2, 1), D(r2=Sig(1, 0)))

    def test_odd_dimension_rejected(self):
        res = validate_datum(AlgebraDescriptor.so_r(2, 1), D(r1=Dim(1)))
        assert not res and res.r == 1

    def test_empty_rejected(self):
        assert not validate_datum(AlgebraDescriptor.sl_r(3), MultiplicityDatum())

    def test_wrong_kind(self):
        res = validate_datum(AlgebraDescriptor.sp_r(1), D(r1=Dim(1)))
        assert not res and res.r == 1

    def test_check_raises_with_weight(self):
        with pytest.raises(DatumError) as info:
            check_datum(AlgebraDescriptor.sp_r(2), D(r0=Dim(1), r2=Dim(1)))
        assert info.value.r == 0

    @pytest.mark.parametrize("alg", [
        AlgebraDescriptor.sl_r(5), AlgebraDescriptor.so_r(3, 2), AlgebraDescriptor.sp_r(3),
        AlgebraDescriptor.su(2, 2), AlgebraDescriptor.sp_hq(2, 1), AlgebraDescriptor.so_star(4),
        AlgebraDescriptor.sl_h(3),
    ])
    def test_perturbations_rejected(self, alg):
        for d in enumerate_orbit_data(alg):
            assert validate_datum(alg, d)
            for idx, (r, e) in enumerate(d.entries):
                for bumped in _bumps(e):
                    items = list(d.entries)
                    items[idx] = (r, bumped)
                    assert not validate_datum(alg, MultiplicityDatum(tuple(items)))


def _bumps(e):
    if isinstance(e, Dim):
        return [Dim(e.n + s) for s in (1, -1) if e.n + s >= 0]
    out = []
    for dp, dq in ((1, 0), (-1, 0), (0, 1), (0, -1)):
        if e.p + dp >= 0 and e.q + dq >= 0:
            out.append(Sig(e.p + dp, e.q + dq))
    return out


class TestJson:
    def test_canonical_bytes(self):
        text = datum_to_json(AlgebraDescriptor.so_r(2, 1), D(r2=Sig(1, 0)))
        assert text == '{"family":"so_r","p":2,"q":1,"entries":[{"r":2,"sig":[1,0]}]}'

    def test_dim_entries(self):
        assert datum_to_json(None, D(r1=Dim(2))) == '{"entries":[{"r":1,"dim":2}]}'

    def test_round_trip(self):
        d = D(r0=Sig(1, 1), r1=Dim(2), r4=Sig(0, 3))
        assert datum_from_json(datum_to_json(None, d)) == d

    @pytest.mark.parametrize("text", [
        "not json", "[]", '{"entries": 3}', '{"entries":[{"sig":[1,0]}]}',
        '{"entries":[{"r":1,"sig":[1]}]}', '{"entries":[{"r":1}]}', '{"entries":[{"r":1,"dim":"2"}]}',
    ])
    def test_malformed(self, text):
        with pytest.raises(DatumError):
            datum_from_json(text)

    def test_alg_from_obj(self):
        assert alg_from_obj({"family": "su", "p": 1, "q": 1}) == AlgebraDescriptor.su(1, 1)
        with pytest.raises(DatumError):
            alg_from_obj({"family": "e8"})
        with pytest.raises(DatumError):
            alg_from_obj({"family": "sl_r"})

    @given(st.dictionaries(st.integers(0, 9), st.tuples(st.integers(0, 4), st.integers(0, 4)), max_size=4))
    def test_json_round_trip_property(self, raw):
        d = MultiplicityDatum.of({r: Sig(*v) if r % 2 == 0 else Dim(v[0]) for r, v in raw.items()})
        text = datum_to_json(None, d)
        assert datum_from_json(text) == d
        assert json.loads(text)["entries"] == sorted(json.loads(text)["entries"], key=lambda e: e["r"])


def test_verdict_consistency():
    with pytest.raises(ValueError):
        NegationVerdict(False, Reason.ZERO_ORBIT)
    with pytest.raises(ValueError):
        NegationVerdict(False, Reason.ALWAYS_STABLE_FAMILY)
