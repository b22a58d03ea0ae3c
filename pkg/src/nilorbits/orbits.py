"""Combinatorial classification: enumerate multiplicity data and decide
negation stability and the Gibbs verdict from the data alone."""

from __future__ import annotations

from .core import (
    ALWAYS_STABLE,
    AlgebraDescriptor,
    DatumError,
    Dim,
    Family,
    GibbsVerdict,
    MultiplicityDatum,
    NegationVerdict,
    Reason,
    Sig,
    check_datum,
    entry_contribution,
    entry_kind,
    is_zero_datum,
    validate_datum,
)

ComponentSet = frozenset  # of (sigma, tau) pairs

FULL_FOUR_GROUP = frozenset({(1, 1), (1, -1), (-1, 1), (-1, -1)})

_SIGNED_ODD = (Family.SP_R, Family.SU, Family.SO_STAR)


def _options(fam: Family, r: int, budget):
    """Entries at weight r that fit in the remaining budget, with the budget
    left afterwards.  Budgets are ints (dimension families) or (p, q)."""
    kind = entry_kind(fam, r)
    sig_budget = isinstance(budget, tuple)
    step = 2 if (fam is Family.SO_R and r % 2) or (fam is Family.SP_R and r % 2 == 0) else 1
    if kind is Dim:
        k = 0
        while True:
            e = Dim(k)
            if sig_budget:
                c = entry_contribution(fam, r, e)
                rest = (budget[0] - c[0], budget[1] - c[1])
                if rest[0] < 0 or rest[1] < 0:
                    return
            else:
                rest = budget - (r + 1) * k
                if rest < 0:
                    return
            yield e, rest
            k += step
    else:
        total = sum(budget) if sig_budget else budget
        for s in range(0, total // (r + 1) + 1):
            for a in range(s + 1):
                e = Sig(a, s - a)
                if sig_budget:
                    c = entry_contribution(fam, r, e)
                    rest = (budget[0] - c[0], budget[1] - c[1])
                    if rest[0] < 0 or rest[1] < 0:
                        continue
                else:
                    rest = budget - (r + 1) * s
                    if rest < 0:
                        continue
                yield e, rest


def enumerate_orbit_data(alg: AlgebraDescriptor) -> list[MultiplicityDatum]:
    """All canonical data valid for ``alg``, sorted by weight then values."""
    fam = alg.family
    if fam is Family.COMPLEX_SEMISIMPLE:
        raise DatumError("enumeration is not supported for complex semisimple algebras")
    if fam in (Family.SO_R, Family.SU, Family.SP_HQ):
        budget = (alg.p, alg.q)
        empty = (0, 0)
    else:
        budget = alg.ambient_dim
        empty = 0
    top = alg.ambient_dim - 1
    out = []

    def rec(r, budget, acc):
        if r < 0:
            if budget == empty:
                out.append(MultiplicityDatum(tuple(acc)))
            return
        for e, rest in _options(fam, r, budget):
            acc.append((r, e))
            rec(r - 1, rest, acc)
            acc.pop()

    rec(top, budget, [])
    out = [d for d in out if validate_datum(alg, d)]
    out.sort(key=MultiplicityDatum.sort_key)
    return out


def _sig(d: MultiplicityDatum, r: int) -> Sig:
    e = d.get(r)
    return e if isinstance(e, Sig) else Sig(0, 0)


def so_parity(d: MultiplicityDatum) -> int:
    """sum over k of n_{8k+4} + n_{8k+2} + n_{4k+1}/2, reduced mod 2."""
    total = 0
    for r, e in d.entries:
        if r % 8 in (2, 4):
            total += e.size
        elif r % 4 == 1:
            total += e.size // 2
    return total % 2


def so_condition_1(d: MultiplicityDatum) -> bool:
    """q_{4k} = p_{4k+2} = 0 for all k."""
    return all(
        (_sig(d, r).q == 0 if r % 4 == 0 else _sig(d, r).p == 0)
        for r, _ in d.entries
        if r % 2 == 0
    )


def so_condition_2(d: MultiplicityDatum) -> bool:
    """p_{4k} = q_{4k+2} = 0 for all k."""
    return all(
        (_sig(d, r).p == 0 if r % 4 == 0 else _sig(d, r).q == 0)
        for r, _ in d.entries
        if r % 2 == 0
    )


def negation_stable(alg: AlgebraDescriptor, d: MultiplicityDatum) -> NegationVerdict:
    check_datum(alg, d)
    fam = alg.family
    if is_zero_datum(d):
        return NegationVerdict(True, Reason.ZERO_ORBIT, "the zero orbit is {0}")
    if fam in ALWAYS_STABLE:
        return NegationVerdict(True, Reason.ALWAYS_STABLE_FAMILY,
                               f"every nilpotent orbit of {fam.value} is negation-stable")
    if fam is Family.SL_R:
        odd_blocks = [r + 1 for r in d.weights() if r % 2 == 0]
        count = sum(e.size for r, e in d.entries if r % 4 == 1)
        stable = bool(odd_blocks) or count % 2 == 0
        if odd_blocks:
            detail = f"odd Jordan block of size {odd_blocks[0]}"
        else:
            detail = f"all blocks even; {count} block(s) of size 2 mod 4"
        return NegationVerdict(stable, Reason.JORDAN_BLOCK_CRITERION, detail)
    if fam in _SIGNED_ODD:
        bad = [(r, e) for r, e in d.entries if r % 2 == 1 and e.p != e.q]
        if bad:
            r, e = bad[0]
            return NegationVerdict(False, Reason.ODD_SIGNATURE_NOT_SPLIT,
                                   f"signature ({e.p},{e.q}) at r={r} is not split")
        return NegationVerdict(True, Reason.ODD_SIGNATURES_SPLIT,
                               "every odd-weight signature is split")
    if fam is Family.SO_R:
        parity = so_parity(d)
        c1, c2 = so_condition_1(d), so_condition_2(d)
        stable = not (parity == 1 and (c1 or c2))
        detail = f"parity={parity} cond1={c1} cond2={c2}"
        return NegationVerdict(stable, Reason.SOPQ_COMPONENT_CRITERION, detail)
    raise AssertionError(fam)


def gibbs_verdict(alg: AlgebraDescriptor, d: MultiplicityDatum) -> GibbsVerdict:
    v = negation_stable(alg, d)
    nonzero = not is_zero_datum(d)
    if nonzero and (v.stable or alg.family is Family.COMPLEX_SEMISIMPLE):
        return GibbsVerdict.NO_GIBBS_STATES
    return GibbsVerdict.NOT_DETERMINED


def centralizer_components(d: MultiplicityDatum) -> ComponentSet:
    """(sigma, tau) values met by the O(p,q)-centralizer of x.

    sigma reaches -1 iff some even m has p_{2m} >= 1 or some odd m has
    q_{2m} >= 1; tau symmetrically with p and q exchanged.
    """
    sigma_full = tau_full = False
    for r, e in d.entries:
        if r % 2:
            if not isinstance(e, Dim):
                raise DatumError("not an so(p,q) datum: odd weights carry dimensions", r)
            continue
        if not isinstance(e, Sig):
            raise DatumError("not an so(p,q) datum: even weights carry signatures", r)
        m = r // 2
        a, b = (e.p, e.q) if m % 2 == 0 else (e.q, e.p)
        sigma_full |= a >= 1
        tau_full |= b >= 1
    sig = (1, -1) if sigma_full else (1,)
    tau = (1, -1) if tau_full else (1,)
    return frozenset((s, t) for s in sig for t in tau)


def negate_datum(alg: AlgebraDescriptor, d: MultiplicityDatum) -> MultiplicityDatum:
    """Datum of -x: odd-weight signatures swap where they exist."""
    if alg.family not in _SIGNED_ODD:
        return d
    return MultiplicityDatum(tuple(
        (r, e.flipped() if r % 2 == 1 else e) for r, e in d.entries
    ))
