"""Per-family negation conditions as machine-readable expressions.

Each row holds a Python boolean expression over a few datum quantities.
The expressions are evaluated here with their own small interpreter and
checked against :func:`nilorbits.orbits.negation_stable` on enumerated data;
they do not call into the criterion code.

Names available to an expression:
  W      sorted weights r present in the datum
  n      r -> multiplicity (n_r = p_r + q_r for signatures), 0 if absent
  p, q   r -> signature counts, 0 if absent or not a signature
  zero   whether the datum is the zero orbit
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass

from .core import AlgebraDescriptor, Family, MultiplicityDatum, Sig, is_zero_datum
from .orbits import enumerate_orbit_data, negation_stable


@dataclass(frozen=True)
class TableRow:
    family: Family
    algebra: str
    condition: str      # stable iff this holds
    gloss: str


ROWS: tuple[TableRow, ...] = (
    TableRow(
        Family.SL_R, "sl(n,R)",
        "zero or any(n[r] > 0 for r in W if r % 2 == 0)"
        " or sum(n[r] for r in W if r % 4 == 1) % 2 == 0",
        "some Jordan block has odd size, or an even number of blocks have size 2 mod 4",
    ),
    TableRow(
        Family.SO_R, "so(p,q)",
        "zero or not ((sum(n[r] for r in W if r % 8 in (2, 4))"
        " + sum(n[r] // 2 for r in W if r % 4 == 1)) % 2 == 1"
        " and (all(q[r] == 0 if r % 4 == 0 else p[r] == 0 for r in W if r % 2 == 0)"
        " or all(p[r] == 0 if r % 4 == 0 else q[r] == 0 for r in W if r % 2 == 0)))",
        "not both: odd parity count and one of the two sign-pattern conditions on even weights",
    ),
    TableRow(
        Family.SP_R, "sp(2n,R)",
        "all(p[r] == q[r] for r in W if r % 2 == 1)",
        "phi_r split for every odd r",
    ),
    TableRow(
        Family.SU, "su(p,q)",
        "all(p[r] == q[r] for r in W if r % 2 == 1)",
        "-i phi_r split for every odd r",
    ),
    TableRow(
        Family.SO_STAR, "so*(2n)",
        "all(p[r] == q[r] for r in W if r % 2 == 1)",
        "signature split for every odd r",
    ),
    TableRow(Family.SL_H, "sl(n,H)", "True", "always"),
    TableRow(Family.SP_HQ, "sp(p,q)", "True", "always"),
    TableRow(Family.COMPLEX_SEMISIMPLE, "complex semisimple", "True", "always"),
)

ROW_BY_FAMILY = {row.family: row for row in ROWS}

_BUILTINS = {"all": all, "any": any, "sum": sum, "True": True, "False": False}


def _namespace(d: MultiplicityDatum) -> dict:
    n, p, q = defaultdict(int), defaultdict(int), defaultdict(int)
    for r, e in d.entries:
        n[r] = e.size
        if isinstance(e, Sig):
            p[r], q[r] = e.p, e.q
    return {"W": d.weights(), "n": n, "p": p, "q": q, "zero": is_zero_datum(d)}


def evaluate_condition(row: TableRow, d: MultiplicityDatum) -> bool:
    # names go in globals so generator expressions can see them
    ns = {"__builtins__": _BUILTINS, **_namespace(d)}
    return bool(eval(row.condition, ns))  # noqa: S307  constant expressions


# default spot-evaluation descriptors per family
SPOT_ALGEBRAS = {
    Family.SL_R: [AlgebraDescriptor.sl_r(n) for n in range(1, 9)],
    Family.SO_R: [AlgebraDescriptor.so_r(p, q) for p in range(1, 7) for q in range(1, p + 1) if p + q <= 8],
    Family.SP_R: [AlgebraDescriptor.sp_r(n) for n in range(1, 5)],
    Family.SU: [AlgebraDescriptor.su(p, q) for p in range(1, 6) for q in range(1, p + 1) if p + q <= 6],
    Family.SO_STAR: [AlgebraDescriptor.so_star(n) for n in range(1, 6)],
    Family.SL_H: [AlgebraDescriptor.sl_h(n) for n in range(1, 5)],
    Family.SP_HQ: [AlgebraDescriptor.sp_hq(p, q) for p in range(1, 4) for q in range(1, p + 1)],
    Family.COMPLEX_SEMISIMPLE: [AlgebraDescriptor.complex_semisimple(n) for n in range(1, 7)],
}


def _data(alg: AlgebraDescriptor) -> list[MultiplicityDatum]:
    if alg.family is Family.COMPLEX_SEMISIMPLE:
        # sl(n,C) orbits are labelled by partitions, same data as sl(n,R)
        return enumerate_orbit_data(AlgebraDescriptor.sl_r(alg.n))
    return enumerate_orbit_data(alg)


@dataclass
class SpotResult:
    algebra: str
    data: int
    stable: int
    discrepancies: list


def spot_evaluate(row: TableRow, algs=None) -> list[SpotResult]:
    algs = SPOT_ALGEBRAS[row.family] if algs is None else algs
    out = []
    for alg in algs:
        data = _data(alg)
        stable, bad = 0, []
        for d in data:
            v = evaluate_condition(row, d)
            stable += v
            if v != negation_stable(alg, d).stable:
                bad.append(d)
        out.append(SpotResult(alg.label(), len(data), stable, bad))
    return out


def render_rows(with_spots: bool = True, max_dim: int | None = None) -> list[dict]:
    rows = []
    for row in ROWS:
        obj = {"family": row.family.value, "algebra": row.algebra,
               "stable_iff": row.condition, "gloss": row.gloss}
        if with_spots:
            algs = SPOT_ALGEBRAS[row.family]
            if max_dim is not None:
                algs = [a for a in algs if a.ambient_dim <= max_dim]
            obj["spot"] = [
                {"algebra": s.algebra, "data": s.data, "stable": s.stable,
                 "discrepancies": len(s.discrepancies)}
                for s in spot_evaluate(row, algs)
            ]
        rows.append(obj)
    return rows


def total_discrepancies(max_dim: int | None = None) -> int:
    return sum(s["discrepancies"] for row in render_rows(True, max_dim) for s in row["spot"])
