"""Shared vocabulary: algebra families, multiplicity data, verdicts."""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Union


class Family(enum.Enum):
    SL_R = "sl_r"
    SO_R = "so_r"
    SP_R = "sp_r"
    SU = "su"
    SL_H = "sl_h"
    SP_HQ = "sp_hq"
    SO_STAR = "so_star"
    COMPLEX_SEMISIMPLE = "complex"

    @property
    def param_names(self) -> tuple[str, ...]:
        return ("p", "q") if self in _SIGNATURE_FAMILIES else ("n",)


_SIGNATURE_FAMILIES = {Family.SO_R, Family.SU, Family.SP_HQ}

# families whose nilpotent orbits are all negation-stable
ALWAYS_STABLE = frozenset({Family.SP_HQ, Family.SL_H, Family.COMPLEX_SEMISIMPLE})
MATRIX_FAMILIES = frozenset({Family.SL_R, Family.SO_R, Family.SP_R, Family.SU})


class DatumError(ValueError):
    """A datum or descriptor violates one of its invariants."""

    def __init__(self, message: str, r: int | None = None):
        super().__init__(message)
        self.r = r


@dataclass(frozen=True)
class AlgebraDescriptor:
    family: Family
    n: int | None = None
    p: int | None = None
    q: int | None = None

    def __post_init__(self):
        if not isinstance(self.family, Family):
            object.__setattr__(self, "family", Family(self.family))
        if self.family in _SIGNATURE_FAMILIES:
            if self.p is None or self.q is None or self.n is not None:
                raise DatumError(f"{self.family.value} takes parameters p and q")
            if self.p < 0 or self.q < 0 or self.p + self.q < 1:
                raise DatumError("need p >= 0, q >= 0 and p + q >= 1")
        else:
            if self.n is None or self.p is not None or self.q is not None:
                raise DatumError(f"{self.family.value} takes parameter n")
            if self.n < 1:
                raise DatumError("need n >= 1")

    @classmethod
    def sl_r(cls, n):
        return cls(Family.SL_R, n=n)

    @classmethod
    def so_r(cls, p, q):
        return cls(Family.SO_R, p=p, q=q)

    @classmethod
    def sp_r(cls, n):
        return cls(Family.SP_R, n=n)

    @classmethod
    def su(cls, p, q):
        return cls(Family.SU, p=p, q=q)

    @classmethod
    def sl_h(cls, n):
        return cls(Family.SL_H, n=n)

    @classmethod
    def sp_hq(cls, p, q):
        return cls(Family.SP_HQ, p=p, q=q)

    @classmethod
    def so_star(cls, n):
        return cls(Family.SO_STAR, n=n)

    @classmethod
    def complex_semisimple(cls, n):
        return cls(Family.COMPLEX_SEMISIMPLE, n=n)

    @property
    def params(self) -> dict[str, int]:
        return {k: getattr(self, k) for k in self.family.param_names}

    @property
    def ambient_dim(self) -> int:
        """Dimension of the standard module over the base division algebra."""
        if self.family in _SIGNATURE_FAMILIES:
            return self.p + self.q
        if self.family is Family.SP_R:
            return 2 * self.n
        return self.n

    def label(self) -> str:
        return self.family.value + "(" + ",".join(str(v) for v in self.params.values()) + ")"


@dataclass(frozen=True, order=True)
class Dim:
    n: int

    def __post_init__(self):
        if self.n < 0:
            raise DatumError(f"negative dimension {self.n}")

    @property
    def size(self) -> int:
        return self.n

    def is_zero(self) -> bool:
        return self.n == 0


@dataclass(frozen=True, order=True)
class Sig:
    p: int
    q: int

    def __post_init__(self):
        if self.p < 0 or self.q < 0:
            raise DatumError(f"negative signature ({self.p},{self.q})")

    @property
    def size(self) -> int:
        return self.p + self.q

    def is_zero(self) -> bool:
        return self.p == 0 and self.q == 0

    def flipped(self) -> "Sig":
        return Sig(self.q, self.p)


Entry = Union[Dim, Sig]


@dataclass(frozen=True)
class MultiplicityDatum:
    """Canonical map r -> multiplicity entry; zero entries are dropped."""

    entries: tuple[tuple[int, Entry], ...] = ()

    def __post_init__(self):
        items = self.entries.items() if isinstance(self.entries, Mapping) else self.entries
        clean = {}
        for r, e in items:
            if not isinstance(r, int) or r < 0:
                raise DatumError(f"highest weight must be a nonnegative integer, got {r!r}")
            if not isinstance(e, (Dim, Sig)):
                raise DatumError(f"bad entry at r={r}: {e!r}", r)
            if r in clean:
                raise DatumError(f"duplicate entry at r={r}", r)
            clean[r] = e
        canon = tuple((r, clean[r]) for r in sorted(clean) if not clean[r].is_zero())
        object.__setattr__(self, "entries", canon)

    @classmethod
    def of(cls, mapping: Mapping[int, Entry] | Iterable[tuple[int, Entry]]) -> "MultiplicityDatum":
        return cls(tuple(mapping.items()) if isinstance(mapping, Mapping) else tuple(mapping))

    def as_dict(self) -> dict[int, Entry]:
        return dict(self.entries)

    def get(self, r: int) -> Entry | None:
        return self.as_dict().get(r)

    def weights(self) -> list[int]:
        return [r for r, _ in self.entries]

    def sort_key(self):
        return tuple((r, _entry_values(e)) for r, e in self.entries)

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)


def _entry_values(e: Entry) -> tuple[int, ...]:
    return (e.n,) if isinstance(e, Dim) else (e.p, e.q)


def entry_kind(family: Family, r: int) -> type:
    """Which entry type a family carries at highest weight r."""
    even = r % 2 == 0
    if family in (Family.SL_R, Family.SL_H, Family.COMPLEX_SEMISIMPLE):
        return Dim
    if family is Family.SU:
        return Sig
    if family in (Family.SO_R, Family.SP_HQ):
        return Sig if even else Dim
    if family in (Family.SP_R, Family.SO_STAR):
        return Dim if even else Sig
    raise AssertionError(family)


def _dim_must_be_even(family: Family, r: int) -> bool:
    # real symplectic multiplicity spaces
    return (family is Family.SO_R and r % 2 == 1) or (family is Family.SP_R and r % 2 == 0)


def entry_contribution(family: Family, r: int, e: Entry) -> tuple[int, int]:
    """Signature contributed by V_r (x) W_r for the signature families."""
    if isinstance(e, Sig):
        if r % 2 == 0:
            m = r // 2
            return (m + 1) * e.p + m * e.q, m * e.p + (m + 1) * e.q
        half = (r + 1) * (e.p + e.q) // 2
        return half, half
    half = (r + 1) * e.n
    if half % 2:
        raise DatumError(f"odd total dimension at r={r}", r)
    return half // 2, half // 2


def zero_datum(alg: AlgebraDescriptor) -> MultiplicityDatum:
    kind = entry_kind(alg.family, 0)
    if kind is Sig:
        return MultiplicityDatum.of({0: Sig(alg.p, alg.q)})
    return MultiplicityDatum.of({0: Dim(alg.ambient_dim)})


def is_zero_datum(d: MultiplicityDatum) -> bool:
    """A valid datum describes the zero orbit iff only r = 0 occurs."""
    return d.weights() == [0]


@dataclass(frozen=True)
class ValidationResult:
    ok: bool
    message: str = ""
    r: int | None = None

    def __bool__(self):
        return self.ok


def validate_datum(alg: AlgebraDescriptor, d: MultiplicityDatum) -> ValidationResult:
    fam = alg.family
    for r, e in d.entries:
        kind = entry_kind(fam, r)
        if not isinstance(e, kind):
            return ValidationResult(
                False, f"{fam.value} needs a {kind.__name__} entry at r={r}", r
            )
        if isinstance(e, Dim) and _dim_must_be_even(fam, r) and e.n % 2:
            return ValidationResult(
                False, f"multiplicity space at r={r} is symplectic; dimension must be even", r
            )
    if fam in _SIGNATURE_FAMILIES:
        tp = tq = 0
        for r, e in d.entries:
            a, b = entry_contribution(fam, r, e)
            tp += a
            tq += b
        if (tp, tq) != (alg.p, alg.q):
            return ValidationResult(
                False, f"total signature ({tp},{tq}) does not match ({alg.p},{alg.q})"
            )
    else:
        total = sum((r + 1) * e.size for r, e in d.entries)
        if total != alg.ambient_dim:
            return ValidationResult(
                False, f"total dimension {total} does not match {alg.ambient_dim}"
            )
    return ValidationResult(True)


def check_datum(alg: AlgebraDescriptor, d: MultiplicityDatum) -> None:
    res = validate_datum(alg, d)
    if not res:
        raise DatumError(res.message, res.r)


class Reason(enum.Enum):
    ALWAYS_STABLE_FAMILY = "AlwaysStableFamily"
    ODD_SIGNATURES_SPLIT = "OddSignaturesSplit"
    ODD_SIGNATURE_NOT_SPLIT = "OddSignatureNotSplit"
    JORDAN_BLOCK_CRITERION = "JordanBlockCriterion"
    SOPQ_COMPONENT_CRITERION = "SOpqComponentCriterion"
    ZERO_ORBIT = "ZeroOrbit"


@dataclass(frozen=True)
class NegationVerdict:
    stable: bool
    reason: Reason
    detail: str = ""

    def __post_init__(self):
        if self.reason is Reason.ZERO_ORBIT and not self.stable:
            raise ValueError("the zero orbit is always negation-stable")
        if self.reason is Reason.ALWAYS_STABLE_FAMILY and not self.stable:
            raise ValueError("AlwaysStableFamily verdicts are stable")


class GibbsVerdict(enum.Enum):
    NO_GIBBS_STATES = "NoGibbsStates"
    NOT_DETERMINED = "NotDeterminedByThisCriterion"


@dataclass(frozen=True)
class VerdictBundle:
    alg: AlgebraDescriptor
    datum: MultiplicityDatum
    negation: NegationVerdict
    gibbs: GibbsVerdict
    evidence: dict = field(default_factory=dict, compare=False)


# JSON encoding

def _encode_entries(d: MultiplicityDatum) -> list[dict]:
    out = []
    for r, e in d.entries:
        if isinstance(e, Sig):
            out.append({"r": r, "sig": [e.p, e.q]})
        else:
            out.append({"r": r, "dim": e.n})
    return out


def alg_to_obj(alg: AlgebraDescriptor) -> dict:
    obj = {"family": alg.family.value}
    obj.update(alg.params)
    return obj


def datum_to_obj(alg: AlgebraDescriptor | None, d: MultiplicityDatum) -> dict:
    obj = alg_to_obj(alg) if alg is not None else {}
    obj["entries"] = _encode_entries(d)
    return obj


def dumps(obj) -> str:
    """Byte-stable compact JSON."""
    return json.dumps(obj, separators=(",", ":"), ensure_ascii=False)


def datum_to_json(alg: AlgebraDescriptor | None, d: MultiplicityDatum) -> str:
    return dumps(datum_to_obj(alg, d))


def alg_from_obj(obj: Mapping) -> AlgebraDescriptor:
    try:
        fam = Family(obj["family"])
    except (KeyError, ValueError) as exc:
        raise DatumError(f"unknown or missing family: {obj.get('family')!r}") from exc
    params = {}
    for k in fam.param_names:
        if k not in obj:
            raise DatumError(f"missing parameter {k!r} for {fam.value}")
        v = obj[k]
        if not isinstance(v, int) or isinstance(v, bool):
            raise DatumError(f"parameter {k!r} must be an integer")
        params[k] = v
    return AlgebraDescriptor(fam, **params)


def datum_from_obj(obj: Mapping) -> MultiplicityDatum:
    entries = obj.get("entries")
    if not isinstance(entries, list):
        raise DatumError("datum needs an 'entries' list")
    items = []
    for ent in entries:
        if not isinstance(ent, Mapping) or "r" not in ent:
            raise DatumError(f"malformed entry {ent!r}")
        r = ent["r"]
        if not isinstance(r, int) or isinstance(r, bool):
            raise DatumError(f"malformed entry {ent!r}")
        if "sig" in ent:
            s = ent["sig"]
            if not (isinstance(s, list) and len(s) == 2 and all(isinstance(v, int) for v in s)):
                raise DatumError(f"signature must be a pair of integers at r={r}", r)
            items.append((r, Sig(*s)))
        elif "dim" in ent:
            v = ent["dim"]
            if not isinstance(v, int) or isinstance(v, bool):
                raise DatumError(f"dimension must be an integer at r={r}", r)
            items.append((r, Dim(v)))
        else:
            raise DatumError(f"entry at r={r} has neither 'sig' nor 'dim'", r)
    return MultiplicityDatum(tuple(items))


def datum_from_json(text: str) -> MultiplicityDatum:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DatumError(f"malformed JSON: {exc}") from exc
    if not isinstance(obj, Mapping):
        raise DatumError("datum JSON must be an object")
    return datum_from_obj(obj)
