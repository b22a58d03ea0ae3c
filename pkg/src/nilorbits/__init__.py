"""Nilpotent orbits of classical real Lie algebras: classification data,
negation stability, and the resulting Gibbs-state verdict."""

from .core import (
    AlgebraDescriptor,
    Dim,
    Family,
    GibbsVerdict,
    MultiplicityDatum,
    NegationVerdict,
    Reason,
    Sig,
    validate_datum,
)
from .orbits import enumerate_orbit_data, gibbs_verdict, negation_stable

__all__ = [
    "AlgebraDescriptor",
    "Dim",
    "Family",
    "GibbsVerdict",
    "MultiplicityDatum",
    "NegationVerdict",
    "Reason",
    "Sig",
    "enumerate_orbit_data",
    "gibbs_verdict",
    "negation_stable",
    "validate_datum",
]
