"""Generalized numerical semigroups in N_0^d, handled through their gap sets."""

from .core import (
    DimensionError,
    DomainError,
    GapSet,
    GNSError,
    InvalidGapSet,
    MonomialOrder,
    closure_violation,
    lub,
    monomial_less,
    partial_leq,
    validate_gapset,
)
from .enumeration import (
    EnumTree,
    FamilyQuery,
    atoms,
    enumerate_family,
    export_tree,
    family,
    maximal_elements,
    maximal_family,
    ordinary,
    smallest_gns_containing,
)
from .invariants import (
    GnsProfile,
    corner,
    corner_special_gaps,
    frobenius,
    is_ani,
    is_atomic,
    is_irreducible,
    profile,
    pseudo_frobenius,
    slab,
    special_gaps,
    unitary_extension,
)
from .theorems import REGISTRY, VerificationReport, verify_proposition

__version__ = "0.1.0"

__all__ = [
    "atoms",
    "closure_violation",
    "corner",
    "corner_special_gaps",
    "DimensionError",
    "DomainError",
    "enumerate_family",
    "EnumTree",
    "export_tree",
    "family",
    "FamilyQuery",
    "frobenius",
    "GapSet",
    "GNSError",
    "GnsProfile",
    "InvalidGapSet",
    "is_ani",
    "is_atomic",
    "is_irreducible",
    "lub",
    "maximal_elements",
    "maximal_family",
    "monomial_less",
    "MonomialOrder",
    "ordinary",
    "partial_leq",
    "profile",
    "pseudo_frobenius",
    "REGISTRY",
    "slab",
    "smallest_gns_containing",
    "special_gaps",
    "unitary_extension",
    "validate_gapset",
    "VerificationReport",
    "verify_proposition",
]
