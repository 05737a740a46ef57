"""Finitely presented groups of multi-virtual braids."""

from ._core import (
    AbelianInvariants,
    CatalogError,
    NotWellDefined,
    ParseError,
    Presentation,
    ResourceLimit,
    abelianization,
    build,
    canonical_relator,
    catalog_keys,
    compare,
    components,
    derive,
    free_reduce,
    index,
    invert,
    simplify,
    todd_coxeter_index,
    verify_action,
    verify_all,
    verify_hom,
)

__all__ = [
    "AbelianInvariants",
    "CatalogError",
    "NotWellDefined",
    "ParseError",
    "Presentation",
    "ResourceLimit",
    "abelianization",
    "build",
    "canonical_relator",
    "catalog_keys",
    "compare",
    "components",
    "derive",
    "free_reduce",
    "index",
    "invert",
    "simplify",
    "todd_coxeter_index",
    "verify_action",
    "verify_all",
    "verify_hom",
]
