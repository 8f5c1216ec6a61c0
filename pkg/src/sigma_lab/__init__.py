"""Finite σ-space laboratory: operators, set classes, axioms, enumeration and laws."""

from .axioms import AxiomReport, classify
from .classes import SetClassification, classify_set
from .enumeration import dedupe, enum_brute, enum_fast
from .errors import SigmaLabError
from .laws import search, verify_all
from .setfam import (
    CanonicalForm,
    GroundSet,
    SpaceStructure,
    Subset,
    canonicalize,
    space_from_labels,
    validate_space,
)

__all__ = [
    "AxiomReport",
    "CanonicalForm",
    "GroundSet",
    "SetClassification",
    "SigmaLabError",
    "SpaceStructure",
    "Subset",
    "canonicalize",
    "classify",
    "classify_set",
    "dedupe",
    "enum_brute",
    "enum_fast",
    "search",
    "space_from_labels",
    "validate_space",
    "verify_all",
]
