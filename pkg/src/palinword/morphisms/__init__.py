"""Morphisms, their fixed points and the freeness-transfer verifier."""

from .classify import MorphismClass, classify, is_synchronizing, prolongable_letters
from .expressions import evaluate
from .generate import (
    FixedPointWord,
    ImageWord,
    InsertedWord,
    PeriodicWord,
    WordSource,
    fixed_point_prefix,
)
from .matrix import IncidenceMatrix, exact_matrix, incidence_matrix, parikh_matrix
from .morphism import Morphism, compose, identity
from .registry import (
    Fixture,
    fixture_for_claim,
    fixture_names,
    load_fixture,
    load_morphism,
    named_morphisms,
    resolve_source,
)
from .synchronization import locality_radius, synchronization_point_check
from .transfer import (
    CUBEFREE_MORPHISM,
    TransferCertificate,
    mrs_bound,
    verify_cubefree_transfer_nonuniform,
    verify_transfer,
)

__all__ = [
    "Morphism",
    "compose",
    "identity",
    "evaluate",
    "IncidenceMatrix",
    "incidence_matrix",
    "exact_matrix",
    "parikh_matrix",
    "MorphismClass",
    "classify",
    "is_synchronizing",
    "prolongable_letters",
    "WordSource",
    "FixedPointWord",
    "ImageWord",
    "PeriodicWord",
    "InsertedWord",
    "fixed_point_prefix",
    "Fixture",
    "load_fixture",
    "load_morphism",
    "fixture_for_claim",
    "fixture_names",
    "named_morphisms",
    "resolve_source",
    "locality_radius",
    "synchronization_point_check",
    "CUBEFREE_MORPHISM",
    "TransferCertificate",
    "mrs_bound",
    "verify_transfer",
    "verify_cubefree_transfer_nonuniform",
]
