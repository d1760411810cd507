"""Bispecial factors, f-image towers and the critical-exponent formula."""

from .critical import AuditRecord, CriticalExponentReport, critical_exponent_ddp
from .families import (
    FAMILY_SEEDS,
    RATIO_BOUND,
    FamilyMember,
    FamilySeed,
    FamilyTower,
    closed_form_core,
    family_ratio_bound,
    family_seed,
    sweep_families,
    tail_bound,
    weighted_lengths,
    weighted_lengths_closed_form,
)
from .profile import (
    ExtensionProfile,
    bispecial_profiles,
    enumerate_bispecial,
    extension_profile,
    stable_bispecial_prefix,
    stable_bispecial_profiles,
)
from .returns import (
    pushforward_vector,
    return_word_pushforward,
    shortest_return_length,
    shortest_return_word,
)
from .triplets import (
    BispecialTriplet,
    FImageChain,
    check_extension_period,
    discover_initial_triplets,
    f_image,
    has_synchronization_point,
    image_step,
    iterate_f_images,
    reduce_initial_triplets,
    triplets_of,
)

__all__ = [
    "ExtensionProfile",
    "extension_profile",
    "bispecial_profiles",
    "enumerate_bispecial",
    "stable_bispecial_prefix",
    "stable_bispecial_profiles",
    "BispecialTriplet",
    "FImageChain",
    "image_step",
    "f_image",
    "iterate_f_images",
    "check_extension_period",
    "triplets_of",
    "has_synchronization_point",
    "discover_initial_triplets",
    "reduce_initial_triplets",
    "shortest_return_word",
    "shortest_return_length",
    "return_word_pushforward",
    "pushforward_vector",
    "FAMILY_SEEDS",
    "RATIO_BOUND",
    "FamilySeed",
    "FamilyMember",
    "FamilyTower",
    "family_seed",
    "family_ratio_bound",
    "sweep_families",
    "closed_form_core",
    "weighted_lengths",
    "weighted_lengths_closed_form",
    "tail_bound",
    "AuditRecord",
    "CriticalExponentReport",
    "critical_exponent_ddp",
]
