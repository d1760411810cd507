"""Factor languages, extendable cores, Rauzy graphs and codes."""

from .codes import decompose_over_code, is_code
from .factors import (
    FactorLanguage,
    extendable_core,
    factor_language,
    factor_sets_equal,
    stable_factor_set,
)
from .rauzy import (
    RauzyGraph,
    SccDecomposition,
    component_containing,
    components_reversal_symmetric,
    is_isomorphic,
    rauzy_graph,
    scc_condensation,
    weak_components,
)

__all__ = [
    "FactorLanguage",
    "factor_language",
    "stable_factor_set",
    "factor_sets_equal",
    "extendable_core",
    "RauzyGraph",
    "rauzy_graph",
    "weak_components",
    "component_containing",
    "components_reversal_symmetric",
    "SccDecomposition",
    "scc_condensation",
    "is_isomorphic",
    "is_code",
    "decompose_over_code",
]
