"""Exact computations for torus instability of representations and Higgs fibers."""

from .characters import (
    Character,
    adjoint_character,
    exterior_char,
    external_tensor,
    height_of_char,
    irreducible_character,
    is_low_height,
    standard_character,
    sym_char,
    tensor_bound_check,
    tensor_char,
    trivial_character,
)
from .expr import parse_character
from .higgs import (
    HiggsStructure,
    check_integrability,
    dual_higgs,
    higgs_sections,
    lambda_act,
    tensor_higgs,
)
from .instability import (
    InstabilityCertificate,
    ParabolicData,
    State,
    StrataIndexSet,
    filtration_index,
    is_semistable,
    kirwan_index_set,
    measure,
    nearest_point,
    optimal_destabilizer,
    parabolic_of,
    stratum_of,
    weight_filtration,
)
from .roots import RootSystem, Weight, build_root_system, parse_type, product_root_system
from .separability import (
    SeparabilityReport,
    g_of,
    p_t_of,
    psi_bar,
    separability_index,
)
from .validation import GuardExceeded, ValidationError

__version__ = "0.1.0"


def __getattr__(name):
    # the estimators pull in scikit-learn; import them only on demand
    if name in ("KirwanStratifier", "OptimalDestabilizer"):
        from . import estimators

        return getattr(estimators, name)
    raise AttributeError(f"module {__name__!r} has no attribute {name!r}")
