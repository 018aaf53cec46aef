"""Exact realizability of prescribed zero/pole orders and residues, with
verified flat-surface witnesses."""

from .core import (
    NON_COLLINEAR,
    NON_COMMENSURABLE,
    PrimitiveRay,
    QQi,
    StratumSignature,
    collinear_normal_form,
    residue_tuple,
    validate_residues,
    validate_stratum,
)
from .decide import (
    NEEDS_SEARCH,
    NeedsSearch,
    Verdict,
    decide_cylinder_tuple,
    decide_realizable,
    enumerate_excluded_rays,
    search_cylinder_tuple,
)
from .graphs import (
    ConnectionGraph,
    CylinderConfig,
    SearchBudgetExceeded,
    StableConfigTree,
    find_connection_graph,
    find_cylinder_config,
    find_stable_config,
    is_connection_graph,
    leaf_removal,
)
from .surfaces import (
    ConstructionCertificate,
    FlatSurface,
    InternalBuildError,
    Polygon,
    PolarPart,
    Profile,
    SimplePolePart,
    VerificationError,
    blow_up_zero,
    build_witness,
    profile_matches,
    residue_of_piece,
    sew_handle,
    verify_certificate,
    verify_surface,
)

__all__ = [
    "NON_COLLINEAR",
    "NON_COMMENSURABLE",
    "NEEDS_SEARCH",
    "ConnectionGraph",
    "ConstructionCertificate",
    "CylinderConfig",
    "FlatSurface",
    "InternalBuildError",
    "NeedsSearch",
    "Polygon",
    "PolarPart",
    "PrimitiveRay",
    "Profile",
    "QQi",
    "SearchBudgetExceeded",
    "SimplePolePart",
    "StableConfigTree",
    "StratumSignature",
    "Verdict",
    "VerificationError",
    "blow_up_zero",
    "build_witness",
    "collinear_normal_form",
    "decide_cylinder_tuple",
    "decide_realizable",
    "enumerate_excluded_rays",
    "find_connection_graph",
    "find_cylinder_config",
    "find_stable_config",
    "is_connection_graph",
    "leaf_removal",
    "profile_matches",
    "residue_of_piece",
    "residue_tuple",
    "search_cylinder_tuple",
    "sew_handle",
    "validate_residues",
    "validate_stratum",
    "verify_certificate",
    "verify_surface",
]

__version__ = "0.1.0"
