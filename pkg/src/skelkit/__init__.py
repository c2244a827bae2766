"""Exact combinatorics of weighted dual complexes.

The package models the dual complex of a degeneration or of a log
resolution together with the integer weights carried by its prime
components, and computes weight functions, minimal-weight skeleta,
divisorial reductions and log canonical thresholds over the rationals.
"""

from .birational import (
    QuasiMonomialPoint,
    connectedness_report,
    intersection_order,
    lct,
    log_discrepancy,
    sk_pair,
    weight_qm,
)
from .complexes import cycle_model, full_complex_model, graph_model, star_model
from .errors import DomainError, ModelFormatError, UnsupportedCenterError
from .essential import (
    FormData,
    Subcomplex,
    apply_form,
    essential_skeleton,
    is_connected,
    ks_skeleton,
    min_weight,
    subcomplex,
)
from .model import (
    KIND_LOG_RESOLUTION,
    KIND_SNCD,
    PrimeComponent,
    SncdModel,
    Stratum,
    ValidationReport,
    Violation,
    cofaces,
    connected_components,
    face,
    is_face,
    is_maximal,
    validate,
)
from .modelfile import (
    format_fraction,
    load_model,
    parse_fraction,
    parse_model,
    save_model,
    serialize_model,
)
from .modify import (
    BlowupStep,
    BlowupTrace,
    blowup_point,
    blowup_stratum,
    pullback_value,
    reduce_to_divisorial,
    transfer_point,
)
from .series import (
    AlphaVector,
    SeriesPair,
    Support,
    initial_support,
    product,
    reduce_support,
    sum_supports,
    val,
)
from .skeleton import (
    CLASS_AFFINE,
    CLASS_CONCAVE,
    CLASS_CONVEX,
    CLASS_UNKNOWN,
    BarycentricPoint,
    PointSpec,
    SkeletonPoint,
    check_point,
    classify_face,
    embed,
    retract,
    to_barycentric,
    value_on_component,
    weight,
)

__version__ = "0.1.0"

__all__ = [
    "AlphaVector",
    "BarycentricPoint",
    "BlowupStep",
    "BlowupTrace",
    "CLASS_AFFINE",
    "CLASS_CONCAVE",
    "CLASS_CONVEX",
    "CLASS_UNKNOWN",
    "DomainError",
    "FormData",
    "KIND_LOG_RESOLUTION",
    "KIND_SNCD",
    "ModelFormatError",
    "PointSpec",
    "PrimeComponent",
    "QuasiMonomialPoint",
    "SeriesPair",
    "SkeletonPoint",
    "SncdModel",
    "Stratum",
    "Subcomplex",
    "UnsupportedCenterError",
    "ValidationReport",
    "Violation",
    "apply_form",
    "blowup_point",
    "blowup_stratum",
    "check_point",
    "classify_face",
    "cofaces",
    "connected_components",
    "connectedness_report",
    "cycle_model",
    "embed",
    "essential_skeleton",
    "face",
    "format_fraction",
    "full_complex_model",
    "graph_model",
    "initial_support",
    "intersection_order",
    "is_connected",
    "is_face",
    "is_maximal",
    "ks_skeleton",
    "lct",
    "load_model",
    "log_discrepancy",
    "min_weight",
    "parse_fraction",
    "parse_model",
    "product",
    "pullback_value",
    "reduce_support",
    "reduce_to_divisorial",
    "retract",
    "save_model",
    "serialize_model",
    "sk_pair",
    "star_model",
    "subcomplex",
    "sum_supports",
    "to_barycentric",
    "transfer_point",
    "val",
    "validate",
    "value_on_component",
    "weight",
    "weight_qm",
]
