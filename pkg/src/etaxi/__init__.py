"""Numerics for the eta-xi space-time V0 as a commutative complex Lie group."""

from .contour import (
    MappedPath,
    SliceMode,
    TimePath,
    build_time_path,
    circle_distance,
    map_to_cylinder,
    map_to_v0,
    restrict_field,
)
from .covering import (
    AlgebraVector,
    CylinderPoint,
    LatticeShift,
    exp_map,
    lattice_equivalent,
    lift_Q,
    log_map,
    project,
)
from .embeddings import (
    SlicePoint,
    Universe,
    q_imaginary,
    q_real,
    translate_real_slice,
    universe_point,
)
from .errors import DomainEdge, EtaXiError, InvalidParam, NearCone, NonFinite, OnLightCone, Overflow
from .flows import FlowSpec, flow_apply, killing_residual, killing_vector, one_param_point
from .group import (
    IDENTITY,
    DiagonalPair,
    V0Point,
    cone_form,
    from_diagonal,
    inverse,
    make_point,
    multiply,
    subgroup_membership,
    to_diagonal,
    to_matrix,
)
from .metric import (
    FullPoint,
    FullTangent,
    ParamCurve,
    Tangent,
    curve_derivative,
    full_metric_value,
    isometry_residual,
    metric_value,
    pullback_residual,
)

__version__ = "0.1.0"
