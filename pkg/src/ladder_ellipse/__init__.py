"""Ladders of fixed length touching an ellipse that is tangent to both positive axes."""

from .conic import (
    ConicCoeffs,
    Point,
    TangentEllipse,
    conic_from_tangent_ellipse,
    evaluate,
    extreme_tangent_points,
    line_tangency_discriminant,
)
from .errors import (
    DegenerateFactorError,
    DegenerateLineError,
    DomainError,
    InvalidEllipseError,
    OutsideMedialTriangleError,
)
from .solver import (
    CriticalInfo,
    LadderProblem,
    LadderSolution,
    Quartic,
    ReducedForm,
    circle_factorization,
    circle_s0,
    critical_point,
    eval_f,
    eval_f_prime,
    quartic_from,
    reduce,
    solve,
)
from .triangle import (
    InscriptionParams,
    Tangencies,
    TriangleLegs,
    center_from_params,
    inscribed_conic,
    is_nondegenerate_ellipse,
    params_from_center,
    tangency_points,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
