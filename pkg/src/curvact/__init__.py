"""curvact: exact projective invariants of rational curves over Q(i).

Builds monomial curves and their automorphism groups, computes associated
curves, ramification and Plücker data, projects curves from fixed points, and
classifies curves invariant under infinite projective transformation groups
down to their monomial normal form. All arithmetic is exact.
"""

from .errors import (
    CurvactError,
    DegenerateCurveError,
    DegenerateInputError,
    DimensionMismatchError,
    InversionAmbiguousError,
    NoParametrizationError,
    NotMonomialError,
    PluckerInconsistencyError,
)
from .gaussian import GaussianRational, gr, sqrt_gaussian
from .poly import HomogPoly, P1Point, P1_INFINITY, P1_ZERO, linear_roots, poly_gcd, valuation_at
from .projective import (
    MobiusTransform,
    PnPoint,
    ProjSubspace,
    ProjTransform,
    TransformClass,
    apply,
    apply_mobius,
    classify_transform,
    fixed_points,
    span,
    wedge_power,
)
from .curves import CurveMap, fiber_parameters
from .monomial import (
    AutomorphismGroupDescription,
    ExponentTuple,
    automorphism_group,
    iota,
    jn,
    make_monomial_curve,
    rational_normal_tuple,
    vk_element,
)

__all__ = [name for name in dir() if not name.startswith("_")]

__version__ = "0.1.0"
