"""Arithmetic of the convolution semigroup Theta of distributions on R x Z(2)."""
from .arithmetic import (
    Factorization,
    GaussianFactor,
    factor_chain,
    has_indecomposable_factor,
    is_indecomposable,
    is_infinitely_divisible,
    lambda_pi_decomposition,
    max_gaussian_factor,
    nth_root,
)
from .core import (
    DEFAULT_TOLERANCE,
    BoundaryMultiple,
    Classification,
    GroupElement,
    ThetaParams,
    Tolerance,
    boundary_bound,
    canonicalize,
    char_fn,
    classify,
    convolve,
    negate_kappa,
    point_mass,
)
from .errors import (
    ConstructionFailure,
    DomainError,
    EmptyInput,
    InternalError,
    NotInfinitelyDivisible,
    NotInterior,
    ThetaError,
)
from .heyde import HeydeConfig, symmetry_defect
from .measure import (
    SamplePoint,
    SampleSet,
    Z2Distribution,
    component_mass,
    density,
    empirical_char_fn,
    quadrature_mass,
    sample,
)
from .oracle import (
    VerificationReport,
    verify_convolution_mc,
    verify_indecomposability_search,
    verify_measure_grid,
)

__version__ = "0.1.0"
