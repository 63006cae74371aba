"""Grunwald-Letnikov fractional calculus: weights, differintegrals, FODE
simulation and coefficient identification that stays accurate under noise."""

from .errors import (
    BoundsError,
    ConfigError,
    DomainError,
    GLError,
    RangeGuardError,
    ResourceError,
    ShapeError,
    SingularModelError,
    SingularSystemError,
)
from .fode import FodeModel, FodeTerm, min_integrating_shift, shift_model, simulate
from .gl_engine import (
    GLWeightTable,
    MemoryConfig,
    differintegrate,
    differintegrate_series,
    gl_coefficients,
    gl_weights,
    phi,
)
from .ident import (
    IdentificationResult,
    IdentificationSpec,
    build_equations,
    identify,
    solve_linear,
)
from .phi_analysis import (
    PhiContext,
    PhiCurve,
    PhiExtremum,
    crossover_check,
    eta,
    find_mu_max,
    psi,
    sample_phi_curve,
)
from .signals import NoiseSpec, SampledSignal, add, uniform_noise, unit_step

__version__ = "0.1.0"
