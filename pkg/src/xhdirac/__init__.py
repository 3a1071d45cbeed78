"""Wronskian-extended Hermite families and spin/pseudospin radial Dirac models."""

from .polycore import ExactPoly, hermite_classical, wronskian
from .xhermite import (
    AdmissibilityError,
    Partition,
    XHermiteFamily,
    admissible_degrees,
    h_lambda,
    ode_residual_polynomial,
    orthogonality_integral,
    weighted_product_residual,
    zero_free_check,
)
from .numerics import (
    Grid,
    QuadratureRule,
    central_derivative,
    fd_schrodinger_spectrum,
    gauss_hermite_rule,
    sturm_real_root_count,
    trapezoid_integral,
)
from .dirac import (
    EnergyLevel,
    ModelParams,
    NoRealEnergyError,
    PoleError,
    RadialSolution,
    SymmetryKind,
    build_solution,
    effective_potential_f,
    effective_potential_g,
    energy_levels,
    f_from_g_spin,
    first_order_residual,
    g_from_f_pseudo,
    mu_gauge,
    normalize_solution,
    probability_density,
    second_order_residual,
    u_tensor,
    v_scalar,
)

__version__ = "0.1.0"
