"""
gravicav analytic — closed-form observables of the cavity field.
"""

from .kerr import (
    damping_single_mode,
    gamma_of,
    kerr_factors,
    kerr_phase,
    thermal_damping,
    thermal_epsilon,
    thermal_exponent,
)
from .vacuum import (
    F_estimate,
    damping_worst_case,
    first_variance_minimum,
    minimum_time_estimates,
    single_mode_exact_moments,
    vacuum_estimates,
    vacuum_mean_quadrature,
    vacuum_variance,
)
from .waves import (
    coherent_gw_mean_quadrature,
    field_moments,
    gw_exact_moments,
    gw_overlap,
    multi_mode_exact_moments,
    multi_mode_field_moments,
    phase_shift,
    squeezed_displacement,
    squeezed_gw_mean_quadrature,
    squeezed_prefactor,
)

__all__ = [
    "gamma_of",
    "kerr_phase",
    "kerr_factors",
    "damping_single_mode",
    "thermal_damping",
    "thermal_epsilon",
    "thermal_exponent",
    "F_estimate",
    "damping_worst_case",
    "vacuum_estimates",
    "minimum_time_estimates",
    "vacuum_mean_quadrature",
    "vacuum_variance",
    "single_mode_exact_moments",
    "first_variance_minimum",
    "gw_overlap",
    "field_moments",
    "gw_exact_moments",
    "multi_mode_field_moments",
    "multi_mode_exact_moments",
    "coherent_gw_mean_quadrature",
    "phase_shift",
    "squeezed_displacement",
    "squeezed_gw_mean_quadrature",
    "squeezed_prefactor",
]
