"""
gravicav - Cavity Field Response to Quantized Gravitational Waves
==================================================================

Closed-form quadrature statistics of a cavity mode coupled to quantized
gravitational-wave modes, checked against a brute-force truncated Fock
space propagator.

Subpackages:
- qcore: truncated Fock-space operators, states and matrix exponentials
- params: physical constants, strain/coupling conversions, system configs
- analytic: Kerr phase, vacuum squeezing, coherent/squeezed/thermal waves
- oracle: joint Hamiltonian, sector propagation, factorized unitary, BCH checks
- scenarios: configuration, runner, reports and the acceptance suite
"""

__version__ = "1.0.0"

from .errors import ApproximationDomainWarning, ConfigError, GravicavError
from .models import (
    Coherent,
    DisplacementVariant,
    Frame,
    GwModeState,
    PhaseConvention,
    Squeezed,
    ThermalEstimate,
    TimeSeries,
    Tolerances,
    Vacuum,
)
from .params import CavityConfig, GwModeConfig, PhysicalConstants, SystemConfig

__all__ = [
    # Errors
    "GravicavError",
    "ConfigError",
    "ApproximationDomainWarning",
    # Models
    "Tolerances",
    "GwModeState",
    "Vacuum",
    "Coherent",
    "Squeezed",
    "ThermalEstimate",
    "TimeSeries",
    "PhaseConvention",
    "DisplacementVariant",
    "Frame",
    # Configuration
    "PhysicalConstants",
    "CavityConfig",
    "GwModeConfig",
    "SystemConfig",
]
