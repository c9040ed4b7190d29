"""
gravicav params — constants, unit conversions and parameter maps.
"""

from .config import CavityConfig, GwModeConfig, SystemConfig, coupling_from_config
from .constants import DEFAULT_LN_CUTOFF_RATIO, PhysicalConstants
from .conversions import (
    MAX_STRAIN,
    PHASE_CALIBRATION,
    cavity_frequency_shift,
    coupling_q,
    frequency_shift,
    graviton_number_from_strain,
    ligo_phase_estimate,
    nbar,
    phase_amplitude,
    q_max,
    single_graviton_strain,
    upsilon_of_hubble,
    wave_energy,
    xi0_from_frequency,
)

__all__ = [
    "PhysicalConstants",
    "DEFAULT_LN_CUTOFF_RATIO",
    "CavityConfig",
    "GwModeConfig",
    "SystemConfig",
    "coupling_from_config",
    "MAX_STRAIN",
    "PHASE_CALIBRATION",
    "cavity_frequency_shift",
    "frequency_shift",
    "single_graviton_strain",
    "graviton_number_from_strain",
    "wave_energy",
    "coupling_q",
    "q_max",
    "phase_amplitude",
    "ligo_phase_estimate",
    "nbar",
    "upsilon_of_hubble",
    "xi0_from_frequency",
]
