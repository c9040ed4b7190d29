"""
gravicav analytic — single-mode factors γ, A and the vacuum/thermal dampings.
"""

from __future__ import annotations

import math

import numpy as np

from ..errors import NegativeTime, InvalidParameter
from ..models import KerrFactors


def gamma_of(Omega: float, t: float) -> complex:
    """γ = 1 − e^{iΩt}"""
    return complex(1.0 - np.exp(1j * Omega * t))


def kerr_phase(q: float, Omega: float, t: float) -> float:
    """A = 2q²(Ωt − sin Ωt)"""
    if t < 0:
        raise NegativeTime(f"t must be >= 0, got {t!r}", path="t")
    x = Omega * t
    return 2.0 * q * q * (x - math.sin(x))


def kerr_factors(q: float, Omega: float, t: float) -> KerrFactors:
    return KerrFactors(gamma=gamma_of(Omega, t), A=kerr_phase(q, Omega, t), q=q, Omega=Omega, t=t)


def damping_single_mode(q: float, Omega: float, t: float) -> float:
    """⟨0|D(−qγ)|0⟩ = e^{−q²|γ|²/2}"""
    return math.exp(-0.5 * q * q * abs(gamma_of(Omega, t)) ** 2)


def thermal_exponent(q: float, nbar: float) -> float:
    if not nbar >= 0:
        raise InvalidParameter(f"nbar must be >= 0, got {nbar!r}", path="nbar")
    return 4.0 * q * q * (2.0 * nbar + 1.0)


def thermal_damping(q: float, nbar: float) -> float:
    """Worst-case thermal suppression e^{−4q²(2n̄+1)}."""
    return math.exp(-thermal_exponent(q, nbar))


def thermal_epsilon(q: float, nbar: float) -> float:
    """1 − thermal_damping, without cancellation."""
    return -math.expm1(-thermal_exponent(q, nbar))
