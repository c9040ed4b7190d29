"""
gravicav params — maps between experimental quantities and model couplings.

The public API is SI: angular frequencies in rad/s, volumes in m³,
temperatures in K. Strain and couplings are dimensionless.

Single-graviton strain is fixed by energy consistency: a wave of strain f
and frequency Ω carries energy density c²Ω²f²/(32πG), so one quantum ħΩ in
volume V corresponds to f_k = √(32πħG/(c²ΩV)).
"""

from __future__ import annotations

import logging
import math
import warnings
from typing import Optional

import numpy as np

from ..errors import ApproximationDomainWarning, InvalidParameter, StrainTooLarge
from .constants import PhysicalConstants

logger = logging.getLogger("gravicav.params.conversions")

MAX_STRAIN = 1e-2
PHASE_CALIBRATION = 4.0
XI0_LARGE = 3.0


def _constants(constants: Optional[PhysicalConstants]) -> PhysicalConstants:
    return constants if constants is not None else PhysicalConstants.default()


def _require_positive(**values: float) -> None:
    for name, value in values.items():
        if not (math.isfinite(value) and value > 0):
            raise InvalidParameter(f"{name} must be positive, got {value!r}", path=name)


# ─── Cavity response ─────────────────────────────────────────

def _check_strain(h: float) -> None:
    if not math.isfinite(h) or abs(h) > MAX_STRAIN:
        raise StrainTooLarge(f"|h|={abs(h):.3g} outside first-order regime (|h| <= {MAX_STRAIN})", path="h")


def cavity_frequency_shift(omega0: float, h: float) -> float:
    """Shifted cavity frequency ω0(1 − h/2) to first order in h."""
    _require_positive(omega0=omega0)
    _check_strain(h)
    return omega0 * (1.0 - 0.5 * h)


def frequency_shift(omega0: float, h: float) -> float:
    """The shift −ω0h/2 itself; at realistic strain it is below ω0's ulp."""
    _require_positive(omega0=omega0)
    _check_strain(h)
    return -0.5 * omega0 * h


# ─── Strain / graviton number ────────────────────────────────

def single_graviton_strain(Omega: float, V: float, constants: Optional[PhysicalConstants] = None) -> float:
    _require_positive(Omega=Omega, V=V)
    k = _constants(constants)
    return math.sqrt(32.0 * math.pi * k.hbar * k.G / (k.c ** 2 * Omega * V))


def graviton_number_from_strain(f: float, Omega: float, V: float, constants: Optional[PhysicalConstants] = None) -> float:
    """Mean graviton number N = E/(ħΩ); the coherent amplitude is λ = √N."""
    _require_positive(f=f, Omega=Omega, V=V)
    k = _constants(constants)
    return k.c ** 2 * Omega * V * f ** 2 / (32.0 * math.pi * k.G * k.hbar)


def wave_energy(f: float, Omega: float, V: float, constants: Optional[PhysicalConstants] = None) -> float:
    """Energy c²Ω²f²V/(32πG) of a wave of strain f filling volume V."""
    _require_positive(Omega=Omega, V=V)
    k = _constants(constants)
    return k.c ** 2 * Omega ** 2 * f ** 2 * V / (32.0 * math.pi * k.G)


# ─── Couplings ───────────────────────────────────────────────

def coupling_q(omega0: float, Omega: float, V: float, constants: Optional[PhysicalConstants] = None) -> float:
    """q = ω0 f_k / (4Ω)"""
    _require_positive(omega0=omega0)
    return omega0 * single_graviton_strain(Omega, V, constants) / (4.0 * Omega)


def q_max(omega0: float, constants: Optional[PhysicalConstants] = None) -> float:
    """Largest coupling at the UV cutoff, ω0/E_pl."""
    _require_positive(omega0=omega0)
    k = _constants(constants)
    if omega0 > k.Epl:
        raise InvalidParameter(f"omega0={omega0:.3g} exceeds the Planck frequency", path="omega0")
    return omega0 / k.Epl


def phase_amplitude(omega0: float, Omega: float, f: float, V: float, constants: Optional[PhysicalConstants] = None) -> float:
    """
    Amplitude of the coherent-wave phase oscillation, PHASE_CALIBRATION·q·λ.

    V cancels between q ∝ V^{-1/2} and λ ∝ V^{1/2}; the result is (ω0/Ω)f.
    """
    q = coupling_q(omega0, Omega, V, constants)
    lam = math.sqrt(graviton_number_from_strain(f, Omega, V, constants))
    return PHASE_CALIBRATION * q * lam


def ligo_phase_estimate(b: int, ell0: float, lambda_opt: float, f: float) -> float:
    """Classical interferometer phase b·(2πℓ0/λ)·f."""
    _require_positive(b=b, ell0=ell0, lambda_opt=lambda_opt)
    if not (math.isfinite(f) and f >= 0):
        raise InvalidParameter(f"f must be >= 0, got {f!r}", path="f")
    return b * (2.0 * math.pi * ell0 / lambda_opt) * f


# ─── Thermal / cosmological ──────────────────────────────────

def nbar(Omega: float, T: float, constants: Optional[PhysicalConstants] = None) -> float:
    """Bose-Einstein occupation 1/(e^{ħΩ/k_BT} − 1)."""
    _require_positive(Omega=Omega, T=T)
    k = _constants(constants)
    x = k.hbar * Omega / (k.kB * T)
    with np.errstate(over="ignore"):
        return float(1.0 / np.expm1(x))


def upsilon_of_hubble(H_over_Mpl: float) -> float:
    """Characteristic squeezing frequency in Hz for inflation scale H/M_pl."""
    _require_positive(H_over_Mpl=H_over_Mpl)
    return 1e9 * math.sqrt(H_over_Mpl / 1e-4)


def xi0_from_frequency(upsilon: float, Omega: float) -> float:
    """ξ0 = asinh((υ/Ω)²/2); warns when the large-ξ0 regime is not reached."""
    _require_positive(upsilon=upsilon, Omega=Omega)
    ratio = 0.5 * (upsilon / Omega) ** 2
    if ratio < 1.0:
        raise InvalidParameter(f"(υ/Ω)²/2 = {ratio:.3g} < 1, outside the super-horizon regime", path="upsilon")
    xi0 = math.asinh(ratio)
    if xi0 < XI0_LARGE:
        msg = f"xi0={xi0:.3g} < {XI0_LARGE}: large-squeezing approximation not satisfied"
        logger.warning(msg)
        warnings.warn(msg, ApproximationDomainWarning, stacklevel=2)
    return xi0
