"""
gravicav analytic — optical moments for every gravitational-mode state.

The optical annihilation operator evolves as

    a(t) = e^{iA a†a} e^{iA/2} D_b(−qγ) a

so for a product initial state |α⟩⊗|ψ⟩ every optical moment factorizes
into a Kerr factor and the overlap ⟨ψ|D(β)|ψ⟩. The gravitational state is
the one prepared at the sampling time: |λe^{iΩt}⟩ for a coherent wave,
squeeze phase θ = 2Ωt for a squeezed one.
"""

from __future__ import annotations

import cmath
import logging
import math
import warnings
from typing import Sequence, Tuple

from ..errors import ApproximationDomainWarning, DimensionMismatch, InvalidParameter, UnsupportedState
from ..models import (
    Coherent,
    DisplacementVariant,
    Frame,
    GwModeState,
    Squeezed,
    ThermalEstimate,
    Vacuum,
)
from .kerr import gamma_of, kerr_phase

logger = logging.getLogger("gravicav.analytic.waves")

PAPER_APPROX_LIMIT = 0.1


def _require_nonnegative(**values: float) -> None:
    for name, value in values.items():
        if not (math.isfinite(value) and value >= 0):
            raise InvalidParameter(f"{name} must be >= 0, got {value!r}", path=name)


# ─── Displacement overlaps ───────────────────────────────────

def squeezed_displacement(beta: complex, xi0: float, theta: float) -> complex:
    """μ with S(ξ)†D(β)S(ξ) = D(μ): μ = β cosh ξ0 + β* e^{iθ} sinh ξ0."""
    return beta * math.cosh(xi0) + beta.conjugate() * cmath.exp(1j * theta) * math.sinh(xi0)


def gw_overlap(state: GwModeState, beta: complex, Omega: float, t: float) -> complex:
    """⟨ψ|D(β)|ψ⟩ for the gravitational state prepared at time t."""
    beta = complex(beta)
    b2 = abs(beta) ** 2
    if isinstance(state, Vacuum):
        return complex(math.exp(-0.5 * b2))
    if isinstance(state, Coherent):
        lam_t = state.lam * cmath.exp(1j * Omega * t)
        return cmath.exp(-0.5 * b2 + lam_t.conjugate() * beta - lam_t * beta.conjugate())
    if isinstance(state, Squeezed):
        mu = squeezed_displacement(beta, state.xi0, 2.0 * Omega * t)
        return complex(math.exp(-0.5 * abs(mu) ** 2))
    if isinstance(state, ThermalEstimate):
        return complex(math.exp(-b2 * (state.nbar + 0.5)))
    raise UnsupportedState(f"no displacement overlap for state {state!r}")


def field_moments(
    alpha: float,
    q: float,
    Omega: float,
    t: float,
    state: GwModeState,
    frame: Frame = Frame.ROTATING,
    omega0: float = 0.0,
) -> Tuple[complex, complex]:
    """(⟨a⟩, ⟨a²⟩) for |α⟩ ⊗ |ψ⟩ evolved for time t."""
    return multi_mode_field_moments(alpha, [(q, Omega)], t, [state], frame, omega0)


def multi_mode_field_moments(
    alpha: float,
    modes: Sequence[Tuple[float, float]],
    t: float,
    states: Sequence[GwModeState],
    frame: Frame = Frame.ROTATING,
    omega0: float = 0.0,
) -> Tuple[complex, complex]:
    """
    (⟨a⟩, ⟨a²⟩) for |α⟩ ⊗ |ψ_1⟩ ⊗ … ⊗ |ψ_K⟩, ``modes`` given as (q_k, Ω_k).

    The modes commute, so the Kerr phases add, F = Σ_k A_k, and the
    gravitational factor is the product of the per-mode overlaps. For
    vacuum modes that product is D = Π_k e^{−q_k²|γ_k|²/2}.
    """
    _require_nonnegative(alpha=alpha)
    if len(modes) != len(states):
        raise DimensionMismatch(f"{len(states)} gravitational states for {len(modes)} modes")
    F = 0.0
    overlap1 = complex(1.0)
    overlap2 = complex(1.0)
    for (q, Omega), state in zip(modes, states):
        F += kerr_phase(q, Omega, t)
        gamma = gamma_of(Omega, t)
        overlap1 *= gw_overlap(state, -q * gamma, Omega, t)
        overlap2 *= gw_overlap(state, -2.0 * q * gamma, Omega, t)
    n_opt = alpha * alpha
    a1 = alpha * cmath.exp(0.5j * F) * cmath.exp(n_opt * (cmath.exp(1j * F) - 1.0)) * overlap1
    a2 = n_opt * cmath.exp(2j * F) * cmath.exp(n_opt * (cmath.exp(2j * F) - 1.0)) * overlap2
    if Frame(frame) == Frame.LAB:
        a1 *= cmath.exp(-1j * omega0 * t)
        a2 *= cmath.exp(-2j * omega0 * t)
    return a1, a2


def _quadrature_moments(alpha: float, a1: complex, a2: complex) -> Tuple[float, float]:
    mean = 2.0 * a1.real
    variance = 2.0 * a2.real + 2.0 * alpha * alpha + 1.0 - mean * mean
    return mean, variance


def gw_exact_moments(
    alpha: float,
    q: float,
    Omega: float,
    t: float,
    state: GwModeState,
    frame: Frame = Frame.ROTATING,
    omega0: float = 0.0,
) -> Tuple[float, float]:
    """Exact (mean quadrature, variance) of a + a† including the Kerr factor."""
    return _quadrature_moments(alpha, *field_moments(alpha, q, Omega, t, state, frame, omega0))


def multi_mode_exact_moments(
    alpha: float,
    modes: Sequence[Tuple[float, float]],
    t: float,
    states: Sequence[GwModeState],
    frame: Frame = Frame.ROTATING,
    omega0: float = 0.0,
) -> Tuple[float, float]:
    """gw_exact_moments for several gravitational modes."""
    return _quadrature_moments(alpha, *multi_mode_field_moments(alpha, modes, t, states, frame, omega0))


# ─── Coherent waves ──────────────────────────────────────────

def coherent_gw_mean_quadrature(alpha: float, q: float, lam: float, Omega: float, t: float) -> float:
    """2α e^{−q²|γ|²/2} cos(qλ sin Ωt); Kerr factor neglected."""
    _require_nonnegative(alpha=alpha, lam=lam)
    gamma = gamma_of(Omega, t)
    return 2.0 * alpha * math.exp(-0.5 * q * q * abs(gamma) ** 2) * math.cos(phase_shift(q, lam, Omega, t))


def phase_shift(q: float, lam: float, Omega: float, t: float) -> float:
    return q * lam * math.sin(Omega * t)


# ─── Squeezed waves ──────────────────────────────────────────

def squeezed_gw_mean_quadrature(
    alpha: float,
    q: float,
    xi0: float,
    Omega: float,
    t: float,
    variant: DisplacementVariant = DisplacementVariant.EXACT_IDENTITY,
) -> float:
    """Kerr-free mean quadrature for a squeezed wave with θ = 2Ωt."""
    _require_nonnegative(alpha=alpha, xi0=xi0)
    variant = DisplacementVariant(variant)
    if variant == DisplacementVariant.PAPER_APPROX:
        strength = 8.0 * q * q * math.exp(2.0 * xi0)
        if strength > PAPER_APPROX_LIMIT:
            msg = f"8q²e^(2ξ0) = {strength:.3g} > {PAPER_APPROX_LIMIT}: first-order squeezed correction unreliable"
            logger.warning(msg)
            warnings.warn(msg, ApproximationDomainWarning, stacklevel=2)
        return 2.0 * alpha * (1.0 - strength * math.sin(0.5 * Omega * t) ** 4)
    gamma = gamma_of(Omega, t)
    mu = squeezed_displacement(-q * gamma, xi0, 2.0 * Omega * t)
    return 2.0 * alpha * math.exp(-0.5 * abs(mu) ** 2)


def squeezed_prefactor(omega0: float, Epl: float, upsilon: float, Omega: float) -> float:
    """8(ω0/E_pl)²(υ/Ω)⁴"""
    for name, value in (("omega0", omega0), ("Epl", Epl), ("upsilon", upsilon), ("Omega", Omega)):
        if not (math.isfinite(value) and value > 0):
            raise InvalidParameter(f"{name} must be positive, got {value!r}", path=name)
    return 8.0 * (omega0 / Epl) ** 2 * (upsilon / Omega) ** 4
