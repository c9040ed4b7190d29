"""
gravicav oracle — brute-force propagation and expectation values.

Propagation exponentiates −iHt one photon-number sector at a time; this is
the exact exponential of the full matrix, because H has no matrix elements
between sectors.
"""

from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np

from ..errors import DimensionMismatch, ExpmFailure, NegativeTime, UnsupportedState
from ..models import (
    DEFAULT_TOLERANCES,
    Coherent,
    GwModeState,
    Squeezed,
    Tolerances,
    Vacuum,
)
from ..qcore.operators import OperatorMatrix, annihilation, matrix_exp, number_operator, quadrature
from ..qcore.states import StateVector, coherent_state, fock_state, squeezed_vacuum, tensor_all
from .system import JointSystem, sector_hamiltonian

logger = logging.getLogger("gravicav.oracle.propagator")

NORM_TOLERANCE = 1e-10
VARIANCE_TOLERANCE = 1e-10


def sector_unitaries(
    system: JointSystem,
    t: float,
    gw_dims_per_sector: Optional[Sequence[Tuple[int, ...]]] = None,
    tol: Tolerances = DEFAULT_TOLERANCES,
) -> List[OperatorMatrix]:
    """exp(−iH_n t) for every optical sector n."""
    if t < 0:
        raise NegativeTime(f"t must be >= 0, got {t!r}", path="t")
    blocks = []
    for n in range(system.optical_dim):
        dims = gw_dims_per_sector[n] if gw_dims_per_sector is not None else system.gw_dims
        H = sector_hamiltonian(system, n, dims)
        blocks.append(matrix_exp(H * (-1j * t), tol))
    return blocks


def propagate(
    system: JointSystem,
    initial: StateVector,
    t: float,
    tol: Tolerances = DEFAULT_TOLERANCES,
) -> StateVector:
    """ψ(t) = exp(−iHt) ψ(0)"""
    if initial.dims != system.dims:
        raise DimensionMismatch(f"state dims {initial.dims} do not match system dims {system.dims}")
    if t == 0:
        return initial
    psi = initial.amplitudes.reshape(system.optical_dim, system.sector_size)
    out = np.empty_like(psi)
    for n, U in enumerate(sector_unitaries(system, t, tol=tol)):
        out[n] = U.data @ psi[n]
    drift = abs(np.linalg.norm(out) - initial.norm())
    if drift > NORM_TOLERANCE:
        raise ExpmFailure(f"propagation changed the norm by {drift:.3g}")
    return StateVector(out.ravel(), system.dims, initial.discarded_mass)


def prepare_gw_state(state: GwModeState, dim: int, Omega: float, t: float, tol: Tolerances = DEFAULT_TOLERANCES) -> StateVector:
    """Gravitational state as prepared at sampling time t."""
    if isinstance(state, Vacuum):
        return fock_state(0, dim)
    if isinstance(state, Coherent):
        return coherent_state(state.lam * np.exp(1j * Omega * t), dim, tol)
    if isinstance(state, Squeezed):
        return squeezed_vacuum(state.xi0, 2.0 * Omega * t, dim, tol)
    raise UnsupportedState(f"state {state!r} is not representable as a pure truncated state")


@dataclass
class EvolutionResult:
    times: List[float]
    mean_quadrature: List[float] = field(default_factory=list)
    variance: List[float] = field(default_factory=list)
    tail_mass: List[float] = field(default_factory=list)
    unitarity_residual: float = 0.0
    mean_a: List[complex] = field(default_factory=list)
    photon_number: List[float] = field(default_factory=list)
    flagged: List[bool] = field(default_factory=list)
    max_variance_clip: float = 0.0

    @property
    def flagged_count(self) -> int:
        return sum(1 for f in self.flagged if f)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "times": list(self.times),
            "mean_quadrature": list(self.mean_quadrature),
            "variance": list(self.variance),
            "tail_mass": list(self.tail_mass),
            "unitarity_residual": self.unitarity_residual,
            "photon_number": list(self.photon_number),
            "flagged": list(self.flagged),
            "max_variance_clip": self.max_variance_clip,
        }


def nonnegative_variance(raw: float, t: float = 0.0) -> Tuple[float, float]:
    """(max(raw, 0), amount clipped); clipping beyond VARIANCE_TOLERANCE is logged."""
    if raw >= 0.0:
        return raw, 0.0
    if raw < -VARIANCE_TOLERANCE:
        logger.warning("oracle: variance %.3g at t=%.6g is negative beyond rounding; clipped to 0", raw, t)
    return 0.0, -raw


def _sample(
    system: JointSystem,
    optical: StateVector,
    gw_states: Sequence[GwModeState],
    t: float,
    tol: Tolerances,
) -> Tuple[float, float, float, float, complex, float, float]:
    gw = [prepare_gw_state(s, m.dim, m.Omega, t, tol) for s, m in zip(gw_states, system.modes)]
    psi0 = tensor_all([optical] + gw)
    psi_t = propagate(system, psi0, t, tol)
    d = system.optical_dim
    mat = psi_t.amplitudes.reshape(d, system.sector_size)
    x_psi = quadrature(d).data @ mat
    mean = float(np.vdot(mat, x_psi).real)
    variance, clip = nonnegative_variance(float(np.vdot(x_psi, x_psi).real) - mean * mean, t)
    mean_a = complex(np.vdot(mat, annihilation(d).data @ mat))
    photons = float(np.vdot(mat, number_operator(d).data @ mat).real)
    drift = abs(psi_t.norm() - psi0.norm())
    return mean, variance, psi_t.tail_mass(), drift, mean_a, photons, clip


def heisenberg_expectations(
    system: JointSystem,
    optical_alpha: float,
    gw_states: Sequence[GwModeState],
    time_grid: Sequence[float],
    tol: Tolerances = DEFAULT_TOLERANCES,
    max_workers: Optional[int] = None,
) -> EvolutionResult:
    """
    Mean quadrature and variance of a + a† over ``time_grid``.

    Each sample starts from |α⟩ ⊗ (gravitational states prepared at t) and
    is propagated independently, so samples may run in parallel; results
    are collected in grid order.
    """
    if len(gw_states) != len(system.modes):
        raise DimensionMismatch(f"{len(gw_states)} gravitational states for {len(system.modes)} modes")
    optical = coherent_state(optical_alpha, system.optical_dim, tol)
    # magnitudes of the prepared states do not depend on t; reject up front
    for s, m in zip(gw_states, system.modes):
        prepare_gw_state(s, m.dim, m.Omega, 0.0, tol)

    times = [float(t) for t in time_grid]
    logger.info("oracle: %d samples on dims %s (%s frame)", len(times), system.dims, system.frame.value)

    def work(t: float):
        return _sample(system, optical, gw_states, t, tol)

    if max_workers and max_workers > 1:
        with ThreadPoolExecutor(max_workers=max_workers) as pool:
            samples = list(pool.map(work, times))
    else:
        samples = [work(t) for t in times]

    result = EvolutionResult(times=times)
    for mean, variance, tail, drift, mean_a, photons, clip in samples:
        result.mean_quadrature.append(mean)
        result.variance.append(variance)
        result.tail_mass.append(tail)
        result.mean_a.append(mean_a)
        result.photon_number.append(photons)
        result.flagged.append(tail > tol.tail)
        result.unitarity_residual = max(result.unitarity_residual, drift)
        result.max_variance_clip = max(result.max_variance_clip, clip)
    if result.flagged_count:
        logger.warning("oracle: %d of %d samples exceed tail tolerance %.1e", result.flagged_count, len(times), tol.tail)
    return result
