"""
gravicav oracle — factorized evolution operator vs brute-force exponential.

Per gravitational mode, in the sector a†a = n,

    e^{−iH_k t} = e^{−iΩ_k t b†b} · e^{i(A_k/2) n²} · D(−q_k n γ_k)

with A_k = 2q_k²(Ω_k t − sin Ω_k t) and γ_k = 1 − e^{iΩ_k t}. Modes act on
separate factors, so the full operator is the product over modes, times
e^{−iω0 n t} in the Lab frame.

Both constructions are evaluated on a working space padded above the
requested truncation and compared on the requested guarded subspace.
"""

from __future__ import annotations

import cmath
import logging
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Tuple

import numpy as np
from scipy.linalg import block_diag

from ..analytic.kerr import gamma_of, kerr_phase
from ..models import DEFAULT_TOLERANCES, Frame, Tolerances
from ..qcore.operators import (
    OperatorMatrix,
    annihilation,
    embed,
    identity,
    matrix_exp,
)
from ..qcore.states import GUARD_LEVELS
from .propagator import sector_unitaries
from .system import JointSystem

logger = logging.getLogger("gravicav.oracle.unitary")


def _requested_indices(requested: Tuple[int, ...], work: Tuple[int, ...], levels: int) -> np.ndarray:
    """Positions, inside the padded product basis, of requested states below the top ``levels``."""
    ranges = [np.arange(d - levels) for d in requested]
    grid = np.meshgrid(*ranges, indexing="ij")
    return np.ravel_multi_index(tuple(g.ravel() for g in grid), work)


@dataclass(frozen=True, eq=False)
class BlockUnitary:
    """Evolution operator stored as one (padded) block per optical sector."""

    system: JointSystem
    t: float
    blocks: Tuple[OperatorMatrix, ...]

    def work_dims(self, n: int) -> Tuple[int, ...]:
        return self.blocks[n].dims

    def _sector_view(self, n: int, levels: int) -> np.ndarray:
        idx = _requested_indices(self.system.gw_dims, self.work_dims(n), levels)
        return self.blocks[n].data[np.ix_(idx, idx)]

    def restricted(self) -> OperatorMatrix:
        """Operator on the requested (unpadded) product space."""
        return OperatorMatrix(
            block_diag(*[self._sector_view(n, 0) for n in range(self.system.optical_dim)]),
            self.system.dims,
        )

    def _guarded_sectors(self, levels: int) -> range:
        return range(self.system.optical_dim - levels)

    def unitarity_residual(self, guard_levels: int = GUARD_LEVELS) -> float:
        worst = 0.0
        for n in self._guarded_sectors(guard_levels):
            U = self.blocks[n].data
            idx = _requested_indices(self.system.gw_dims, self.work_dims(n), guard_levels)
            gram = (U.conj().T @ U)[np.ix_(idx, idx)] - np.eye(idx.size)
            worst = max(worst, float(np.max(np.abs(gram))))
        return worst

    def max_deviation(self, other: BlockUnitary, guard_levels: int = GUARD_LEVELS) -> float:
        worst = 0.0
        for n in self._guarded_sectors(guard_levels):
            diff = self._sector_view(n, guard_levels) - other._sector_view(n, guard_levels)
            worst = max(worst, float(np.max(np.abs(diff))))
        return worst


def _work_dims(system: JointSystem, padding: Optional[int]) -> List[Tuple[int, ...]]:
    return [system.padded_gw_dims(n, padding) for n in range(system.optical_dim)]


def expm_unitary(
    system: JointSystem,
    t: float,
    padding: Optional[int] = None,
    tol: Tolerances = DEFAULT_TOLERANCES,
) -> BlockUnitary:
    """Brute-force exp(−iHt), sector by sector."""
    dims = _work_dims(system, padding)
    return BlockUnitary(system, t, tuple(sector_unitaries(system, t, dims, tol)))


def _mode_factor(q: float, Omega: float, t: float, n: int, dim: int, free_evolution: bool, tol: Tolerances) -> OperatorMatrix:
    """e^{−iΩt b†b} · D(−qnγ) on one mode (Kerr phase applied by the caller)."""
    gamma = gamma_of(Omega, t)
    b = annihilation(dim).data
    beta = -q * n * gamma
    D = matrix_exp(OperatorMatrix(beta * b.conj().T - np.conj(beta) * b, (dim,)), tol)
    if not free_evolution:
        return D
    free = np.exp(-1j * Omega * t * np.arange(dim))
    return OperatorMatrix(free[:, None] * D.data, (dim,))


def closed_form_unitary(
    system: JointSystem,
    t: float,
    padding: Optional[int] = None,
    free_evolution: bool = True,
    tol: Tolerances = DEFAULT_TOLERANCES,
) -> BlockUnitary:
    """
    Product over modes of the factorized single-mode evolution.

    ``free_evolution=False`` drops e^{−iΩt b†b} (and the Lab-frame optical
    phase), leaving the two-factor interaction-picture operator.
    """
    blocks = []
    for n, dims in enumerate(_work_dims(system, padding)):
        phase = 0.0
        U = identity(dims)
        for k, (mode, d) in enumerate(zip(system.modes, dims)):
            phase += 0.5 * kerr_phase(mode.q, mode.Omega, t) * n * n
            U = U @ embed(_mode_factor(mode.q, mode.Omega, t, n, d, free_evolution, tol), dims, k)
        if free_evolution and system.frame == Frame.LAB:
            phase -= system.omega0 * n * t
        blocks.append(U * cmath.exp(1j * phase))
    return BlockUnitary(system, t, tuple(blocks))


@dataclass(frozen=True)
class UnitaryComparison:
    t: float
    max_deviation: float
    closed_unitarity: float
    expm_unitarity: float

    def to_dict(self) -> Dict[str, Any]:
        return {
            "t": self.t,
            "max_deviation": self.max_deviation,
            "closed_unitarity": self.closed_unitarity,
            "expm_unitarity": self.expm_unitarity,
        }


def compare_unitaries(
    system: JointSystem,
    t: float,
    padding: Optional[int] = None,
    tol: Tolerances = DEFAULT_TOLERANCES,
) -> UnitaryComparison:
    closed = closed_form_unitary(system, t, padding, tol=tol)
    brute = expm_unitary(system, t, padding, tol)
    cmp = UnitaryComparison(
        t=t,
        max_deviation=closed.max_deviation(brute),
        closed_unitarity=closed.unitarity_residual(),
        expm_unitarity=brute.unitarity_residual(),
    )
    logger.debug("unitary comparison t=%.4g on %s: %.3g", t, system.dims, cmp.max_deviation)
    return cmp
