"""
gravicav qcore — state vectors over truncated Fock bases.

Builders compute amplitudes in log space and apply the tail guard against
the exact, untruncated distribution: a state is rejected when more than
``tol.tail`` of its probability sits above level ``dim - 3``.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Sequence, Tuple

import numpy as np
from scipy.special import gammaln
from scipy.stats import poisson

from ..errors import InvalidDimension, TailOverflow
from ..models import DEFAULT_TOLERANCES, Tolerances

logger = logging.getLogger("gravicav.qcore.states")

GUARD_LEVELS = 2


def check_dim(dim: int, path: str = "dim") -> int:
    if isinstance(dim, bool) or int(dim) != dim or dim < 2:
        raise InvalidDimension(f"truncation dimension must be an integer >= 2, got {dim!r}", path=path)
    return int(dim)


@dataclass(frozen=True, eq=False)
class StateVector:
    """Normalized amplitudes over a (product) truncated Fock basis."""

    amplitudes: np.ndarray
    dims: Tuple[int, ...]
    discarded_mass: float = 0.0

    @property
    def dim(self) -> int:
        return int(np.prod(self.dims))

    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    def probabilities(self) -> np.ndarray:
        return np.abs(self.amplitudes) ** 2

    def tail_mass(self, levels: int = GUARD_LEVELS) -> float:
        """Probability on the top ``levels`` Fock levels of any mode."""
        return float(self.probabilities()[~guarded_mask(self.dims, levels)].sum())

    def tensor(self, other: StateVector) -> StateVector:
        return StateVector(
            amplitudes=np.kron(self.amplitudes, other.amplitudes),
            dims=self.dims + other.dims,
            discarded_mass=1.0 - (1.0 - self.discarded_mass) * (1.0 - other.discarded_mass),
        )

    def overlap(self, other: StateVector) -> complex:
        return complex(np.vdot(self.amplitudes, other.amplitudes))


def guarded_mask(dims: Sequence[int], levels: int = GUARD_LEVELS) -> np.ndarray:
    """Boolean mask of product-basis states below the top ``levels`` of every mode."""
    mask = np.ones((), dtype=bool)
    for d in dims:
        mask = np.logical_and.outer(mask, np.arange(d) < d - levels)
    return mask.ravel()


def tensor_all(states: Sequence[StateVector]) -> StateVector:
    out = states[0]
    for s in states[1:]:
        out = out.tensor(s)
    return out


def fock_state(n: int, dim: int) -> StateVector:
    dim = check_dim(dim)
    if not 0 <= n < dim:
        raise InvalidDimension(f"level {n} outside basis of dimension {dim}", path="n")
    amps = np.zeros(dim, dtype=complex)
    amps[n] = 1.0
    return StateVector(amplitudes=amps, dims=(dim,))


def _finalize(amps: np.ndarray, dim: int, discarded: float) -> StateVector:
    amps = amps / np.linalg.norm(amps)
    return StateVector(amplitudes=amps, dims=(dim,), discarded_mass=float(discarded))


# ─── Coherent ────────────────────────────────────────────────

def coherent_tail(alpha: complex, dim: int) -> float:
    """Exact mass of |α⟩ above level dim - 3."""
    return float(poisson.sf(dim - 3, abs(alpha) ** 2))


def coherent_state(alpha: complex, dim: int, tol: Tolerances = DEFAULT_TOLERANCES) -> StateVector:
    dim = check_dim(dim)
    alpha = complex(alpha)
    tail = coherent_tail(alpha, dim)
    if tail > tol.tail:
        raise TailOverflow(
            f"coherent state |α|²={abs(alpha) ** 2:.4g} leaves {tail:.3g} of its mass above level {dim - 3}",
            tail_mass=tail,
        )
    if alpha == 0:
        return fock_state(0, dim)
    n = np.arange(dim)
    r = abs(alpha)
    log_mag = n * math.log(r) - 0.5 * gammaln(n + 1) - 0.5 * r * r
    amps = np.exp(log_mag) * np.exp(1j * n * np.angle(alpha))
    discarded = float(poisson.sf(dim - 1, r * r))
    return _finalize(amps, dim, discarded)


# ─── Squeezed vacuum ─────────────────────────────────────────

def _squeezed_log_probs(r: float, m: np.ndarray) -> np.ndarray:
    """log |c_{2m}|² of the untruncated squeezed vacuum."""
    return (
        -math.log(math.cosh(r))
        + 2 * m * math.log(math.tanh(r))
        + gammaln(2 * m + 1)
        - 2 * gammaln(m + 1)
        - m * math.log(4.0)
    )


def squeezed_tail(r: float, dim: int) -> float:
    """Exact mass of the squeezed vacuum above level dim - 3."""
    if r == 0:
        return 0.0
    m = np.arange((dim - 1) // 2)  # even levels 2m <= dim - 3
    kept = math.fsum(np.exp(_squeezed_log_probs(abs(r), m)))
    return max(0.0, 1.0 - kept)


def squeezed_vacuum(r: float, theta: float, dim: int, tol: Tolerances = DEFAULT_TOLERANCES) -> StateVector:
    """S(r e^{iθ})|0⟩ with S(ξ) = exp(½(ξ* a² − ξ a†²)); odd levels are zero."""
    dim = check_dim(dim)
    r = float(r)
    if r == 0:
        return fock_state(0, dim)
    tail = squeezed_tail(r, dim)
    if tail > tol.tail:
        raise TailOverflow(
            f"squeezed vacuum r={r:.4g} leaves {tail:.3g} of its mass above level {dim - 3}",
            tail_mass=tail,
        )
    m = np.arange((dim + 1) // 2)
    log_p = _squeezed_log_probs(abs(r), m)
    sign = 1.0 if r > 0 else -1.0
    phase = np.exp(1j * m * (theta + math.pi)) * sign ** m
    amps = np.zeros(dim, dtype=complex)
    amps[2 * m] = np.exp(0.5 * log_p) * phase
    kept = math.fsum(np.exp(log_p))
    return _finalize(amps, dim, max(0.0, 1.0 - kept))
