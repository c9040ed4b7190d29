"""
gravicav analytic — optical squeezing by the gravitational vacuum.

F is the accumulated Kerr phase and D the worst-case damping from the
sum over vacuum modes; both are leading-order estimates with order-one
prefactors dropped. The quadrature statistics are written as functions of
(α, D, F) so they can be scanned over F directly.
"""

from __future__ import annotations

import logging
import math
from typing import Tuple, Union

import numpy as np
from scipy.optimize import minimize_scalar

from ..errors import InvalidParameter, NegativeTime, NoMinimumFound
from ..models import Frame, PhaseConvention, VacuumEstimates, Vacuum
from ..params.constants import DEFAULT_LN_CUTOFF_RATIO
from .waves import gw_exact_moments

logger = logging.getLogger("gravicav.analytic.vacuum")

ArrayLike = Union[float, np.ndarray]

SCAN_STEP = 1e-3
REFINE_TOL = 1e-6


def _check_frequency(omega0: float, Epl: float) -> None:
    if not (0 < omega0 < Epl):
        raise InvalidParameter(f"need 0 < omega0 < Epl, got omega0={omega0!r}, Epl={Epl!r}", path="omega0")


def _check_quadrature_args(alpha: float, D: float) -> None:
    if not (math.isfinite(alpha) and alpha >= 0):
        raise InvalidParameter(f"alpha must be real and >= 0, got {alpha!r}", path="alpha")
    if not (0 < D <= 1):
        raise InvalidParameter(f"D must lie in (0, 1], got {D!r}", path="D")


# ─── Estimates ───────────────────────────────────────────────

def F_estimate(omega0: float, Epl: float, t: float) -> float:
    """(ω0/E_pl)·ω0·t"""
    _check_frequency(omega0, Epl)
    if t < 0:
        raise NegativeTime(f"t must be >= 0, got {t!r}", path="t")
    return (omega0 / Epl) * omega0 * t


def damping_worst_case(omega0: float, Epl: float, lnRatio: float = DEFAULT_LN_CUTOFF_RATIO) -> float:
    """exp(−(ω0/E_pl)² ln(E_pl/E_IR))"""
    _check_frequency(omega0, Epl)
    if not lnRatio > 0:
        raise InvalidParameter(f"lnRatio must be positive, got {lnRatio!r}", path="lnRatio")
    return math.exp(-((omega0 / Epl) ** 2) * lnRatio)


def vacuum_estimates(omega0: float, Epl: float, t: float, lnRatio: float = DEFAULT_LN_CUTOFF_RATIO) -> VacuumEstimates:
    return VacuumEstimates(F=F_estimate(omega0, Epl, t), D=damping_worst_case(omega0, Epl, lnRatio), lnRatio=lnRatio)


def minimum_time_estimates(F0: float, omega0: float, Epl: float) -> Tuple[float, float]:
    """
    Time of the first variance minimum under both available time maps.

    Returns (t from (ω0/E_pl)²ω0t = F0, t from (ω0/E_pl)ω0t = F0).
    """
    _check_frequency(omega0, Epl)
    ratio = omega0 / Epl
    return F0 / (ratio * ratio * omega0), F0 / (ratio * omega0)


# ─── Quadrature statistics ───────────────────────────────────

def vacuum_mean_quadrature(alpha: float, D: float, F: ArrayLike) -> ArrayLike:
    """2αD e^{−α²(1−cos F)} cos(F/2 + α² sin F)"""
    _check_quadrature_args(alpha, D)
    a2 = alpha * alpha
    return 2.0 * alpha * D * np.exp(-a2 * (1.0 - np.cos(F))) * np.cos(0.5 * F + a2 * np.sin(F))


def vacuum_variance(
    alpha: float,
    D: float,
    F: ArrayLike,
    conv: PhaseConvention = PhaseConvention.ORACLE_CORRECTED,
) -> ArrayLike:
    """Variance of a + a†; ``conv`` selects the first cosine argument (F or 2F)."""
    _check_quadrature_args(alpha, D)
    conv = PhaseConvention(conv)
    a2 = alpha * alpha
    d2 = D * D
    lead = 2.0 * F if conv == PhaseConvention.ORACLE_CORRECTED else F
    damp_sq = np.exp(-2.0 * a2 * (1.0 - np.cos(F)))
    return (
        2.0 * a2 * d2 * np.exp(-a2 * (1.0 - np.cos(2.0 * F))) * np.cos(lead + a2 * np.sin(2.0 * F))
        - 2.0 * a2 * d2 * damp_sq * np.cos(F + 2.0 * a2 * np.sin(F))
        + 2.0 * a2 * (1.0 - d2 * damp_sq)
        + 1.0
    )


def single_mode_exact_moments(
    alpha: float,
    q: float,
    Omega: float,
    t: float,
    frame: Frame = Frame.ROTATING,
    omega0: float = 0.0,
) -> Tuple[float, float]:
    """Exact (mean, variance) for one gravitational mode in its vacuum."""
    return gw_exact_moments(alpha, q, Omega, t, Vacuum(), frame, omega0)


# ─── Minimum search ──────────────────────────────────────────

def first_local_minimum_index(values: np.ndarray) -> int:
    """Index of the first interior grid point where the forward difference turns non-negative."""
    diff = np.diff(values)
    turns = np.nonzero((diff[:-1] < 0) & (diff[1:] >= 0))[0]
    if turns.size == 0:
        return -1
    return int(turns[0] + 1)


def first_variance_minimum(
    alpha: float,
    D: float = 1.0,
    conv: PhaseConvention = PhaseConvention.ORACLE_CORRECTED,
) -> Tuple[float, float]:
    """
    First local minimum (F0, varMin) of the vacuum variance over (0, 2π].

    Grid scan with step 1e-3, then golden-section refinement to 1e-6 in F.
    """
    if not alpha > 0:
        raise InvalidParameter(f"alpha must be > 0, got {alpha!r}", path="alpha")
    _check_quadrature_args(alpha, D)
    grid = SCAN_STEP * np.arange(1, int(2 * math.pi / SCAN_STEP) + 1)
    values = vacuum_variance(alpha, D, grid, conv)
    i = first_local_minimum_index(values)
    if i < 0:
        raise NoMinimumFound(f"vacuum variance has no local minimum on (0, 2π] for alpha={alpha}, D={D}")

    def objective(F: float) -> float:
        return float(vacuum_variance(alpha, D, F, conv))

    lo, mid, hi = grid[i - 1], grid[i], grid[i + 1]
    try:
        res = minimize_scalar(objective, bracket=(lo, mid, hi), method="golden", tol=REFINE_TOL * 1e-2)
        F0 = float(res.x)
        if not lo <= F0 <= hi:
            raise ValueError("golden search left the bracket")
    except ValueError:
        logger.debug("golden bracket rejected at F=%.4f; using bounded search", mid)
        res = minimize_scalar(objective, bounds=(lo, hi), method="bounded", options={"xatol": REFINE_TOL * 1e-1})
        F0 = float(res.x)
    var_min = objective(F0)
    if var_min > values[i]:
        F0, var_min = float(mid), float(values[i])
    logger.debug("first variance minimum (%s): F0=%.6f var=%.6f", PhaseConvention(conv).value, F0, var_min)
    return F0, var_min
