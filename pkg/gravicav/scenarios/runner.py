"""
gravicav scenarios — execute scenarios and write their outputs.

Each run produces ``<output>.json`` (the RunSummary) and, for kinds with a
time axis, ``<output>.csv``. Module errors are recorded as failures; I/O
errors propagate.
"""

from __future__ import annotations

import logging
import math
import os
import time
import warnings
from concurrent.futures import ThreadPoolExecutor
from typing import Any, Callable, Dict, List, Optional, Tuple

import numpy as np

from ..analytic import (
    F_estimate,
    coherent_gw_mean_quadrature,
    damping_worst_case,
    first_variance_minimum,
    gamma_of,
    gw_exact_moments,
    gw_overlap,
    kerr_phase,
    minimum_time_estimates,
    squeezed_gw_mean_quadrature,
    thermal_damping,
    thermal_epsilon,
    thermal_exponent,
    vacuum_mean_quadrature,
    vacuum_variance,
)
from ..errors import ApproximationDomainWarning, GravicavError, NoMinimumFound
from ..models import (
    Coherent,
    DisplacementVariant,
    GwModeState,
    Squeezed,
    TimeSeries,
    Vacuum,
)
from ..oracle import (
    GwMode,
    JointSystem,
    bch_identity_checks,
    compare_unitaries,
    heisenberg_expectations,
)
from ..params import CavityConfig, GwModeConfig, PhysicalConstants, SystemConfig, nbar, q_max
from .config import Scenario, ScenarioKind
from .report import RunStatus, RunSummary

logger = logging.getLogger("gravicav.scenarios.runner")

VACUUM_COLUMNS = ["t", "F", "mean_quadrature", "variance", "D"]
ORACLE_COLUMNS = VACUUM_COLUMNS + ["oracle_mean", "oracle_variance", "abs_dev", "tail_mass"]
REVIVAL_TOLERANCE = 1e-9
NUMBER_DRIFT_TOLERANCE = 1e-8
GUARD_SANITY_FLOOR = 1e-3

Outcome = Tuple[Optional[TimeSeries], Dict[str, Any], Dict[str, Any], RunStatus, str]


def _status(ok: bool, warn: bool = False) -> RunStatus:
    if not ok:
        return RunStatus.FAIL
    return RunStatus.WARN if warn else RunStatus.PASS


# ─── Vacuum squeezing ────────────────────────────────────────

def _run_vacuum(scenario: Scenario, budget: Optional[int], max_workers: Optional[int]) -> Outcome:
    """
    Without ``omega0`` the grid is the Kerr phase F itself and the t column
    repeats it; with ``omega0`` the grid is time in seconds, F and D follow
    from the leading-order estimates.
    """
    p = scenario.params
    alpha = float(p["alpha"])
    conv = scenario.convention
    grid = scenario.time_grid.points()
    metrics: Dict[str, Any] = {"convention": conv.value}
    if p.get("omega0"):
        constants = PhysicalConstants.default()
        omega0, Epl = float(p["omega0"]), constants.Epl
        F = np.array([F_estimate(omega0, Epl, t) for t in grid])
        D = damping_worst_case(omega0, Epl, float(p["lnRatio"]))
    else:
        omega0 = Epl = None
        F = grid.copy()
        D = float(p["D"])
    mean = vacuum_mean_quadrature(alpha, D, F)
    variance = vacuum_variance(alpha, D, F, conv)
    series = TimeSeries.from_columns(
        {"t": grid, "F": F, "mean_quadrature": mean, "variance": variance, "D": np.full_like(grid, D)},
        VACUUM_COLUMNS,
    )

    i = int(np.argmin(variance))
    metrics.update({"D": D, "grid_min_F": float(F[i]), "grid_min_variance": float(variance[i])})
    warn = False
    message = ""
    try:
        F0, var_min = first_variance_minimum(alpha, D, conv) if alpha > 0 else (0.0, 1.0)
        metrics.update({"F0": F0, "varMin": var_min, "squeezing": bool(var_min < 1.0)})
        if omega0 is not None:
            t_printed, t_linear = minimum_time_estimates(F0, omega0, Epl)
            metrics.update({"t0_printed_condition": t_printed, "t0_from_F": t_linear})
        if var_min >= 1.0:
            warn, message = True, "no squeezing below shot noise"
    except NoMinimumFound as e:
        warn, message = True, e.message

    revival = float(vacuum_variance(alpha, D, 2.0 * math.pi, conv))
    metrics["revival_variance"] = revival
    ok = bool(np.all(variance >= 0))
    if D == 1.0:
        ok = ok and abs(revival - 1.0) <= REVIVAL_TOLERANCE
    return series, metrics, {"revival": REVIVAL_TOLERANCE}, _status(ok, warn), message


# ─── Oracle-backed kinds ─────────────────────────────────────

def _gw_state(scenario: Scenario) -> GwModeState:
    p = scenario.params
    if scenario.kind == ScenarioKind.COHERENT_GW:
        return Coherent(lam=float(p["lambda"]))
    if scenario.kind == ScenarioKind.SQUEEZED_GW:
        return Squeezed(xi0=float(p["xi0"]))
    if p.get("state"):
        return GwModeState.from_dict(p["state"])
    return Vacuum()


def _system(scenario: Scenario, state: GwModeState, budget: Optional[int]) -> Tuple[JointSystem, SystemConfig]:
    p = scenario.params
    config = SystemConfig(
        cavity=CavityConfig(omega0=float(p["omega0"]), alpha=float(p["alpha"])),
        modes=[GwModeConfig(Omega=float(p["Omega"]), V=p.get("V"), q=p.get("q"), state=state)],
        tolerances=scenario.tolerances,
    )
    dims = list(p["dims"])
    system = JointSystem.from_config(config, dims[0], dims[1:], frame=scenario.frame, budget=budget)
    return system, config


def _run_oracle_series(
    scenario: Scenario,
    budget: Optional[int],
    max_workers: Optional[int],
    relative: bool,
) -> Tuple[TimeSeries, Dict[str, Any], JointSystem, np.ndarray, List[float]]:
    p = scenario.params
    state = _gw_state(scenario)
    system, config = _system(scenario, state, budget)
    mode = system.modes[0]
    alpha = config.cavity.alpha
    grid = scenario.time_grid.points()
    result = heisenberg_expectations(system, alpha, [state], grid, scenario.tolerances, max_workers)

    series = TimeSeries(columns=ORACLE_COLUMNS)
    dev_mean = dev_var = 0.0
    for k, t in enumerate(grid):
        mean, variance = gw_exact_moments(alpha, mode.q, mode.Omega, t, state, system.frame, system.omega0)
        o_mean, o_var = result.mean_quadrature[k], result.variance[k]
        d_mean, d_var = abs(o_mean - mean), abs(o_var - variance)
        if relative:
            d_mean /= max(1.0, abs(mean))
            d_var /= max(1.0, abs(variance))
        dev_mean, dev_var = max(dev_mean, d_mean), max(dev_var, d_var)
        damping = abs(gw_overlap(state, -mode.q * gamma_of(mode.Omega, t), mode.Omega, t))
        series.append(
            float(t), kerr_phase(mode.q, mode.Omega, t), mean, variance, damping,
            o_mean, o_var, max(d_mean, d_var), result.tail_mass[k],
        )
    drift = max(abs(n - result.photon_number[0]) for n in result.photon_number)
    metrics = {
        "q": mode.q,
        "dims": list(system.dims),
        "frame": system.frame.value,
        "max_deviation": max(dev_mean, dev_var),
        "max_deviation_mean": dev_mean,
        "max_deviation_variance": dev_var,
        "deviation": "relative" if relative else "absolute",
        "flagged_samples": result.flagged_count,
        "norm_drift": result.unitarity_residual,
        "photon_number_drift": drift,
        "variance_clip": result.max_variance_clip,
    }
    return series, metrics, system, grid, result.mean_quadrature


def _oracle_status(metrics: Dict[str, Any], tolerance: float, warn: bool = False) -> RunStatus:
    ok = metrics["max_deviation"] <= tolerance and metrics["photon_number_drift"] <= NUMBER_DRIFT_TOLERANCE
    return _status(ok, warn or metrics["flagged_samples"] > 0)


def _run_coherent(scenario: Scenario, budget: Optional[int], max_workers: Optional[int]) -> Outcome:
    p = scenario.params
    series, metrics, system, grid, oracle_mean = _run_oracle_series(scenario, budget, max_workers, relative=False)
    mode, alpha, lam = system.modes[0], float(p["alpha"]), float(p["lambda"])
    printed = [coherent_gw_mean_quadrature(alpha, mode.q, lam, mode.Omega, t) for t in grid]
    metrics["kerr_free_deviation"] = float(np.max(np.abs(np.array(oracle_mean) - printed)))
    metrics["phase_amplitude_printed"] = mode.q * lam
    metrics["phase_amplitude_exact"] = 2.0 * mode.q * lam
    tol = float(p["tolerance"])
    return series, metrics, {"max_deviation": tol}, _oracle_status(metrics, tol), ""


def _run_squeezed(scenario: Scenario, budget: Optional[int], max_workers: Optional[int]) -> Outcome:
    p = scenario.params
    series, metrics, system, grid, oracle_mean = _run_oracle_series(scenario, budget, max_workers, relative=False)
    mode, alpha, xi0 = system.modes[0], float(p["alpha"]), float(p["xi0"])
    variant = scenario.variant
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", ApproximationDomainWarning)
        kerr_free = [squeezed_gw_mean_quadrature(alpha, mode.q, xi0, mode.Omega, t, variant) for t in grid]
        t_min = math.pi / mode.Omega
        exact_deficit = 2 * alpha - squeezed_gw_mean_quadrature(alpha, mode.q, xi0, mode.Omega, t_min)
        paper_deficit = 2 * alpha - squeezed_gw_mean_quadrature(
            alpha, mode.q, xi0, mode.Omega, t_min, DisplacementVariant.PAPER_APPROX
        )
    metrics["variant"] = variant.value
    metrics["kerr_free_deviation"] = float(np.max(np.abs(np.array(oracle_mean) - kerr_free)))
    metrics["paper_to_exact_deficit_ratio"] = paper_deficit / exact_deficit if exact_deficit else float("nan")
    tol = float(p["tolerance"])
    domain_warning = any(issubclass(w.category, ApproximationDomainWarning) for w in caught)
    message = "first-order squeezed correction outside its domain" if domain_warning else ""
    return series, metrics, {"max_deviation": tol}, _oracle_status(metrics, tol, domain_warning), message


def _run_oracle_verify(scenario: Scenario, budget: Optional[int], max_workers: Optional[int]) -> Outcome:
    p = scenario.params
    series, metrics, system, _, _ = _run_oracle_series(scenario, budget, max_workers, relative=True)
    tol = float(p["tolerance"])
    utol = float(p["unitary_tolerance"])
    status = _oracle_status(metrics, tol)

    ud = list(p["unitary_dims"])
    usys = JointSystem(
        optical_dim=ud[0],
        modes=tuple(GwMode(Omega=system.modes[0].Omega, q=system.modes[0].q, dim=d) for d in ud[1:]),
        frame=system.frame,
        omega0=system.omega0,
        budget=system.budget,
    )
    comparisons = [compare_unitaries(usys, float(t), tol=scenario.tolerances) for t in p["unitary_times"]]
    worst = max((c.max_deviation for c in comparisons), default=0.0)
    metrics["unitary_max_deviation"] = worst
    metrics["unitary_residual_closed"] = max((c.closed_unitarity for c in comparisons), default=0.0)
    if worst > utol:
        status = RunStatus.FAIL
    return series, metrics, {"max_deviation": tol, "unitary": utol}, status, ""


# ─── Closed-form checks ──────────────────────────────────────

def _run_thermal(scenario: Scenario, budget: Optional[int], max_workers: Optional[int]) -> Outcome:
    p = scenario.params
    omega0 = float(p["omega0"])
    q = float(p["q"]) if p.get("q") is not None else q_max(omega0)
    n = nbar(float(p["Omega"]), float(p["T"]))
    eps = thermal_epsilon(q, n)
    metrics = {
        "q": q,
        "nbar": n,
        "exponent": thermal_exponent(q, n),
        "damping": thermal_damping(q, n),
        "epsilon": eps,
    }
    limit = float(p["epsilon_max"])
    return None, metrics, {"epsilon_max": limit}, _status(eps <= limit), ""


def _run_bch(scenario: Scenario, budget: Optional[int], max_workers: Optional[int]) -> Outcome:
    p = scenario.params
    dims = tuple(p["dims"])
    tol = float(p["tolerance"])
    metrics: Dict[str, Any] = {"dims": list(dims)}
    worst = 0.0
    sane = True
    for q in p["q_values"]:
        report = bch_identity_checks(float(q), dims, guard=True, tol=scenario.tolerances, budget=budget or 0)
        for name, value in report.residuals.items():
            metrics[f"q={q}:{name}"] = value
        worst = max(worst, report.max_residual)
        if q > 0:
            unguarded = bch_identity_checks(float(q), dims, guard=False, tol=scenario.tolerances, budget=budget or 0)
            sane = sane and unguarded.max_residual > GUARD_SANITY_FLOOR
    metrics["max_residual"] = worst
    metrics["unguarded_residual_large"] = sane
    return None, metrics, {"residual": tol}, _status(worst <= tol, not sane), ""


_RUNNERS: Dict[ScenarioKind, Callable[[Scenario, Optional[int], Optional[int]], Outcome]] = {
    ScenarioKind.VACUUM_SQUEEZING: _run_vacuum,
    ScenarioKind.COHERENT_GW: _run_coherent,
    ScenarioKind.SQUEEZED_GW: _run_squeezed,
    ScenarioKind.THERMAL_CHECK: _run_thermal,
    ScenarioKind.ORACLE_VERIFY: _run_oracle_verify,
    ScenarioKind.BCH_VERIFY: _run_bch,
}


# ─── Public API ──────────────────────────────────────────────

def output_prefix(scenario: Scenario, output_dir: Optional[str]) -> str:
    if os.path.isabs(scenario.output) or not output_dir:
        return scenario.output
    return os.path.join(output_dir, scenario.output)


def _ensure_parent(path: str) -> None:
    parent = os.path.dirname(path)
    if parent:
        os.makedirs(parent, exist_ok=True)


def write_time_series(series: TimeSeries, prefix: str) -> str:
    path = prefix + ".csv"
    _ensure_parent(path)
    series.save_csv(path)
    return path


def write_summary(summary: RunSummary, prefix: str) -> str:
    path = prefix + ".json"
    _ensure_parent(path)
    summary.save_json(path)
    return path


def run(
    scenario: Scenario,
    output_dir: Optional[str] = None,
    write: bool = True,
    budget: Optional[int] = None,
    max_workers: Optional[int] = None,
) -> RunSummary:
    """Execute one scenario; returns its summary and writes CSV/JSON when ``write``."""
    logger.info("scenario %s (%s) started", scenario.name, scenario.kind.value)
    start = time.perf_counter()
    series: Optional[TimeSeries] = None
    try:
        series, metrics, tolerances, status, message = _RUNNERS[scenario.kind](scenario, budget, max_workers)
    except GravicavError as e:
        logger.warning("scenario %s failed: [%s] %s", scenario.name, e.code, e.message)
        metrics, tolerances, status, message = {"error_code": e.code}, {}, RunStatus.FAIL, f"[{e.code}] {e.message}"
    tolerances = dict(tolerances)
    tolerances.update(scenario.tolerances.to_dict())
    summary = RunSummary(
        name=scenario.name,
        status=status,
        metrics=metrics,
        tolerances=tolerances,
        runtime_s=time.perf_counter() - start,
        message=message,
    )

    if write:
        prefix = output_prefix(scenario, output_dir)
        if series is not None:
            summary.outputs.append(write_time_series(series, prefix))
        summary.outputs.append(write_summary(summary, prefix))
    logger.info("scenario %s finished: %s in %.2fs", scenario.name, summary.status.value, summary.runtime_s)
    return summary


def run_all(
    scenarios: List[Scenario],
    output_dir: Optional[str] = None,
    write: bool = True,
    budget: Optional[int] = None,
    jobs: int = 1,
) -> List[RunSummary]:
    """Run scenarios, optionally in parallel; summaries keep configuration order."""
    def work(s: Scenario) -> RunSummary:
        return run(s, output_dir, write, budget)

    if jobs > 1 and len(scenarios) > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(work, scenarios))
    return [work(s) for s in scenarios]
