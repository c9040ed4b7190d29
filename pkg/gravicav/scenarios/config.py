"""
gravicav scenarios — configuration documents.

A configuration is JSON: a list of scenario objects, or an object with a
``scenarios`` list. Each scenario names a ``kind``; kind-specific
parameters go under ``params`` or directly on the scenario object.
Validation collects every problem before raising a single ConfigError.
"""

from __future__ import annotations

import copy
import json
import logging
import math
import os
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional, Tuple

import numpy as np

from ..errors import ConfigError, GravicavError
from ..models import DisplacementVariant, Frame, GwModeState, PhaseConvention, Tolerances
from ..oracle.system import MAX_MODES

logger = logging.getLogger("gravicav.scenarios.config")

_DEFAULT_SCENARIOS_PATH = os.path.join(os.path.dirname(__file__), "default_scenarios.json")

TWO_PI = 2.0 * math.pi


class ScenarioKind(str, Enum):
    VACUUM_SQUEEZING = "vacuum_squeezing"
    COHERENT_GW = "coherent_gw"
    SQUEEZED_GW = "squeezed_gw"
    THERMAL_CHECK = "thermal_check"
    ORACLE_VERIFY = "oracle_verify"
    BCH_VERIFY = "bch_verify"

    @classmethod
    def parse(cls, raw: str) -> ScenarioKind:
        key = str(raw).replace("_", "").replace("-", "").lower()
        for kind in cls:
            if kind.value.replace("_", "") == key:
                return kind
        raise ValueError(raw)

    @property
    def oracle_backed(self) -> bool:
        return self in (ScenarioKind.COHERENT_GW, ScenarioKind.SQUEEZED_GW, ScenarioKind.ORACLE_VERIFY)

    @property
    def has_time_series(self) -> bool:
        return self not in (ScenarioKind.THERMAL_CHECK, ScenarioKind.BCH_VERIFY)


# Defaults applied under user parameters. Oracle kinds use Ω = 1 rad/s so the
# time grid reads directly as Ωt.
KIND_DEFAULTS: Dict[ScenarioKind, Dict[str, Any]] = {
    ScenarioKind.VACUUM_SQUEEZING: {
        "alpha": 1.0, "D": 1.0, "lnRatio": 62.0, "omega0": None,
    },
    ScenarioKind.COHERENT_GW: {
        "alpha": 1.0, "q": 0.02, "lambda": 5.0, "Omega": 1.0, "dims": [24, 64],
        "omega0": 10.0, "tolerance": 1e-5,
    },
    ScenarioKind.SQUEEZED_GW: {
        "alpha": 1.0, "q": 0.05, "xi0": 1.0, "Omega": 1.0, "dims": [24, 80],
        "omega0": 10.0, "tolerance": 1e-4,
    },
    ScenarioKind.THERMAL_CHECK: {
        "Omega": TWO_PI * 10.0, "T": 1.0, "omega0": 1.77e15, "q": None, "epsilon_max": 1e-40,
    },
    ScenarioKind.ORACLE_VERIFY: {
        "alpha": 1.0, "q": 0.1, "Omega": 1.0, "dims": [24, 16], "omega0": 10.0, "tolerance": 1e-6,
        "unitary_dims": [12, 12], "unitary_times": [0.5, math.pi, TWO_PI], "unitary_tolerance": 1e-7,
    },
    ScenarioKind.BCH_VERIFY: {
        "q_values": [0.05, 0.1], "dims": [10, 14], "tolerance": 1e-7,
    },
}

DEFAULT_GRIDS: Dict[ScenarioKind, Tuple[float, float, int]] = {
    ScenarioKind.VACUUM_SQUEEZING: (0.0, 2.0 * TWO_PI, 2001),
    ScenarioKind.COHERENT_GW: (0.0, TWO_PI, 33),
    ScenarioKind.SQUEEZED_GW: (0.0, TWO_PI, 33),
    ScenarioKind.THERMAL_CHECK: (0.0, 1.0, 2),
    ScenarioKind.ORACLE_VERIFY: (0.0, 2.0 * TWO_PI, 33),
    ScenarioKind.BCH_VERIFY: (0.0, 1.0, 2),
}

RESERVED_KEYS = {"name", "kind", "params", "time_grid", "output", "frame", "convention", "variant", "tolerances"}


class Severity(str, Enum):
    ERROR = "error"
    WARNING = "warning"


@dataclass
class ConfigIssue:
    severity: Severity
    code: str
    message: str
    path: str = ""

    def to_dict(self) -> Dict[str, str]:
        return {
            "severity": self.severity.value,
            "code": self.code,
            "message": self.message,
            "path": self.path,
        }

    def __str__(self) -> str:
        where = f" ({self.path})" if self.path else ""
        return f"[{self.code}] {self.message}{where}"


@dataclass(frozen=True)
class TimeGrid:
    t_start: float
    t_end: float
    samples: int

    def points(self) -> np.ndarray:
        return np.linspace(self.t_start, self.t_end, self.samples)

    def to_dict(self) -> Dict[str, Any]:
        return {"t_start": self.t_start, "t_end": self.t_end, "samples": self.samples}


@dataclass
class Scenario:
    name: str
    kind: ScenarioKind
    params: Dict[str, Any] = field(default_factory=dict)
    time_grid: TimeGrid = field(default_factory=lambda: TimeGrid(0.0, 1.0, 2))
    output: str = ""
    frame: Frame = Frame.ROTATING
    convention: PhaseConvention = PhaseConvention.ORACLE_CORRECTED
    variant: DisplacementVariant = DisplacementVariant.EXACT_IDENTITY
    tolerances: Tolerances = field(default_factory=Tolerances)

    def __post_init__(self):
        if not self.output:
            self.output = self.name

    def to_dict(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "kind": self.kind.value,
            "params": copy.deepcopy(self.params),
            "time_grid": self.time_grid.to_dict(),
            "output": self.output,
            "frame": self.frame.value,
            "convention": self.convention.value,
            "variant": self.variant.value,
            "tolerances": self.tolerances.to_dict(),
        }


# ─── Validation ──────────────────────────────────────────────

def _is_number(value: Any) -> bool:
    return isinstance(value, (int, float)) and not isinstance(value, bool) and math.isfinite(value)


class ScenarioValidator:
    """
    Checks one raw scenario object and collects issues.

    Usage:
        issues = ScenarioValidator().validate(raw, index=0)
        errors = [i for i in issues if i.severity == Severity.ERROR]
    """

    POSITIVE = {"Omega", "T", "omega0", "lnRatio", "epsilon_max", "tolerance", "unitary_tolerance"}
    NONNEGATIVE = {"alpha", "lambda", "xi0"}
    COUPLINGS = {"q"}

    def validate(self, raw: Any, index: int) -> List[ConfigIssue]:
        base = f"scenarios[{index}]"
        if not isinstance(raw, dict):
            return [ConfigIssue(Severity.ERROR, "NOT_AN_OBJECT", "scenario must be a JSON object", base)]
        issues = self._check_kind(raw, base)
        if issues:
            return issues
        kind = ScenarioKind.parse(raw["kind"])
        params = merged_params(kind, raw)
        issues.extend(self._check_name(raw, base))
        issues.extend(self._check_params(kind, params, raw, base))
        issues.extend(self._check_time_grid(raw.get("time_grid"), base))
        issues.extend(self._check_enums(raw, base))
        issues.extend(self._check_tolerances(raw.get("tolerances"), base))
        return issues

    def _check_kind(self, raw: Dict[str, Any], base: str) -> List[ConfigIssue]:
        if "kind" not in raw:
            return [ConfigIssue(Severity.ERROR, "MISSING_KIND", "scenario has no 'kind'", f"{base}.kind")]
        try:
            ScenarioKind.parse(raw["kind"])
        except ValueError:
            valid = ", ".join(k.value for k in ScenarioKind)
            return [ConfigIssue(Severity.ERROR, "UNKNOWN_KIND", f"unknown kind '{raw['kind']}' (expected one of {valid})", f"{base}.kind")]
        return []

    def _check_name(self, raw: Dict[str, Any], base: str) -> List[ConfigIssue]:
        name = raw.get("name")
        if name is not None and (not isinstance(name, str) or not name.strip()):
            return [ConfigIssue(Severity.ERROR, "INVALID_NAME", "name must be a non-empty string", f"{base}.name")]
        return []

    def _check_params(self, kind: ScenarioKind, params: Dict[str, Any], raw: Dict[str, Any], base: str) -> List[ConfigIssue]:
        issues: List[ConfigIssue] = []
        known = set(KIND_DEFAULTS[kind]) | {"V", "state"}
        given = dict(raw.get("params") or {})
        given.update({k: v for k, v in raw.items() if k not in RESERVED_KEYS})
        for key in given:
            if key not in known:
                issues.append(ConfigIssue(Severity.WARNING, "UNKNOWN_PARAM", f"parameter '{key}' is ignored by {kind.value}", f"{base}.params.{key}"))

        for key, value in params.items():
            path = f"{base}.params.{key}"
            if value is None:
                continue
            if key in self.POSITIVE and not (_is_number(value) and value > 0):
                issues.append(ConfigIssue(Severity.ERROR, "NOT_POSITIVE", f"'{key}' must be a positive number, got {value!r}", path))
            elif key in self.NONNEGATIVE and not (_is_number(value) and value >= 0):
                issues.append(ConfigIssue(Severity.ERROR, "NEGATIVE_VALUE", f"'{key}' must be >= 0, got {value!r}", path))
            elif key in self.COUPLINGS and not (_is_number(value) and 0 <= value < 1):
                issues.append(ConfigIssue(Severity.ERROR, "INVALID_COUPLING", f"'{key}' must lie in [0, 1), got {value!r}", path))
            elif key == "D" and not (_is_number(value) and 0 < value <= 1):
                issues.append(ConfigIssue(Severity.ERROR, "INVALID_DAMPING", f"'D' must lie in (0, 1], got {value!r}", path))
            elif key in ("dims", "unitary_dims"):
                # scenarios describe one gravitational mode; unitary_dims may replicate it
                issues.extend(self._check_dims(value, path, 1 if key == "dims" else MAX_MODES))
            elif key == "q_values":
                if not isinstance(value, list) or not value or not all(_is_number(v) and 0 <= v < 1 for v in value):
                    issues.append(ConfigIssue(Severity.ERROR, "INVALID_COUPLING", "'q_values' must be a non-empty list in [0, 1)", path))
            elif key == "unitary_times":
                if not isinstance(value, list) or not all(_is_number(v) and v >= 0 for v in value):
                    issues.append(ConfigIssue(Severity.ERROR, "NEGATIVE_VALUE", "'unitary_times' must be a list of times >= 0", path))
            elif key == "state":
                try:
                    GwModeState.from_dict(value)
                except (GravicavError, TypeError, ValueError, AttributeError) as e:
                    issues.append(ConfigIssue(Severity.ERROR, "INVALID_STATE", str(e), path))
        if kind.oracle_backed and "V" in given and not (_is_number(given["V"]) and given["V"] > 0):
            issues.append(ConfigIssue(Severity.ERROR, "NOT_POSITIVE", f"'V' must be a positive number, got {given['V']!r}", f"{base}.params.V"))
        return issues

    def _check_dims(self, value: Any, path: str, max_modes: int) -> List[ConfigIssue]:
        if not isinstance(value, list) or len(value) < 2:
            return [ConfigIssue(Severity.ERROR, "INVALID_DIMS", "dims must list the optical and at least one gravitational dimension", path)]
        if len(value) - 1 > max_modes:
            return [ConfigIssue(
                Severity.ERROR, "DIMS_MODE_MISMATCH",
                f"{len(value) - 1} gravitational dims given for at most {max_modes} mode(s)", path,
            )]
        issues = []
        for i, d in enumerate(value):
            if not (isinstance(d, int) and not isinstance(d, bool) and d >= 2):
                issues.append(ConfigIssue(Severity.ERROR, "INVALID_DIMENSION", f"dimension must be an integer >= 2, got {d!r}", f"{path}[{i}]"))
        return issues

    def _check_time_grid(self, grid: Any, base: str) -> List[ConfigIssue]:
        if grid is None:
            return []
        path = f"{base}.time_grid"
        try:
            t_start, t_end, samples = _grid_tuple(grid)
        except (TypeError, ValueError, KeyError):
            return [ConfigIssue(Severity.ERROR, "INVALID_TIME_GRID", "time_grid must be [t_start, t_end, samples] or an object with those keys", path)]
        issues = []
        if not (isinstance(samples, int) and not isinstance(samples, bool) and samples >= 2):
            issues.append(ConfigIssue(Severity.ERROR, "INVALID_SAMPLES", f"samples must be an integer >= 2, got {samples!r}", f"{path}.samples"))
        if not (_is_number(t_start) and t_start >= 0):
            issues.append(ConfigIssue(Severity.ERROR, "NEGATIVE_TIME", f"t_start must be >= 0, got {t_start!r}", f"{path}.t_start"))
        elif not (_is_number(t_end) and t_end > t_start):
            issues.append(ConfigIssue(Severity.ERROR, "EMPTY_TIME_GRID", f"t_end must exceed t_start, got {t_end!r}", f"{path}.t_end"))
        return issues

    def _check_enums(self, raw: Dict[str, Any], base: str) -> List[ConfigIssue]:
        issues = []
        for key, enum_cls in (("frame", Frame), ("convention", PhaseConvention), ("variant", DisplacementVariant)):
            if key in raw:
                try:
                    enum_cls(raw[key])
                except ValueError:
                    valid = "|".join(e.value for e in enum_cls)
                    issues.append(ConfigIssue(Severity.ERROR, "INVALID_OPTION", f"'{key}' must be one of {valid}", f"{base}.{key}"))
        return issues

    def _check_tolerances(self, tol: Any, base: str) -> List[ConfigIssue]:
        if tol is None:
            return []
        if not isinstance(tol, dict):
            return [ConfigIssue(Severity.ERROR, "INVALID_TOLERANCES", "tolerances must be an object", f"{base}.tolerances")]
        try:
            Tolerances.from_dict(tol)
        except (GravicavError, TypeError, ValueError) as e:
            return [ConfigIssue(Severity.ERROR, "INVALID_TOLERANCES", str(e), f"{base}.tolerances")]
        return []


# ─── Parsing ─────────────────────────────────────────────────

def _grid_tuple(grid: Any) -> Tuple[Any, Any, Any]:
    if isinstance(grid, dict):
        return grid["t_start"], grid["t_end"], grid["samples"]
    t_start, t_end, samples = grid
    return t_start, t_end, samples


def merged_params(kind: ScenarioKind, raw: Dict[str, Any]) -> Dict[str, Any]:
    """Kind defaults, overlaid with ``params`` and then top-level keys."""
    params = copy.deepcopy(KIND_DEFAULTS[kind])
    params.update(copy.deepcopy(raw.get("params") or {}))
    params.update({k: copy.deepcopy(v) for k, v in raw.items() if k not in RESERVED_KEYS})
    if "V" in params and params["V"] is not None and "q" not in (raw.get("params") or {}) and "q" not in raw:
        params["q"] = None
    return params


def _build(raw: Dict[str, Any], index: int, defaults: Dict[str, Any]) -> Scenario:
    kind = ScenarioKind.parse(raw["kind"])
    grid = raw.get("time_grid")
    t_start, t_end, samples = _grid_tuple(grid) if grid is not None else DEFAULT_GRIDS[kind]
    return Scenario(
        name=raw.get("name") or f"{kind.value}_{index}",
        kind=kind,
        params=merged_params(kind, raw),
        time_grid=TimeGrid(float(t_start), float(t_end), int(samples)),
        output=raw.get("output", ""),
        frame=Frame(raw.get("frame", defaults.get("frame", Frame.ROTATING))),
        convention=PhaseConvention(raw.get("convention", defaults.get("convention", PhaseConvention.ORACLE_CORRECTED))),
        variant=DisplacementVariant(raw.get("variant", defaults.get("variant", DisplacementVariant.EXACT_IDENTITY))),
        tolerances=Tolerances.from_dict(raw.get("tolerances") or {}),
    )


def parse_config(text: str, defaults: Optional[Dict[str, Any]] = None) -> List[Scenario]:
    """
    Parse and validate a configuration document.

    ``defaults`` may carry ``frame``, ``convention`` and ``variant`` values
    for scenarios that do not set them.
    """
    defaults = defaults or {}
    if not text.strip():
        return []
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        issue = ConfigIssue(Severity.ERROR, "PARSE_ERROR", e.msg, f"line {e.lineno}, column {e.colno}")
        raise ConfigError(f"line {e.lineno}, column {e.colno}: {e.msg}", [issue]) from e

    if isinstance(doc, dict) and "scenarios" in doc:
        doc = doc["scenarios"]
    elif isinstance(doc, dict):
        doc = [doc]
    if not isinstance(doc, list):
        issue = ConfigIssue(Severity.ERROR, "INVALID_DOCUMENT", "expected a list of scenarios", "$")
        raise ConfigError(str(issue), [issue])

    validator = ScenarioValidator()
    issues: List[ConfigIssue] = []
    for i, raw in enumerate(doc):
        issues.extend(validator.validate(raw, i))
    for issue in issues:
        if issue.severity == Severity.WARNING:
            logger.warning("config: %s", issue)
    errors = [i for i in issues if i.severity == Severity.ERROR]
    if errors:
        raise ConfigError("; ".join(str(e) for e in errors), errors)

    scenarios = [_build(raw, i, defaults) for i, raw in enumerate(doc)]
    names = [s.name for s in scenarios]
    duplicates = sorted({n for n in names if names.count(n) > 1})
    if duplicates:
        issue = ConfigIssue(Severity.ERROR, "DUPLICATE_NAME", f"scenario names must be unique: {', '.join(duplicates)}", "scenarios")
        raise ConfigError(str(issue), [issue])
    return scenarios


def load_config(path: str, defaults: Optional[Dict[str, Any]] = None) -> List[Scenario]:
    with open(path, "r", encoding="utf-8") as f:
        return parse_config(f.read(), defaults)


def default_scenarios(defaults: Optional[Dict[str, Any]] = None) -> List[Scenario]:
    """The packaged scenario set, one per kind."""
    return load_config(_DEFAULT_SCENARIOS_PATH, defaults)
