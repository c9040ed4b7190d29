"""
gravicav models — shared enums and plain data records.

Everything here is a value object: frozen where it travels between threads,
with ``from_dict``/``to_dict`` for the JSON surfaces.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import asdict, dataclass, field, fields
from enum import Enum
from typing import Any, ClassVar, Dict, List, Optional, Sequence, Tuple

import numpy as np

from .errors import InvalidParameter, UnsupportedState


# ─── Enums ───────────────────────────────────────────────────

class PhaseConvention(str, Enum):
    """Which first-cosine argument the vacuum variance uses."""
    PAPER_PRINTED = "printed"
    ORACLE_CORRECTED = "corrected"


class DisplacementVariant(str, Enum):
    """Squeezed-wave displacement: exact S†D(β)S identity or the large-ξ0 form."""
    EXACT_IDENTITY = "exact"
    PAPER_APPROX = "paper"


class Frame(str, Enum):
    ROTATING = "rotating"
    LAB = "lab"


class OperatorKind(str, Enum):
    GENERAL = "general"
    HERMITIAN = "hermitian"
    UNITARY = "unitary"


# ─── Tolerances ──────────────────────────────────────────────

@dataclass(frozen=True)
class Tolerances:
    """Numerical tolerances used by guards and residual checks."""

    unitarity: float = 1e-8
    normalization: float = 1e-12
    tail: float = 1e-8
    expm: float = 1e-10

    def __post_init__(self):
        for f in fields(self):
            value = getattr(self, f.name)
            if not (0.0 < value < 1.0):
                raise InvalidParameter(
                    f"tolerance '{f.name}' must satisfy 0 < x < 1, got {value!r}",
                    path=f"tolerances.{f.name}",
                )

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> Tolerances:
        known_fields = {f.name for f in fields(cls)}
        filtered = {k: float(v) for k, v in data.items() if k in known_fields}
        return cls(**filtered)

    def to_dict(self) -> Dict[str, float]:
        return asdict(self)


DEFAULT_TOLERANCES = Tolerances()


# ─── Gravitational mode states ───────────────────────────────

@dataclass(frozen=True)
class GwModeState:
    """
    Per-mode quantum state of the gravitational field.

    Tagged union: use one of ``Vacuum``, ``Coherent``, ``Squeezed`` or
    ``ThermalEstimate``. ``from_dict`` dispatches on the ``kind`` key.
    """

    kind: ClassVar[str] = ""

    @staticmethod
    def from_dict(data: Dict[str, Any]) -> GwModeState:
        kind = str(data.get("kind", "vacuum")).lower()
        if kind == "vacuum":
            return Vacuum()
        if kind == "coherent":
            return Coherent(lam=float(data.get("lambda", data.get("lam", 0.0))))
        if kind == "squeezed":
            return Squeezed(xi0=float(data.get("xi0", 0.0)))
        if kind in ("thermal", "thermal_estimate"):
            return ThermalEstimate(nbar=float(data.get("nbar", 0.0)))
        raise UnsupportedState(f"unknown gravitational state kind '{kind}'", path="state.kind")

    def to_dict(self) -> Dict[str, Any]:
        return {"kind": self.kind}


def _check_nonnegative(name: str, value: float) -> None:
    if not math.isfinite(value) or value < 0:
        raise InvalidParameter(f"{name} must be finite and >= 0, got {value!r}", path=f"state.{name}")


@dataclass(frozen=True)
class Vacuum(GwModeState):
    kind: ClassVar[str] = "vacuum"


@dataclass(frozen=True)
class Coherent(GwModeState):
    """Coherent wave |λ e^{iΩt}⟩; ``lam`` is the real amplitude √N."""

    lam: float = 0.0
    kind: ClassVar[str] = "coherent"

    def __post_init__(self):
        _check_nonnegative("lambda", self.lam)

    def to_dict(self) -> Dict[str, Any]:
        return {"kind": self.kind, "lambda": self.lam}


@dataclass(frozen=True)
class Squeezed(GwModeState):
    """Squeezed vacuum with magnitude ``xi0``; phase follows θ = 2Ωt."""

    xi0: float = 0.0
    kind: ClassVar[str] = "squeezed"

    def __post_init__(self):
        _check_nonnegative("xi0", self.xi0)

    def to_dict(self) -> Dict[str, Any]:
        return {"kind": self.kind, "xi0": self.xi0}


@dataclass(frozen=True)
class ThermalEstimate(GwModeState):
    """Thermal occupation; handled analytically only."""

    nbar: float = 0.0
    kind: ClassVar[str] = "thermal"

    def __post_init__(self):
        _check_nonnegative("nbar", self.nbar)

    def to_dict(self) -> Dict[str, Any]:
        return {"kind": self.kind, "nbar": self.nbar}


# ─── Analytic records ────────────────────────────────────────

@dataclass(frozen=True)
class KerrFactors:
    gamma: complex
    A: float
    q: float
    Omega: float
    t: float

    def to_dict(self) -> Dict[str, Any]:
        return {
            "gamma_re": self.gamma.real,
            "gamma_im": self.gamma.imag,
            "A": self.A,
            "q": self.q,
            "Omega": self.Omega,
            "t": self.t,
        }


@dataclass(frozen=True)
class VacuumEstimates:
    F: float
    D: float
    lnRatio: float

    def to_dict(self) -> Dict[str, float]:
        return asdict(self)


# ─── Time series ─────────────────────────────────────────────

def format_value(value: Any) -> str:
    """17 significant digits for floats, plain str otherwise."""
    if isinstance(value, np.generic):
        value = value.item()
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (float, int)):
        return format(float(value), ".17g")
    return str(value)


@dataclass
class TimeSeries:
    """Ordered samples; the universal output record written as CSV."""

    columns: List[str]
    rows: List[Tuple[Any, ...]] = field(default_factory=list)

    def append(self, *values: Any) -> None:
        if len(values) != len(self.columns):
            raise InvalidParameter(
                f"row has {len(values)} values, expected {len(self.columns)}"
            )
        self.rows.append(tuple(values))

    def column(self, name: str) -> List[Any]:
        idx = self.columns.index(name)
        return [row[idx] for row in self.rows]

    def __len__(self) -> int:
        return len(self.rows)

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(self.columns)
        for row in self.rows:
            writer.writerow([format_value(v) for v in row])
        return buf.getvalue()

    def save_csv(self, path: str) -> None:
        with open(path, "w", encoding="utf-8", newline="") as f:
            f.write(self.to_csv())

    @classmethod
    def from_columns(cls, data: Dict[str, Sequence[Any]], order: Optional[List[str]] = None) -> TimeSeries:
        columns = list(order or data.keys())
        series = cls(columns=columns)
        for values in zip(*(data[c] for c in columns)):
            series.rows.append(tuple(values))
        return series
