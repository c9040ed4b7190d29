"""
gravicav params — cavity and gravitational-mode configuration records.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from ..errors import InvalidParameter
from ..models import GwModeState, Tolerances, Vacuum
from .constants import PhysicalConstants
from .conversions import coupling_q


@dataclass(frozen=True)
class CavityConfig:
    omega0: float
    ell0: float = 1.0
    alpha: float = 1.0

    def validate(self, constants: PhysicalConstants) -> None:
        for name in ("omega0", "ell0", "alpha"):
            value = getattr(self, name)
            if not (math.isfinite(value) and value > 0):
                raise InvalidParameter(f"cavity.{name} must be positive, got {value!r}", path=f"cavity.{name}")
        if self.omega0 >= constants.Epl:
            raise InvalidParameter("cavity.omega0 must be below the Planck frequency", path="cavity.omega0")

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> CavityConfig:
        return cls(
            omega0=float(data["omega0"]),
            ell0=float(data.get("ell0", 1.0)),
            alpha=float(data.get("alpha", 1.0)),
        )


@dataclass(frozen=True)
class GwModeConfig:
    """One gravitational mode; give exactly one of ``V`` or ``q``."""

    Omega: float
    V: Optional[float] = None
    q: Optional[float] = None
    state: GwModeState = field(default_factory=Vacuum)

    def validate(self) -> None:
        if not (math.isfinite(self.Omega) and self.Omega > 0):
            raise InvalidParameter(f"Omega must be positive, got {self.Omega!r}", path="mode.Omega")
        if (self.V is None) == (self.q is None):
            raise InvalidParameter("exactly one of V or q must be given", path="mode")
        if self.V is not None and not self.V > 0:
            raise InvalidParameter(f"V must be positive, got {self.V!r}", path="mode.V")
        if self.q is not None and not 0 <= self.q < 1:
            raise InvalidParameter(f"q must lie in [0, 1), got {self.q!r}", path="mode.q")

    def coupling(self, omega0: float, constants: Optional[PhysicalConstants] = None) -> float:
        self.validate()
        if self.q is not None:
            return float(self.q)
        q = coupling_q(omega0, self.Omega, self.V, constants)
        if not q < 1:
            raise InvalidParameter(f"derived coupling q={q:.3g} is not below 1", path="mode.V")
        return q

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> GwModeConfig:
        return cls(
            Omega=float(data["Omega"]),
            V=float(data["V"]) if data.get("V") is not None else None,
            q=float(data["q"]) if data.get("q") is not None else None,
            state=GwModeState.from_dict(data.get("state", {"kind": "vacuum"})),
        )


def coupling_from_config(cavity: CavityConfig, mode: GwModeConfig, constants: Optional[PhysicalConstants] = None) -> float:
    return mode.coupling(cavity.omega0, constants)


@dataclass(frozen=True)
class SystemConfig:
    """Cavity, gravitational modes, constants and numerical tolerances."""

    cavity: CavityConfig
    modes: List[GwModeConfig]
    constants: PhysicalConstants = field(default_factory=PhysicalConstants.default)
    tolerances: Tolerances = field(default_factory=Tolerances)

    def __post_init__(self):
        if not self.modes:
            raise InvalidParameter("at least one gravitational mode is required", path="modes")
        self.cavity.validate(self.constants)
        for mode in self.modes:
            mode.validate()

    def couplings(self) -> List[float]:
        return [coupling_from_config(self.cavity, m, self.constants) for m in self.modes]

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> SystemConfig:
        constants = PhysicalConstants.from_dict(data.get("constants", {}))
        return cls(
            cavity=CavityConfig.from_dict(data["cavity"]),
            modes=[GwModeConfig.from_dict(m) for m in data.get("modes", [])],
            constants=constants,
            tolerances=Tolerances.from_dict(data.get("tolerances", {})),
        )
