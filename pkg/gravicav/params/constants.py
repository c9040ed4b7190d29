"""
gravicav params — physical constants.

Defaults are the CODATA values shipped with ``scipy.constants``. A JSON
table can override any of them; the Planck frequency is always derived so
it cannot drift from G, ħ and c.
"""

from __future__ import annotations

import json
import logging
import math
from dataclasses import asdict, dataclass, fields
from typing import Any, Dict

from scipy import constants as codata

from ..errors import ConfigError, InvalidParameter

logger = logging.getLogger("gravicav.params.constants")

DEFAULT_LN_CUTOFF_RATIO = 62.0


@dataclass(frozen=True)
class PhysicalConstants:
    """SI constants plus the logarithm of the UV/IR cutoff ratio."""

    G: float = codata.G
    hbar: float = codata.hbar
    kB: float = codata.k
    c: float = codata.c
    ln_cutoff_ratio: float = DEFAULT_LN_CUTOFF_RATIO

    def __post_init__(self):
        for f in fields(self):
            value = getattr(self, f.name)
            if not (math.isfinite(value) and value > 0):
                raise InvalidParameter(f"constant '{f.name}' must be positive, got {value!r}", path=f"constants.{f.name}")

    @property
    def Epl(self) -> float:
        """Planck angular frequency √(c⁵/(ħG)) in rad/s."""
        return math.sqrt(self.c ** 5 / (self.hbar * self.G))

    @classmethod
    def default(cls) -> PhysicalConstants:
        return cls()

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> PhysicalConstants:
        if "constants" in data and isinstance(data["constants"], dict):
            data = data["constants"]
        aliases = {"lnCutoffRatio": "ln_cutoff_ratio", "ħ": "hbar", "k_B": "kB"}
        known_fields = {f.name for f in fields(cls)}
        filtered = {}
        for key, value in data.items():
            key = aliases.get(key, key)
            if key in known_fields:
                filtered[key] = float(value)
            else:
                logger.debug("ignoring unknown constant '%s'", key)
        return cls(**filtered)

    @classmethod
    def from_file(cls, path: str) -> PhysicalConstants:
        with open(path, "r", encoding="utf-8") as f:
            try:
                data = json.load(f)
            except json.JSONDecodeError as e:
                raise ConfigError(f"{path}:{e.lineno}:{e.colno}: {e.msg}") from e
        return cls.from_dict(data)

    def to_dict(self) -> Dict[str, float]:
        d = asdict(self)
        d["Epl"] = self.Epl
        return d
