"""
gravicav oracle — the joint optical/gravitational system and its Hamiltonian.

    H = ω0 a†a + Σ_k Ω_k b_k†b_k − Σ_k q_kΩ_k a†a (b_k + b_k†)

The Rotating frame drops ω0 a†a. Since H commutes with a†a it is block
diagonal in the optical photon number n; with the optical mode slowest
varying, sector n occupies rows [nG, (n+1)G) where G is the product of the
gravitational dimensions.
"""

from __future__ import annotations

import logging
import math
import os
from dataclasses import dataclass, field
from typing import Optional, Sequence, Tuple

import numpy as np

from ..errors import BudgetExceeded, ConfigError, InvalidParameter
from ..models import Frame, OperatorKind
from ..params.config import SystemConfig
from ..qcore.operators import OperatorMatrix, annihilation, embed, identity, number_operator
from ..qcore.states import check_dim

logger = logging.getLogger("gravicav.oracle.system")

DEFAULT_BUDGET = 4096
BUDGET_ENV = "GRAVICAV_BUDGET"
MAX_MODES = 3


def default_budget() -> int:
    """Dimension budget from GRAVICAV_BUDGET, else 4096."""
    raw = os.environ.get(BUDGET_ENV, "")
    if not raw:
        return DEFAULT_BUDGET
    try:
        value = int(raw)
    except ValueError as e:
        raise ConfigError(f"{BUDGET_ENV}={raw!r} is not an integer") from e
    if value < 4:
        raise ConfigError(f"{BUDGET_ENV}={value} is below the smallest joint space (4)")
    return value


def auto_padding(q: float, n: int, dim: int) -> int:
    """Extra Fock levels so that D(−qnγ), |qnγ| <= 2qn, stays clear of the truncation edge."""
    beta = 2.0 * q * n
    return int(math.ceil(beta * beta + 4.0 * beta * math.sqrt(dim) + 16.0))


@dataclass(frozen=True)
class GwMode:
    Omega: float
    q: float
    dim: int

    def __post_init__(self):
        check_dim(self.dim, path="mode.dim")
        if not (math.isfinite(self.Omega) and self.Omega > 0):
            raise InvalidParameter(f"Omega must be positive, got {self.Omega!r}", path="mode.Omega")
        if not 0 <= self.q < 1:
            raise InvalidParameter(f"q must lie in [0, 1), got {self.q!r}", path="mode.q")


@dataclass(frozen=True)
class JointSystem:
    """Truncated optical mode plus 1..3 gravitational modes."""

    optical_dim: int
    modes: Tuple[GwMode, ...]
    frame: Frame = Frame.ROTATING
    omega0: float = 0.0
    budget: int = field(default_factory=default_budget)

    def __post_init__(self):
        check_dim(self.optical_dim, path="optical_dim")
        object.__setattr__(self, "modes", tuple(self.modes))
        object.__setattr__(self, "frame", Frame(self.frame))
        if not 1 <= len(self.modes) <= MAX_MODES:
            raise InvalidParameter(f"need 1..{MAX_MODES} gravitational modes, got {len(self.modes)}", path="modes")
        if self.omega0 < 0:
            raise InvalidParameter(f"omega0 must be >= 0, got {self.omega0!r}", path="omega0")
        if self.total_dim > self.budget:
            raise BudgetExceeded(f"joint dimension {self.total_dim} exceeds budget {self.budget}")

    @property
    def gw_dims(self) -> Tuple[int, ...]:
        return tuple(m.dim for m in self.modes)

    @property
    def dims(self) -> Tuple[int, ...]:
        return (self.optical_dim,) + self.gw_dims

    @property
    def total_dim(self) -> int:
        return int(np.prod(self.dims))

    @property
    def sector_size(self) -> int:
        return int(np.prod(self.gw_dims))

    def padded_gw_dims(self, n: int, padding: Optional[int] = None) -> Tuple[int, ...]:
        """Working gravitational dims for optical sector n."""
        if padding is None:
            dims = tuple(m.dim + auto_padding(m.q, n, m.dim) for m in self.modes)
        else:
            dims = tuple(m.dim + int(padding) for m in self.modes)
        if int(np.prod(dims)) > self.budget:
            raise BudgetExceeded(f"padded sector {dims} for n={n} exceeds budget {self.budget}")
        return dims

    @classmethod
    def from_config(
        cls,
        config: SystemConfig,
        optical_dim: int,
        gw_dims: Sequence[int],
        frame: Frame = Frame.ROTATING,
        budget: Optional[int] = None,
    ) -> JointSystem:
        if len(gw_dims) != len(config.modes):
            raise InvalidParameter(f"{len(gw_dims)} dims given for {len(config.modes)} modes", path="gw_dims")
        modes = tuple(
            GwMode(Omega=m.Omega, q=q, dim=d)
            for m, q, d in zip(config.modes, config.couplings(), gw_dims)
        )
        return cls(
            optical_dim=optical_dim,
            modes=modes,
            frame=frame,
            omega0=config.cavity.omega0,
            budget=budget if budget is not None else default_budget(),
        )


def build_hamiltonian(system: JointSystem) -> OperatorMatrix:
    """Full H on the product space (energies in rad/s)."""
    dims = system.dims
    photons = np.diag(embed(number_operator(system.optical_dim), dims, 0).data).real
    H = np.zeros((system.total_dim, system.total_dim), dtype=complex)
    if system.frame == Frame.LAB:
        H += np.diag(system.omega0 * photons)
    for k, mode in enumerate(system.modes, start=1):
        quanta = embed(number_operator(mode.dim), dims, k).data
        b = embed(annihilation(mode.dim), dims, k).data
        H += mode.Omega * quanta
        H -= mode.q * mode.Omega * photons[:, None] * (b + b.conj().T)
    return OperatorMatrix(H, dims, OperatorKind.HERMITIAN)


def sector_hamiltonian(system: JointSystem, n: int, gw_dims: Optional[Sequence[int]] = None) -> OperatorMatrix:
    """Block of H with a†a = n, over gravitational dims ``gw_dims`` (default: the system's)."""
    gw_dims = tuple(gw_dims) if gw_dims is not None else system.gw_dims
    H = np.zeros((int(np.prod(gw_dims)),) * 2, dtype=complex)
    if system.frame == Frame.LAB:
        H += system.omega0 * n * identity(gw_dims).data
    for k, (mode, d) in enumerate(zip(system.modes, gw_dims)):
        b = annihilation(d).data
        local = mode.Omega * number_operator(d).data - mode.q * mode.Omega * n * (b + b.conj().T)
        H += embed(OperatorMatrix(local, (d,)), gw_dims, k).data
    return OperatorMatrix(H, gw_dims, OperatorKind.HERMITIAN)
