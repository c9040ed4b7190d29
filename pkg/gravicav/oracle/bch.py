"""
gravicav oracle — numerical check of the conjugation identities behind the
factorized evolution operator.

With V = exp(q a†a (b − b†)) = D_b(−q a†a):

    V b V†     = b + q a†a
    V b†b V†   = b†b + q a†a (b + b†) + q² (a†a)²
    V a†a V†   = a†a
    V H V†     = Ω b†b − Ω q² (a†a)²,   H = Ω b†b − qΩ a†a (b + b†)
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, Tuple

import numpy as np

from ..errors import BudgetExceeded
from ..models import DEFAULT_TOLERANCES, Tolerances
from ..qcore.operators import OperatorMatrix, annihilation, embed, matrix_exp, number_operator
from ..qcore.states import GUARD_LEVELS, check_dim
from .system import auto_padding, default_budget

logger = logging.getLogger("gravicav.oracle.bch")

BCH_TOLERANCE = 1e-7
IDENTITIES = ("b", "number_b", "number_a", "hamiltonian")


@dataclass(frozen=True)
class BchReport:
    q: float
    dims: Tuple[int, int]
    guard: bool
    residuals: Dict[str, float] = field(default_factory=dict)

    @property
    def max_residual(self) -> float:
        return max(self.residuals.values()) if self.residuals else 0.0

    def passed(self, threshold: float = BCH_TOLERANCE) -> bool:
        return self.max_residual <= threshold

    def to_dict(self) -> Dict[str, Any]:
        return {"q": self.q, "dims": list(self.dims), "guard": self.guard, "residuals": dict(self.residuals)}


def bch_identity_checks(
    q: float,
    dims: Tuple[int, int] = (10, 14),
    guard: bool = True,
    Omega: float = 1.0,
    tol: Tolerances = DEFAULT_TOLERANCES,
    budget: int = 0,
) -> BchReport:
    """
    Max-entry residual of each identity.

    ``guard=True`` pads the gravitational mode and evaluates residuals on
    the requested space below its top two levels; ``guard=False`` uses the
    bare truncation and the whole space, where truncation spoils the top
    levels.
    """
    d_a = check_dim(dims[0], path="dims[0]")
    d_b = check_dim(dims[1], path="dims[1]")
    budget = budget or default_budget()
    if d_a * d_b > budget:
        raise BudgetExceeded(f"BCH space {d_a}x{d_b} exceeds budget {budget}")

    work_b = d_b + auto_padding(q, d_a - 1, d_b) if guard else d_b
    if d_a * work_b > budget:
        raise BudgetExceeded(f"padded BCH space {d_a}x{work_b} exceeds budget {budget}")
    space = (d_a, work_b)
    n_a = embed(number_operator(d_a), space, 0)
    b = embed(annihilation(work_b), space, 1)
    bd = b.dag()
    n_b = embed(number_operator(work_b), space, 1)

    V = matrix_exp((n_a @ (b - bd)) * q, tol)
    Vd = V.dag()

    def conj(op: OperatorMatrix) -> OperatorMatrix:
        return V @ op @ Vd

    n_a2 = n_a @ n_a
    H = n_b * Omega - (n_a @ (b + bd)) * (q * Omega)
    checks = {
        "b": conj(b) - (b + n_a * q),
        "number_b": conj(n_b) - (n_b + (n_a @ (b + bd)) * q + n_a2 * (q * q)),
        "number_a": conj(n_a) - n_a,
        "hamiltonian": conj(H) - (n_b * Omega - n_a2 * (Omega * q * q)),
    }

    if guard:
        ranges = np.meshgrid(np.arange(d_a - GUARD_LEVELS), np.arange(d_b - GUARD_LEVELS), indexing="ij")
        idx = np.ravel_multi_index(tuple(r.ravel() for r in ranges), space)
    else:
        idx = np.arange(d_a * work_b)

    residuals = {name: float(np.max(np.abs(m.data[np.ix_(idx, idx)]))) for name, m in checks.items()}
    logger.debug("BCH q=%.3g dims=%s guard=%s: %s", q, dims, guard, residuals)
    return BchReport(q=q, dims=(d_a, d_b), guard=guard, residuals=residuals)
