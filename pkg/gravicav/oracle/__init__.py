"""
gravicav oracle — brute-force ground truth on truncated Fock spaces.
"""

from .bch import BCH_TOLERANCE, BchReport, bch_identity_checks
from .propagator import (
    EvolutionResult,
    heisenberg_expectations,
    nonnegative_variance,
    prepare_gw_state,
    propagate,
    sector_unitaries,
)
from .system import (
    BUDGET_ENV,
    DEFAULT_BUDGET,
    GwMode,
    JointSystem,
    auto_padding,
    build_hamiltonian,
    default_budget,
    sector_hamiltonian,
)
from .unitary import (
    BlockUnitary,
    UnitaryComparison,
    closed_form_unitary,
    compare_unitaries,
    expm_unitary,
)

__all__ = [
    "BCH_TOLERANCE",
    "BchReport",
    "bch_identity_checks",
    "EvolutionResult",
    "heisenberg_expectations",
    "nonnegative_variance",
    "prepare_gw_state",
    "propagate",
    "sector_unitaries",
    "BUDGET_ENV",
    "DEFAULT_BUDGET",
    "GwMode",
    "JointSystem",
    "auto_padding",
    "build_hamiltonian",
    "default_budget",
    "sector_hamiltonian",
    "BlockUnitary",
    "UnitaryComparison",
    "closed_form_unitary",
    "compare_unitaries",
    "expm_unitary",
]
