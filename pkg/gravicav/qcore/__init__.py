"""
gravicav qcore — truncated Fock-space linear algebra.
"""

from .operators import (
    OperatorMatrix,
    annihilation,
    creation,
    displacement_operator,
    embed,
    expectation,
    identity,
    matrix_exp,
    number_operator,
    partial_expectation,
    quadrature,
    squeeze_operator,
)
from .states import (
    GUARD_LEVELS,
    StateVector,
    check_dim,
    coherent_state,
    coherent_tail,
    fock_state,
    guarded_mask,
    squeezed_tail,
    squeezed_vacuum,
    tensor_all,
)

__all__ = [
    "OperatorMatrix",
    "StateVector",
    "GUARD_LEVELS",
    "annihilation",
    "creation",
    "number_operator",
    "quadrature",
    "identity",
    "displacement_operator",
    "squeeze_operator",
    "matrix_exp",
    "embed",
    "expectation",
    "partial_expectation",
    "check_dim",
    "coherent_state",
    "coherent_tail",
    "fock_state",
    "guarded_mask",
    "squeezed_tail",
    "squeezed_vacuum",
    "tensor_all",
]
