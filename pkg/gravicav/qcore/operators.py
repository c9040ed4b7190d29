"""
gravicav qcore — dense operators on truncated Fock spaces.

Basis ordering for product spaces: slot 0 (the optical mode) is the
slowest-varying index, gravitational modes follow in listed order. This is
the ordering ``np.kron`` produces when factors are multiplied left to right.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import reduce
from typing import Sequence, Tuple, Union

import numpy as np
from scipy.linalg import expm

from ..errors import DimensionMismatch, ExpmFailure, TailOverflow
from ..models import DEFAULT_TOLERANCES, OperatorKind, Tolerances
from .states import GUARD_LEVELS, StateVector, check_dim, guarded_mask

logger = logging.getLogger("gravicav.qcore.operators")

Scalar = Union[int, float, complex]


@dataclass(frozen=True, eq=False)
class OperatorMatrix:
    """
    Square complex matrix over a (product) truncated Fock basis.

    ``kind`` is a label set by the constructor that knows the structure
    (number operators are hermitian, exponentials of anti-hermitian
    generators are unitary). Arithmetic drops the label to GENERAL.
    """

    data: np.ndarray
    dims: Tuple[int, ...]
    kind: OperatorKind = OperatorKind.GENERAL

    def __post_init__(self):
        n = int(np.prod(self.dims))
        if self.data.shape != (n, n):
            raise DimensionMismatch(f"matrix shape {self.data.shape} does not match dims {self.dims}")

    @property
    def dim(self) -> int:
        return int(np.prod(self.dims))

    # ─── Algebra ─────────────────────────────────────────────

    def _check_same_space(self, other: OperatorMatrix) -> None:
        if self.dims != other.dims:
            raise DimensionMismatch(f"operator spaces differ: {self.dims} vs {other.dims}")

    def dag(self) -> OperatorMatrix:
        return OperatorMatrix(self.data.conj().T, self.dims, self.kind)

    def __matmul__(self, other: OperatorMatrix) -> OperatorMatrix:
        self._check_same_space(other)
        kind = OperatorKind.UNITARY if self.kind == other.kind == OperatorKind.UNITARY else OperatorKind.GENERAL
        return OperatorMatrix(self.data @ other.data, self.dims, kind)

    def __add__(self, other: OperatorMatrix) -> OperatorMatrix:
        self._check_same_space(other)
        kind = OperatorKind.HERMITIAN if self.kind == other.kind == OperatorKind.HERMITIAN else OperatorKind.GENERAL
        return OperatorMatrix(self.data + other.data, self.dims, kind)

    def __sub__(self, other: OperatorMatrix) -> OperatorMatrix:
        self._check_same_space(other)
        kind = OperatorKind.HERMITIAN if self.kind == other.kind == OperatorKind.HERMITIAN else OperatorKind.GENERAL
        return OperatorMatrix(self.data - other.data, self.dims, kind)

    def __mul__(self, scalar: Scalar) -> OperatorMatrix:
        kind = OperatorKind.HERMITIAN if (self.kind == OperatorKind.HERMITIAN and complex(scalar).imag == 0) else OperatorKind.GENERAL
        return OperatorMatrix(self.data * scalar, self.dims, kind)

    __rmul__ = __mul__

    def __neg__(self) -> OperatorMatrix:
        return self * -1

    def commutator(self, other: OperatorMatrix) -> OperatorMatrix:
        self._check_same_space(other)
        return OperatorMatrix(self.data @ other.data - other.data @ self.data, self.dims)

    def apply(self, state: StateVector) -> StateVector:
        if state.dims != self.dims:
            raise DimensionMismatch(f"state dims {state.dims} do not match operator dims {self.dims}")
        return StateVector(self.data @ state.amplitudes, self.dims, state.discarded_mass)

    # ─── Residuals ───────────────────────────────────────────

    def restrict(self, levels: int = GUARD_LEVELS) -> np.ndarray:
        """Rows and columns of the guarded subspace."""
        mask = guarded_mask(self.dims, levels)
        return self.data[np.ix_(mask, mask)]

    def hermiticity_residual(self) -> float:
        return float(np.max(np.abs(self.data - self.data.conj().T)))

    def unitarity_residual(self, guard_levels: int = GUARD_LEVELS) -> float:
        """max |U†U − I| on the guarded subspace (0 levels = whole space)."""
        gram = self.data.conj().T @ self.data - np.eye(self.dim)
        if guard_levels:
            mask = guarded_mask(self.dims, guard_levels)
            gram = gram[np.ix_(mask, mask)]
        return float(np.max(np.abs(gram)))

    def max_deviation(self, other: OperatorMatrix, guard_levels: int = GUARD_LEVELS) -> float:
        self._check_same_space(other)
        diff = self.data - other.data
        if guard_levels:
            mask = guarded_mask(self.dims, guard_levels)
            diff = diff[np.ix_(mask, mask)]
        return float(np.max(np.abs(diff))) if diff.size else 0.0


# ─── Builders ────────────────────────────────────────────────

def identity(dims: Union[int, Sequence[int]]) -> OperatorMatrix:
    dims = (dims,) if isinstance(dims, int) else tuple(dims)
    return OperatorMatrix(np.eye(int(np.prod(dims)), dtype=complex), dims, OperatorKind.UNITARY)


def annihilation(dim: int) -> OperatorMatrix:
    dim = check_dim(dim)
    return OperatorMatrix(np.diag(np.sqrt(np.arange(1, dim)), k=1).astype(complex), (dim,))


def creation(dim: int) -> OperatorMatrix:
    return annihilation(dim).dag()


def number_operator(dim: int) -> OperatorMatrix:
    dim = check_dim(dim)
    return OperatorMatrix(np.diag(np.arange(dim)).astype(complex), (dim,), OperatorKind.HERMITIAN)


def quadrature(dim: int) -> OperatorMatrix:
    """a + a†"""
    a = annihilation(dim)
    return OperatorMatrix(a.data + a.data.conj().T, (dim,), OperatorKind.HERMITIAN)


def matrix_exp(M: OperatorMatrix, tol: Tolerances = DEFAULT_TOLERANCES) -> OperatorMatrix:
    """
    exp(M) by scaling-and-squaring Padé (``scipy.linalg.expm``).

    exp(0) is the identity exactly. The exponential of an anti-hermitian
    matrix is labeled UNITARY and checked at ``tol.unitarity``.
    """
    if not np.all(np.isfinite(M.data)):
        raise ExpmFailure("matrix exponential of non-finite entries")
    if not np.any(M.data):
        return identity(M.dims)
    result = expm(M.data)
    if not np.all(np.isfinite(result)):
        raise ExpmFailure(f"matrix exponential overflowed (max |M| = {np.max(np.abs(M.data)):.3g})")
    scale = max(1.0, float(np.max(np.abs(M.data))))
    anti_hermitian = np.max(np.abs(M.data + M.data.conj().T)) <= 1e-14 * scale
    if not anti_hermitian:
        return OperatorMatrix(result, M.dims)
    out = OperatorMatrix(result, M.dims, OperatorKind.UNITARY)
    residual = out.unitarity_residual(guard_levels=0)
    logger.debug("expm of anti-hermitian %s generator: unitarity residual %.3g", M.dims, residual)
    if residual > tol.unitarity:
        raise ExpmFailure(f"exponential of anti-hermitian matrix not unitary (residual {residual:.3g})")
    return out


def displacement_operator(beta: complex, dim: int, tol: Tolerances = DEFAULT_TOLERANCES) -> OperatorMatrix:
    """D(β) = exp(β a† − β* a)"""
    dim = check_dim(dim)
    beta = complex(beta)
    if abs(beta) ** 2 > dim / 4:
        raise TailOverflow(f"|β|²={abs(beta) ** 2:.4g} exceeds dim/4 for dim={dim}")
    a = annihilation(dim).data
    gen = beta * a.conj().T - beta.conjugate() * a
    return matrix_exp(OperatorMatrix(gen, (dim,)), tol)


def squeeze_operator(r: float, theta: float, dim: int, tol: Tolerances = DEFAULT_TOLERANCES) -> OperatorMatrix:
    """S(ξ) = exp(½(ξ* a² − ξ a†²)), ξ = r e^{iθ}."""
    dim = check_dim(dim)
    if np.sinh(r) ** 2 > dim / 6:
        raise TailOverflow(f"sinh²r={np.sinh(r) ** 2:.4g} exceeds dim/6 for dim={dim}")
    xi = r * np.exp(1j * theta)
    a = annihilation(dim).data
    a2 = a @ a
    gen = 0.5 * (np.conj(xi) * a2 - xi * a2.conj().T)
    return matrix_exp(OperatorMatrix(gen, (dim,)), tol)


def embed(op: OperatorMatrix, space: Sequence[int], slot: int) -> OperatorMatrix:
    """I ⊗ … ⊗ op ⊗ … ⊗ I with ``op`` at ``slot`` (slot 0 slowest-varying)."""
    space = tuple(int(d) for d in space)
    if not 0 <= slot < len(space):
        raise DimensionMismatch(f"slot {slot} outside space of {len(space)} modes")
    if op.dims != (space[slot],):
        raise DimensionMismatch(f"operator dims {op.dims} do not fit slot {slot} of {space}")
    factors = [np.eye(d, dtype=complex) for d in space]
    factors[slot] = op.data
    data = reduce(np.kron, factors)
    return OperatorMatrix(data, space, op.kind)


def expectation(state: StateVector, op: OperatorMatrix) -> complex:
    """⟨ψ|M|ψ⟩"""
    if state.amplitudes.shape[0] != op.dim:
        raise DimensionMismatch(f"state size {state.amplitudes.shape[0]} does not match operator size {op.dim}")
    return complex(np.vdot(state.amplitudes, op.data @ state.amplitudes))


def partial_expectation(state: StateVector, op: OperatorMatrix, slot: int) -> complex:
    """⟨ψ|embed(op, dims, slot)|ψ⟩ without forming the embedded matrix."""
    if op.dims != (state.dims[slot],):
        raise DimensionMismatch(f"operator dims {op.dims} do not fit slot {slot} of {state.dims}")
    psi = state.amplitudes.reshape(state.dims)
    applied = np.moveaxis(np.tensordot(op.data, psi, axes=([1], [slot])), 0, slot)
    return complex(np.vdot(psi.ravel(), applied.ravel()))

