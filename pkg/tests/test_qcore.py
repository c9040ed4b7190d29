"""
Test suite for the truncated Fock-space core: operators, states, exponentials.
"""

import math

import numpy as np
import pytest

from gravicav.errors import DimensionMismatch, ExpmFailure, InvalidDimension, TailOverflow
from gravicav.models import OperatorKind, Tolerances
from gravicav.qcore import (
    OperatorMatrix,
    annihilation,
    check_dim,
    coherent_state,
    coherent_tail,
    creation,
    displacement_operator,
    embed,
    expectation,
    fock_state,
    guarded_mask,
    identity,
    matrix_exp,
    number_operator,
    partial_expectation,
    quadrature,
    squeeze_operator,
    squeezed_tail,
    squeezed_vacuum,
)


class TestLadderOperators:

    def test_annihilation_entries(self):
        a = annihilation(4).data
        expected = np.zeros((4, 4))
        expected[0, 1], expected[1, 2], expected[2, 3] = 1.0, math.sqrt(2), math.sqrt(3)
        assert np.allclose(a, expected)

    def test_creation_is_adjoint(self):
        assert np.array_equal(creation(5).data, annihilation(5).data.conj().T)

    def test_truncated_commutator(self):
        a = annihilation(4)
        comm = a.commutator(creation(4)).data
        assert np.allclose(comm, np.diag([1, 1, 1, -3]))

    def test_number_operator_is_hermitian(self):
        n = number_operator(6)
        assert n.kind == OperatorKind.HERMITIAN
        assert np.allclose(np.diag(n.data).real, np.arange(6))

    def test_quadrature_hermitian(self):
        assert quadrature(7).hermiticity_residual() == 0.0

    @pytest.mark.parametrize("bad", [1, 0, -3, 2.5])
    def test_invalid_dimension(self, bad):
        with pytest.raises(InvalidDimension):
            check_dim(bad)

    def test_valid_dimension(self):
        assert check_dim(3) == 3


class TestOperatorMatrix:

    def test_shape_mismatch(self):
        with pytest.raises(DimensionMismatch):
            OperatorMatrix(np.zeros((3, 3), dtype=complex), (2, 2))

    def test_kind_propagation(self):
        n = number_operator(3)
        assert (n + n).kind == OperatorKind.HERMITIAN
        assert (n * 2.0).kind == OperatorKind.HERMITIAN
        assert (n * 1j).kind == OperatorKind.GENERAL
        assert (identity(3) @ identity(3)).kind == OperatorKind.UNITARY

    def test_space_mismatch(self):
        with pytest.raises(DimensionMismatch):
            number_operator(3) + number_operator(4)

    def test_apply_dimension_mismatch(self):
        with pytest.raises(DimensionMismatch):
            number_operator(3).apply(fock_state(0, 4))

    def test_restrict_drops_guard_levels(self):
        assert number_operator(6).restrict().shape == (4, 4)


class TestMatrixExp:

    def test_zero_generator_is_identity(self):
        U = matrix_exp(OperatorMatrix(np.zeros((3, 3), dtype=complex), (3,)))
        assert U.kind == OperatorKind.UNITARY
        assert np.array_equal(U.data, np.eye(3))

    def test_diagonal_phase(self):
        M = OperatorMatrix(np.diag(1j * np.arange(4)).astype(complex), (4,))
        U = matrix_exp(M)
        assert U.kind == OperatorKind.UNITARY
        assert np.allclose(np.diag(U.data), np.exp(1j * np.arange(4)), atol=1e-13)

    def test_non_anti_hermitian_is_general(self):
        U = matrix_exp(OperatorMatrix(np.diag([1.0, 2.0]).astype(complex), (2,)))
        assert U.kind == OperatorKind.GENERAL
        assert np.allclose(np.diag(U.data), [math.e, math.e ** 2])

    def test_non_finite_entries(self):
        M = np.zeros((2, 2), dtype=complex)
        M[0, 1] = np.nan
        with pytest.raises(ExpmFailure):
            matrix_exp(OperatorMatrix(M, (2,)))


class TestDisplacement:

    def test_vacuum_overlap(self):
        D = displacement_operator(0.5, 30)
        assert abs(D.data[0, 0] - 0.882497) < 1e-6

    def test_matches_coherent_state(self):
        displaced = displacement_operator(0.5, 30).apply(fock_state(0, 30))
        coherent = coherent_state(0.5, 30)
        assert np.allclose(displaced.amplitudes[:20], coherent.amplitudes[:20], atol=1e-10)

    def test_inverse(self):
        D = displacement_operator(0.4 + 0.3j, 20)
        product = D @ displacement_operator(-0.4 - 0.3j, 20)
        assert product.max_deviation(identity(20)) < 1e-12

    def test_unitary(self):
        assert displacement_operator(1.0, 20).unitarity_residual() < 1e-12

    def test_guard(self):
        with pytest.raises(TailOverflow):
            displacement_operator(3.0, 30)


class TestSqueezing:

    def test_operator_matches_closed_form_state(self):
        from_operator = squeeze_operator(1.0, 0.3, 120).apply(fock_state(0, 120))
        closed = squeezed_vacuum(1.0, 0.3, 120)
        assert np.allclose(from_operator.amplitudes[:60], closed.amplitudes[:60], atol=1e-8)

    def test_squeezed_quadrature_variance(self):
        psi = squeezed_vacuum(0.5, 0.0, 60)
        X = quadrature(60)
        mean = expectation(psi, X).real
        second = expectation(psi, X @ X).real
        assert abs(second - mean ** 2 - math.exp(-1.0)) < 1e-8

    def test_odd_levels_empty(self):
        psi = squeezed_vacuum(0.8, 1.1, 40)
        assert np.all(psi.amplitudes[1::2] == 0)

    def test_zero_squeezing_is_vacuum(self):
        assert np.array_equal(squeezed_vacuum(0.0, 0.0, 5).amplitudes, fock_state(0, 5).amplitudes)

    def test_state_tail_guard(self):
        assert squeezed_tail(1.0, 32) > 1e-8
        with pytest.raises(TailOverflow):
            squeezed_vacuum(1.0, 0.0, 32)

    def test_state_tail_fits_at_80(self):
        assert squeezed_tail(1.0, 80) < 1e-8
        assert abs(squeezed_vacuum(1.0, 0.0, 80).norm() - 1.0) < 1e-12

    def test_relaxed_tail_admits_dim_32(self):
        # 32 levels hold all but ~6e-5 of the r = 1 photon distribution
        psi = squeezed_vacuum(1.0, 0.0, 32, Tolerances(tail=1e-3))
        mean_n = expectation(psi, number_operator(32)).real
        assert mean_n == pytest.approx(math.sinh(1.0) ** 2, abs=0.01)

    def test_operator_guard(self):
        with pytest.raises(TailOverflow):
            squeeze_operator(2.0, 0.0, 20)


class TestStates:

    def test_coherent_mean(self):
        alpha = 0.7 + 0.2j
        psi = coherent_state(alpha, 30)
        assert abs(expectation(psi, annihilation(30)) - alpha) < 1e-12
        assert abs(psi.norm() - 1.0) < 1e-12

    def test_coherent_zero_is_vacuum(self):
        assert np.array_equal(coherent_state(0, 5).amplitudes, fock_state(0, 5).amplitudes)

    def test_coherent_tail_guard(self):
        assert coherent_tail(5.0, 20) > 1e-8
        with pytest.raises(TailOverflow) as exc:
            coherent_state(5.0, 20)
        assert exc.value.tail_mass > 1e-8

    def test_fock_out_of_range(self):
        with pytest.raises(InvalidDimension):
            fock_state(5, 5)

    def test_tail_mass(self):
        assert fock_state(4, 5).tail_mass() == 1.0
        assert fock_state(0, 5).tail_mass() == 0.0

    def test_guarded_mask(self):
        mask = guarded_mask((3, 4), 2)
        assert mask.shape == (12,)
        assert mask.sum() == 2
        assert mask[0] and mask[1] and not mask[2]
        assert guarded_mask((3, 4), 0).all()

    def test_tensor(self):
        psi = coherent_state(0.3, 6).tensor(fock_state(1, 4))
        assert psi.dims == (6, 4)
        assert abs(psi.norm() - 1.0) < 1e-12


class TestEmbedding:

    def test_embed_matches_kron(self):
        op = embed(number_operator(3), (2, 3), 1)
        assert np.array_equal(op.data, np.kron(np.eye(2), np.diag([0, 1, 2])))
        assert op.kind == OperatorKind.HERMITIAN

    def test_embed_bad_slot(self):
        with pytest.raises(DimensionMismatch):
            embed(number_operator(3), (2, 3), 2)

    def test_embed_bad_dims(self):
        with pytest.raises(DimensionMismatch):
            embed(number_operator(3), (2, 4), 1)

    def test_partial_expectation(self):
        psi = coherent_state(0.4, 8).tensor(coherent_state(0.3j, 6))
        value = partial_expectation(psi, annihilation(6), 1)
        assert abs(value - 0.3j) < 1e-10
        full = expectation(psi, embed(annihilation(6), (8, 6), 1))
        assert abs(value - full) < 1e-14

    def test_partial_expectation_slot_zero(self):
        psi = coherent_state(0.4, 8).tensor(coherent_state(0.3j, 6))
        assert abs(partial_expectation(psi, number_operator(8), 0) - 0.16) < 1e-10

    @pytest.mark.parametrize("make_a, make_b", [
        (annihilation, annihilation),
        (annihilation, creation),
        (number_operator, quadrature),
    ])
    def test_different_slots_commute(self, make_a, make_b):
        space = (4, 5)
        left = embed(make_a(4), space, 0)
        right = embed(make_b(5), space, 1)
        assert not np.any(left.commutator(right).data)


class TestExpectation:

    STATES = [
        coherent_state(0.6 - 0.3j, 40),
        squeezed_vacuum(0.4, 0.7, 40),
        fock_state(3, 40),
    ]

    @pytest.mark.parametrize("psi", STATES)
    def test_conjugate_symmetry(self, psi):
        a = annihilation(40)
        assert expectation(psi, a.dag()) == pytest.approx(expectation(psi, a).conjugate(), abs=1e-12)

    @pytest.mark.parametrize("psi", STATES)
    def test_linearity(self, psi):
        a, n = annihilation(40), number_operator(40)
        x, y = 0.3 - 1.2j, 2.5
        combined = expectation(psi, a * x + n * y)
        assert combined == pytest.approx(x * expectation(psi, a) + y * expectation(psi, n), abs=1e-12)

    @pytest.mark.parametrize("psi, expected", [
        (coherent_state(1.0, 24), 2.0),
        (squeezed_vacuum(0.5, 0.0, 60), 0.0),
        (squeezed_vacuum(0.8, 1.3, 60), 0.0),
    ])
    def test_quadrature_mean(self, psi, expected):
        assert expectation(psi, quadrature(psi.dim)) == pytest.approx(expected, abs=1e-10)
