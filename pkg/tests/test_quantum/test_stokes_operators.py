import numpy as np
import pytest

from stokes3d.algebra.su3 import STRUCTURE_CONSTANTS, gell_mann
from stokes3d.exceptions import ArgumentError
from stokes3d.fock.operators import apply, expectation, lowering, number_operator, raising
from stokes3d.quantum.stokes_operators import (
    StokesOperatorSet,
    angular_momentum_ops,
    check_angular_momentum,
    check_conservation,
    check_fock_su3_closure,
    check_jordan_schwinger_homomorphism,
    check_stokes_hermiticity,
    check_two_mode_sector,
    hamiltonian_3d,
    jordan_schwinger,
    stokes_operators,
    stokes_operators_2d,
)


def test_nine_operators(small_basis):
    sigma = stokes_operators(small_basis)
    assert len(sigma) == 9
    assert len(list(sigma)) == 9


def test_operator_set_is_cached(small_basis):
    assert stokes_operators(small_basis) is stokes_operators(small_basis)


def test_operator_set_needs_nine(small_basis):
    with pytest.raises(ArgumentError):
        StokesOperatorSet(small_basis, tuple(stokes_operators(small_basis))[:8])


def test_sigma0_is_total_number(small_basis):
    total = number_operator(1, small_basis) + number_operator(2, small_basis)
    total = total + number_operator(3, small_basis)
    assert (stokes_operators(small_basis)[0] - total).nnz == 0


def test_sigma2_moves_a_quantum_with_phase(small_basis):
    # Sigma_2 = -i a1^dag a2 + i a2^dag a1
    result = apply(stokes_operators(small_basis)[2], small_basis.number_state(1, 0, 0))
    assert result.coefficient(0, 1, 0) == pytest.approx(1j)
    assert result.norm_squared() == pytest.approx(1.0)


def test_sigma8_on_third_mode(small_basis):
    state = small_basis.number_state(0, 0, 2)
    value = expectation(stokes_operators(small_basis)[8], state)
    assert value == pytest.approx(-4.0 / np.sqrt(3.0))


def test_jordan_schwinger_rejects_wrong_shape(small_basis):
    with pytest.raises(ArgumentError):
        jordan_schwinger(np.eye(2), small_basis)


def _hopping(j, k, basis):
    return raising(j, basis) @ lowering(k, basis)


def _explicit_sigma(i, basis):
    """Sigma_i written out in ladder operators."""
    pairs = {1: (1, 2), 2: (1, 2), 4: (1, 3), 5: (1, 3), 6: (2, 3), 7: (2, 3)}
    n1, n2, n3 = (number_operator(mode, basis) for mode in (1, 2, 3))
    if i == 0:
        return n1 + n2 + n3
    if i == 3:
        return n1 - n2
    if i == 8:
        return (n1 + n2 - n3 * 2.0) * (1.0 / np.sqrt(3.0))
    j, k = pairs[i]
    if i in (1, 4, 6):
        return _hopping(j, k, basis) + _hopping(k, j, basis)
    return _hopping(j, k, basis) * -1j + _hopping(k, j, basis) * 1j


@pytest.mark.parametrize("i", range(9))
def test_stokes_operator_matches_ladder_products(small_basis, i):
    difference = stokes_operators(small_basis)[i] - _explicit_sigma(i, small_basis)
    assert difference.max_abs_entry() <= 1e-14


def test_jordan_schwinger_of_zero_matrix(small_basis):
    assert jordan_schwinger(np.zeros((3, 3)), small_basis).nnz == 0


def test_jordan_schwinger_is_linear(small_basis):
    M = 2.0 * gell_mann(1) - 0.5j * gell_mann(7)
    expected = _explicit_sigma(1, small_basis) * 2.0 - _explicit_sigma(7, small_basis) * 0.5j
    assert (jordan_schwinger(M, small_basis) - expected).max_abs_entry() <= 1e-14


def test_l3_annihilates_vacuum(small_basis):
    L3 = angular_momentum_ops(small_basis)[2]
    assert apply(L3, small_basis.number_state(0, 0, 0)).norm() <= 1e-15


def test_two_mode_operators_embed_in_three_modes(small_basis):
    S = stokes_operators_2d(small_basis)
    sigma = stokes_operators(small_basis)
    for i in (1, 2, 3):
        assert (S[i] - sigma[i]).nnz == 0


def test_hamiltonian_on_vacuum(small_basis):
    assert expectation(hamiltonian_3d(small_basis), small_basis.number_state(0, 0, 0)) == 1.5


def test_angular_momentum_operators_are_hermitian(small_basis):
    for op in angular_momentum_ops(small_basis):
        assert op.is_hermitian(1e-14)


def test_stokes_operators_hermitian(basis8):
    report = check_stokes_hermiticity(basis8)
    assert report.passed
    assert report.max_residual == 0.0


def test_conservation_at_cutoff_8(basis8):
    report = check_conservation(basis8, 1e-12)
    assert report.passed
    assert report.n_checked == 9


def test_fock_closure_at_cutoff_8(basis8):
    report = check_fock_su3_closure(basis8, 1e-12)
    assert report.passed
    assert report.n_checked == 28


def test_fock_closure_fails_without_safe_margin(small_basis):
    assert not check_fock_su3_closure(small_basis, 1e-12, margin=0).passed


def test_fock_closure_detects_corrupted_constant(small_basis):
    broken = STRUCTURE_CONSTANTS.with_entry((4, 5, 8), 0.5)
    report = check_fock_su3_closure(small_basis, 1e-12, table=broken)
    assert not report.passed
    assert (4, 5) in report.failures


def test_angular_momentum_identification(basis8):
    report = check_angular_momentum(basis8, 1e-13)
    assert report.passed
    assert report.n_checked == 4


def test_homomorphism(small_basis):
    assert check_jordan_schwinger_homomorphism(small_basis, 1e-12).passed


def test_two_mode_sector(small_basis):
    report = check_two_mode_sector(small_basis, 1e-12)
    assert report.passed
    assert report.n_checked == 9
