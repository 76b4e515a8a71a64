import math

import numpy as np
import pytest

from stokes3d.exceptions import ArgumentError, BasisMismatchError
from stokes3d.fock.basis import FockBasis
from stokes3d.fock.operators import (
    apply,
    check_canonical_commutation,
    check_cross_mode_commutation,
    column_residual,
    commutator,
    expectation,
    identity_operator,
    ladder,
    lowering,
    number_operator,
    quadrature,
    raising,
    safe_indices,
    safe_subspace_total_quanta,
)


def test_lowering_on_number_state(small_basis):
    result = apply(lowering(1, small_basis), small_basis.number_state(2, 0, 0))
    assert result.coefficient(1, 0, 0) == pytest.approx(math.sqrt(2.0))
    assert result.norm_squared() == pytest.approx(2.0)


def test_lowering_annihilates_vacuum(small_basis):
    assert apply(lowering(3, small_basis), small_basis.number_state(0, 0, 0)).norm() == 0.0


def test_raising_on_number_state(small_basis):
    result = apply(raising(2, small_basis), small_basis.number_state(0, 1, 0))
    assert result.coefficient(0, 2, 0) == pytest.approx(math.sqrt(2.0))


def test_raising_at_cutoff_is_dropped(small_basis):
    top = small_basis.number_state(small_basis.cutoff, 0, 0)
    assert apply(raising(1, small_basis), top).norm() == 0.0


def test_raising_is_adjoint_of_lowering(small_basis):
    for mode in range(1, 4):
        difference = raising(mode, small_basis) - lowering(mode, small_basis).adjoint()
        assert difference.nnz == 0


def test_number_operator_is_diagonal(small_basis):
    n2 = number_operator(2, small_basis)
    state = small_basis.number_state(1, 3, 0)
    assert expectation(n2, state) == pytest.approx(3.0)
    assert all(row == col for row, col, _ in n2.entries())


@pytest.mark.parametrize("kind", ["position", "momentum"])
def test_quadratures_are_hermitian(small_basis, kind):
    for mode in range(1, 4):
        assert quadrature(mode, kind, small_basis).is_hermitian(1e-15)


def test_quadrature_commutator_below_cutoff(small_basis):
    x = quadrature(1, "position", small_basis)
    p = quadrature(1, "momentum", small_basis)
    defect = commutator(x, p) - identity_operator(small_basis) * 1j
    interior = np.flatnonzero(small_basis.occupations[:, 0] < small_basis.cutoff)
    assert column_residual(defect, interior) <= 1e-14


@pytest.mark.parametrize("mode", [0, 4, 1.5])
def test_rejects_bad_mode(small_basis, mode):
    with pytest.raises(ArgumentError):
        lowering(mode, small_basis)


def test_rejects_unknown_kinds(small_basis):
    with pytest.raises(ArgumentError):
        ladder(1, "sideways", small_basis)
    with pytest.raises(ArgumentError):
        quadrature(1, "energy", small_basis)


def test_expectation_normalizes(small_basis):
    state = small_basis.number_state(2, 0, 0) * 3.0
    assert expectation(number_operator(1, small_basis), state) == pytest.approx(2.0)


def test_expectation_of_zero_vector_raises(small_basis):
    with pytest.raises(ArgumentError):
        expectation(identity_operator(small_basis), small_basis.zero_vector())


def test_expectation_basis_mismatch(small_basis):
    with pytest.raises(BasisMismatchError):
        expectation(identity_operator(small_basis), FockBasis(3).number_state(0, 0, 0))


def test_apply_basis_mismatch(small_basis):
    with pytest.raises(BasisMismatchError):
        apply(lowering(1, small_basis), FockBasis(3).number_state(0, 0, 0))


def test_safe_subspace_counts_states_below_limit(small_basis):
    # total quanta <= 2 over three modes
    assert safe_indices(small_basis, 2).size == 10
    assert safe_indices(small_basis, 0).size == small_basis.dimension


def test_safe_subspace_predicate(small_basis):
    accept = safe_subspace_total_quanta(small_basis, 2)
    assert accept((1, 1, 0))
    assert not accept((1, 1, 1))


def test_safe_subspace_rejects_bad_margin(small_basis):
    with pytest.raises(ArgumentError):
        safe_indices(small_basis, small_basis.cutoff + 1)


def test_column_residual_of_identity(small_basis):
    assert column_residual(identity_operator(small_basis), [0, 5]) == pytest.approx(1.0)
    assert column_residual(identity_operator(small_basis), []) == 0.0


def test_canonical_commutation(basis8):
    report = check_canonical_commutation(basis8, 1e-14)
    assert report.passed
    assert report.n_checked == 3


def test_cross_mode_commutation_is_exact(basis8):
    report = check_cross_mode_commutation(basis8)
    assert report.passed
    assert report.max_residual == 0.0
    assert report.n_checked == 12
