import numpy as np
import pytest

from stokes3d.exceptions import ArgumentError, NumericError
from stokes3d.utils.jacobi import jacobi_eigh, off_diagonal_norm


def _random_symmetric(rng, n=3):
    M = rng.normal(size=(n, n))
    return M + M.T


def test_off_diagonal_norm():
    assert off_diagonal_norm(np.diag([1.0, 2.0, 3.0])) == 0.0
    assert off_diagonal_norm(np.array([[1.0, 3.0], [4.0, 2.0]])) == pytest.approx(5.0)


def test_diagonal_matrix_needs_no_rotation():
    values, vectors = jacobi_eigh(np.diag([3.0, 1.0, 2.0]))
    np.testing.assert_array_equal(values, [1.0, 2.0, 3.0])
    np.testing.assert_array_equal(np.abs(vectors), np.eye(3)[:, [1, 2, 0]])


def test_two_by_two():
    values, vectors = jacobi_eigh(np.array([[2.0, 1.0], [1.0, 2.0]]))
    np.testing.assert_allclose(values, [1.0, 3.0], atol=1e-14)
    np.testing.assert_allclose(np.abs(vectors), np.full((2, 2), 1 / np.sqrt(2.0)), atol=1e-14)


def test_matches_numpy(rng):
    for _ in range(20):
        M = _random_symmetric(rng)
        values, _ = jacobi_eigh(M)
        np.testing.assert_allclose(values, np.linalg.eigvalsh(M), atol=1e-12)


def test_eigenvectors_decompose_the_matrix(rng):
    M = _random_symmetric(rng, 4)
    values, vectors = jacobi_eigh(M)
    np.testing.assert_allclose(vectors.T @ vectors, np.eye(4), atol=1e-13)
    np.testing.assert_allclose(M @ vectors, vectors * values, atol=1e-12)


def test_results_are_reproducible(rng):
    M = _random_symmetric(rng)
    first = jacobi_eigh(M)
    second = jacobi_eigh(M.copy())
    assert np.array_equal(first[0], second[0])
    assert np.array_equal(first[1], second[1])


def test_repeated_eigenvalues():
    values, vectors = jacobi_eigh(np.diag([0.5, 0.5, 0.0]) + 0.0)
    np.testing.assert_allclose(values, [0.0, 0.5, 0.5])
    np.testing.assert_allclose(vectors.T @ vectors, np.eye(3))


@pytest.mark.parametrize(
    "matrix",
    [
        np.ones((2, 3)),
        np.array([[1.0, 2.0], [0.0, 1.0]]),
        np.array([[np.nan, 0.0], [0.0, 1.0]]),
    ],
)
def test_rejects_invalid_input(matrix):
    with pytest.raises(ArgumentError):
        jacobi_eigh(matrix)


def test_sweep_limit():
    with pytest.raises(NumericError):
        jacobi_eigh(np.array([[1.0, 1.0], [1.0, 2.0]]), max_sweeps=0)
