import numpy as np
import pytest

from stokes3d.exceptions import ArgumentError, ConventionError, NonHermitianError, NotZPropagatingError
from stokes3d.polarization.matrix import (
    build_j2d,
    build_j3d,
    check_rank_one,
    check_round_trip,
    eigenvalues,
    outer_product_matrix,
    reduce_to_2d,
    stokes_2d_from_block,
    stokes_from_j3d,
)
from stokes3d.quantum.coherent import random_amplitudes, stokes_closed_form
from stokes3d.schemas.stokes import CoherentAmplitudes, Convention, StokesVector


def _stokes(**components):
    values = [0.0] * 9
    for key, value in components.items():
        values[int(key[1:])] = value
    return StokesVector(values=values)


def test_off_diagonal_sign_placement():
    J = build_j3d(_stokes(s1=1.0, s2=2.0))
    assert J[0, 1] == pytest.approx((1.0 - 2.0j) / 2)
    assert J[1, 0] == pytest.approx((1.0 + 2.0j) / 2)


def test_trace_is_s0(rng):
    s = StokesVector(values=rng.uniform(-1, 1, 9))
    assert np.trace(build_j3d(s)).real == pytest.approx(s[0])


def test_matrix_is_read_only():
    with pytest.raises(ValueError):
        build_j3d(_stokes(s0=1.0))[0, 0] = 2.0


def test_geometric_input_is_rejected():
    with pytest.raises(ConventionError):
        build_j3d(StokesVector.zeros(Convention.GEOMETRIC))


def test_round_trip(rng):
    s = StokesVector(values=rng.uniform(-1, 1, 9))
    np.testing.assert_allclose(stokes_from_j3d(build_j3d(s)).as_array(), s.as_array(), atol=1e-13)


def test_non_hermitian_matrix_is_rejected():
    J = np.eye(3, dtype=complex)
    J[0, 1] = 1.0
    with pytest.raises(NonHermitianError):
        stokes_from_j3d(J)


def test_wrong_shape_is_rejected():
    with pytest.raises(ArgumentError):
        stokes_from_j3d(np.eye(2))


def test_coherent_matrix_is_outer_product(rng):
    alpha = random_amplitudes(rng, 1.2)
    J = build_j3d(stokes_closed_form(alpha))
    np.testing.assert_allclose(J, outer_product_matrix(alpha), atol=1e-13)


def test_coherent_matrix_has_rank_one(alpha_plane):
    spectrum = eigenvalues(build_j3d(stokes_closed_form(alpha_plane)))
    np.testing.assert_allclose(spectrum, [0.0, 0.0, 2.0], atol=1e-13)


def test_reduce_z_propagating(alpha_plane):
    s = stokes_closed_form(alpha_plane)
    block = reduce_to_2d(build_j3d(s), 1e-12)
    assert block.shape == (2, 2)
    assert np.trace(block).real == pytest.approx(s[0])
    np.testing.assert_allclose(
        stokes_2d_from_block(block), (s[0], s[1], s[2], s[3]), atol=1e-13
    )


def test_reduce_rejects_third_mode_content():
    J = build_j3d(stokes_closed_form(CoherentAmplitudes.of(1.0, 0.0, 1.0)))
    with pytest.raises(NotZPropagatingError):
        reduce_to_2d(J, 1e-12)


def test_usual_matrix_round_trip():
    S = (2.0, 0.5, -0.3, 1.0)
    J = build_j2d(S)
    assert J[0, 1] == pytest.approx((0.5 + 0.3j) / 2)
    np.testing.assert_allclose(stokes_2d_from_block(J), S, atol=1e-15)


def test_usual_matrix_needs_four_parameters():
    with pytest.raises(ArgumentError):
        build_j2d([1.0, 0.0, 0.0])


def test_round_trip_check(rng):
    vectors = [StokesVector(values=rng.uniform(-1, 1, 9)) for _ in range(20)]
    report = check_round_trip(vectors, 1e-13)
    assert report.passed
    assert report.n_checked == 20


def test_rank_one_check(rng):
    alphas = [random_amplitudes(rng, 1.2) for _ in range(20)]
    report = check_rank_one(alphas, 1e-13)
    assert report.passed
    assert report.n_checked == 60


def test_rank_one_check_covers_smallest_eigenvalue(mocker, alpha_plane):
    mocker.patch(
        "stokes3d.polarization.matrix.eigenvalues",
        return_value=np.array([-1e-6, 0.0, 2.0])
    )
    report = check_rank_one([alpha_plane], 1e-13)
    assert not report.passed
    assert report.failures == [(0, 1)]


def test_rank_one_check_is_relative_to_intensity(mocker):
    weak = CoherentAmplitudes.of(1e-3, 1e-3j, 0.0)
    mocker.patch(
        "stokes3d.polarization.matrix.eigenvalues",
        return_value=np.array([0.0, 1e-14, 2e-6])
    )
    report = check_rank_one([weak], 1e-13)
    assert report.failures == [(0, 1)]
    assert report.max_residual == pytest.approx(1e-14 / 2e-6)


def test_rank_one_check_passes_for_weak_fields(rng):
    alphas = [
        CoherentAmplitudes(alphas=1e-4 * random_amplitudes(rng, 1.2).as_array())
        for _ in range(10)
    ]
    assert check_rank_one(alphas, 1e-13).passed
