import math

import numpy as np
import pytest

from stokes3d.classical.orbit import (
    CONVENTION_SCALE,
    amplitudes_canonical,
    amplitudes_geometric,
    canonical_from_geometric,
    geometric_from_canonical,
    initial_conditions_from_stokes,
    orbit_position,
    orbit_position_oscillation,
    orbit_velocity,
    random_initial_conditions,
    stokes_canonical,
    stokes_geometric,
)
from stokes3d.exceptions import ConventionError
from stokes3d.schemas.geometry import InitialConditions
from stokes3d.schemas.stokes import Convention

SQRT3 = math.sqrt(3.0)


def test_orbit_passes_through_initial_conditions(ellipse_ic):
    np.testing.assert_allclose(orbit_position(ellipse_ic, 0.0), [2.0, 0.0, 0.0])
    np.testing.assert_allclose(orbit_position(ellipse_ic, math.pi / 2), [0.0, 1.0, 0.0], atol=1e-15)
    np.testing.assert_allclose(orbit_position(ellipse_ic, math.pi), [-2.0, 0.0, 0.0], atol=1e-15)
    np.testing.assert_allclose(orbit_velocity(ellipse_ic, 0.0), [0.0, 1.0, 0.0])


def test_orbit_array_shape(ellipse_ic):
    times = np.linspace(0.0, 1.0, 7)
    assert orbit_position(ellipse_ic, times).shape == (7, 3)
    assert orbit_velocity(ellipse_ic, times).shape == (7, 3)
    assert orbit_position(ellipse_ic, 0.3).shape == (3,)


def test_orbit_is_periodic(rng):
    ic = random_initial_conditions(rng)
    np.testing.assert_allclose(
        orbit_position(ic, 0.4), orbit_position(ic, 0.4 + 2 * math.pi), atol=1e-14
    )


def test_geometric_amplitudes(ellipse_ic):
    amplitudes = amplitudes_geometric(ellipse_ic)
    assert amplitudes.moduli == pytest.approx((2.0, 1.0, 0.0))
    assert amplitudes.phases == pytest.approx((math.pi / 2, 0.0, 0.0))


def test_oscillation_form_reproduces_orbit(rng):
    ic = random_initial_conditions(rng)
    times = np.linspace(0.0, 2 * math.pi, 50)
    np.testing.assert_allclose(
        orbit_position_oscillation(amplitudes_geometric(ic), times),
        orbit_position(ic, times),
        atol=1e-14
    )


def test_canonical_amplitudes(ellipse_ic):
    alphas = amplitudes_canonical(ellipse_ic).alphas
    assert alphas[0] == pytest.approx(math.sqrt(2.0))
    assert alphas[1] == pytest.approx(1j / math.sqrt(2.0))
    assert alphas[2] == 0


def test_canonical_stokes_worked_example(ellipse_ic):
    s = stokes_canonical(ellipse_ic)
    assert s.convention is Convention.CANONICAL
    np.testing.assert_allclose(
        s.as_array(), [2.5, 0.0, 2.0, 1.5, 0.0, 0.0, 0.0, 0.0, 2.5 / SQRT3], atol=1e-14
    )


def test_geometric_stokes_worked_example(ellipse_ic):
    s = stokes_geometric(ellipse_ic)
    assert s.convention is Convention.GEOMETRIC
    np.testing.assert_allclose(
        s.as_array(), [5.0, 0.0, -4.0, 3.0, 0.0, 0.0, 0.0, 0.0, 5.0], atol=1e-14
    )


def test_geometric_s0_is_twice_the_energy(rng):
    ic = random_initial_conditions(rng)
    expected = float(np.dot(ic.a_vec, ic.a_vec) + np.dot(ic.b_vec, ic.b_vec))
    assert stokes_geometric(ic)[0] == pytest.approx(expected)


def test_convention_conversion(rng):
    ic = random_initial_conditions(rng)
    s_can, s_geo = stokes_canonical(ic), stokes_geometric(ic)
    np.testing.assert_allclose(geometric_from_canonical(s_can).as_array(), s_geo.as_array(), atol=1e-13)
    np.testing.assert_allclose(canonical_from_geometric(s_geo).as_array(), s_can.as_array(), atol=1e-13)
    np.testing.assert_allclose(s_geo.as_array(), 2 * CONVENTION_SCALE * s_can.as_array(), atol=1e-13)


def test_conversion_checks_the_tag(ellipse_ic):
    with pytest.raises(ConventionError):
        geometric_from_canonical(stokes_geometric(ellipse_ic))
    with pytest.raises(ConventionError):
        canonical_from_geometric(stokes_canonical(ellipse_ic))


def test_reconstruction_is_a_time_shift(ellipse_ic):
    rebuilt = initial_conditions_from_stokes(stokes_geometric(ellipse_ic))
    np.testing.assert_allclose(rebuilt.a_vec, orbit_position(ellipse_ic, -math.pi / 2), atol=1e-14)
    np.testing.assert_allclose(rebuilt.b_vec, orbit_velocity(ellipse_ic, -math.pi / 2), atol=1e-14)


@pytest.mark.parametrize("convention", ["canonical", "geometric"])
def test_reconstruction_preserves_stokes_vector(rng, convention):
    forward = stokes_canonical if convention == "canonical" else stokes_geometric
    for _ in range(10):
        ic = random_initial_conditions(rng)
        s = forward(ic)
        rebuilt = forward(initial_conditions_from_stokes(s))
        np.testing.assert_allclose(rebuilt.as_array(), s.as_array(), atol=1e-12)


@pytest.mark.parametrize(
    "a, b",
    [
        ((0.0, 0.3, -0.8), (0.0, 0.9, 0.4)),
        ((0.5, 0.0, -0.7), (-0.2, 0.0, 0.6)),
        ((0.4, -0.9, 0.0), (0.8, 0.3, 0.0)),
    ],
    ids=["mode1_empty", "mode2_empty", "mode3_empty"],
)
def test_reconstruction_with_an_empty_mode(a, b):
    s = stokes_geometric(InitialConditions(a=a, b=b))
    rebuilt = stokes_geometric(initial_conditions_from_stokes(s))
    np.testing.assert_allclose(rebuilt.as_array(), s.as_array(), atol=1e-12)


@pytest.mark.parametrize("empty", [0, 1, 2])
def test_reconstruction_with_random_empty_mode(rng, empty):
    for _ in range(20):
        a, b = rng.uniform(-1, 1, 3), rng.uniform(-1, 1, 3)
        a[empty] = b[empty] = 0.0
        ic = InitialConditions(a=a, b=b)
        for forward in (stokes_geometric, stokes_canonical):
            s = forward(ic)
            rebuilt = forward(initial_conditions_from_stokes(s))
            np.testing.assert_allclose(rebuilt.as_array(), s.as_array(), atol=1e-12)


def test_reconstruction_with_nearly_empty_mode():
    ic = InitialConditions(a=(1e-9, 0.6, -0.3), b=(0.0, 0.2, 0.9))
    s = stokes_geometric(ic)
    rebuilt = stokes_geometric(initial_conditions_from_stokes(s))
    np.testing.assert_allclose(rebuilt.as_array(), s.as_array(), atol=1e-12)


def test_reconstruction_of_rest():
    rebuilt = initial_conditions_from_stokes(
        stokes_geometric(InitialConditions(a=(0, 0, 0), b=(0, 0, 0)))
    )
    assert rebuilt.a == (0.0, 0.0, 0.0)
    assert rebuilt.b == (0.0, 0.0, 0.0)


def test_random_initial_conditions_are_bounded(rng):
    ic = random_initial_conditions(rng, bound=0.5)
    assert np.all(np.abs(ic.a_vec) <= 0.5)
    assert np.all(np.abs(ic.b_vec) <= 0.5)


def test_initial_conditions_reject_non_finite():
    with pytest.raises(ValueError):
        InitialConditions(a=(float("nan"), 0, 0), b=(0, 0, 0))
