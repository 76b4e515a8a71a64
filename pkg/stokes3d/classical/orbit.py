"""Orbit of the classical 3D isotropic oscillator and its two amplitude conventions.

With unit frequency, mass and action the orbit through position ``a`` and velocity ``b``
is x(t) = a cos t + b sin t. The canonical convention maps it to coherent amplitudes
alpha_i = (a_i + i b_i)/sqrt(2); the geometric convention writes x_i = |alpha_0i| sin(t + phi_i).
The resulting Stokes vectors are related exactly by s_geo = 2 D s_can.
"""
import logging
import math
from typing import Union

import numpy as np

from stokes3d.exceptions import ConventionError
from stokes3d.quantum.coherent import stokes_closed_form, stokes_from_polar
from stokes3d.schemas.geometry import InitialConditions
from stokes3d.schemas.stokes import (
    CoherentAmplitudes,
    Convention,
    GeometricAmplitudes,
    StokesVector,
    principal_angle,
)

logger = logging.getLogger(__name__)

INV_SQRT2 = 1.0 / math.sqrt(2.0)

# s_geo = 2 * CONVENTION_SCALE * s_can, componentwise.
CONVENTION_SCALE = np.array([1.0, 1.0, -1.0, 1.0, 1.0, -1.0, 1.0, -1.0, math.sqrt(3.0)])

Times = Union[float, np.ndarray]


def orbit_position(ic: InitialConditions, t: Times) -> np.ndarray:
    """
    x(t) = a cos t + b sin t.

    Args:
        ic: Initial conditions
        t: Time or 1D array of times

    Returns:
        Shape (3,) for a scalar time, (n, 3) for an array
    """
    t = np.asarray(t, dtype=float)
    return np.multiply.outer(np.cos(t), ic.a_vec) + np.multiply.outer(np.sin(t), ic.b_vec)


def orbit_velocity(ic: InitialConditions, t: Times) -> np.ndarray:
    """p(t) = -a sin t + b cos t, same shapes as :func:`orbit_position`."""
    t = np.asarray(t, dtype=float)
    return np.multiply.outer(-np.sin(t), ic.a_vec) + np.multiply.outer(np.cos(t), ic.b_vec)


def orbit_position_oscillation(amplitudes: GeometricAmplitudes, t: Times) -> np.ndarray:
    """x_i(t) = |alpha_0i| sin(t + phi_i); reproduces :func:`orbit_position`."""
    t = np.asarray(t, dtype=float)
    phases = np.add.outer(t, np.array(amplitudes.phases))
    return np.array(amplitudes.moduli) * np.sin(phases)


def amplitudes_geometric(ic: InitialConditions) -> GeometricAmplitudes:
    """
    Per-mode amplitude |alpha_0i| = sqrt(a_i^2 + b_i^2) and phase phi_i = atan2(a_i, b_i).

    A mode at rest gets phase 0.
    """
    moduli = [math.hypot(a, b) for a, b in zip(ic.a, ic.b)]
    phases = [
        principal_angle(math.atan2(a, b)) if r > 0 else 0.0
        for a, b, r in zip(ic.a, ic.b, moduli)
    ]
    return GeometricAmplitudes(moduli=moduli, phases=phases)


def amplitudes_canonical(ic: InitialConditions) -> CoherentAmplitudes:
    """alpha_i = (a_i + i b_i)/sqrt(2)."""
    return CoherentAmplitudes(
        alphas=[complex(a, b) * INV_SQRT2 for a, b in zip(ic.a, ic.b)]
    )


def stokes_canonical(ic: InitialConditions) -> StokesVector:
    """Classical Stokes parameters of the orbit, canonical convention."""
    return stokes_closed_form(amplitudes_canonical(ic))


def stokes_geometric(ic: InitialConditions) -> StokesVector:
    """Classical Stokes parameters of the orbit, geometric convention (s_8 without 1/sqrt(3))."""
    amplitudes = amplitudes_geometric(ic)
    return stokes_from_polar(amplitudes.moduli, amplitudes.phases, Convention.GEOMETRIC)


def geometric_from_canonical(s: StokesVector) -> StokesVector:
    """
    Convert a canonical StokesVector to the geometric convention.

    Raises:
        ConventionError: If ``s`` is already geometric
    """
    if s.convention is not Convention.CANONICAL:
        raise ConventionError("expected a canonical StokesVector")
    return StokesVector(values=2.0 * CONVENTION_SCALE * s.as_array(), convention=Convention.GEOMETRIC)


def canonical_from_geometric(s: StokesVector) -> StokesVector:
    """
    Convert a geometric StokesVector to the canonical convention.

    Raises:
        ConventionError: If ``s`` is already canonical
    """
    if s.convention is not Convention.GEOMETRIC:
        raise ConventionError("expected a geometric StokesVector")
    return StokesVector(values=s.as_array() / (2.0 * CONVENTION_SCALE), convention=Convention.CANONICAL)


def initial_conditions_from_stokes(s: StokesVector) -> InitialConditions:
    """
    Rebuild (a, b) from a pure-state Stokes vector.

    The most strongly occupied mode is the reference: its modulus comes from the diagonal
    parameters (s_0, s_3, s_8) and its phase is set to 0. The other two moduli and phases
    come from that mode's pair, (s_1, s_2), (s_4, s_5) or (s_6, s_7), so an empty or nearly
    empty mode never decides a relative phase. Only phase differences are fixed; the
    result is the same orbit with a shifted time origin.

    Args:
        s: StokesVector in either convention

    Returns:
        Initial conditions whose Stokes vector is ``s``
    """
    if s.convention is Convention.CANONICAL:
        s = geometric_from_canonical(s)
    v = s.values
    if v[0] <= 0.0:
        return InitialConditions(a=(0.0, 0.0, 0.0), b=(0.0, 0.0, 0.0))

    r3_squared = (v[0] - v[8]) / 3.0
    pair = v[0] - r3_squared
    occupations = ((pair + v[3]) / 2.0, (pair - v[3]) / 2.0, r3_squared)
    ref = max(range(3), key=lambda k: occupations[k])

    # (i, j) -> (2 r_i r_j cos(phi_j - phi_i), 2 r_i r_j sin(phi_j - phi_i))
    links = {(0, 1): (v[1], v[2]), (0, 2): (v[4], v[5]), (1, 2): (v[6], v[7])}
    r_ref = math.sqrt(occupations[ref])
    moduli = [0.0, 0.0, 0.0]
    phases = [0.0, 0.0, 0.0]
    moduli[ref] = r_ref
    for k in range(3):
        if k == ref:
            continue
        i, j = min(ref, k), max(ref, k)
        cos_part, sin_part = links[(i, j)]
        moduli[k] = math.hypot(cos_part, sin_part) / (2.0 * r_ref)
        delta = math.atan2(sin_part, cos_part)
        phases[k] = delta if k == j else -delta

    a = [r * math.sin(p) for r, p in zip(moduli, phases)]
    b = [r * math.cos(p) for r, p in zip(moduli, phases)]
    return InitialConditions(a=a, b=b)


def random_initial_conditions(rng: np.random.Generator, bound: float = 1.0) -> InitialConditions:
    """Initial conditions with components uniform in [-bound, bound]."""
    return InitialConditions(a=rng.uniform(-bound, bound, 3), b=rng.uniform(-bound, bound, 3))
