"""Geometry of the polarization ellipse: quadric, angular momentum, Euler angles, Runge tensor."""
import logging
import math
from typing import Dict, Iterable, Optional, Sequence, Tuple

import numpy as np
from scipy.optimize import minimize_scalar

from stokes3d.config import settings
from stokes3d.exceptions import ArgumentError, ConventionError, DegenerateOrbitError
from stokes3d.classical.orbit import (
    CONVENTION_SCALE,
    canonical_from_geometric,
    initial_conditions_from_stokes,
    orbit_position,
    orbit_velocity,
    stokes_canonical,
    stokes_geometric,
)
from stokes3d.schemas.geometry import (
    EllipseGeometry,
    EllipsoidQuadric,
    InitialConditions,
    OrbitClass,
    RungeTensor,
)
from stokes3d.schemas.reports import VerificationReport
from stokes3d.schemas.stokes import Convention, StokesVector
from stokes3d.utils.jacobi import jacobi_eigh

logger = logging.getLogger(__name__)

Z_HAT = np.array([0.0, 0.0, 1.0])
X_HAT = np.array([1.0, 0.0, 0.0])


def _require_geometric(s: StokesVector, what: str) -> None:
    if s.convention is not Convention.GEOMETRIC:
        raise ConventionError(f"{what} is defined on geometric Stokes parameters")


def _as_vector(L: Sequence[float]) -> np.ndarray:
    L = np.asarray(L, dtype=float)
    if L.shape != (3,):
        raise ArgumentError(f"expected a 3-vector, got shape {L.shape}")
    return L


def angular_momentum_cl(ic: InitialConditions) -> np.ndarray:
    """L = a x b (conserved along the orbit)."""
    return np.cross(ic.a_vec, ic.b_vec)


def angular_momentum_from_stokes(s: StokesVector) -> np.ndarray:
    """
    Angular momentum read off the antisymmetric Stokes components.

    Canonical input gives (s_7, -s_5, s_2); the geometric convention scales these by -1/2.
    """
    v = s.values
    L = np.array([v[7], -v[5], v[2]])
    if s.convention is Convention.GEOMETRIC:
        L = -0.5 * L
    return L


def ellipsoid_from_ic(ic: InitialConditions) -> EllipsoidQuadric:
    """
    Quadric x^T Q x = c satisfied by every orbit point.

    Q = Tr(M) I - M with M = a a^T + b b^T, and c = |a x b|^2.
    """
    M = np.outer(ic.a_vec, ic.a_vec) + np.outer(ic.b_vec, ic.b_vec)
    Q = np.trace(M) * np.eye(3) - M
    c = float(np.dot(angular_momentum_cl(ic), angular_momentum_cl(ic)))
    return EllipsoidQuadric(Q=Q, c=c)


def ellipsoid_from_stokes(s: StokesVector) -> EllipsoidQuadric:
    """
    Quadric coefficients written directly in geometric Stokes parameters.

    Off-diagonal entries are halved since Q holds the symmetric matrix of the form.

    Raises:
        ConventionError: If ``s`` is canonical
    """
    _require_geometric(s, "the Stokes form of the ellipsoid")
    v = s.values
    in_plane = (4.0 * v[0] - v[8]) / 6.0
    Q = np.array([
        [in_plane - v[3] / 2.0, -v[1] / 2.0, -v[4] / 2.0],
        [-v[1] / 2.0, in_plane + v[3] / 2.0, -v[6] / 2.0],
        [-v[4] / 2.0, -v[6] / 2.0, (2.0 * v[0] + v[8]) / 3.0],
    ])
    c = (v[7] ** 2 + v[5] ** 2 + v[2] ** 2) / 4.0
    return EllipsoidQuadric(Q=Q, c=c)


def euler_angles(L: Sequence[float]) -> Tuple[float, float]:
    """
    Inclination theta and node angle phi of the orbit plane.

    cos theta = L_3/|L|; phi = atan2(L_1, L_2), i.e. sin phi = L_1/rho and cos phi = L_2/rho
    with rho = sqrt(L_1^2 + L_2^2). phi = 0 when L lies along z and phi is kept in (-pi, pi].

    Args:
        L: Angular momentum

    Returns:
        (theta, phi) in radians

    Raises:
        DegenerateOrbitError: If L = 0 (linear polarization)
    """
    L = _as_vector(L)
    norm = float(np.linalg.norm(L))
    if norm == 0.0:
        raise DegenerateOrbitError("degenerate (linear) polarization: orbit plane undefined")
    theta = math.acos(min(1.0, max(-1.0, L[2] / norm)))
    if L[0] == 0.0 and L[1] == 0.0:
        return theta, 0.0
    phi = math.atan2(L[0], L[1])
    if phi <= -math.pi:
        phi = math.pi
    return theta, phi


def runge_from_ic(ic: InitialConditions) -> RungeTensor:
    """A = (a a^T + b b^T)/2, the Runge tensor at t = 0."""
    return runge_at(ic, 0.0)


def runge_at(ic: InitialConditions, t: float) -> RungeTensor:
    """A = (p p^T + x x^T)/2 evaluated at time t along the orbit."""
    x = orbit_position(ic, t)
    p = orbit_velocity(ic, t)
    return RungeTensor(A=(np.outer(p, p) + np.outer(x, x)) / 2.0)


def runge_from_stokes(s: StokesVector) -> RungeTensor:
    """
    Runge tensor written directly in geometric Stokes parameters.

    Raises:
        ConventionError: If ``s`` is canonical
    """
    _require_geometric(s, "the Stokes form of the Runge tensor")
    v = s.values
    in_plane = (2.0 * v[0] + v[8]) / 6.0
    twice = np.array([
        [in_plane + v[3] / 2.0, v[1] / 2.0, v[4] / 2.0],
        [v[1] / 2.0, in_plane - v[3] / 2.0, v[6] / 2.0],
        [v[4] / 2.0, v[6] / 2.0, (v[0] - v[8]) / 3.0],
    ])
    return RungeTensor(A=twice / 2.0)


def closed_form_eigenvalues(energy: float, L_norm: float) -> Tuple[float, float, float]:
    """((E + sqrt(E^2 - L^2))/2, (E - sqrt(E^2 - L^2))/2, 0)."""
    root = math.sqrt(max(energy ** 2 - L_norm ** 2, 0.0))
    return ((energy + root) / 2.0, (energy - root) / 2.0, 0.0)


def principal_axes(
    A: RungeTensor,
    L: Sequence[float],
    circular_gap: Optional[float] = None
) -> EllipseGeometry:
    """
    Axes and semi-axes of the ellipse from the eigenstructure of the Runge tensor.

    The normal is L / |L|. The eigenvector of the largest eigenvalue, projected into the
    orbit plane, is the major axis and the minor axis completes the right-handed frame.
    The eigenvalues are the Rayleigh quotients of A on these three axes and give semi-axes
    sqrt(2 lambda). When the in-plane gap is below ``circular_gap`` the orbit is a circle
    and the in-plane pair is an arbitrary orthonormal one.

    Args:
        A: Runge tensor
        L: Angular momentum of the same orbit
        circular_gap: Eigenvalue gap below which the orbit is circular
            (defaults to ``settings.circular_gap``)

    Returns:
        EllipseGeometry

    Raises:
        DegenerateOrbitError: If L = 0
        NumericError: If the Jacobi iteration does not converge
    """
    L = _as_vector(L)
    if float(np.linalg.norm(L)) == 0.0:
        raise DegenerateOrbitError("degenerate (linear) polarization: orbit plane undefined")
    gap = settings.circular_gap if circular_gap is None else circular_gap

    matrix = A.matrix
    values, vectors = jacobi_eigh(matrix)
    normal = L / float(np.linalg.norm(L))
    # Only the largest eigenvalue is always separated from the other two.
    major = vectors[:, int(np.argmax(values))]
    major = major - np.dot(major, normal) * normal
    major = major / float(np.linalg.norm(major))
    minor = np.cross(normal, major)

    lam_plus = float(major @ matrix @ major)
    lam_minus = float(minor @ matrix @ minor)
    lam_normal = float(normal @ matrix @ normal)
    circular = lam_plus - lam_minus < gap
    if circular:
        logger.warning(
            f"circular orbit (eigenvalue gap {lam_plus - lam_minus:.1e}); in-plane axes are arbitrary"
        )

    theta, phi = euler_angles(L)
    return EllipseGeometry(
        L_cl=L,
        energy=A.energy,
        theta=theta,
        phi=phi,
        eigenvalues=(lam_plus, lam_minus, lam_normal),
        semi_major=math.sqrt(2.0 * max(lam_plus, 0.0)),
        semi_minor=math.sqrt(2.0 * max(lam_minus, 0.0)),
        major_axis=major,
        minor_axis=minor,
        normal=normal,
        circular=circular
    )


def ellipse_geometry(ic: InitialConditions) -> EllipseGeometry:
    """principal_axes of the orbit's own Runge tensor and angular momentum."""
    return principal_axes(runge_from_ic(ic), angular_momentum_cl(ic))


def semi_axes_bruteforce(ic: InitialConditions, samples: int) -> Tuple[float, float]:
    """
    (max |x|, min |x|) over the orbit by dense sampling and bounded local refinement.

    Args:
        ic: Initial conditions
        samples: Number of uniform times in [0, 2 pi)

    Returns:
        Largest and smallest distance from the centre

    Raises:
        ArgumentError: If samples < 4
    """
    if samples < 4:
        raise ArgumentError(f"samples must be at least 4, got {samples}")
    times = np.linspace(0.0, 2.0 * math.pi, samples, endpoint=False)
    radii_squared = np.sum(orbit_position(ic, times) ** 2, axis=1)
    step = 2.0 * math.pi / samples

    def radius_squared(t: float) -> float:
        x = orbit_position(ic, t)
        return float(np.dot(x, x))

    def refine(t0: float, sign: float) -> float:
        result = minimize_scalar(
            lambda t: sign * radius_squared(t),
            bounds=(t0 - step, t0 + step),
            method="bounded",
            options={"xatol": 1e-12}
        )
        return max(radius_squared(float(result.x)), 0.0)

    i_max = int(np.argmax(radii_squared))
    i_min = int(np.argmin(radii_squared))
    largest = max(refine(times[i_max], -1.0), float(radii_squared[i_max]))
    smallest = min(refine(times[i_min], 1.0), float(radii_squared[i_min]))
    return math.sqrt(largest), math.sqrt(smallest)


def line_of_nodes(L: Sequence[float]) -> np.ndarray:
    """
    Unit vector along z x L, where the orbit plane meets the x-y plane.

    Returns x-hat when L is along z.

    Raises:
        DegenerateOrbitError: If L = 0
    """
    L = _as_vector(L)
    if float(np.linalg.norm(L)) == 0.0:
        raise DegenerateOrbitError("degenerate (linear) polarization: orbit plane undefined")
    node = np.cross(Z_HAT, L)
    norm = float(np.linalg.norm(node))
    if norm == 0.0:
        return X_HAT.copy()
    return node / norm


def orbit_frame(L: Sequence[float]) -> np.ndarray:
    """Rotation whose rows are (node, L-hat x node, L-hat); orbit points map to z = 0."""
    L = _as_vector(L)
    node = line_of_nodes(L)
    L_hat = L / np.linalg.norm(L)
    return np.array([node, np.cross(L_hat, node), L_hat])


def classify_orbit(ic: InitialConditions, circular_gap: Optional[float] = None) -> OrbitClass:
    """
    Flag the degenerate orbit shapes.

    ``rest`` when a = b = 0, ``linear`` when a is parallel to b, ``circular`` when the
    in-plane eigenvalues of the Runge tensor coincide within ``circular_gap``.
    """
    gap = settings.circular_gap if circular_gap is None else circular_gap
    energy = float(np.dot(ic.a_vec, ic.a_vec) + np.dot(ic.b_vec, ic.b_vec)) / 2.0
    if energy == 0.0:
        return OrbitClass(rest=True)
    L_norm = float(np.linalg.norm(angular_momentum_cl(ic)))
    if L_norm <= settings.tol_geometry * energy:
        return OrbitClass(linear=True)
    lam_plus, lam_minus, _ = closed_form_eigenvalues(energy, L_norm)
    return OrbitClass(circular=lam_plus - lam_minus < gap)


def check_orbit_on_quadric(
    ics: Iterable[InitialConditions],
    tolerance: float,
    n_points: int = 1000
) -> VerificationReport:
    """
    Orbit points satisfy the quadric x^T Q x = c.

    Keys: (trial,) max |x^T Q x - c| / max(1, c).
    """
    times = np.linspace(0.0, 2.0 * math.pi, n_points, endpoint=False)
    residuals: Dict[Tuple[int, ...], float] = {}
    for trial, ic in enumerate(ics):
        quadric = ellipsoid_from_ic(ic)
        points = orbit_position(ic, times)
        residuals[(trial,)] = float(np.max(np.abs(quadric.residual(points)))) / max(1.0, quadric.c)
    return VerificationReport.from_residuals(
        "orbit_on_quadric", residuals, tolerance, "orbit lies on its ellipsoid"
    )


def check_orbit_planarity(
    ics: Iterable[InitialConditions],
    tolerance: float,
    n_points: int = 1000
) -> VerificationReport:
    """
    Orbit points lie in the plane normal to L, relative to |L| = |a x b|.

    Keys: (trial,) max |x . L| / |L|. Linear orbits (L = 0) are skipped.
    """
    times = np.linspace(0.0, 2.0 * math.pi, n_points, endpoint=False)
    residuals: Dict[Tuple[int, ...], float] = {}
    for trial, ic in enumerate(ics):
        L = angular_momentum_cl(ic)
        L_norm = float(np.linalg.norm(L))
        if L_norm == 0.0:
            continue
        points = orbit_position(ic, times)
        residuals[(trial,)] = float(np.max(np.abs(points @ L))) / L_norm
    return VerificationReport.from_residuals(
        "orbit_planarity", residuals, tolerance, "orbit lies in the plane normal to L"
    )


def check_stokes_forms(ics: Iterable[InitialConditions], tolerance: float) -> VerificationReport:
    """
    Stokes-parameter forms of the quadric and Runge tensor agree with the direct ones.

    Keys: (trial, 0) quadric Q, (trial, 1) quadric c, (trial, 2) Runge tensor.
    """
    residuals: Dict[Tuple[int, ...], float] = {}
    for trial, ic in enumerate(ics):
        s = stokes_geometric(ic)
        direct, from_stokes = ellipsoid_from_ic(ic), ellipsoid_from_stokes(s)
        residuals[(trial, 0)] = float(np.max(np.abs(direct.matrix - from_stokes.matrix)))
        residuals[(trial, 1)] = abs(direct.c - from_stokes.c)
        residuals[(trial, 2)] = float(
            np.max(np.abs(runge_from_ic(ic).matrix - runge_from_stokes(s).matrix))
        )
    return VerificationReport.from_residuals(
        "stokes_forms", residuals, tolerance, "quadric and Runge tensor from Stokes parameters"
    )


def check_runge_invariance(
    ics: Iterable[InitialConditions],
    tolerance: float,
    n_times: int = 100
) -> VerificationReport:
    """
    A L = 0 and A(t) = A(0) along the orbit.

    Keys: (trial, 0) max |A L|; (trial, 1) max entrywise |A(t) - A(0)| over the sampled times.
    """
    times = np.linspace(0.0, 2.0 * math.pi, n_times, endpoint=False)
    residuals: Dict[Tuple[int, ...], float] = {}
    for trial, ic in enumerate(ics):
        A0 = runge_from_ic(ic).matrix
        residuals[(trial, 0)] = float(np.max(np.abs(A0 @ angular_momentum_cl(ic))))
        residuals[(trial, 1)] = max(
            float(np.max(np.abs(runge_at(ic, t).matrix - A0))) for t in times
        )
    return VerificationReport.from_residuals(
        "runge_invariance", residuals, tolerance, "Runge tensor is conserved and annihilates L"
    )


def check_eigenvalue_closed_form(
    ics: Iterable[InitialConditions],
    tolerance: float
) -> VerificationReport:
    """Sorted Jacobi eigenvalues of A match the energy/angular-momentum closed form; keyed by trial."""
    residuals: Dict[Tuple[int, ...], float] = {}
    for trial, ic in enumerate(ics):
        A = runge_from_ic(ic)
        values, _ = jacobi_eigh(A.matrix)
        expected = sorted(closed_form_eigenvalues(A.energy, float(np.linalg.norm(angular_momentum_cl(ic)))))
        residuals[(trial,)] = float(np.max(np.abs(values - np.array(expected))))
    return VerificationReport.from_residuals(
        "runge_eigenvalues", residuals, tolerance, "eigenvalues depend on E and |L| only"
    )


def check_cross_convention(ics: Iterable[InitialConditions], tolerance: float) -> VerificationReport:
    """
    s_geo = 2 D s_can, and (s_7, -s_5, s_2) of the canonical vector equals a x b.

    Keys: (trial, 0) conversion, (trial, 1) inverse conversion, (trial, 2) angular momentum.
    """
    residuals: Dict[Tuple[int, ...], float] = {}
    for trial, ic in enumerate(ics):
        s_can, s_geo = stokes_canonical(ic), stokes_geometric(ic)
        residuals[(trial, 0)] = float(
            np.max(np.abs(s_geo.as_array() - 2.0 * CONVENTION_SCALE * s_can.as_array()))
        )
        residuals[(trial, 1)] = float(
            np.max(np.abs(canonical_from_geometric(s_geo).as_array() - s_can.as_array()))
        )
        residuals[(trial, 2)] = float(
            np.max(np.abs(angular_momentum_from_stokes(s_can) - angular_momentum_cl(ic)))
        )
    return VerificationReport.from_residuals(
        "cross_convention", residuals, tolerance, "canonical and geometric conventions agree"
    )


def check_reconstruction(ics: Iterable[InitialConditions], tolerance: float) -> VerificationReport:
    """
    Six-parameter round trip: Stokes vector -> (a, b) -> Stokes vector is the identity.

    Keys: (trial, 0) geometric input, (trial, 1) canonical input.
    """
    residuals: Dict[Tuple[int, ...], float] = {}
    for trial, ic in enumerate(ics):
        s_geo = stokes_geometric(ic)
        rebuilt = stokes_geometric(initial_conditions_from_stokes(s_geo))
        residuals[(trial, 0)] = float(np.max(np.abs(rebuilt.as_array() - s_geo.as_array())))
        s_can = stokes_canonical(ic)
        rebuilt_can = stokes_canonical(initial_conditions_from_stokes(s_can))
        residuals[(trial, 1)] = float(np.max(np.abs(rebuilt_can.as_array() - s_can.as_array())))
    return VerificationReport.from_residuals(
        "six_parameter_reconstruction", residuals, tolerance,
        "initial conditions are recovered from the Stokes vector up to a time shift"
    )
