"""Classical isotropic-oscillator orbit and polarization-ellipse geometry."""
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
from stokes3d.classical.ellipse import (
    angular_momentum_cl,
    angular_momentum_from_stokes,
    check_cross_convention,
    check_eigenvalue_closed_form,
    check_orbit_on_quadric,
    check_reconstruction,
    check_runge_invariance,
    check_stokes_forms,
    classify_orbit,
    closed_form_eigenvalues,
    ellipse_geometry,
    ellipsoid_from_ic,
    ellipsoid_from_stokes,
    euler_angles,
    line_of_nodes,
    orbit_frame,
    principal_axes,
    runge_at,
    runge_from_ic,
    runge_from_stokes,
    semi_axes_bruteforce,
)

__all__ = [
    "CONVENTION_SCALE",
    "amplitudes_canonical",
    "amplitudes_geometric",
    "canonical_from_geometric",
    "geometric_from_canonical",
    "initial_conditions_from_stokes",
    "orbit_position",
    "orbit_position_oscillation",
    "orbit_velocity",
    "random_initial_conditions",
    "stokes_canonical",
    "stokes_geometric",
    "angular_momentum_cl",
    "angular_momentum_from_stokes",
    "check_cross_convention",
    "check_eigenvalue_closed_form",
    "check_orbit_on_quadric",
    "check_reconstruction",
    "check_runge_invariance",
    "check_stokes_forms",
    "classify_orbit",
    "closed_form_eigenvalues",
    "ellipse_geometry",
    "ellipsoid_from_ic",
    "ellipsoid_from_stokes",
    "euler_angles",
    "line_of_nodes",
    "orbit_frame",
    "principal_axes",
    "runge_at",
    "runge_from_ic",
    "runge_from_stokes",
    "semi_axes_bruteforce",
]
