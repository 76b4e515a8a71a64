"""Generalized quantum Stokes operators and their classical limit."""
from stokes3d.quantum.coherent import (
    check_classical_limit,
    check_pure_state_identities,
    coherent_state,
    occupations_from_stokes,
    pure_state_residuals,
    random_amplitudes,
    stokes_closed_form,
    stokes_expectation,
    stokes_from_polar,
    truncation_deficit,
)
from stokes3d.quantum.stokes_operators import (
    StokesOperatorSet,
    angular_momentum_ops,
    check_angular_momentum,
    check_conservation,
    check_fock_su3_closure,
    check_jordan_schwinger_homomorphism,
    check_stokes_hermiticity,
    check_two_mode_sector,
    hamiltonian_2d,
    hamiltonian_3d,
    jordan_schwinger,
    stokes_operators,
    stokes_operators_2d,
)

__all__ = [
    "check_classical_limit",
    "check_pure_state_identities",
    "coherent_state",
    "occupations_from_stokes",
    "pure_state_residuals",
    "random_amplitudes",
    "stokes_closed_form",
    "stokes_expectation",
    "stokes_from_polar",
    "truncation_deficit",
    "StokesOperatorSet",
    "angular_momentum_ops",
    "check_angular_momentum",
    "check_conservation",
    "check_fock_su3_closure",
    "check_jordan_schwinger_homomorphism",
    "check_stokes_hermiticity",
    "check_two_mode_sector",
    "hamiltonian_2d",
    "hamiltonian_3d",
    "jordan_schwinger",
    "stokes_operators",
    "stokes_operators_2d",
]
