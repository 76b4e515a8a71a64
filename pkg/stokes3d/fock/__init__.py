"""Truncated three-mode bosonic Fock space."""
from stokes3d.fock.basis import FockBasis, SparseOperator, StateVector
from stokes3d.fock.operators import (
    LadderKind,
    QuadratureKind,
    apply,
    check_canonical_commutation,
    check_cross_mode_commutation,
    column_residual,
    column_residuals,
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
    zero_operator,
)

__all__ = [
    "FockBasis",
    "SparseOperator",
    "StateVector",
    "LadderKind",
    "QuadratureKind",
    "apply",
    "check_canonical_commutation",
    "check_cross_mode_commutation",
    "column_residual",
    "column_residuals",
    "commutator",
    "expectation",
    "identity_operator",
    "ladder",
    "lowering",
    "number_operator",
    "quadrature",
    "raising",
    "safe_indices",
    "safe_subspace_total_quanta",
    "zero_operator",
]
