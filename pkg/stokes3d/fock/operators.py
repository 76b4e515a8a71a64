"""Ladder and quadrature operators, operator application and expectation values."""
import logging
import math
from enum import Enum
from typing import Callable, Dict, Iterable, Tuple, Union

import numpy as np
import scipy.sparse as sp

from stokes3d.exceptions import ArgumentError, BasisMismatchError
from stokes3d.fock.basis import FockBasis, Occupation, SparseOperator, StateVector
from stokes3d.schemas.reports import VerificationReport

logger = logging.getLogger(__name__)

INV_SQRT2 = 1.0 / math.sqrt(2.0)


class LadderKind(str, Enum):
    """Ladder operator kind."""
    LOWERING = "lowering"
    RAISING = "raising"


class QuadratureKind(str, Enum):
    """Quadrature operator kind."""
    POSITION = "position"
    MOMENTUM = "momentum"


def _check_mode(mode: int) -> int:
    if not isinstance(mode, (int, np.integer)) or not 1 <= mode <= FockBasis.modes:
        raise ArgumentError(f"mode must be 1, 2 or 3, got {mode!r}")
    return int(mode) - 1


def ladder(mode: int, kind: Union[LadderKind, str], basis: FockBasis) -> SparseOperator:
    """
    Build a_j (lowering) or a_j^dag (raising) on the truncated basis.

    Args:
        mode: Mode j in 1..3
        kind: ``lowering`` or ``raising``
        basis: Fock basis

    Returns:
        Sparse operator; raising out of n_j = N is dropped

    Raises:
        ArgumentError: If the mode or kind is invalid
    """
    axis = _check_mode(mode)
    try:
        kind = LadderKind(kind)
    except ValueError as e:
        raise ArgumentError(f"unknown ladder kind {kind!r}") from e

    occupation = basis.occupations[:, axis]
    stride = basis.strides[axis]
    indices = np.arange(basis.dimension)

    if kind is LadderKind.LOWERING:
        mask = occupation >= 1
        rows = indices[mask] - stride
        values = np.sqrt(occupation[mask])
    else:
        mask = occupation < basis.cutoff
        rows = indices[mask] + stride
        values = np.sqrt(occupation[mask] + 1)

    return SparseOperator.from_entries(basis, rows, indices[mask], values)


def lowering(mode: int, basis: FockBasis) -> SparseOperator:
    return ladder(mode, LadderKind.LOWERING, basis)


def raising(mode: int, basis: FockBasis) -> SparseOperator:
    return ladder(mode, LadderKind.RAISING, basis)


def number_operator(mode: int, basis: FockBasis) -> SparseOperator:
    """a_j^dag a_j."""
    return raising(mode, basis) @ lowering(mode, basis)


def quadrature(mode: int, kind: Union[QuadratureKind, str], basis: FockBasis) -> SparseOperator:
    """
    Build x_j = (a_j + a_j^dag)/sqrt(2) or p_j = i(a_j^dag - a_j)/sqrt(2).

    Args:
        mode: Mode j in 1..3
        kind: ``position`` or ``momentum``
        basis: Fock basis

    Returns:
        Hermitian sparse operator
    """
    _check_mode(mode)
    try:
        kind = QuadratureKind(kind)
    except ValueError as e:
        raise ArgumentError(f"unknown quadrature kind {kind!r}") from e

    a = lowering(mode, basis)
    a_dag = raising(mode, basis)
    if kind is QuadratureKind.POSITION:
        return (a + a_dag) * INV_SQRT2
    return (a_dag - a) * (1j * INV_SQRT2)


def identity_operator(basis: FockBasis) -> SparseOperator:
    return SparseOperator(basis, sp.identity(basis.dimension, dtype=np.complex128, format="csr"))


def zero_operator(basis: FockBasis) -> SparseOperator:
    return SparseOperator(basis, sp.csr_matrix((basis.dimension, basis.dimension)))


def commutator(A: SparseOperator, B: SparseOperator) -> SparseOperator:
    """AB - BA."""
    return A @ B - B @ A


def apply(op: SparseOperator, v: StateVector) -> StateVector:
    """
    Matrix-vector product op |v>.

    Raises:
        BasisMismatchError: If operator and vector use different bases
    """
    if op.basis != v.basis:
        raise BasisMismatchError(f"operator on {op.basis!r} applied to vector on {v.basis!r}")
    return op @ v


def expectation(op: SparseOperator, v: StateVector) -> complex:
    """
    Normalized expectation <v|op|v> / <v|v>.

    Args:
        op: Operator
        v: State (need not be normalized)

    Returns:
        Complex expectation value

    Raises:
        ArgumentError: If v has zero norm
        BasisMismatchError: If the bases differ
    """
    if op.basis != v.basis:
        raise BasisMismatchError(f"operator on {op.basis!r} measured in vector on {v.basis!r}")
    norm_squared = v.norm_squared()
    if norm_squared == 0.0:
        raise ArgumentError("expectation value of a zero-norm vector is undefined")
    coefficients = v.coefficients
    return complex(np.vdot(coefficients, op.matrix @ coefficients) / norm_squared)


def safe_subspace_total_quanta(basis: FockBasis, margin: int) -> Callable[[Occupation], bool]:
    """
    Predicate accepting basis states with n1 + n2 + n3 <= N - margin.

    Truncated ladder operators only violate the commutation relations at the cutoff
    boundary, so operator identities are checked on this subspace.
    """
    if not 0 <= margin <= basis.cutoff:
        raise ArgumentError(f"margin must lie in 0..{basis.cutoff}, got {margin}")
    if margin == 0:
        return lambda occupation: True
    limit = basis.cutoff - margin
    return lambda occupation: sum(occupation) <= limit


def safe_indices(basis: FockBasis, margin: int) -> np.ndarray:
    """Flat indices of the states accepted by :func:`safe_subspace_total_quanta`."""
    accept = safe_subspace_total_quanta(basis, margin)
    return np.array(
        [i for i, occupation in enumerate(basis.occupations) if accept(tuple(occupation))],
        dtype=np.int64
    )


def column_residuals(op: SparseOperator, indices: Iterable[int]) -> np.ndarray:
    """||op |s>|| for each basis state index s in ``indices``."""
    indices = np.asarray(list(indices), dtype=np.int64)
    if indices.size == 0:
        return np.zeros(0)
    columns = op.matrix.tocsc()[:, indices]
    squared = abs(columns).power(2).sum(axis=0)
    return np.sqrt(np.asarray(squared).ravel())


def column_residual(op: SparseOperator, indices: Iterable[int]) -> float:
    """Max over the given basis states of ||op |s>||."""
    residuals = column_residuals(op, indices)
    return float(residuals.max()) if residuals.size else 0.0


def check_canonical_commutation(basis: FockBasis, tolerance: float) -> VerificationReport:
    """
    Check ([a_j, a_j^dag] - 1)|s> = 0 for every |s> with n_j <= N - 1.

    Args:
        basis: Fock basis
        tolerance: Largest acceptable residual norm

    Returns:
        Report keyed by mode
    """
    identity = identity_operator(basis)
    residuals: Dict[Tuple[int, ...], float] = {}
    for mode in range(1, 4):
        defect = commutator(lowering(mode, basis), raising(mode, basis)) - identity
        interior = np.flatnonzero(basis.occupations[:, mode - 1] <= basis.cutoff - 1)
        residuals[(mode,)] = column_residual(defect, interior)
    return VerificationReport.from_residuals(
        "canonical_commutation", residuals, tolerance, "[a_j, a_j^dag] = 1 below the cutoff"
    )


def check_cross_mode_commutation(basis: FockBasis) -> VerificationReport:
    """
    Check [a_j, a_k] = [a_j, a_k^dag] = 0 exactly for j != k.

    Returns:
        Report keyed by (j, k, 0) for [a_j, a_k] and (j, k, 1) for [a_j, a_k^dag]
    """
    lowered = {mode: lowering(mode, basis) for mode in range(1, 4)}
    raised = {mode: raising(mode, basis) for mode in range(1, 4)}
    residuals: Dict[Tuple[int, ...], float] = {}
    for j in range(1, 4):
        for k in range(1, 4):
            if j == k:
                continue
            residuals[(j, k, 0)] = commutator(lowered[j], lowered[k]).max_abs_entry()
            residuals[(j, k, 1)] = commutator(lowered[j], raised[k]).max_abs_entry()
    return VerificationReport.from_residuals(
        "cross_mode_commutation", residuals, 0.0, "different modes commute exactly"
    )
