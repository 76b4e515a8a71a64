"""Jordan-Schwinger map, generalized Stokes operators and the 3D oscillator observables."""
import itertools
import logging
from functools import lru_cache
from typing import Dict, Iterator, Optional, Tuple

import numpy as np

from stokes3d.algebra.su3 import (
    STRUCTURE_CONSTANTS,
    StructureConstantTable,
    commutator3,
    embed_two_mode,
    gell_mann,
    pauli,
)
from stokes3d.exceptions import ArgumentError
from stokes3d.fock.basis import FockBasis, SparseOperator
from stokes3d.fock.operators import (
    QuadratureKind,
    column_residual,
    commutator,
    identity_operator,
    lowering,
    number_operator,
    quadrature,
    raising,
    safe_indices,
    zero_operator,
)
from stokes3d.schemas.reports import VerificationReport

logger = logging.getLogger(__name__)


@lru_cache(maxsize=8)
def _bilinears(basis: FockBasis) -> Tuple[Tuple[SparseOperator, ...], ...]:
    """a_j^dag a_k for j, k in 0..2."""
    raised = [raising(mode, basis) for mode in range(1, 4)]
    lowered = [lowering(mode, basis) for mode in range(1, 4)]
    return tuple(tuple(raised[j] @ lowered[k] for k in range(3)) for j in range(3))


def jordan_schwinger(M: np.ndarray, basis: FockBasis) -> SparseOperator:
    """
    Map a 3x3 matrix to the bilinear operator sum_jk M_jk a_j^dag a_k.

    Args:
        M: 3x3 complex matrix
        basis: Fock basis

    Returns:
        Sparse operator on the basis
    """
    M = np.asarray(M, dtype=np.complex128)
    if M.shape != (3, 3):
        raise ArgumentError(f"Jordan-Schwinger map needs a 3x3 matrix, got shape {M.shape}")
    bilinears = _bilinears(basis)
    total = zero_operator(basis)
    for j, k in itertools.product(range(3), repeat=2):
        if M[j, k] != 0:
            total = total + bilinears[j][k] * M[j, k]
    return total


class StokesOperatorSet:
    """The nine generalized Stokes operators Sigma_0 ... Sigma_8 on one basis."""

    def __init__(self, basis: FockBasis, operators: Tuple[SparseOperator, ...]):
        if len(operators) != 9:
            raise ArgumentError(f"expected 9 Stokes operators, got {len(operators)}")
        self.basis = basis
        self.operators = tuple(operators)

    def __getitem__(self, index: int) -> SparseOperator:
        return self.operators[index]

    def __iter__(self) -> Iterator[SparseOperator]:
        return iter(self.operators)

    def __len__(self) -> int:
        return 9


@lru_cache(maxsize=8)
def stokes_operators(basis: FockBasis) -> StokesOperatorSet:
    """
    Build Sigma_i = a^dag lambda_i a for i = 0..8.

    Args:
        basis: Fock basis

    Returns:
        Operator set (cached per basis)
    """
    operators = tuple(jordan_schwinger(gell_mann(i), basis) for i in range(9))
    logger.debug(
        f"built Stokes operators on {basis!r}: nnz {[op.nnz for op in operators]}"
    )
    return StokesOperatorSet(basis, operators)


def stokes_operators_2d(basis: FockBasis) -> Tuple[SparseOperator, ...]:
    """Usual Stokes operators S_i = a^dag sigma_i a on modes 1 and 2."""
    return tuple(jordan_schwinger(embed_two_mode(pauli(i)), basis) for i in range(4))


def hamiltonian_3d(basis: FockBasis) -> SparseOperator:
    """H = a1^dag a1 + a2^dag a2 + a3^dag a3 + 3/2."""
    total = identity_operator(basis) * 1.5
    for mode in range(1, 4):
        total = total + number_operator(mode, basis)
    return total


def hamiltonian_2d(basis: FockBasis) -> SparseOperator:
    """H = a1^dag a1 + a2^dag a2 + 1."""
    return number_operator(1, basis) + number_operator(2, basis) + identity_operator(basis)


def angular_momentum_ops(
    basis: FockBasis
) -> Tuple[SparseOperator, SparseOperator, SparseOperator]:
    """
    Build L = r x p from the quadratures.

    Args:
        basis: Fock basis

    Returns:
        (L1, L2, L3) with L1 = x2 p3 - x3 p2, L2 = x3 p1 - x1 p3, L3 = x1 p2 - x2 p1
    """
    x = [quadrature(mode, QuadratureKind.POSITION, basis) for mode in range(1, 4)]
    p = [quadrature(mode, QuadratureKind.MOMENTUM, basis) for mode in range(1, 4)]
    L1 = x[1] @ p[2] - x[2] @ p[1]
    L2 = x[2] @ p[0] - x[0] @ p[2]
    L3 = x[0] @ p[1] - x[1] @ p[0]
    return (L1, L2, L3)


def check_stokes_hermiticity(basis: FockBasis) -> VerificationReport:
    """Every Sigma_i equals its adjoint exactly."""
    residuals: Dict[Tuple[int, ...], float] = {}
    for i, op in enumerate(stokes_operators(basis)):
        residuals[(i,)] = (op - op.adjoint()).max_abs_entry()
    return VerificationReport.from_residuals(
        "stokes_hermiticity", residuals, 0.0, "Sigma_i = Sigma_i^dag"
    )


def check_conservation(basis: FockBasis, tolerance: float, margin: int = 2) -> VerificationReport:
    """
    Check [Sigma_i, H_3D] |s> = 0 on the safe subspace.

    Args:
        basis: Fock basis
        tolerance: Largest acceptable residual norm
        margin: Safe-subspace margin (total quanta <= N - margin)

    Returns:
        Report keyed by operator index
    """
    H = hamiltonian_3d(basis)
    indices = safe_indices(basis, margin)
    residuals: Dict[Tuple[int, ...], float] = {
        (i,): column_residual(commutator(op, H), indices)
        for i, op in enumerate(stokes_operators(basis))
    }
    return VerificationReport.from_residuals(
        "conservation", residuals, tolerance, "[Sigma_i, H_3D] = 0"
    )


def check_fock_su3_closure(
    basis: FockBasis,
    tolerance: float,
    margin: int = 2,
    table: Optional[StructureConstantTable] = None
) -> VerificationReport:
    """
    Check [Sigma_l/2, Sigma_m/2] = i f_lmn Sigma_n/2 on the safe subspace.

    Args:
        basis: Fock basis
        tolerance: Largest acceptable residual norm
        margin: Safe-subspace margin
        table: Structure constants (defaults to the SU(3) table)

    Returns:
        Report over the 28 unordered pairs l < m in 1..8
    """
    f = (table or STRUCTURE_CONSTANTS).tensor
    halves = [op * 0.5 for op in stokes_operators(basis)]
    indices = safe_indices(basis, margin)
    residuals: Dict[Tuple[int, ...], float] = {}
    for l, m in itertools.combinations(range(1, 9), 2):
        defect = commutator(halves[l], halves[m])
        for n in range(1, 9):
            if f[l, m, n] != 0:
                defect = defect - halves[n] * (1j * f[l, m, n])
        residuals[(l, m)] = column_residual(defect, indices)
    return VerificationReport.from_residuals(
        "fock_su3_closure", residuals, tolerance, "Stokes operators close on SU(3)"
    )


def check_angular_momentum(
    basis: FockBasis,
    tolerance: float,
    margin: int = 2
) -> VerificationReport:
    """
    Check L1 = Sigma_7, L2 = -Sigma_5, L3 = Sigma_2 and H_3D - 3/2 = Sigma_0 on the safe subspace.

    Returns:
        Report keyed by (1,), (2,), (3,) for the angular momentum and (0,) for the energy
    """
    sigma = stokes_operators(basis)
    L1, L2, L3 = angular_momentum_ops(basis)
    indices = safe_indices(basis, margin)
    defects = {
        (1,): L1 - sigma[7],
        (2,): L2 + sigma[5],
        (3,): L3 - sigma[2],
        (0,): hamiltonian_3d(basis) - identity_operator(basis) * 1.5 - sigma[0],
    }
    residuals = {key: column_residual(op, indices) for key, op in defects.items()}
    return VerificationReport.from_residuals(
        "angular_momentum", residuals, tolerance, "L = (Sigma_7, -Sigma_5, Sigma_2)"
    )


def check_jordan_schwinger_homomorphism(
    basis: FockBasis,
    tolerance: float,
    margin: int = 2
) -> VerificationReport:
    """
    Check JS([lambda_l, lambda_m]) = [Sigma_l, Sigma_m] on the safe subspace.

    Returns:
        Report over the 28 unordered pairs l < m in 1..8
    """
    sigma = stokes_operators(basis)
    indices = safe_indices(basis, margin)
    residuals: Dict[Tuple[int, ...], float] = {}
    for l, m in itertools.combinations(range(1, 9), 2):
        mapped = jordan_schwinger(commutator3(gell_mann(l), gell_mann(m)), basis)
        residuals[(l, m)] = column_residual(mapped - commutator(sigma[l], sigma[m]), indices)
    return VerificationReport.from_residuals(
        "jordan_schwinger_homomorphism", residuals, tolerance,
        "matrix commutators map to operator commutators"
    )


def check_two_mode_sector(
    basis: FockBasis,
    tolerance: float,
    margin: int = 2
) -> VerificationReport:
    """
    Check the usual Stokes operators on the safe subspace.

    Keys: (0, i) for [S_i, H_2D] = 0; (1, l, m) for [S_l/2, S_m/2] = i eps_lmn S_n/2;
    (2,) for x1 p2 - x2 p1 = S_2; (3,) for H_2D - 1 = S_0.
    """
    S = stokes_operators_2d(basis)
    H = hamiltonian_2d(basis)
    indices = safe_indices(basis, margin)
    residuals: Dict[Tuple[int, ...], float] = {}

    for i, op in enumerate(S):
        residuals[(0, i)] = column_residual(commutator(op, H), indices)

    halves = [op * 0.5 for op in S]
    epsilon = {(1, 2): 3, (2, 3): 1, (3, 1): 2}
    for l, m in itertools.combinations(range(1, 4), 2):
        n = epsilon.get((l, m)) or epsilon[(m, l)]
        sign = 1.0 if (l, m) in epsilon else -1.0
        defect = commutator(halves[l], halves[m]) - halves[n] * (1j * sign)
        residuals[(1, l, m)] = column_residual(defect, indices)

    x1 = quadrature(1, QuadratureKind.POSITION, basis)
    x2 = quadrature(2, QuadratureKind.POSITION, basis)
    p1 = quadrature(1, QuadratureKind.MOMENTUM, basis)
    p2 = quadrature(2, QuadratureKind.MOMENTUM, basis)
    residuals[(2,)] = column_residual(x1 @ p2 - x2 @ p1 - S[2], indices)
    residuals[(3,)] = column_residual(H - identity_operator(basis) - S[0], indices)

    return VerificationReport.from_residuals(
        "two_mode_sector", residuals, tolerance, "usual Stokes operators, SU(2), L_z = S_2"
    )
