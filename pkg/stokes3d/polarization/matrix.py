"""Generalized 3x3 polarization matrix and its reduction to the usual 2x2 form."""
import logging
from typing import Dict, Iterable, Optional, Sequence, Tuple

import numpy as np

from stokes3d.algebra.su3 import generators, max_abs, pauli
from stokes3d.config import settings
from stokes3d.exceptions import (
    ArgumentError,
    ConventionError,
    NonHermitianError,
    NotZPropagatingError,
)
from stokes3d.quantum.coherent import stokes_closed_form
from stokes3d.schemas.reports import VerificationReport
from stokes3d.schemas.stokes import CoherentAmplitudes, Convention, StokesVector

logger = logging.getLogger(__name__)


def _as_matrix(J: np.ndarray, size: int) -> np.ndarray:
    J = np.asarray(J, dtype=np.complex128)
    if J.shape != (size, size):
        raise ArgumentError(f"expected a {size}x{size} matrix, got shape {J.shape}")
    return J


def build_j3d(s: StokesVector) -> np.ndarray:
    """
    Polarization matrix J = (1/3) lambda_0 s_0 + (1/2) sum_{i=1..8} lambda_i s_i.

    Args:
        s: Canonical StokesVector

    Returns:
        Read-only 3x3 Hermitian matrix with J_12 = (s_1 - i s_2)/2, trace s_0

    Raises:
        ConventionError: If ``s`` is tagged geometric
    """
    if s.convention is not Convention.CANONICAL:
        raise ConventionError("the polarization matrix is built from canonical Stokes parameters")
    lambdas = generators()
    J = lambdas[0] * (s[0] / 3.0)
    for i in range(1, 9):
        J = J + lambdas[i] * (s[i] / 2.0)
    J.flags.writeable = False
    return J


def stokes_from_j3d(J: np.ndarray, tolerance: Optional[float] = None) -> StokesVector:
    """
    Invert the expansion: s_j = Tr(J lambda_j), s_0 = Tr(J).

    Args:
        J: 3x3 Hermitian matrix
        tolerance: Largest tolerated |J - J^dag| entry (defaults to ``settings.tol_hermitian``)

    Returns:
        Canonical StokesVector

    Raises:
        NonHermitianError: If J is not Hermitian within tolerance
    """
    J = _as_matrix(J, 3)
    tolerance = settings.tol_hermitian if tolerance is None else tolerance
    deviation = max_abs(J - J.conj().T)
    if deviation > tolerance:
        raise NonHermitianError(f"polarization matrix is not Hermitian (deviation {deviation:.3e})")
    values = [float(np.trace(J @ lam).real) for lam in generators()]
    return StokesVector(values=values, convention=Convention.CANONICAL)


def reduce_to_2d(J: np.ndarray, tolerance: float) -> np.ndarray:
    """
    Upper-left 2x2 block of a z-propagating polarization matrix.

    Args:
        J: 3x3 polarization matrix
        tolerance: Largest tolerated magnitude in the third row and column

    Returns:
        2x2 complex matrix with the trace of J

    Raises:
        NotZPropagatingError: If the third row or column carries content above tolerance
    """
    J = _as_matrix(J, 3)
    third = max(max_abs(J[2, :]), max_abs(J[:, 2]))
    if third > tolerance:
        raise NotZPropagatingError(
            f"not z-propagating: third-mode content {third:.3e} exceeds {tolerance:.1e}"
        )
    block = np.array(J[:2, :2])
    block.flags.writeable = False
    return block


def build_j2d(S: Sequence[float]) -> np.ndarray:
    """
    Usual polarization matrix (1/2) sum_i sigma_i S_i.

    Uses the same sign placement as the 3x3 form, J_12 = (S_1 - i S_2)/2.
    """
    if len(S) != 4:
        raise ArgumentError(f"expected 4 usual Stokes parameters, got {len(S)}")
    J = sum(pauli(i) * (S[i] / 2.0) for i in range(4))
    return np.asarray(J, dtype=np.complex128)


def stokes_2d_from_block(block: np.ndarray) -> Tuple[float, float, float, float]:
    """Usual Stokes parameters S_i = Tr(block sigma_i)."""
    block = _as_matrix(block, 2)
    S0, S1, S2, S3 = (float(np.trace(block @ pauli(i)).real) for i in range(4))
    return (S0, S1, S2, S3)


def eigenvalues(J: np.ndarray) -> np.ndarray:
    """Ascending real eigenvalues of a Hermitian matrix."""
    return np.linalg.eigvalsh(np.asarray(J, dtype=np.complex128))


def outer_product_matrix(alpha: CoherentAmplitudes) -> np.ndarray:
    """alpha alpha^dag, the polarization matrix of a coherent state."""
    vector = alpha.as_array()
    return np.outer(vector, vector.conj())


def check_round_trip(
    stokes_vectors: Iterable[StokesVector],
    tolerance: float
) -> VerificationReport:
    """stokes_from_j3d(build_j3d(s)) reproduces s; keyed by trial."""
    residuals: Dict[Tuple[int, ...], float] = {}
    for trial, s in enumerate(stokes_vectors):
        recovered = stokes_from_j3d(build_j3d(s)).as_array()
        residuals[(trial,)] = float(np.max(np.abs(recovered - s.as_array())))
    return VerificationReport.from_residuals(
        "polarization_round_trip", residuals, tolerance, "Tr(J lambda_j) = s_j"
    )


def check_rank_one(alphas: Iterable[CoherentAmplitudes], tolerance: float) -> VerificationReport:
    """
    Coherent-state J equals alpha alpha^dag and has one nonzero eigenvalue.

    Keys: (trial, 0) outer-product deviation, (trial, 1) largest magnitude of the two
    non-leading eigenvalues over s_0, (trial, 2) |Tr(J_2D) - Tr(J)| after reduction of the
    alpha_3 = 0 projection.
    """
    residuals: Dict[Tuple[int, ...], float] = {}
    for trial, alpha in enumerate(alphas):
        s = stokes_closed_form(alpha)
        J = build_j3d(s)
        residuals[(trial, 0)] = max_abs(J - outer_product_matrix(alpha))
        spectrum = eigenvalues(J)
        residual = float(max(abs(spectrum[0]), abs(spectrum[1])))
        residuals[(trial, 1)] = residual / s[0] if s[0] > 0 else residual

        planar = CoherentAmplitudes.of(alpha.alphas[0], alpha.alphas[1], 0.0)
        J_planar = build_j3d(stokes_closed_form(planar))
        block = reduce_to_2d(J_planar, tolerance)
        residuals[(trial, 2)] = abs(np.trace(block) - np.trace(J_planar))
    return VerificationReport.from_residuals(
        "polarization_rank_one", residuals, tolerance, "coherent J = alpha alpha^dag"
    )
