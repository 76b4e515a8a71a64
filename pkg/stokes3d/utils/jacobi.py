"""Cyclic Jacobi eigendecomposition of small real symmetric matrices."""
import logging
import math
from typing import Optional, Tuple

import numpy as np

from stokes3d.config import settings
from stokes3d.exceptions import ArgumentError, NumericError

logger = logging.getLogger(__name__)


def off_diagonal_norm(matrix: np.ndarray) -> float:
    """Frobenius norm of the strictly off-diagonal part."""
    return float(np.linalg.norm(matrix - np.diag(np.diag(matrix))))


def _rotation(a_pp: float, a_qq: float, a_pq: float) -> Tuple[float, float]:
    """(cos, sin) of the plane rotation that zeroes a_pq; the smaller of the two angles."""
    theta = 0.5 * math.atan2(2.0 * a_pq, a_qq - a_pp)
    if theta > math.pi / 4.0:
        theta -= math.pi / 2.0
    elif theta < -math.pi / 4.0:
        theta += math.pi / 2.0
    return math.cos(theta), math.sin(theta)


def jacobi_eigh(
    matrix: np.ndarray,
    tolerance: Optional[float] = None,
    max_sweeps: Optional[int] = None
) -> Tuple[np.ndarray, np.ndarray]:
    """
    Eigenvalues and eigenvectors of a real symmetric matrix by cyclic Jacobi rotations.

    Pairs are visited in row-major order (0,1), (0,2), ..., (n-2,n-1) each sweep, so the
    result is reproducible bit for bit. Iteration stops once the off-diagonal norm is at
    most ``tolerance * max(1, ||matrix||_F)``.

    Args:
        matrix: Real symmetric n x n matrix
        tolerance: Relative off-diagonal threshold (defaults to ``settings.jacobi_tolerance``)
        max_sweeps: Sweep limit (defaults to ``settings.jacobi_max_sweeps``)

    Returns:
        (eigenvalues ascending, eigenvectors as columns in the same order)

    Raises:
        ArgumentError: If the matrix is not square, real and symmetric
        NumericError: If the sweep limit is reached first
    """
    A = np.array(matrix, dtype=float)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ArgumentError(f"expected a square matrix, got shape {A.shape}")
    if not np.all(np.isfinite(A)):
        raise ArgumentError("matrix entries must be finite")
    scale = max(1.0, float(np.linalg.norm(A)))
    if np.max(np.abs(A - A.T), initial=0.0) > 1e-12 * scale:
        raise ArgumentError("Jacobi eigendecomposition needs a symmetric matrix")

    tolerance = settings.jacobi_tolerance if tolerance is None else tolerance
    max_sweeps = settings.jacobi_max_sweeps if max_sweeps is None else max_sweeps
    n = A.shape[0]
    A = 0.5 * (A + A.T)
    V = np.eye(n)
    threshold = tolerance * scale

    sweeps = 0
    while off_diagonal_norm(A) > threshold:
        if sweeps >= max_sweeps:
            raise NumericError(
                f"Jacobi iteration did not converge in {max_sweeps} sweeps "
                f"(off-diagonal norm {off_diagonal_norm(A):.3e})"
            )
        for p in range(n - 1):
            for q in range(p + 1, n):
                if A[p, q] == 0.0:
                    continue
                c, s = _rotation(A[p, p], A[q, q], A[p, q])
                G = np.eye(n)
                G[p, p] = c
                G[q, q] = c
                G[p, q] = s
                G[q, p] = -s
                A = G.T @ A @ G
                A[p, q] = A[q, p] = 0.0
                V = V @ G
        sweeps += 1

    logger.debug(f"Jacobi converged in {sweeps} sweeps (off-diagonal {off_diagonal_norm(A):.1e})")
    values = np.diag(A).copy()
    order = np.argsort(values, kind="stable")
    return values[order], V[:, order]
