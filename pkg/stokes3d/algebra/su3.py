"""Gell-Mann generators of SU(3), structure constants and closure checks.

The generators are read off the bilinear Stokes operators Sigma_i = a^dag lambda_i a, so the
matrix and operator definitions agree by construction. lambda_0 is the 3x3 identity.
"""
import itertools
import logging
import math
from typing import Dict, Mapping, Optional, Tuple

import numpy as np

from stokes3d.exceptions import ArgumentError
from stokes3d.schemas.reports import VerificationReport

logger = logging.getLogger(__name__)

SQRT3 = math.sqrt(3.0)

# Nonzero entries of (a_j^dag, a_k) in Sigma_i; every unlisted entry is zero.
_BILINEAR_COEFFICIENTS: Dict[int, Dict[Tuple[int, int], complex]] = {
    0: {(0, 0): 1, (1, 1): 1, (2, 2): 1},
    1: {(0, 1): 1, (1, 0): 1},
    2: {(0, 1): -1j, (1, 0): 1j},
    3: {(0, 0): 1, (1, 1): -1},
    4: {(0, 2): 1, (2, 0): 1},
    5: {(0, 2): -1j, (2, 0): 1j},
    6: {(1, 2): 1, (2, 1): 1},
    7: {(1, 2): -1j, (2, 1): 1j},
    8: {(0, 0): 1 / SQRT3, (1, 1): 1 / SQRT3, (2, 2): -2 / SQRT3},
}

# Independent nonzero structure constants f_lmn with l < m < n.
BASE_STRUCTURE_CONSTANTS: Dict[Tuple[int, int, int], float] = {
    (1, 2, 3): 1.0,
    (1, 4, 7): 0.5,
    (1, 5, 6): -0.5,
    (2, 4, 6): 0.5,
    (2, 5, 7): 0.5,
    (3, 4, 5): 0.5,
    (3, 6, 7): -0.5,
    (4, 5, 8): SQRT3 / 2,
    (6, 7, 8): SQRT3 / 2,
}


def _readonly(matrix: np.ndarray) -> np.ndarray:
    matrix.flags.writeable = False
    return matrix


def _build_generator(i: int) -> np.ndarray:
    matrix = np.zeros((3, 3), dtype=np.complex128)
    for (j, k), value in _BILINEAR_COEFFICIENTS[i].items():
        matrix[j, k] = value
    return _readonly(matrix)


_GENERATORS: Tuple[np.ndarray, ...] = tuple(_build_generator(i) for i in range(9))


def _check_index(name: str, value: int, low: int, high: int) -> None:
    if not isinstance(value, (int, np.integer)) or not low <= value <= high:
        raise ArgumentError(f"{name} must be an integer in {low}..{high}, got {value!r}")


def gell_mann(i: int) -> np.ndarray:
    """
    Return the generator lambda_i (read-only 3x3 complex array).

    Args:
        i: Generator index, 0..8 (0 is the identity)

    Returns:
        The matrix M whose Jordan-Schwinger image sum_jk M_jk a_j^dag a_k is Sigma_i

    Raises:
        ArgumentError: If i is out of range
    """
    _check_index("generator index", i, 0, 8)
    return _GENERATORS[i]


def generators() -> Tuple[np.ndarray, ...]:
    """All nine generators (lambda_0, ..., lambda_8)."""
    return _GENERATORS


def commutator3(A: np.ndarray, B: np.ndarray) -> np.ndarray:
    """AB - BA."""
    return A @ B - B @ A


def _permutation_sign(order: Tuple[int, int, int]) -> int:
    sign = 1
    values = list(order)
    for x in range(3):
        for y in range(x + 1, 3):
            if values[x] > values[y]:
                sign = -sign
    return sign


class StructureConstantTable:
    """
    Totally antisymmetric structure constants f_lmn, l, m, n in 1..8.

    Built from the independent entries with l < m < n; every permutation of an index triple
    takes the sign of the permutation and any repeated index gives zero.
    """

    def __init__(self, base: Optional[Mapping[Tuple[int, int, int], float]] = None):
        """
        Initialize the table.

        Args:
            base: Independent entries keyed by index triple (defaults to the SU(3) values)
        """
        self.base: Dict[Tuple[int, int, int], float] = dict(
            BASE_STRUCTURE_CONSTANTS if base is None else base
        )
        tensor = np.zeros((9, 9, 9))
        for triple, value in self.base.items():
            for order in itertools.permutations(range(3)):
                permuted = tuple(triple[k] for k in order)
                tensor[permuted] = _permutation_sign(order) * value
        tensor.flags.writeable = False
        self._tensor = tensor

    @property
    def tensor(self) -> np.ndarray:
        """Read-only 9x9x9 array; row/column/slice 0 is unused and zero."""
        return self._tensor

    def value(self, l: int, m: int, n: int) -> float:
        for name, index in (("l", l), ("m", m), ("n", n)):
            _check_index(f"structure-constant index {name}", index, 1, 8)
        return float(self._tensor[l, m, n])

    def with_entry(self, triple: Tuple[int, int, int], value: float) -> "StructureConstantTable":
        """Copy of the table with one independent entry replaced."""
        ordered = tuple(sorted(triple))
        sign = _permutation_sign(tuple(sorted(range(3), key=lambda k: triple[k])))  # type: ignore[arg-type]
        base = dict(self.base)
        base[ordered] = sign * value  # type: ignore[index]
        return StructureConstantTable(base)


STRUCTURE_CONSTANTS = StructureConstantTable()


def structure_constant(l: int, m: int, n: int) -> float:
    """
    Return f_lmn.

    Args:
        l: First index, 1..8
        m: Second index, 1..8
        n: Third index, 1..8

    Returns:
        The structure constant, antisymmetrized from the independent table

    Raises:
        ArgumentError: If any index is out of range
    """
    return STRUCTURE_CONSTANTS.value(l, m, n)


def max_abs(matrix: np.ndarray) -> float:
    """Max-absolute-entry norm."""
    return float(np.max(np.abs(matrix))) if matrix.size else 0.0


def check_su3_closure(
    tolerance: float,
    table: Optional[StructureConstantTable] = None
) -> VerificationReport:
    """
    Check [lambda_l/2, lambda_m/2] = i f_lmn lambda_n/2 over all 64 ordered pairs in 1..8.

    Args:
        tolerance: Largest acceptable max-entry residual
        table: Structure constants to test against (defaults to the SU(3) table)

    Returns:
        Report whose failures are the offending (l, m) pairs
    """
    if tolerance <= 0:
        raise ArgumentError(f"tolerance must be positive, got {tolerance}")
    table = table or STRUCTURE_CONSTANTS
    f = table.tensor
    halves = [g / 2 for g in _GENERATORS]
    residuals: Dict[Tuple[int, ...], float] = {}
    for l, m in itertools.product(range(1, 9), repeat=2):
        expected = 1j * sum(f[l, m, n] * halves[n] for n in range(1, 9))
        residuals[(l, m)] = max_abs(commutator3(halves[l], halves[m]) - expected)
    report = VerificationReport.from_residuals(
        "su3_closure", residuals, tolerance,
        "matrix commutators close on the structure constants"
    )
    logger.debug(f"su3 closure: max residual {report.max_residual:.3e}")
    return report


def check_su2_closure(tolerance: float) -> VerificationReport:
    """
    Check the two-mode sector: lambda_1..3 obey [lambda_l/2, lambda_m/2] = i eps_lmn lambda_n/2.

    Args:
        tolerance: Largest acceptable max-entry residual

    Returns:
        Report over the 9 ordered pairs in 1..3
    """
    halves = [g / 2 for g in _GENERATORS[:4]]
    residuals: Dict[Tuple[int, ...], float] = {}
    for l, m in itertools.product(range(1, 4), repeat=2):
        expected = 1j * sum(_levi_civita(l, m, n) * halves[n] for n in range(1, 4))
        residuals[(l, m)] = max_abs(commutator3(halves[l], halves[m]) - expected)
    return VerificationReport.from_residuals(
        "su2_closure", residuals, tolerance, "usual Stokes sector closes on Levi-Civita"
    )


def _levi_civita(l: int, m: int, n: int) -> int:
    if len({l, m, n}) < 3:
        return 0
    return _permutation_sign((l, m, n))


def check_trace_orthogonality(tolerance: float) -> VerificationReport:
    """
    Check Tr(lambda_i lambda_j) = 2 delta_ij (i, j >= 1) and Tr(lambda_0 lambda_i) = 0 (i >= 1).

    Args:
        tolerance: Largest acceptable deviation

    Returns:
        Report over every pair (i, j) in 0..8 except (0, 0)
    """
    residuals: Dict[Tuple[int, ...], float] = {}
    for i, j in itertools.product(range(9), repeat=2):
        if i == j == 0:
            continue
        expected = 2.0 if (i == j and i > 0) else 0.0
        residuals[(i, j)] = abs(np.trace(_GENERATORS[i] @ _GENERATORS[j]) - expected)
    return VerificationReport.from_residuals(
        "trace_orthogonality", residuals, tolerance, "Tr(lambda_i lambda_j) = 2 delta_ij"
    )


def check_hermiticity(tolerance: float) -> VerificationReport:
    """
    Check every generator is Hermitian and lambda_1..8 are traceless.

    Args:
        tolerance: Largest acceptable deviation

    Returns:
        Report keyed by generator index
    """
    residuals: Dict[Tuple[int, ...], float] = {}
    for i, generator in enumerate(_GENERATORS):
        deviation = max_abs(generator - generator.conj().T)
        if i > 0:
            deviation = max(deviation, abs(np.trace(generator)))
        residuals[(i,)] = deviation
    return VerificationReport.from_residuals(
        "generator_hermiticity", residuals, tolerance, "lambda_i Hermitian, lambda_1..8 traceless"
    )


def check_antisymmetry(table: Optional[StructureConstantTable] = None) -> VerificationReport:
    """
    Check f_lmn = -f_mln and f_lmn = -f_lnm for all 512 triples.

    Args:
        table: Structure constants to test (defaults to the SU(3) table)

    Returns:
        Report keyed by index triple (exact comparison)
    """
    f = (table or STRUCTURE_CONSTANTS).tensor
    residuals: Dict[Tuple[int, ...], float] = {}
    for l, m, n in itertools.product(range(1, 9), repeat=3):
        residuals[(l, m, n)] = max(abs(f[l, m, n] + f[m, l, n]), abs(f[l, m, n] + f[l, n, m]))
    return VerificationReport.from_residuals(
        "structure_antisymmetry", residuals, 0.0, "f is totally antisymmetric"
    )


_PAULI: Tuple[np.ndarray, ...] = tuple(
    _readonly(np.array(m, dtype=np.complex128))
    for m in (
        [[1, 0], [0, 1]],
        [[0, 1], [1, 0]],
        [[0, -1j], [1j, 0]],
        [[1, 0], [0, -1]],
    )
)


def pauli(i: int) -> np.ndarray:
    """sigma_i for i in 0..3 (sigma_0 is the 2x2 identity)."""
    _check_index("Pauli index", i, 0, 3)
    return _PAULI[i]


def embed_two_mode(matrix: np.ndarray) -> np.ndarray:
    """Embed a 2x2 matrix into the mode-1/mode-2 block of a 3x3 matrix."""
    matrix = np.asarray(matrix, dtype=np.complex128)
    if matrix.shape != (2, 2):
        raise ArgumentError(f"expected a 2x2 matrix, got shape {matrix.shape}")
    embedded = np.zeros((3, 3), dtype=np.complex128)
    embedded[:2, :2] = matrix
    return embedded
