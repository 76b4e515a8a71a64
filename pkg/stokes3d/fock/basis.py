"""Truncated three-mode Fock basis, state vectors and sparse operators."""
import itertools
from typing import List, Tuple, Union

import numpy as np
import scipy.sparse as sp

from stokes3d.exceptions import ArgumentError, BasisMismatchError

Occupation = Tuple[int, int, int]


class FockBasis:
    """
    Number states |n1, n2, n3> with 0 <= n_j <= cutoff.

    Flat index = n1 (N+1)^2 + n2 (N+1) + n3, i.e. row-major over the occupation triple.
    """

    modes = 3

    def __init__(self, cutoff: int):
        """
        Initialize the basis.

        Args:
            cutoff: Maximum occupation N per mode (>= 1)

        Raises:
            ArgumentError: If the cutoff is not an integer >= 1
        """
        if not isinstance(cutoff, (int, np.integer)) or cutoff < 1:
            raise ArgumentError(f"cutoff must be an integer >= 1, got {cutoff!r}")
        self.cutoff = int(cutoff)
        self.levels = self.cutoff + 1
        self.dimension = self.levels ** self.modes
        self.strides: Tuple[int, int, int] = (self.levels ** 2, self.levels, 1)

        occupations = np.array(
            list(itertools.product(range(self.levels), repeat=self.modes)), dtype=np.int64
        )
        occupations.flags.writeable = False
        self._occupations = occupations

    @property
    def occupations(self) -> np.ndarray:
        """Read-only (dimension, 3) array of occupation triples in flat-index order."""
        return self._occupations

    @property
    def total_quanta(self) -> np.ndarray:
        return self._occupations.sum(axis=1)

    def index(self, n1: int, n2: int, n3: int) -> int:
        for n in (n1, n2, n3):
            if not 0 <= n <= self.cutoff:
                raise ArgumentError(
                    f"occupation {(n1, n2, n3)} outside 0..{self.cutoff}"
                )
        return n1 * self.strides[0] + n2 * self.strides[1] + n3

    def occupation(self, index: int) -> Occupation:
        if not 0 <= index < self.dimension:
            raise ArgumentError(f"flat index {index} outside 0..{self.dimension - 1}")
        n1, n2, n3 = (int(n) for n in self._occupations[index])
        return (n1, n2, n3)

    def number_state(self, n1: int, n2: int, n3: int) -> "StateVector":
        coefficients = np.zeros(self.dimension, dtype=np.complex128)
        coefficients[self.index(n1, n2, n3)] = 1.0
        return StateVector(self, coefficients)

    def zero_vector(self) -> "StateVector":
        return StateVector(self, np.zeros(self.dimension, dtype=np.complex128))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FockBasis) and other.cutoff == self.cutoff

    def __hash__(self) -> int:
        return hash(("FockBasis", self.cutoff))

    def __repr__(self) -> str:
        return f"FockBasis(cutoff={self.cutoff}, dimension={self.dimension})"


def _require_same_basis(first: FockBasis, second: FockBasis) -> None:
    if first != second:
        raise BasisMismatchError(f"basis mismatch: {first!r} vs {second!r}")


class StateVector:
    """Complex coefficients over a FockBasis (read-only after construction)."""

    def __init__(self, basis: FockBasis, coefficients: np.ndarray):
        array = np.array(coefficients, dtype=np.complex128).ravel()
        if array.shape != (basis.dimension,):
            raise ArgumentError(
                f"expected {basis.dimension} coefficients, got {array.size}"
            )
        array.flags.writeable = False
        self.basis = basis
        self._coefficients = array

    @property
    def coefficients(self) -> np.ndarray:
        return self._coefficients

    def coefficient(self, n1: int, n2: int, n3: int) -> complex:
        return complex(self._coefficients[self.basis.index(n1, n2, n3)])

    def norm_squared(self) -> float:
        return float(np.vdot(self._coefficients, self._coefficients).real)

    def norm(self) -> float:
        return float(np.sqrt(self.norm_squared()))

    def __sub__(self, other: "StateVector") -> "StateVector":
        _require_same_basis(self.basis, other.basis)
        return StateVector(self.basis, self._coefficients - other._coefficients)

    def __add__(self, other: "StateVector") -> "StateVector":
        _require_same_basis(self.basis, other.basis)
        return StateVector(self.basis, self._coefficients + other._coefficients)

    def __mul__(self, scalar: complex) -> "StateVector":
        return StateVector(self.basis, self._coefficients * scalar)

    __rmul__ = __mul__

    def __repr__(self) -> str:
        return f"StateVector({self.basis!r}, norm={self.norm():.6g})"


class SparseOperator:
    """
    Operator on a FockBasis stored as a CSR matrix.

    Entries are summed, sorted and stripped of explicit zeros on construction so iteration
    order (and therefore floating-point summation order) is deterministic.
    """

    def __init__(self, basis: FockBasis, matrix: Union[sp.spmatrix, np.ndarray]):
        csr = sp.csr_matrix(matrix, dtype=np.complex128)
        if csr.shape != (basis.dimension, basis.dimension):
            raise ArgumentError(
                f"operator shape {csr.shape} does not match basis dimension {basis.dimension}"
            )
        csr.sum_duplicates()
        csr.eliminate_zeros()
        csr.sort_indices()
        self.basis = basis
        self._matrix = csr

    @classmethod
    def from_entries(
        cls,
        basis: FockBasis,
        rows: np.ndarray,
        cols: np.ndarray,
        values: np.ndarray
    ) -> "SparseOperator":
        """Build from (row, col, value) triplets; duplicates are summed."""
        rows = np.asarray(rows, dtype=np.int64)
        cols = np.asarray(cols, dtype=np.int64)
        if rows.size and (
            rows.min() < 0 or cols.min() < 0
            or rows.max() >= basis.dimension or cols.max() >= basis.dimension
        ):
            raise ArgumentError("operator entry index outside the basis dimension")
        matrix = sp.coo_matrix(
            (np.asarray(values, dtype=np.complex128), (rows, cols)),
            shape=(basis.dimension, basis.dimension)
        )
        return cls(basis, matrix)

    @property
    def matrix(self) -> sp.csr_matrix:
        """Underlying CSR matrix; treat as read-only."""
        return self._matrix

    @property
    def nnz(self) -> int:
        return int(self._matrix.nnz)

    def entries(self) -> List[Tuple[int, int, complex]]:
        """Nonzero entries as (row, col, value), ordered by row then column."""
        coo = self._matrix.tocoo()
        return [(int(r), int(c), complex(v)) for r, c, v in zip(coo.row, coo.col, coo.data)]

    def adjoint(self) -> "SparseOperator":
        return SparseOperator(self.basis, self._matrix.conj().T)

    def is_hermitian(self, tolerance: float = 0.0) -> bool:
        difference = (self._matrix - self._matrix.conj().T).tocsr()
        if difference.nnz == 0:
            return True
        return bool(np.max(np.abs(difference.data)) <= tolerance)

    def max_abs_entry(self) -> float:
        return float(np.max(np.abs(self._matrix.data))) if self._matrix.nnz else 0.0

    def __add__(self, other: "SparseOperator") -> "SparseOperator":
        _require_same_basis(self.basis, other.basis)
        return SparseOperator(self.basis, self._matrix + other._matrix)

    def __sub__(self, other: "SparseOperator") -> "SparseOperator":
        _require_same_basis(self.basis, other.basis)
        return SparseOperator(self.basis, self._matrix - other._matrix)

    def __neg__(self) -> "SparseOperator":
        return SparseOperator(self.basis, -self._matrix)

    def __mul__(self, scalar: complex) -> "SparseOperator":
        return SparseOperator(self.basis, self._matrix * scalar)

    __rmul__ = __mul__

    def __matmul__(self, other: Union["SparseOperator", StateVector]):
        _require_same_basis(self.basis, other.basis)
        if isinstance(other, StateVector):
            return StateVector(self.basis, self._matrix @ other.coefficients)
        return SparseOperator(self.basis, self._matrix @ other._matrix)

    def __repr__(self) -> str:
        return f"SparseOperator({self.basis!r}, nnz={self.nnz})"
