"""Numeric and parsing helpers."""
from stokes3d.utils.jacobi import jacobi_eigh, off_diagonal_norm
from stokes3d.utils.parsing import parse_complex, parse_vector3

__all__ = ["jacobi_eigh", "off_diagonal_norm", "parse_complex", "parse_vector3"]
