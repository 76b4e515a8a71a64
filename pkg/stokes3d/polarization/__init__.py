"""Generalized polarization matrix."""
from stokes3d.polarization.matrix import (
    build_j2d,
    build_j3d,
    check_rank_one,
    check_round_trip,
    eigenvalues,
    outer_product_matrix,
    reduce_to_2d,
    stokes_2d_from_block,
    stokes_from_j3d,
)

__all__ = [
    "build_j2d",
    "build_j3d",
    "check_rank_one",
    "check_round_trip",
    "eigenvalues",
    "outer_product_matrix",
    "reduce_to_2d",
    "stokes_2d_from_block",
    "stokes_from_j3d",
]
