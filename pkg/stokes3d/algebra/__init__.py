"""SU(3) matrix algebra."""
from stokes3d.algebra.su3 import (
    STRUCTURE_CONSTANTS,
    StructureConstantTable,
    check_antisymmetry,
    check_hermiticity,
    check_su2_closure,
    check_su3_closure,
    check_trace_orthogonality,
    commutator3,
    embed_two_mode,
    gell_mann,
    generators,
    pauli,
    structure_constant,
)

__all__ = [
    "STRUCTURE_CONSTANTS",
    "StructureConstantTable",
    "check_antisymmetry",
    "check_hermiticity",
    "check_su2_closure",
    "check_su3_closure",
    "check_trace_orthogonality",
    "commutator3",
    "embed_two_mode",
    "gell_mann",
    "generators",
    "pauli",
    "structure_constant",
]
