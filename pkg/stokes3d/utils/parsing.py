"""Parsers for the comma-separated numeric arguments of the command line."""
import math
from typing import List, Tuple

from stokes3d.exceptions import InputFormatError


def _floats(text: str, count: int, what: str) -> List[float]:
    parts = [part.strip() for part in text.split(",")]
    if len(parts) != count:
        raise InputFormatError(f"{what} needs {count} comma-separated numbers, got {text!r}")
    try:
        values = [float(part) for part in parts]
    except ValueError as e:
        raise InputFormatError(f"{what} is not numeric: {text!r}") from e
    if not all(math.isfinite(v) for v in values):
        raise InputFormatError(f"{what} must be finite, got {text!r}")
    return values


def parse_complex(text: str) -> complex:
    """Parse ``"re,im"`` into a complex number."""
    re, im = _floats(text, 2, "complex amplitude")
    return complex(re, im)


def parse_vector3(text: str) -> Tuple[float, float, float]:
    """Parse ``"x,y,z"`` into a real 3-vector."""
    x, y, z = _floats(text, 3, "vector")
    return (x, y, z)
