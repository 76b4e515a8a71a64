"""Shared fixtures."""
import math
from pathlib import Path
from typing import Callable, Sequence

import numpy as np
import pytest

from stokes3d.fock.basis import FockBasis
from stokes3d.schemas.geometry import InitialConditions
from stokes3d.schemas.stokes import CoherentAmplitudes

SEED = 20240611


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(SEED)


@pytest.fixture(scope="session")
def small_basis() -> FockBasis:
    return FockBasis(4)


@pytest.fixture(scope="session")
def basis8() -> FockBasis:
    return FockBasis(8)


@pytest.fixture(scope="session")
def basis16() -> FockBasis:
    return FockBasis(16)


@pytest.fixture
def ellipse_ic() -> InitialConditions:
    """Semi-axes 2 and 1 along x and y."""
    return InitialConditions(a=(2.0, 0.0, 0.0), b=(0.0, 1.0, 0.0))


@pytest.fixture
def circle_ic() -> InitialConditions:
    return InitialConditions(a=(1.0, 0.0, 0.0), b=(0.0, 1.0, 0.0))


@pytest.fixture
def alpha_plane() -> CoherentAmplitudes:
    """alpha = (1, i, 0)."""
    return CoherentAmplitudes.of(1.0, 1j, 0.0)


@pytest.fixture
def write_csv(tmp_path: Path) -> Callable[..., Path]:
    """Write CSV text lines into a temporary file and return its path."""
    def write(lines: Sequence[str], name: str = "samples.csv") -> Path:
        path = tmp_path / name
        path.write_text("\n".join(lines) + "\n", encoding="utf-8")
        return path
    return write


@pytest.fixture
def quarter_times() -> list:
    return [0.0, math.pi / 4, math.pi / 2, 3 * math.pi / 4]
