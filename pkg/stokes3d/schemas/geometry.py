"""Classical orbit and ellipse geometry records."""
import math
from typing import Any, Optional, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator

Vector3 = Tuple[float, float, float]
Matrix3 = Tuple[Vector3, Vector3, Vector3]


def _as_vector3(value: Any) -> Tuple[float, ...]:
    array = np.asarray(value, dtype=float).ravel()
    if array.shape != (3,):
        raise ValueError(f"expected 3 components, got {array.size}")
    return tuple(float(v) for v in array)


def _as_matrix3(value: Any) -> Tuple[Tuple[float, ...], ...]:
    array = np.asarray(value, dtype=float)
    if array.shape != (3, 3):
        raise ValueError(f"expected a 3x3 matrix, got shape {array.shape}")
    return tuple(tuple(float(v) for v in row) for row in array)


class InitialConditions(BaseModel):
    """Position a and velocity b at t = 0; the orbit is x(t) = a cos t + b sin t."""

    model_config = ConfigDict(frozen=True)

    a: Vector3 = Field(description="position at t = 0")
    b: Vector3 = Field(description="velocity at t = 0")

    @field_validator("a", "b", mode="before")
    @classmethod
    def _coerce(cls, value: Any) -> Tuple[float, ...]:
        return _as_vector3(value)

    @field_validator("a", "b")
    @classmethod
    def _finite(cls, value: Vector3) -> Vector3:
        if not all(math.isfinite(v) for v in value):
            raise ValueError("initial conditions must be finite")
        return value

    @property
    def a_vec(self) -> np.ndarray:
        return np.array(self.a)

    @property
    def b_vec(self) -> np.ndarray:
        return np.array(self.b)


class EllipsoidQuadric(BaseModel):
    """The quadric x^T Q x = c containing the orbit."""

    model_config = ConfigDict(frozen=True)

    Q: Matrix3 = Field(description="symmetric coefficient matrix")
    c: float = Field(description="right-hand side")

    @field_validator("Q", mode="before")
    @classmethod
    def _coerce(cls, value: Any) -> Tuple[Tuple[float, ...], ...]:
        return _as_matrix3(value)

    @property
    def matrix(self) -> np.ndarray:
        return np.array(self.Q)

    def residual(self, points: np.ndarray) -> np.ndarray:
        """x^T Q x - c for each row of ``points``."""
        points = np.atleast_2d(points)
        return np.einsum("ni,ij,nj->n", points, self.matrix, points) - self.c


class RungeTensor(BaseModel):
    """Symmetric conserved tensor A_ij = (p_i p_j + x_i x_j) / 2."""

    model_config = ConfigDict(frozen=True)

    A: Matrix3

    @field_validator("A", mode="before")
    @classmethod
    def _coerce(cls, value: Any) -> Tuple[Tuple[float, ...], ...]:
        return _as_matrix3(value)

    @property
    def matrix(self) -> np.ndarray:
        return np.array(self.A)

    @property
    def energy(self) -> float:
        return float(np.trace(self.matrix))


class EllipseGeometry(BaseModel):
    """Orientation and size of the polarization ellipse."""

    model_config = ConfigDict(frozen=True)

    L_cl: Vector3
    energy: float
    theta: float = Field(description="inclination of the orbit normal (radians)")
    phi: float = Field(description="node-line angle (radians)")
    eigenvalues: Vector3 = Field(description="(lambda_plus, lambda_minus, lambda_normal)")
    semi_major: float
    semi_minor: float
    major_axis: Vector3
    minor_axis: Vector3
    normal: Vector3
    circular: bool = False

    @field_validator("L_cl", "eigenvalues", "major_axis", "minor_axis", "normal", mode="before")
    @classmethod
    def _coerce(cls, value: Any) -> Tuple[float, ...]:
        return _as_vector3(value)

    @property
    def propagation_direction(self) -> Vector3:
        """The wave propagates along the orbit normal."""
        return self.normal

    @property
    def axes(self) -> np.ndarray:
        """Rows: major axis, minor axis, normal."""
        return np.array([self.major_axis, self.minor_axis, self.normal])

    @property
    def semi_axes(self) -> Tuple[float, float]:
        return (self.semi_major, self.semi_minor)


class OrbitClass(BaseModel):
    """Degeneracy classification of an orbit."""

    model_config = ConfigDict(frozen=True)

    rest: bool = False
    linear: bool = False
    circular: bool = False

    @property
    def label(self) -> Optional[str]:
        for name in ("rest", "linear", "circular"):
            if getattr(self, name):
                return name
        return None
