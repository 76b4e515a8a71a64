"""Stokes vectors and coherent-state amplitudes."""
import math
from enum import Enum
from typing import Any, List, Sequence, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator


class Convention(str, Enum):
    """Amplitude normalization a StokesVector was computed under.

    ``canonical`` makes the operator expectations and the angular-momentum identity exact;
    ``geometric`` reproduces the printed ellipsoid and Runge-tensor coefficient formulas.
    """
    CANONICAL = "canonical"
    GEOMETRIC = "geometric"


def principal_angle(angle: float) -> float:
    """Reduce an angle to the interval (-pi, pi]."""
    reduced = math.remainder(angle, 2.0 * math.pi)
    if reduced <= -math.pi:
        reduced += 2.0 * math.pi
    return reduced


class CoherentAmplitudes(BaseModel):
    """Three complex amplitudes alpha_i = |alpha_0i| exp(i phi_i) of a three-mode coherent state."""

    model_config = ConfigDict(frozen=True)

    alphas: Tuple[complex, complex, complex] = Field(description="alpha_1, alpha_2, alpha_3")

    @field_validator("alphas", mode="before")
    @classmethod
    def _coerce(cls, value: Any) -> Tuple[complex, ...]:
        return tuple(complex(v) for v in value)

    @classmethod
    def of(cls, *alphas: complex) -> "CoherentAmplitudes":
        """Build from three positional amplitudes."""
        return cls(alphas=alphas)

    @classmethod
    def from_polar(cls, moduli: Sequence[float], phases: Sequence[float]) -> "CoherentAmplitudes":
        """Build from moduli |alpha_0i| and phases phi_i."""
        return cls(alphas=[r * complex(math.cos(p), math.sin(p)) for r, p in zip(moduli, phases)])

    def as_array(self) -> np.ndarray:
        return np.array(self.alphas, dtype=np.complex128)

    @property
    def moduli(self) -> Tuple[float, float, float]:
        return tuple(abs(a) for a in self.alphas)  # type: ignore[return-value]

    @property
    def phases(self) -> Tuple[float, float, float]:
        """Principal phases in (-pi, pi]; a zero amplitude has phase 0."""
        return tuple(
            principal_angle(math.atan2(a.imag, a.real)) if a != 0 else 0.0 for a in self.alphas
        )  # type: ignore[return-value]

    def phase_difference(self, i: int, j: int) -> float:
        """Delta_ij = phi_i - phi_j (1-based mode indices), reduced to (-pi, pi]."""
        phases = self.phases
        return principal_angle(phases[i - 1] - phases[j - 1])

    @property
    def total_intensity(self) -> float:
        return float(sum(abs(a) ** 2 for a in self.alphas))


class GeometricAmplitudes(BaseModel):
    """Per-mode amplitude and phase of the oscillation form x_i = |alpha_0i| sin(t + phi_i)."""

    model_config = ConfigDict(frozen=True)

    moduli: Tuple[float, float, float]
    phases: Tuple[float, float, float]

    @field_validator("moduli", "phases", mode="before")
    @classmethod
    def _coerce(cls, value: Any) -> Tuple[float, ...]:
        return tuple(float(v) for v in value)


class StokesVector(BaseModel):
    """The nine generalized Stokes parameters s_0 ... s_8 with their convention tag."""

    model_config = ConfigDict(frozen=True)

    values: Tuple[float, ...] = Field(description="s_0 ... s_8")
    convention: Convention = Field(default=Convention.CANONICAL)

    @field_validator("values", mode="before")
    @classmethod
    def _coerce(cls, value: Any) -> Tuple[float, ...]:
        return tuple(float(v) for v in np.asarray(value, dtype=float).ravel())

    @field_validator("values")
    @classmethod
    def _nine_components(cls, value: Tuple[float, ...]) -> Tuple[float, ...]:
        if len(value) != 9:
            raise ValueError(f"a StokesVector has 9 components, got {len(value)}")
        return value

    @classmethod
    def zeros(cls, convention: Convention = Convention.CANONICAL) -> "StokesVector":
        return cls(values=[0.0] * 9, convention=convention)

    def as_array(self) -> np.ndarray:
        return np.array(self.values, dtype=float)

    def __getitem__(self, index: int) -> float:
        return self.values[index]

    def __len__(self) -> int:
        return 9


class StokesExpectation(BaseModel):
    """Truncated-Fock Stokes expectations with their truncation diagnostics."""

    model_config = ConfigDict(frozen=True)

    stokes: StokesVector
    truncation_deficit: float = Field(description="1 - norm^2 of the truncated coherent state")
    max_imaginary: float
    warnings: List[str] = Field(default_factory=list)
