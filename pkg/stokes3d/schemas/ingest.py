"""Sampled field data and fit results."""
from typing import Any, List, Optional, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from stokes3d.schemas.geometry import InitialConditions, Vector3


class FieldSampleSeries(BaseModel):
    """Records (t, x1, x2, x3) of a three-component field, optionally with its angular frequency."""

    model_config = ConfigDict(frozen=True)

    times: Tuple[float, ...]
    samples: Tuple[Vector3, ...]
    omega: Optional[float] = Field(default=None, gt=0, description="angular frequency; 1 if unset")

    @field_validator("times", mode="before")
    @classmethod
    def _coerce_times(cls, value: Any) -> Tuple[float, ...]:
        return tuple(float(v) for v in np.asarray(value, dtype=float).ravel())

    @field_validator("samples", mode="before")
    @classmethod
    def _coerce_samples(cls, value: Any) -> Tuple[Tuple[float, ...], ...]:
        array = np.asarray(value, dtype=float)
        if array.ndim != 2 or array.shape[1] != 3:
            raise ValueError(f"samples must have shape (n, 3), got {array.shape}")
        return tuple(tuple(float(v) for v in row) for row in array)

    @model_validator(mode="after")
    def _check_records(self) -> "FieldSampleSeries":
        if len(self.times) != len(self.samples):
            raise ValueError(
                f"{len(self.times)} sample times but {len(self.samples)} sample rows"
            )
        if len(self.times) < 4:
            raise ValueError(f"at least 4 records are required, got {len(self.times)}")
        if not np.all(np.isfinite(self.times)) or not np.all(np.isfinite(self.samples)):
            raise ValueError("sample data must be finite")
        return self

    @property
    def time_array(self) -> np.ndarray:
        return np.array(self.times)

    @property
    def sample_array(self) -> np.ndarray:
        return np.array(self.samples)

    @property
    def scaled_times(self) -> np.ndarray:
        """t' = omega t, the time variable of the unit-frequency orbit."""
        return self.time_array * (self.omega if self.omega is not None else 1.0)

    def __len__(self) -> int:
        return len(self.times)


class FitResult(BaseModel):
    """Least-squares estimate of (a, b) with per-component RMS residuals."""

    model_config = ConfigDict(frozen=True)

    initial_conditions: InitialConditions
    residuals: Vector3 = Field(description="root-mean-square residual per component")
    condition_number: float
    n_samples: int
    omega: float = 1.0

    @property
    def fit_residuals(self) -> List[float]:
        return list(self.residuals)
