"""Verification and command report schemas."""
from pathlib import Path
from typing import Dict, List, Literal, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field

from stokes3d.schemas.geometry import EllipsoidQuadric, OrbitClass, Vector3

Command = Literal["verify", "expect", "ellipse", "polmatrix", "ingest"]
ComplexPair = Tuple[float, float]


class VerificationReport(BaseModel):
    """Outcome of one residual check."""

    model_config = ConfigDict(frozen=True)

    name: str
    description: str = ""
    tolerance: float
    max_residual: float
    n_checked: int
    failures: List[Tuple[int, ...]] = Field(default_factory=list)
    passed: bool

    @classmethod
    def from_residuals(
        cls,
        name: str,
        residuals: Dict[Tuple[int, ...], float],
        tolerance: float,
        description: str = ""
    ) -> "VerificationReport":
        """
        Build a report from residuals keyed by the index tuple they were measured at.

        Args:
            name: Check name
            residuals: Residual per checked item
            tolerance: Largest acceptable residual
            description: One-line human description

        Returns:
            Report listing every item whose residual exceeds the tolerance
        """
        failures = sorted(key for key, value in residuals.items() if not value <= tolerance)
        return cls(
            name=name,
            description=description,
            tolerance=tolerance,
            max_residual=max(residuals.values(), default=0.0),
            n_checked=len(residuals),
            failures=failures,
            passed=not failures
        )


class VerificationSummary(BaseModel):
    """All checks run by ``verify``."""

    cutoff: int
    seed: int
    checks: List[VerificationReport]

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    @property
    def failed_checks(self) -> List[str]:
        return [check.name for check in self.checks if not check.passed]


class ExpectationReport(BaseModel):
    """Closed-form Stokes parameters against truncated-Fock expectations."""

    alpha: List[ComplexPair]
    cutoff: int
    closed_form: List[float]
    expectation: List[float]
    abs_error: List[float]
    truncation_deficit: float
    max_imaginary: float
    warnings: List[str] = Field(default_factory=list)


class PolarizationReport(BaseModel):
    """Polarization matrix built from coherent-state Stokes parameters."""

    alpha: List[ComplexPair]
    stokes: List[float]
    J: List[List[ComplexPair]]
    eigenvalues: List[float]
    trace: float
    reduced_2d: Optional[List[List[ComplexPair]]] = None
    stokes_2d: Optional[List[float]] = None


class EllipseReport(BaseModel):
    """Full geometry of the orbit generated by (a, b)."""

    a: Vector3
    b: Vector3
    stokes_canonical: List[float]
    stokes_geometric: List[float]
    L: Vector3
    energy: float
    theta: Optional[float] = None
    phi: Optional[float] = None
    quadric: EllipsoidQuadric
    runge: List[List[float]]
    eigenvalues: List[float]
    semi_axes: List[float]
    semi_axes_bruteforce: Optional[List[float]] = None
    axes: Optional[List[List[float]]] = None
    line_of_nodes: Optional[Vector3] = None
    degenerate: Optional[str] = None
    degenerate_flags: OrbitClass


class IngestReport(EllipseReport):
    """Ellipse report for fitted initial conditions plus the fit diagnostics."""

    fit_residuals: List[float]
    n_samples: int
    omega: float
    condition_number: float


class RunConfiguration(BaseModel):
    """Validated command-line run."""

    command: Command
    cutoff: int = Field(ge=2)
    tolerance: Optional[float] = Field(default=None, gt=0)
    seed: int
    out: Optional[Path] = None
    file: Optional[Path] = None
    omega: Optional[float] = Field(default=None, gt=0)
    samples: Optional[int] = Field(default=None, ge=4)
    emit_orbit: Optional[Path] = None
    alpha: Optional[List[complex]] = Field(default=None, min_length=3, max_length=3)
    a: Optional[Vector3] = None
    b: Optional[Vector3] = None
