"""Pydantic models shared across the package and written into reports."""
from stokes3d.schemas.stokes import (
    Convention,
    CoherentAmplitudes,
    GeometricAmplitudes,
    StokesExpectation,
    StokesVector,
)
from stokes3d.schemas.geometry import (
    InitialConditions,
    EllipsoidQuadric,
    RungeTensor,
    EllipseGeometry,
    OrbitClass,
)
from stokes3d.schemas.ingest import FieldSampleSeries, FitResult
from stokes3d.schemas.reports import (
    VerificationReport,
    VerificationSummary,
    ExpectationReport,
    PolarizationReport,
    EllipseReport,
    IngestReport,
    RunConfiguration,
)

__all__ = [
    "Convention",
    "CoherentAmplitudes",
    "GeometricAmplitudes",
    "StokesExpectation",
    "StokesVector",
    "InitialConditions",
    "EllipsoidQuadric",
    "RungeTensor",
    "EllipseGeometry",
    "OrbitClass",
    "FieldSampleSeries",
    "FitResult",
    "VerificationReport",
    "VerificationSummary",
    "ExpectationReport",
    "PolarizationReport",
    "EllipseReport",
    "IngestReport",
    "RunConfiguration",
]
