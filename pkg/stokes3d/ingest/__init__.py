"""Field-sample ingestion and initial-condition fitting."""
from stokes3d.ingest.signal import (
    analyze,
    fit_initial_conditions,
    read_field_samples,
    sample_orbit,
    write_orbit_csv,
)

__all__ = [
    "analyze",
    "fit_initial_conditions",
    "read_field_samples",
    "sample_orbit",
    "write_orbit_csv",
]
