"""Estimate orbit initial conditions from sampled three-component field data."""
import io
import logging
import math
from pathlib import Path
from typing import Optional, Sequence, Union

import numpy as np
from pydantic import ValidationError

from stokes3d.classical.orbit import orbit_position
from stokes3d.config import settings
from stokes3d.exceptions import IdentifiabilityError, InputFormatError
from stokes3d.schemas.geometry import InitialConditions
from stokes3d.schemas.ingest import FieldSampleSeries, FitResult
from stokes3d.schemas.reports import IngestReport
from stokes3d.services.reports import report_service

logger = logging.getLogger(__name__)

HEADER = ("t", "x1", "x2", "x3")

PathLike = Union[str, Path]


def read_field_samples(path: PathLike, omega: Optional[float] = None) -> FieldSampleSeries:
    """
    Read a CSV of field samples.

    The first data line must be the header ``t,x1,x2,x3``; lines starting with ``#`` and
    blank lines are skipped.

    Args:
        path: CSV file
        omega: Angular frequency used to rescale the times (1 if omitted)

    Returns:
        FieldSampleSeries

    Raises:
        InputFormatError: If the file is missing, the header is wrong or a row is malformed
    """
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise InputFormatError(f"cannot read {path}: {e}") from e

    lines = [
        line.strip() for line in text.splitlines()
        if line.strip() and not line.lstrip().startswith("#")
    ]
    if not lines:
        raise InputFormatError(f"{path} has no header")
    header = tuple(column.strip() for column in lines[0].split(","))
    if header != HEADER:
        raise InputFormatError(f"{path}: expected header {','.join(HEADER)}, got {lines[0]!r}")
    if len(lines) == 1:
        raise InputFormatError(f"{path} has no sample rows")

    try:
        data = np.loadtxt(io.StringIO("\n".join(lines[1:])), delimiter=",", ndmin=2)
    except ValueError as e:
        raise InputFormatError(f"{path}: malformed sample row ({e})") from e
    if data.shape[1] != 4:
        raise InputFormatError(f"{path}: expected 4 columns, got {data.shape[1]}")

    try:
        series = FieldSampleSeries(times=data[:, 0], samples=data[:, 1:], omega=omega)
    except ValidationError as e:
        raise InputFormatError(f"{path}: {e.errors()[0]['msg']}") from e
    logger.info(f"Read {len(series)} field samples from {path}")
    return series


def fit_initial_conditions(
    series: FieldSampleSeries,
    max_condition: Optional[float] = None
) -> FitResult:
    """
    Least-squares fit of x(t) = a cos t + b sin t to every component.

    Solves the 2x2 normal equations once for all three components.

    Args:
        series: Field samples (times rescaled by omega)
        max_condition: Largest acceptable condition number of the normal matrix
            (defaults to ``settings.identifiability_condition``)

    Returns:
        FitResult with the fitted (a, b) and RMS residual per component

    Raises:
        IdentifiabilityError: With fewer than 2 distinct times or an ill-conditioned design
    """
    max_condition = settings.identifiability_condition if max_condition is None else max_condition
    t = series.scaled_times
    X = series.sample_array
    if np.unique(t).size < 2:
        raise IdentifiabilityError("at least 2 distinct sample times are required")

    design = np.column_stack([np.cos(t), np.sin(t)])
    normal = design.T @ design
    with np.errstate(divide="ignore", invalid="ignore"):
        condition = float(np.linalg.cond(normal))
    if not math.isfinite(condition) or condition > max_condition:
        raise IdentifiabilityError(
            f"sample times do not determine (a, b): normal-matrix condition number {condition:.3e}"
        )

    coefficients = np.linalg.solve(normal, design.T @ X)
    fitted = design @ coefficients
    residuals = np.sqrt(np.mean((X - fitted) ** 2, axis=0))
    ic = InitialConditions(a=coefficients[0], b=coefficients[1])
    omega = series.omega if series.omega is not None else 1.0
    logger.info(
        f"Fitted {len(series)} samples: a={ic.a}, b={ic.b}, "
        f"rms residual max {float(residuals.max()):.3e}, condition {condition:.2e}"
    )
    return FitResult(
        initial_conditions=ic,
        residuals=tuple(float(r) for r in residuals),
        condition_number=condition,
        n_samples=len(series),
        omega=omega
    )


def sample_orbit(
    ic: InitialConditions,
    times: Sequence[float],
    noise: float = 0.0,
    rng: Optional[np.random.Generator] = None,
    omega: Optional[float] = None
) -> FieldSampleSeries:
    """
    Synthetic samples of the orbit, with optional Gaussian noise of standard deviation ``noise``.

    ``times`` are physical times; the orbit is evaluated at omega t.
    """
    times = np.asarray(times, dtype=float)
    scale = omega if omega is not None else 1.0
    samples = orbit_position(ic, scale * times)
    if noise > 0:
        rng = rng or np.random.default_rng(settings.default_seed)
        samples = samples + rng.normal(0.0, noise, size=samples.shape)
    return FieldSampleSeries(times=times, samples=samples, omega=omega)


def write_orbit_csv(ic: InitialConditions, path: PathLike, samples: Optional[int] = None) -> Path:
    """
    Write one period of the orbit as CSV ``t,x1,x2,x3``.

    Args:
        ic: Initial conditions
        path: Output file
        samples: Number of rows over [0, 2 pi) (defaults to ``settings.orbit_samples``)

    Returns:
        The path written
    """
    samples = settings.orbit_samples if samples is None else samples
    path = Path(path)
    times = np.linspace(0.0, 2.0 * math.pi, samples, endpoint=False)
    rows = np.column_stack([times, orbit_position(ic, times)])
    np.savetxt(path, rows, delimiter=",", header=",".join(HEADER), comments="", fmt="%.17g")
    logger.info(f"Wrote {samples} orbit samples to {path}")
    return path


def analyze(series: FieldSampleSeries, bruteforce_samples: Optional[int] = None) -> IngestReport:
    """
    Fit the series and report the full ellipse geometry of the fitted orbit.

    Degenerate fitted orbits are reported through the flags, not raised.

    Raises:
        IdentifiabilityError: If the fit is not determined
    """
    fit = fit_initial_conditions(series)
    ellipse = report_service.build_ellipse_report(fit.initial_conditions, bruteforce_samples)
    return IngestReport(
        **ellipse.model_dump(),
        fit_residuals=fit.fit_residuals,
        n_samples=fit.n_samples,
        omega=fit.omega,
        condition_number=fit.condition_number
    )
