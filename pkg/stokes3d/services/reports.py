"""Command reports and their deterministic JSON rendering."""
import json
import logging
import math
from enum import Enum
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence

import numpy as np
from pydantic import BaseModel

from stokes3d import __version__
from stokes3d.classical.ellipse import (
    angular_momentum_cl,
    classify_orbit,
    closed_form_eigenvalues,
    ellipse_geometry,
    ellipsoid_from_ic,
    line_of_nodes,
    runge_from_ic,
    semi_axes_bruteforce,
)
from stokes3d.classical.orbit import stokes_canonical, stokes_geometric
from stokes3d.config import settings
from stokes3d.exceptions import NotZPropagatingError, ReportSerializationError
from stokes3d.fock.basis import FockBasis
from stokes3d.polarization.matrix import (
    build_j3d,
    eigenvalues,
    reduce_to_2d,
    stokes_2d_from_block,
)
from stokes3d.quantum.coherent import stokes_closed_form, stokes_expectation
from stokes3d.schemas.geometry import InitialConditions
from stokes3d.schemas.reports import EllipseReport, ExpectationReport, PolarizationReport
from stokes3d.schemas.stokes import CoherentAmplitudes

logger = logging.getLogger(__name__)


def _pairs(values: Sequence[complex]) -> List[List[float]]:
    return [[float(z.real), float(z.imag)] for z in values]


def _complex_matrix(matrix: np.ndarray) -> List[List[List[float]]]:
    return [_pairs(row) for row in matrix]


class ReportService:
    """Builds the per-command result records and renders them as JSON text."""

    def __init__(self, precision: Optional[int] = None):
        """
        Initialize the service.

        Args:
            precision: Significant digits for floats (defaults to ``settings.report_precision``)
        """
        self.precision = settings.report_precision if precision is None else precision

    def build_expectation_report(
        self,
        alpha: CoherentAmplitudes,
        cutoff: int
    ) -> ExpectationReport:
        """Closed-form Stokes parameters against truncated-Fock expectations at ``cutoff``."""
        closed = stokes_closed_form(alpha).as_array()
        measured = stokes_expectation(alpha, FockBasis(cutoff))
        values = measured.stokes.as_array()
        return ExpectationReport(
            alpha=_pairs(alpha.alphas),
            cutoff=cutoff,
            closed_form=closed.tolist(),
            expectation=values.tolist(),
            abs_error=np.abs(values - closed).tolist(),
            truncation_deficit=measured.truncation_deficit,
            max_imaginary=measured.max_imaginary,
            warnings=measured.warnings
        )

    def build_polarization_report(
        self,
        alpha: CoherentAmplitudes,
        tolerance: Optional[float] = None
    ) -> PolarizationReport:
        """
        Polarization matrix of a coherent state, with its 2x2 reduction when z-propagating.

        Args:
            alpha: Mode amplitudes
            tolerance: Third row/column threshold (defaults to ``settings.tol_reduction``)
        """
        tolerance = settings.tol_reduction if tolerance is None else tolerance
        s = stokes_closed_form(alpha)
        J = build_j3d(s)
        reduced_2d, stokes_2d = None, None
        try:
            block = reduce_to_2d(J, tolerance)
            reduced_2d = _complex_matrix(block)
            stokes_2d = list(stokes_2d_from_block(block))
        except NotZPropagatingError as e:
            logger.info(f"No 2D reduction: {e.message}")
        return PolarizationReport(
            alpha=_pairs(alpha.alphas),
            stokes=list(s.values),
            J=_complex_matrix(J),
            eigenvalues=eigenvalues(J).tolist(),
            trace=float(np.trace(J).real),
            reduced_2d=reduced_2d,
            stokes_2d=stokes_2d
        )

    def build_ellipse_report(
        self,
        ic: InitialConditions,
        bruteforce_samples: Optional[int] = None
    ) -> EllipseReport:
        """
        Full geometry of the orbit through (a, b).

        Rest and linear orbits have no plane: their Euler angles, axes and node line are
        omitted and ``degenerate`` names the case.

        Args:
            ic: Initial conditions
            bruteforce_samples: When given, also report the sampled semi-axes oracle
        """
        flags = classify_orbit(ic)
        runge = runge_from_ic(ic)
        L = angular_momentum_cl(ic)
        fields: Dict[str, Any] = {
            "a": ic.a,
            "b": ic.b,
            "stokes_canonical": list(stokes_canonical(ic).values),
            "stokes_geometric": list(stokes_geometric(ic).values),
            "L": tuple(float(x) for x in L),
            "energy": runge.energy,
            "quadric": ellipsoid_from_ic(ic),
            "runge": runge.matrix.tolist(),
            "degenerate_flags": flags,
        }

        if flags.rest or flags.linear:
            lam_plus, lam_minus, lam_normal = closed_form_eigenvalues(runge.energy, 0.0)
            fields["eigenvalues"] = [lam_plus, lam_minus, lam_normal]
            fields["semi_axes"] = [math.sqrt(2.0 * lam_plus), 0.0]
            fields["degenerate"] = flags.label
            logger.info(f"Degenerate orbit ({flags.label}); plane-dependent outputs omitted")
        else:
            geometry = ellipse_geometry(ic)
            fields.update(
                theta=geometry.theta,
                phi=geometry.phi,
                eigenvalues=list(geometry.eigenvalues),
                semi_axes=list(geometry.semi_axes),
                axes=geometry.axes.tolist(),
                line_of_nodes=tuple(float(x) for x in line_of_nodes(L))
            )

        if bruteforce_samples is not None:
            fields["semi_axes_bruteforce"] = list(semi_axes_bruteforce(ic, bruteforce_samples))
        return EllipseReport(**fields)

    def envelope(self, command: str, results: Any) -> Dict[str, Any]:
        """Wrap results with the metadata header."""
        return {
            "metadata": {"name": settings.app_name, "version": __version__, "command": command},
            "results": {} if results is None else results,
        }

    def format_float(self, value: float) -> str:
        if not math.isfinite(value):
            raise ReportSerializationError(f"report contains a non-finite number ({value})")
        text = format(value, f".{self.precision}g")
        if "." not in text and "e" not in text:
            text += ".0"
        return text

    def _render(self, value: Any, depth: int) -> str:
        indent = "  " * (depth + 1)
        closing = "  " * depth
        if isinstance(value, BaseModel):
            return self._render(value.model_dump(), depth)
        if isinstance(value, Enum):
            return self._render(value.value, depth)
        if value is None:
            return "null"
        if isinstance(value, (bool, np.bool_)):
            return "true" if value else "false"
        if isinstance(value, (int, np.integer)):
            return str(int(value))
        if isinstance(value, (float, np.floating)):
            return self.format_float(float(value))
        if isinstance(value, complex):
            return self._render([value.real, value.imag], depth)
        if isinstance(value, (str, Path)):
            return json.dumps(str(value))
        if isinstance(value, np.ndarray):
            return self._render(value.tolist(), depth)
        if isinstance(value, dict):
            if not value:
                return "{}"
            items = [
                f"{indent}{json.dumps(str(key))}: {self._render(value[key], depth + 1)}"
                for key in sorted(value, key=str)
            ]
            return "{\n" + ",\n".join(items) + f"\n{closing}}}"
        if isinstance(value, (list, tuple)):
            if not value:
                return "[]"
            items = [f"{indent}{self._render(item, depth + 1)}" for item in value]
            return "[\n" + ",\n".join(items) + f"\n{closing}]"
        raise ReportSerializationError(f"cannot serialize {type(value).__name__}")

    def format_report(self, command: str, results: Any) -> str:
        """
        Render a command result as JSON.

        Keys are sorted, indentation is two spaces and floats carry ``precision``
        significant digits, so identical inputs give byte-identical text.

        Raises:
            ReportSerializationError: If the results contain NaN or infinity
        """
        return self._render(self.envelope(command, results), 0) + "\n"


# Global service instance
report_service = ReportService()
