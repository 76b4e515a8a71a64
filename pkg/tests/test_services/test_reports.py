import json
import math

import numpy as np
import pytest

from stokes3d import __version__
from stokes3d.exceptions import ReportSerializationError
from stokes3d.schemas.geometry import InitialConditions
from stokes3d.schemas.stokes import CoherentAmplitudes, Convention
from stokes3d.services.reports import ReportService, report_service


@pytest.mark.parametrize(
    "value, text",
    [
        (0.1, "0.10000000000000001"),
        (2.0, "2.0"),
        (-3.0, "-3.0"),
        (1e-20, "1e-20"),
        (1e20, "1e+20"),
    ],
)
def test_format_float(value, text):
    assert report_service.format_float(value) == text


@pytest.mark.parametrize("value", [float("nan"), float("inf"), -float("inf")])
def test_format_float_rejects_non_finite(value):
    with pytest.raises(ReportSerializationError):
        report_service.format_float(value)


def test_precision_is_configurable():
    assert ReportService(precision=3).format_float(math.pi) == "3.14"


def test_empty_results_keep_metadata():
    document = json.loads(report_service.format_report("verify", None))
    assert document == {
        "metadata": {"command": "verify", "name": "stokes3d", "version": __version__},
        "results": {},
    }


def test_rendering_sorts_keys_and_indents():
    text = report_service.format_report("expect", {"b": 1, "a": [True, None]})
    assert text.endswith("}\n")
    assert text.index('"a"') < text.index('"b"')
    assert '\n      true,\n' in text
    assert json.loads(text)["results"] == {"a": [True, None], "b": 1}


def test_rendering_handles_numpy_complex_and_enums():
    text = report_service.format_report(
        "expect",
        {"array": np.array([1.5, 2.0]), "z": 1 + 2j, "tag": Convention.GEOMETRIC, "n": np.int64(3)},
    )
    results = json.loads(text)["results"]
    assert results == {"array": [1.5, 2.0], "n": 3, "tag": "geometric", "z": [1.0, 2.0]}


def test_rendering_is_byte_stable(ellipse_ic):
    first = report_service.format_report("ellipse", report_service.build_ellipse_report(ellipse_ic))
    second = report_service.format_report("ellipse", report_service.build_ellipse_report(ellipse_ic))
    assert first == second


def test_nan_anywhere_is_rejected():
    with pytest.raises(ReportSerializationError):
        report_service.format_report("ellipse", {"nested": [[0.0, float("nan")]]})


def test_unknown_types_are_rejected():
    with pytest.raises(ReportSerializationError):
        report_service.format_report("ellipse", {"value": object()})


def test_expectation_report(alpha_plane):
    report = report_service.build_expectation_report(alpha_plane, 12)
    assert report.cutoff == 12
    assert report.closed_form[2] == pytest.approx(2.0)
    assert report.alpha == [[1.0, 0.0], [0.0, 1.0], [0.0, 0.0]]
    assert max(report.abs_error) <= 1e-6
    assert report.warnings == []


def test_polarization_report_reduces_planar_state(alpha_plane):
    report = report_service.build_polarization_report(alpha_plane)
    assert report.trace == pytest.approx(2.0)
    assert report.eigenvalues == pytest.approx([0.0, 0.0, 2.0], abs=1e-13)
    assert report.stokes_2d == pytest.approx([2.0, 0.0, 2.0, 0.0], abs=1e-13)
    assert report.J[0][1] == pytest.approx([0.0, -1.0])


def test_polarization_report_without_reduction():
    report = report_service.build_polarization_report(CoherentAmplitudes.of(1.0, 0.0, 0.5j))
    assert report.reduced_2d is None
    assert report.stokes_2d is None


def test_ellipse_report_worked_example(ellipse_ic):
    report = report_service.build_ellipse_report(ellipse_ic, bruteforce_samples=4096)
    assert report.L == (0.0, 0.0, 2.0)
    assert report.energy == pytest.approx(2.5)
    assert report.theta == pytest.approx(0.0)
    assert report.phi == 0.0
    assert report.eigenvalues == pytest.approx([2.0, 0.5, 0.0])
    assert report.semi_axes == pytest.approx([2.0, 1.0])
    assert report.semi_axes_bruteforce == pytest.approx([2.0, 1.0], abs=1e-6)
    assert report.line_of_nodes == (1.0, 0.0, 0.0)
    assert report.stokes_geometric == pytest.approx([5, 0, -4, 3, 0, 0, 0, 0, 5], abs=1e-14)
    assert report.quadric.c == pytest.approx(4.0)
    assert report.degenerate is None


def test_ellipse_report_for_rest():
    report = report_service.build_ellipse_report(InitialConditions(a=(0, 0, 0), b=(0, 0, 0)))
    assert report.degenerate == "rest"
    assert report.degenerate_flags.rest
    assert report.semi_axes == [0.0, 0.0]
    assert report.theta is None and report.phi is None
    assert report.axes is None and report.line_of_nodes is None


def test_ellipse_report_for_linear_orbit():
    report = report_service.build_ellipse_report(
        InitialConditions(a=(3.0, 0.0, 0.0), b=(0.0, 0.0, 0.0))
    )
    assert report.degenerate == "linear"
    assert report.semi_axes == pytest.approx([3.0, 0.0])
    assert report.eigenvalues == pytest.approx([4.5, 0.0, 0.0])


def test_ellipse_report_flags_circle(circle_ic):
    report = report_service.build_ellipse_report(circle_ic)
    assert report.degenerate is None
    assert report.degenerate_flags.circular
    assert report.semi_axes == pytest.approx([1.0, 1.0])
