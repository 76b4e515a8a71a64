"""Command-line entry point: verification suites, expectations, ellipse geometry and ingestion."""
import argparse
import logging
import sys
from pathlib import Path
from typing import Any, Callable, List, Optional, Sequence, Tuple

from pydantic import ValidationError

from stokes3d import __version__
from stokes3d.config import settings
from stokes3d.exceptions import Stokes3DError
from stokes3d.ingest.signal import analyze, read_field_samples, write_orbit_csv
from stokes3d.schemas.geometry import InitialConditions
from stokes3d.schemas.reports import RunConfiguration
from stokes3d.schemas.stokes import CoherentAmplitudes
from stokes3d.services.reports import report_service
from stokes3d.utils.parsing import parse_complex, parse_vector3
from stokes3d.verification.suites import run_verification

logger = logging.getLogger(__name__)

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"


def _argument(parse: Callable[[str], Any]) -> Callable[[str], Any]:
    """Adapt a parser so argparse reports its failures as usage errors."""
    def convert(text: str) -> Any:
        try:
            return parse(text)
        except Stokes3DError as e:
            raise argparse.ArgumentTypeError(e.message) from e
    convert.__name__ = parse.__name__
    return convert


def build_parser() -> argparse.ArgumentParser:
    """Parser with the five subcommands; defaults are read from ``settings``."""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", type=Path, help="write the JSON report here instead of stdout")
    common.add_argument("--log-level", default=None, help="logging level (default from settings)")
    common.add_argument("--seed", type=int, default=None, help="seed for randomized sweeps")

    parser = argparse.ArgumentParser(
        prog="stokes3d",
        description="Generalized quantum Stokes operators and polarization-ellipse geometry."
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    commands = parser.add_subparsers(dest="command", metavar="COMMAND")

    verify = commands.add_parser("verify", parents=[common], help="run the verification suite")
    verify.add_argument("--cutoff", type=int, default=None)
    verify.add_argument("--tol", type=float, default=None, help="override every tolerance")

    expect = commands.add_parser(
        "expect", parents=[common], help="coherent-state Stokes expectations"
    )
    expect.add_argument(
        "--alpha", nargs=3, type=_argument(parse_complex), required=True, metavar="RE,IM"
    )
    expect.add_argument("--cutoff", type=int, default=None)

    ellipse = commands.add_parser("ellipse", parents=[common], help="orbit and ellipse geometry")
    ellipse.add_argument("--a", type=_argument(parse_vector3), required=True, metavar="X,Y,Z")
    ellipse.add_argument("--b", type=_argument(parse_vector3), required=True, metavar="X,Y,Z")
    ellipse.add_argument("--samples", type=int, default=None, help="brute-force semi-axes samples")
    ellipse.add_argument("--emit-orbit", type=Path, default=None, help="write the orbit as CSV")

    polmatrix = commands.add_parser(
        "polmatrix", parents=[common], help="generalized polarization matrix"
    )
    polmatrix.add_argument(
        "--alpha", nargs=3, type=_argument(parse_complex), required=True, metavar="RE,IM"
    )
    polmatrix.add_argument("--tol", type=float, default=None, help="2D reduction threshold")

    ingest = commands.add_parser("ingest", parents=[common], help="fit sampled field data")
    ingest.add_argument("--file", type=Path, required=True)
    ingest.add_argument("--omega", type=float, default=None)
    ingest.add_argument("--samples", type=int, default=None, help="brute-force semi-axes samples")
    return parser


def configure_logging(level: Optional[str] = None) -> None:
    """Log to stderr so stdout carries only the JSON report."""
    name = (level or settings.log_level).upper()
    logging.basicConfig(
        level=getattr(logging, name, logging.INFO),
        format=LOG_FORMAT,
        stream=sys.stderr
    )


def to_run_configuration(args: argparse.Namespace) -> RunConfiguration:
    """
    Validate parsed arguments.

    Raises:
        ValidationError: On cutoff < 2, a non-positive tolerance or omega, or samples < 4
    """
    cutoff = getattr(args, "cutoff", None)
    return RunConfiguration(
        command=args.command,
        cutoff=settings.default_cutoff if cutoff is None else cutoff,
        tolerance=getattr(args, "tol", None),
        seed=settings.default_seed if args.seed is None else args.seed,
        out=args.out,
        file=getattr(args, "file", None),
        omega=getattr(args, "omega", None),
        samples=getattr(args, "samples", None),
        emit_orbit=getattr(args, "emit_orbit", None),
        alpha=getattr(args, "alpha", None),
        a=getattr(args, "a", None),
        b=getattr(args, "b", None)
    )


def run(config: RunConfiguration) -> Tuple[int, Any]:
    """
    Execute one command.

    Returns:
        (exit code, results) where the exit code is 1 only for a failed verification
    """
    logger.info(f"Running {config.command}")

    if config.command == "verify":
        summary = run_verification(config.cutoff, config.seed, config.tolerance)
        results = {
            "cutoff": summary.cutoff,
            "seed": summary.seed,
            "passed": summary.passed,
            "failed_checks": summary.failed_checks,
            "checks": {check.name: check for check in summary.checks},
        }
        return (0 if summary.passed else 1), results

    if config.command == "expect":
        alpha = CoherentAmplitudes(alphas=config.alpha)
        return 0, report_service.build_expectation_report(alpha, config.cutoff)

    if config.command == "polmatrix":
        alpha = CoherentAmplitudes(alphas=config.alpha)
        return 0, report_service.build_polarization_report(alpha, config.tolerance)

    if config.command == "ellipse":
        ic = InitialConditions(a=config.a, b=config.b)
        if config.emit_orbit is not None:
            write_orbit_csv(ic, config.emit_orbit)
        return 0, report_service.build_ellipse_report(ic, config.samples)

    series = read_field_samples(config.file, config.omega)
    return 0, analyze(series, config.samples)


def _emit(text: str, out: Optional[Path]) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    out.write_text(text, encoding="utf-8")
    logger.info(f"Report written to {out}")


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    Parse arguments, run the command and write its report.

    Exit codes: 0 success, 1 failed verification or internal error, 2 input/usage error.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code) if isinstance(e.code, int) else 2
    configure_logging(getattr(args, "log_level", None))

    if args.command is None:
        parser.print_usage(sys.stderr)
        return 2

    try:
        config = to_run_configuration(args)
    except ValidationError as e:
        errors: List[str] = [f"{'.'.join(map(str, err['loc']))}: {err['msg']}" for err in e.errors()]
        logger.error(f"Invalid arguments: {'; '.join(errors)}")
        return 2

    try:
        code, results = run(config)
        _emit(report_service.format_report(config.command, results), config.out)
    except Stokes3DError as e:
        logger.error(f"{type(e).__name__}: {e.message}")
        return e.exit_code
    except Exception as e:
        logger.error(f"Unexpected error in {config.command}: {type(e).__name__}: {e}", exc_info=True)
        return 1

    logger.info(f"Finished {config.command} with exit code {code}")
    return code


if __name__ == "__main__":
    sys.exit(main())
