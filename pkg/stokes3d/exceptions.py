"""Error hierarchy; every error carries the exit code the CLI returns for it."""


class Stokes3DError(Exception):
    """Base error for the package."""

    exit_code: int = 2

    def __init__(self, message: str):
        super().__init__(message)
        self.message = message


class ArgumentError(Stokes3DError, ValueError):
    """Argument or precondition violation."""


class BasisMismatchError(ArgumentError):
    """Operator and state (or two operators) live on different Fock bases."""


class ConventionError(ArgumentError):
    """StokesVector carries the wrong convention tag for the requested operation."""


class NonHermitianError(ArgumentError):
    """Matrix expected to be Hermitian is not, beyond tolerance."""


class NotZPropagatingError(Stokes3DError):
    """Polarization matrix has third-mode content; no 2D reduction exists."""


class DegenerateOrbitError(Stokes3DError):
    """Zero angular momentum: the orbit is a segment (or a point) and has no plane."""


class IdentifiabilityError(Stokes3DError):
    """Sample times do not determine the initial conditions."""


class InputFormatError(Stokes3DError, ValueError):
    """Malformed CSV or argument text."""


class NumericError(Stokes3DError):
    """An iterative numeric routine failed to converge."""

    exit_code = 1


class ReportSerializationError(Stokes3DError):
    """Report contains a value that has no JSON representation (NaN, infinity)."""

    exit_code = 1
