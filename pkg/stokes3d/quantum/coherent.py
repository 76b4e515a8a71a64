"""Three-mode coherent states and the classical limit of the Stokes operators."""
import logging
import math
from typing import Dict, Iterable, Optional, Sequence, Tuple

import numpy as np

from stokes3d.config import settings
from stokes3d.exceptions import ConventionError, NumericError
from stokes3d.fock.basis import FockBasis, StateVector
from stokes3d.fock.operators import expectation
from stokes3d.quantum.stokes_operators import StokesOperatorSet, stokes_operators
from stokes3d.schemas.reports import VerificationReport
from stokes3d.schemas.stokes import (
    CoherentAmplitudes,
    Convention,
    StokesExpectation,
    StokesVector,
    principal_angle,
)

logger = logging.getLogger(__name__)

SQRT3 = math.sqrt(3.0)
MAX_IMAGINARY = 1e-12


def _mode_coefficients(alpha: complex, levels: int) -> np.ndarray:
    """alpha^n / sqrt(n!) for n = 0..levels-1, by running product."""
    n = np.arange(1, levels)
    steps = np.concatenate(([1.0 + 0.0j], alpha / np.sqrt(n)))
    return np.cumprod(steps)


def coherent_state(alpha: CoherentAmplitudes, basis: FockBasis) -> StateVector:
    """
    Truncated three-mode coherent state |alpha_1, alpha_2, alpha_3>.

    Coefficients are exp(-sum|alpha_i|^2 / 2) prod_i alpha_i^{n_i} / sqrt(n_i!); states above
    the cutoff are dropped, so the norm is slightly below one.

    Args:
        alpha: Mode amplitudes
        basis: Fock basis

    Returns:
        State vector on the basis
    """
    per_mode = [_mode_coefficients(a, basis.levels) for a in alpha.alphas]
    normalization = math.exp(-alpha.total_intensity / 2.0)
    coefficients = normalization * np.einsum("i,j,k->ijk", *per_mode).ravel()
    state = StateVector(basis, coefficients)
    logger.debug(
        f"coherent state {alpha.alphas} on {basis!r}: deficit {truncation_deficit(state):.3e}"
    )
    return state


def truncation_deficit(state: StateVector) -> float:
    """1 - ||state||^2: probability weight lost above the cutoff."""
    return 1.0 - state.norm_squared()


def stokes_from_polar(
    moduli: Sequence[float],
    phases: Sequence[float],
    convention: Convention
) -> StokesVector:
    """
    Evaluate the classical Stokes parameters from amplitudes |alpha_0i| and phases phi_i.

    s_8 carries the 1/sqrt(3) of the operator definition in the canonical convention and is
    left unscaled in the geometric one.

    Args:
        moduli: |alpha_01|, |alpha_02|, |alpha_03|
        phases: phi_1, phi_2, phi_3 (radians)
        convention: Tag for the result (selects the s_8 scaling)

    Returns:
        StokesVector tagged with ``convention``
    """
    r1, r2, r3 = (float(r) for r in moduli)
    d21 = principal_angle(phases[1] - phases[0])
    d31 = principal_angle(phases[2] - phases[0])
    d32 = principal_angle(phases[2] - phases[1])
    s8_scale = 1.0 / SQRT3 if convention is Convention.CANONICAL else 1.0
    values = [
        r1 ** 2 + r2 ** 2 + r3 ** 2,
        2 * r1 * r2 * math.cos(d21),
        2 * r1 * r2 * math.sin(d21),
        r1 ** 2 - r2 ** 2,
        2 * r1 * r3 * math.cos(d31),
        2 * r1 * r3 * math.sin(d31),
        2 * r2 * r3 * math.cos(d32),
        2 * r2 * r3 * math.sin(d32),
        (r1 ** 2 + r2 ** 2 - 2 * r3 ** 2) * s8_scale,
    ]
    return StokesVector(values=values, convention=convention)


def stokes_closed_form(alpha: CoherentAmplitudes) -> StokesVector:
    """Canonical classical Stokes parameters <Sigma_i> of a coherent state, in closed form."""
    return stokes_from_polar(alpha.moduli, alpha.phases, Convention.CANONICAL)


def stokes_expectation(
    alpha: CoherentAmplitudes,
    basis: FockBasis,
    operators: Optional[StokesOperatorSet] = None,
    warning_threshold: Optional[float] = None
) -> StokesExpectation:
    """
    Expectation values <alpha|Sigma_i|alpha> on the truncated basis.

    Args:
        alpha: Mode amplitudes
        basis: Fock basis
        operators: Prebuilt Stokes operators on ``basis`` (built and cached if omitted)
        warning_threshold: Truncation deficit above which a warning is attached

    Returns:
        Canonical StokesVector with the truncation deficit and any warnings

    Raises:
        NumericError: If an expectation of a Hermitian Sigma_i has imaginary part > 1e-12
    """
    operators = operators or stokes_operators(basis)
    threshold = settings.truncation_warning if warning_threshold is None else warning_threshold
    state = coherent_state(alpha, basis)
    values = [expectation(op, state) for op in operators]
    max_imaginary = max(abs(v.imag) for v in values)
    if max_imaginary > MAX_IMAGINARY:
        raise NumericError(
            f"Stokes expectation has imaginary part {max_imaginary:.3e} > {MAX_IMAGINARY}"
        )

    deficit = truncation_deficit(state)
    warnings = []
    if deficit > threshold:
        message = (
            f"truncation deficit {deficit:.3e} exceeds {threshold:.1e} at cutoff "
            f"{basis.cutoff}; raise the cutoff or lower |alpha|"
        )
        logger.warning(message)
        warnings.append(message)

    return StokesExpectation(
        stokes=StokesVector(values=[v.real for v in values], convention=Convention.CANONICAL),
        truncation_deficit=deficit,
        max_imaginary=max_imaginary,
        warnings=warnings
    )


def random_amplitudes(rng: np.random.Generator, bound: float) -> CoherentAmplitudes:
    """Amplitudes with |alpha_i| uniform in [0, bound] and uniform phases."""
    moduli = rng.uniform(0.0, bound, size=3)
    phases = rng.uniform(-math.pi, math.pi, size=3)
    return CoherentAmplitudes.from_polar(moduli, phases)


def check_classical_limit(
    basis: FockBasis,
    alphas: Iterable[CoherentAmplitudes],
    tolerance: float
) -> VerificationReport:
    """
    Compare truncated-Fock expectations with the closed form for each amplitude triple.

    Returns:
        Report keyed by trial number (max componentwise absolute error)
    """
    operators = stokes_operators(basis)
    residuals: Dict[Tuple[int, ...], float] = {}
    for trial, alpha in enumerate(alphas):
        measured = stokes_expectation(alpha, basis, operators=operators).stokes.as_array()
        closed = stokes_closed_form(alpha).as_array()
        residuals[(trial,)] = float(np.max(np.abs(measured - closed)))
    return VerificationReport.from_residuals(
        "classical_limit", residuals, tolerance, "coherent expectations match the closed form"
    )


def occupations_from_stokes(s: StokesVector) -> Tuple[float, float, float]:
    """
    Mean photon numbers (n1, n2, n3) recovered from (s_0, s_3, s_8).

    Raises:
        ConventionError: If ``s`` is not canonical
    """
    if s.convention is not Convention.CANONICAL:
        raise ConventionError("occupations are read from canonical Stokes parameters")
    n3 = (s[0] - SQRT3 * s[8]) / 3.0
    pair = s[0] - n3
    return ((pair + s[3]) / 2.0, (pair - s[3]) / 2.0, n3)


def pure_state_residuals(s: StokesVector) -> Dict[str, float]:
    """
    Residuals of the identities every coherent-state Stokes vector satisfies.

    Only six of the nine parameters are independent; the remaining relations are
    s1^2 + s2^2 = 4 n1 n2, s4^2 + s5^2 = 4 n1 n3, s6^2 + s7^2 = 4 n2 n3,
    s1 s6 - s2 s7 = 2 n2 s4, s4 s6 + s5 s7 = 2 n3 s1, s5 s6 - s4 s7 = 2 n3 s2.

    Args:
        s: Canonical StokesVector

    Returns:
        Absolute residual per identity
    """
    n1, n2, n3 = occupations_from_stokes(s)
    v = s.values
    return {
        "s1^2+s2^2=4n1n2": abs(v[1] ** 2 + v[2] ** 2 - 4 * n1 * n2),
        "s4^2+s5^2=4n1n3": abs(v[4] ** 2 + v[5] ** 2 - 4 * n1 * n3),
        "s6^2+s7^2=4n2n3": abs(v[6] ** 2 + v[7] ** 2 - 4 * n2 * n3),
        "s1s6-s2s7=2n2s4": abs(v[1] * v[6] - v[2] * v[7] - 2 * n2 * v[4]),
        "s4s6+s5s7=2n3s1": abs(v[4] * v[6] + v[5] * v[7] - 2 * n3 * v[1]),
        "s5s6-s4s7=2n3s2": abs(v[5] * v[6] - v[4] * v[7] - 2 * n3 * v[2]),
    }


def check_pure_state_identities(
    stokes_vectors: Iterable[StokesVector],
    tolerance: float
) -> VerificationReport:
    """
    Check the pure-state identities on every vector.

    Returns:
        Report keyed by (trial, identity number)
    """
    residuals: Dict[Tuple[int, ...], float] = {}
    for trial, s in enumerate(stokes_vectors):
        for k, value in enumerate(pure_state_residuals(s).values()):
            residuals[(trial, k)] = value
    return VerificationReport.from_residuals(
        "pure_state_identities", residuals, tolerance, "six independent Stokes parameters"
    )
