"""
Acceptance run for the generalized Stokes operator library.

Sections:
1. SU(3) matrix closure
2. Trace orthogonality
3. Constants of motion on the Fock space
4. SU(3) closure on the Fock space
5. Angular momentum identification
6. Classical limit of coherent states
7. Polarization matrix
8. Ellipsoid consistency
9. Angular momentum and Euler angles
10. Runge tensor
11. Pure-state identities
12. Ingestion
"""
import math
import sys
import time
from pathlib import Path
from typing import Callable, Dict, List

import numpy as np

sys.path.insert(0, str(Path(__file__).parent.parent))

from stokes3d.algebra.su3 import check_su3_closure, check_trace_orthogonality
from stokes3d.classical.ellipse import (
    check_cross_convention,
    check_eigenvalue_closed_form,
    check_orbit_on_quadric,
    check_orbit_planarity,
    check_runge_invariance,
    check_stokes_forms,
    ellipse_geometry,
    euler_angles,
    semi_axes_bruteforce,
)
from stokes3d.classical.orbit import random_initial_conditions
from stokes3d.config import settings
from stokes3d.fock.basis import FockBasis
from stokes3d.ingest.signal import fit_initial_conditions, sample_orbit
from stokes3d.polarization.matrix import check_rank_one, check_round_trip
from stokes3d.quantum.coherent import (
    check_classical_limit,
    check_pure_state_identities,
    random_amplitudes,
    stokes_closed_form,
)
from stokes3d.quantum.stokes_operators import (
    check_angular_momentum,
    check_conservation,
    check_fock_su3_closure,
)
from stokes3d.schemas.geometry import InitialConditions
from stokes3d.schemas.reports import VerificationReport
from stokes3d.schemas.stokes import Convention, StokesVector

SEED = settings.default_seed
FOCK_CUTOFF = 8


def _report(*reports: VerificationReport) -> bool:
    for report in reports:
        status = "ok" if report.passed else "FAILED"
        print(
            f"  {report.name:<32} max residual {report.max_residual:.3e} "
            f"(tol {report.tolerance:.0e}, {report.n_checked} items) {status}"
        )
    return all(report.passed for report in reports)


def _random_ics(n: int = 100) -> List[InitialConditions]:
    rng = np.random.default_rng(SEED)
    return [random_initial_conditions(rng) for _ in range(n)]


def test_su3_closure() -> bool:
    return _report(check_su3_closure(1e-14))


def test_trace_orthogonality() -> bool:
    return _report(check_trace_orthogonality(1e-15))


def test_conservation() -> bool:
    return _report(check_conservation(FockBasis(FOCK_CUTOFF), 1e-12))


def test_fock_closure() -> bool:
    return _report(check_fock_su3_closure(FockBasis(FOCK_CUTOFF), 1e-12))


def test_angular_momentum() -> bool:
    return _report(check_angular_momentum(FockBasis(FOCK_CUTOFF), 1e-13))


def test_classical_limit() -> bool:
    rng = np.random.default_rng(SEED)
    alphas = [random_amplitudes(rng, 1.2) for _ in range(50)]
    return _report(check_classical_limit(FockBasis(16), alphas, 1e-9))


def test_polarization() -> bool:
    rng = np.random.default_rng(SEED)
    vectors = [
        StokesVector(values=rng.uniform(-1, 1, 9), convention=Convention.CANONICAL)
        for _ in range(100)
    ]
    alphas = [random_amplitudes(rng, 1.2) for _ in range(100)]
    return _report(check_round_trip(vectors, 1e-13), check_rank_one(alphas, 1e-13))


def test_ellipsoid() -> bool:
    ics = _random_ics()
    return _report(
        check_stokes_forms(ics, 1e-12),
        check_orbit_on_quadric(ics, 1e-10),
        check_orbit_planarity(ics, 1e-12)
    )


def test_euler_angles() -> bool:
    theta, phi = euler_angles((0.0, -1.0, 0.0))
    worked = abs(theta - math.pi / 2) <= 1e-12 and abs(phi - math.pi) <= 1e-12
    print(f"  worked case a=(1,0,0), b=(0,0,1): theta={theta:.15f}, phi={phi:.15f}")
    return _report(check_cross_convention(_random_ics(), 1e-13)) and worked


def test_runge() -> bool:
    ics = _random_ics()
    passed = _report(
        check_stokes_forms(ics, 1e-12),
        check_runge_invariance(ics, 1e-12),
        check_eigenvalue_closed_form(ics, 1e-10)
    )
    worst = 0.0
    for ic in ics[:20]:
        geometry = ellipse_geometry(ic)
        brute = semi_axes_bruteforce(ic, settings.bruteforce_samples)
        worst = max(worst, abs(geometry.semi_major - brute[0]), abs(geometry.semi_minor - brute[1]))
    print(f"  semi-axes against brute force: max deviation {worst:.3e} (tol 1e-06)")
    return passed and worst <= 1e-6


def test_pure_state() -> bool:
    rng = np.random.default_rng(SEED)
    vectors = [stokes_closed_form(random_amplitudes(rng, 1.2)) for _ in range(100)]
    return _report(check_pure_state_identities(vectors, 1e-12))


def test_ingestion() -> bool:
    ic = InitialConditions(a=(2.0, 0.0, 0.0), b=(0.0, 1.0, 0.0))
    exact = fit_initial_conditions(sample_orbit(ic, [0, math.pi / 4, math.pi / 2, 3 * math.pi / 4]))
    error = max(
        np.max(np.abs(exact.initial_conditions.a_vec - ic.a_vec)),
        np.max(np.abs(exact.initial_conditions.b_vec - ic.b_vec))
    )
    print(f"  noise-free recovery error {error:.3e} (tol 1e-10)")

    times = np.linspace(0.0, 2.0 * math.pi, 200, endpoint=False)
    within = 0
    for trial in range(100):
        rng = np.random.default_rng(SEED + trial)
        fitted = fit_initial_conditions(sample_orbit(ic, times, noise=0.01, rng=rng))
        deviation = max(
            np.max(np.abs(fitted.initial_conditions.a_vec - ic.a_vec)),
            np.max(np.abs(fitted.initial_conditions.b_vec - ic.b_vec))
        )
        within += deviation <= 0.05
    print(f"  noisy trials within 0.05: {within}/100 (need 95)")
    return error <= 1e-10 and within >= 95


SECTIONS: Dict[str, Callable[[], bool]] = {
    "su3_closure": test_su3_closure,
    "trace_orthogonality": test_trace_orthogonality,
    "conservation": test_conservation,
    "fock_su3_closure": test_fock_closure,
    "angular_momentum": test_angular_momentum,
    "classical_limit": test_classical_limit,
    "polarization_matrix": test_polarization,
    "ellipsoid": test_ellipsoid,
    "euler_angles": test_euler_angles,
    "runge_tensor": test_runge,
    "pure_state_identities": test_pure_state,
    "ingestion": test_ingestion,
}


def run_all_sections() -> int:
    """Run every section and print a summary table."""
    print("\n" + "=" * 70)
    print(" GENERALIZED STOKES OPERATORS - ACCEPTANCE")
    print("=" * 70)

    results: Dict[str, bool] = {}
    for number, (name, section) in enumerate(SECTIONS.items(), start=1):
        print(f"\n{number}. {name}")
        started = time.perf_counter()
        try:
            results[name] = section()
        except Exception as e:
            print(f"  error: {type(e).__name__}: {e}")
            results[name] = False
        print(f"  ({time.perf_counter() - started:.2f}s)")

    print("\n" + "=" * 70)
    print(" SUMMARY")
    print("=" * 70)
    for name, passed in results.items():
        print(f"{name:.<50} {'PASSED' if passed else 'FAILED'}")

    total, passed = len(results), sum(results.values())
    print("=" * 70)
    print(f"Total: {passed}/{total} sections passed")
    return 0 if passed == total else 1


if __name__ == "__main__":
    sys.exit(run_all_sections())
