"""The verification suite behind the ``verify`` command."""
import logging
import time
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, List, Optional, Tuple

import numpy as np

from stokes3d.algebra.su3 import (
    check_antisymmetry,
    check_hermiticity,
    check_su2_closure,
    check_su3_closure,
    check_trace_orthogonality,
)
from stokes3d.classical.ellipse import (
    check_cross_convention,
    check_eigenvalue_closed_form,
    check_orbit_on_quadric,
    check_orbit_planarity,
    check_reconstruction,
    check_runge_invariance,
    check_stokes_forms,
)
from stokes3d.classical.orbit import random_initial_conditions
from stokes3d.config import Settings, settings
from stokes3d.fock.basis import FockBasis
from stokes3d.fock.operators import check_canonical_commutation, check_cross_mode_commutation
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
    check_jordan_schwinger_homomorphism,
    check_stokes_hermiticity,
    check_two_mode_sector,
)
from stokes3d.schemas.reports import VerificationReport, VerificationSummary
from stokes3d.schemas.stokes import Convention, StokesVector

logger = logging.getLogger(__name__)

Check = Tuple[str, Callable[[], VerificationReport]]


class VerificationSuite:
    """
    Every algebraic, Fock-space, classical-limit and geometry check in one run.

    Random inputs are drawn once from a generator seeded with ``seed`` before any check
    runs, so results do not depend on the order or concurrency of evaluation.
    """

    def __init__(
        self,
        cutoff: int,
        seed: int,
        config: Optional[Settings] = None,
        workers: Optional[int] = None
    ):
        self.config = config or settings
        self.cutoff = cutoff
        self.seed = seed
        self.workers = self.config.verify_workers if workers is None else workers

        rng = np.random.default_rng(seed)
        bound = self.config.random_alpha_bound
        self.alphas = [random_amplitudes(rng, bound) for _ in range(self.config.sweep_trials)]
        self.coherent_alphas = [
            random_amplitudes(rng, bound) for _ in range(self.config.property_trials)
        ]
        self.stokes_vectors = [
            StokesVector(values=rng.uniform(-1.0, 1.0, 9), convention=Convention.CANONICAL)
            for _ in range(self.config.property_trials)
        ]
        self.initial_conditions = [
            random_initial_conditions(rng) for _ in range(self.config.property_trials)
        ]

    def checks(self) -> List[Check]:
        """Named thunks in report order."""
        cfg = self.config
        basis = FockBasis(self.cutoff)
        margin = cfg.safe_margin
        coherent_stokes = [stokes_closed_form(alpha) for alpha in self.coherent_alphas]
        ics = self.initial_conditions
        return [
            ("su3_closure", lambda: check_su3_closure(cfg.tol_su3)),
            ("su2_closure", lambda: check_su2_closure(cfg.tol_su3)),
            ("trace_orthogonality", lambda: check_trace_orthogonality(cfg.tol_trace)),
            ("generator_hermiticity", lambda: check_hermiticity(cfg.tol_trace)),
            ("structure_antisymmetry", lambda: check_antisymmetry()),
            ("canonical_commutation", lambda: check_canonical_commutation(basis, cfg.tol_ccr)),
            ("cross_mode_commutation", lambda: check_cross_mode_commutation(basis)),
            ("stokes_hermiticity", lambda: check_stokes_hermiticity(basis)),
            ("conservation", lambda: check_conservation(basis, cfg.tol_fock, margin)),
            ("fock_su3_closure", lambda: check_fock_su3_closure(basis, cfg.tol_fock, margin)),
            (
                "angular_momentum",
                lambda: check_angular_momentum(basis, cfg.tol_angular_momentum, margin)
            ),
            (
                "jordan_schwinger_homomorphism",
                lambda: check_jordan_schwinger_homomorphism(basis, cfg.tol_fock, margin)
            ),
            ("two_mode_sector", lambda: check_two_mode_sector(basis, cfg.tol_fock, margin)),
            (
                "classical_limit",
                lambda: check_classical_limit(
                    FockBasis(cfg.expectation_cutoff), self.alphas, cfg.tol_classical_limit
                )
            ),
            (
                "pure_state_identities",
                lambda: check_pure_state_identities(coherent_stokes, cfg.tol_fock)
            ),
            (
                "polarization_round_trip",
                lambda: check_round_trip(self.stokes_vectors, cfg.tol_polarization)
            ),
            (
                "polarization_rank_one",
                lambda: check_rank_one(self.coherent_alphas, cfg.tol_polarization)
            ),
            ("orbit_on_quadric", lambda: check_orbit_on_quadric(ics, cfg.tol_eigenvalues)),
            ("orbit_planarity", lambda: check_orbit_planarity(ics, cfg.tol_geometry)),
            ("stokes_forms", lambda: check_stokes_forms(ics, cfg.tol_geometry)),
            ("runge_invariance", lambda: check_runge_invariance(ics, cfg.tol_geometry)),
            ("runge_eigenvalues", lambda: check_eigenvalue_closed_form(ics, cfg.tol_eigenvalues)),
            (
                "cross_convention",
                lambda: check_cross_convention(ics, cfg.tol_angular_momentum)
            ),
            (
                "six_parameter_reconstruction",
                lambda: check_reconstruction(ics, cfg.tol_geometry)
            ),
        ]

    @staticmethod
    def _timed(check: Check) -> VerificationReport:
        name, run = check
        started = time.perf_counter()
        report = run()
        elapsed = time.perf_counter() - started
        if report.passed:
            logger.info(
                f"{name}: passed ({report.n_checked} items, max residual "
                f"{report.max_residual:.3e}, {elapsed:.2f}s)"
            )
        else:
            logger.warning(
                f"{name}: FAILED at {len(report.failures)} of {report.n_checked} items "
                f"(max residual {report.max_residual:.3e} > {report.tolerance:.1e})"
            )
        return report

    def run(self) -> VerificationSummary:
        """Run every check and collect the reports in a fixed order."""
        logger.info(
            f"Running verification at cutoff {self.cutoff}, seed {self.seed}, "
            f"{self.workers} worker(s)"
        )
        checks = self.checks()
        if self.workers > 1:
            with ThreadPoolExecutor(max_workers=self.workers) as pool:
                reports = list(pool.map(self._timed, checks))
        else:
            reports = [self._timed(check) for check in checks]
        summary = VerificationSummary(cutoff=self.cutoff, seed=self.seed, checks=reports)
        if summary.passed:
            logger.info(f"All {len(reports)} checks passed")
        else:
            logger.warning(f"Failed checks: {', '.join(summary.failed_checks)}")
        return summary


def run_verification(
    cutoff: int,
    seed: Optional[int] = None,
    tolerance: Optional[float] = None,
    workers: Optional[int] = None
) -> VerificationSummary:
    """
    Run the full suite.

    Args:
        cutoff: Fock cutoff N for the operator checks
        seed: Seed for the randomized sweeps (defaults to ``settings.default_seed``)
        tolerance: Replaces every ``tol_*`` setting when given
        workers: Thread-pool size (defaults to ``settings.verify_workers``)

    Returns:
        VerificationSummary
    """
    config = settings
    if tolerance is not None:
        config = settings.model_copy(
            update={name: tolerance for name in settings.tolerance_fields}
        )
    seed = settings.default_seed if seed is None else seed
    return VerificationSuite(cutoff, seed, config=config, workers=workers).run()
