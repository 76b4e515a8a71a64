import pytest

from stokes3d.config import settings
from stokes3d.verification.suites import VerificationSuite, run_verification

CHECK_NAMES = [
    "su3_closure",
    "su2_closure",
    "trace_orthogonality",
    "generator_hermiticity",
    "structure_antisymmetry",
    "canonical_commutation",
    "cross_mode_commutation",
    "stokes_hermiticity",
    "conservation",
    "fock_su3_closure",
    "angular_momentum",
    "jordan_schwinger_homomorphism",
    "two_mode_sector",
    "classical_limit",
    "pure_state_identities",
    "polarization_round_trip",
    "polarization_rank_one",
    "orbit_on_quadric",
    "orbit_planarity",
    "stokes_forms",
    "runge_invariance",
    "runge_eigenvalues",
    "cross_convention",
    "six_parameter_reconstruction",
]


@pytest.fixture
def quick_config():
    return settings.model_copy(update={"sweep_trials": 3, "property_trials": 5})


def test_suite_passes_at_small_cutoff(quick_config):
    summary = VerificationSuite(4, seed=7, config=quick_config).run()
    assert summary.passed
    assert summary.failed_checks == []
    assert [check.name for check in summary.checks] == CHECK_NAMES
    assert summary.cutoff == 4
    assert summary.seed == 7


def test_inputs_are_drawn_from_the_seed(quick_config):
    first = VerificationSuite(4, seed=11, config=quick_config)
    second = VerificationSuite(4, seed=11, config=quick_config)
    assert first.alphas == second.alphas
    assert first.initial_conditions == second.initial_conditions
    assert len(first.alphas) == 3
    assert len(first.stokes_vectors) == 5


def test_thread_pool_gives_same_reports(quick_config):
    serial = VerificationSuite(4, seed=3, config=quick_config, workers=1).run()
    pooled = VerificationSuite(4, seed=3, config=quick_config, workers=3).run()
    assert [c.model_dump() for c in serial.checks] == [c.model_dump() for c in pooled.checks]


def test_failing_check_is_reported(quick_config):
    config = quick_config.model_copy(update={"tol_classical_limit": 1e-300})
    summary = VerificationSuite(4, seed=3, config=config).run()
    assert not summary.passed
    assert summary.failed_checks == ["classical_limit"]


def test_tolerance_override_replaces_every_tolerance(mocker):
    suite = mocker.patch("stokes3d.verification.suites.VerificationSuite")
    run_verification(6, tolerance=1e-3)
    cutoff, seed = suite.call_args.args
    config = suite.call_args.kwargs["config"]
    assert cutoff == 6
    assert seed == settings.default_seed
    assert all(getattr(config, name) == 1e-3 for name in settings.tolerance_fields)
    assert settings.tol_su3 == 1e-14
    suite.return_value.run.assert_called_once()


def test_default_run_uses_global_settings(mocker):
    suite = mocker.patch("stokes3d.verification.suites.VerificationSuite")
    run_verification(8, seed=5, workers=2)
    assert suite.call_args.args == (8, 5)
    assert suite.call_args.kwargs == {"config": settings, "workers": 2}
