"""Verification suite."""
from stokes3d.verification.suites import VerificationSuite, run_verification

__all__ = ["VerificationSuite", "run_verification"]
