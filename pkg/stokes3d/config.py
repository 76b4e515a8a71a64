"""Application configuration management."""
from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Application settings loaded from environment variables (prefix ``STOKES3D_``)."""

    model_config = SettingsConfigDict(
        env_prefix="STOKES3D_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore"
    )

    # Application
    app_name: str = Field(default="stokes3d")

    # Fock space
    default_cutoff: int = Field(default=12, ge=2)
    expectation_cutoff: int = Field(default=16, ge=2)
    safe_margin: int = Field(default=2, ge=0)

    # Randomized sweeps
    default_seed: int = Field(default=20240611)
    sweep_trials: int = Field(default=50, ge=1)
    property_trials: int = Field(default=100, ge=1)
    random_alpha_bound: float = Field(default=1.2, gt=0)

    # Tolerances
    tol_su3: float = Field(default=1e-14, gt=0)
    tol_trace: float = Field(default=1e-15, gt=0)
    tol_fock: float = Field(default=1e-12, gt=0)
    tol_ccr: float = Field(default=1e-13, gt=0)
    tol_angular_momentum: float = Field(default=1e-13, gt=0)
    tol_classical_limit: float = Field(default=1e-9, gt=0)
    tol_polarization: float = Field(default=1e-13, gt=0)
    tol_geometry: float = Field(default=1e-12, gt=0)
    tol_eigenvalues: float = Field(default=1e-10, gt=0)
    tol_hermitian: float = Field(default=1e-10, gt=0)
    tol_reduction: float = Field(default=1e-13, gt=0)
    circular_gap: float = Field(default=1e-10, gt=0)
    truncation_warning: float = Field(default=1e-10, gt=0)

    # Numerics
    jacobi_tolerance: float = Field(default=1e-14, gt=0)
    jacobi_max_sweeps: int = Field(default=50, ge=1)
    identifiability_condition: float = Field(default=1e8, gt=1)

    # Orbit sampling
    orbit_samples: int = Field(default=720, ge=4)
    bruteforce_samples: int = Field(default=4096, ge=4)

    # Verification
    verify_workers: int = Field(default=1, ge=1)

    # Logging / reports
    log_level: str = Field(default="INFO")
    report_precision: int = Field(default=17, ge=1, le=17)

    @property
    def tolerance_fields(self) -> list[str]:
        """Names of every tolerance setting (the targets of ``--tol``)."""
        return [name for name in type(self).model_fields if name.startswith("tol_")]


# Global settings instance
settings = Settings()
