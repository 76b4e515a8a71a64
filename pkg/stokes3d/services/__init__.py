"""Service layer."""
from stokes3d.services.reports import ReportService, report_service

__all__ = ["ReportService", "report_service"]
