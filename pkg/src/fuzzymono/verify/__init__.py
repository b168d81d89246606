"""Identity registry, suite runner, report serialization, and CLI."""

from .registry import BY_ID, REGISTRY, SUITES, IdentityRecord, get_context, records_for_suite
from .report import IdentityResult, VerificationReport
from .runner import RunConfig, exit_code, run_suite

__all__ = [
    "BY_ID",
    "REGISTRY",
    "SUITES",
    "IdentityRecord",
    "get_context",
    "records_for_suite",
    "IdentityResult",
    "VerificationReport",
    "RunConfig",
    "exit_code",
    "run_suite",
]
