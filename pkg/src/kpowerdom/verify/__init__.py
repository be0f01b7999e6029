"""Theorem checks and the bespoke constructions they rely on."""

from .checks import (
    CHECKS,
    Counterexample,
    NgScanRow,
    VerificationResult,
    default_corpus,
    ng_scan,
    verify_theorem,
)
from .gadgets import (
    build_deg3_example,
    build_ng_family,
    build_subdiv_decrease,
    build_subdiv_increase,
)

__all__ = [
    "CHECKS",
    "Counterexample",
    "NgScanRow",
    "VerificationResult",
    "build_deg3_example",
    "build_ng_family",
    "build_subdiv_decrease",
    "build_subdiv_increase",
    "default_corpus",
    "ng_scan",
    "verify_theorem",
]
