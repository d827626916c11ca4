"""
Claim verification: stated values, corpus, catalogue and harness.
"""

from .catalogue import CATALOGUE, CLAIM_IDS, REPORT_ONLY, ClaimContext, evaluate_claim
from .harness import check_catalogue, run_verification
from .predictions import KnownValue, Prediction, middle_cycle_colouring, predicted_value, predicted_values
from .schemas import ClaimRecord, CorpusConfig, ReportSummary, VerificationReport, summarise

__all__ = [
    "CATALOGUE",
    "CLAIM_IDS",
    "REPORT_ONLY",
    "ClaimContext",
    "evaluate_claim",
    "check_catalogue",
    "run_verification",
    "KnownValue",
    "Prediction",
    "middle_cycle_colouring",
    "predicted_value",
    "predicted_values",
    "ClaimRecord",
    "CorpusConfig",
    "ReportSummary",
    "VerificationReport",
    "summarise",
]
