"""
Timing and observability for harness runs.

MetricsCollector accumulates per-claim durations and failures;
trace_claim wraps a claim evaluation with start/finish logging.
"""

import logging
import time
from functools import wraps
from typing import Dict, List, Optional

from src.settings import CLAIM_TIME_LIMIT

logger = logging.getLogger(__name__)


class MetricsCollector:
    """Collect and log metrics for one verification run."""

    def __init__(self, time_limit: float = CLAIM_TIME_LIMIT):
        self.time_limit = time_limit
        self.metrics = {
            "claim_durations": {},
            "record_counts": {},
            "slow_claims": [],
            "errors": {},
        }

    def record_claim_duration(self, claim_id: str, duration: float, records: int = 0):
        """Record duration for a claim; durations over the limit are flagged."""
        self.metrics["claim_durations"][claim_id] = duration
        self.metrics["record_counts"][claim_id] = records
        logger.info(f"{claim_id} finished in {duration:.2f}s ({records} records)")
        if duration > self.time_limit:
            self.metrics["slow_claims"].append(claim_id)
            logger.warning(f"{claim_id} exceeded the per-claim limit of {self.time_limit:.0f}s ({duration:.1f}s)")

    def record_error(self, claim_id: str, error: str):
        self.metrics["errors"].setdefault(claim_id, []).append(error)

    def get_summary(self) -> dict:
        durations: Dict[str, float] = self.metrics["claim_durations"]
        slowest: Optional[str] = max(durations, key=durations.get) if durations else None
        return {
            "total_duration": sum(durations.values()),
            "claims": len(durations),
            "total_records": sum(self.metrics["record_counts"].values()),
            "slowest_claim": slowest,
            "slow_claims": list(self.metrics["slow_claims"]),
            "errors": dict(self.metrics["errors"]),
            "durations": dict(durations),
        }

    def log_summary(self):
        summary = self.get_summary()
        logger.info("=" * 60)
        logger.info("HARNESS METRICS SUMMARY")
        logger.info("=" * 60)
        logger.info(f"Claims evaluated: {summary['claims']}")
        logger.info(f"Records produced: {summary['total_records']}")
        logger.info(f"Claim time (sum): {summary['total_duration']:.2f}s")
        if summary["slowest_claim"]:
            name = summary["slowest_claim"]
            logger.info(f"Slowest claim: {name} ({summary['durations'][name]:.2f}s)")
        if summary["slow_claims"]:
            logger.info(f"Over the time limit: {', '.join(summary['slow_claims'])}")
        logger.info("=" * 60)


def trace_claim(claim_id: str, metrics: MetricsCollector):
    """
    Decorator adding timing and start/finish logging to a claim evaluation.

    The wrapped function must return the list of records it produced.
    """
    def decorator(func):
        @wraps(func)
        def wrapper(*args, **kwargs):
            start_time = time.time()
            logger.info(f"Evaluating claim: {claim_id}")
            try:
                records: List = func(*args, **kwargs)
            except Exception as e:
                duration = time.time() - start_time
                metrics.record_error(claim_id, str(e))
                logger.error(f"{claim_id} failed after {duration:.2f}s: {e}")
                raise
            metrics.record_claim_duration(claim_id, time.time() - start_time, len(records))
            return records
        return wrapper
    return decorator
