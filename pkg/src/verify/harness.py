"""
Verification harness.

Evaluates the claim catalogue over the configured corpus and assembles a
VerificationReport. With workers > 1 the claims run in separate processes;
records are sorted before assembly so the report does not depend on the
completion order.
"""

import logging
import time
from concurrent.futures import ProcessPoolExecutor, as_completed
from typing import List, Optional, Sequence, Tuple

from src.db.cache import ProfileCache
from src.errors import HarnessError
from src.monitoring import MetricsCollector, trace_claim
from src.verify.catalogue import CATALOGUE, CLAIM_IDS, ClaimContext, evaluate_claim
from src.verify.schemas import ClaimRecord, CorpusConfig, VerificationReport, summarise
from src.version import __version__

logger = logging.getLogger(__name__)


def check_catalogue() -> None:
    """Every catalogued id has exactly one evaluator and nothing else is registered."""
    missing = [claim_id for claim_id in CLAIM_IDS if claim_id not in CATALOGUE]
    extra = sorted(set(CATALOGUE) - set(CLAIM_IDS))
    if missing or extra:
        raise HarnessError(f"catalogue mismatch: missing evaluators {missing}, unexpected {extra}")


def _open_cache(config: CorpusConfig) -> Optional[ProfileCache]:
    return ProfileCache(config.cache_path) if config.cache_path else None


def _stamp(records: List[ClaimRecord], duration: float) -> List[ClaimRecord]:
    return [record.model_copy(update={"runtime": round(duration, 4)}) for record in records]


def _run_claim(claim_id: str, config: CorpusConfig) -> Tuple[List[ClaimRecord], float]:
    """Worker-process entry point: evaluate one claim with a private context."""
    cache = _open_cache(config)
    try:
        start = time.time()
        records = evaluate_claim(claim_id, ClaimContext(config, cache))
        return records, time.time() - start
    finally:
        if cache is not None:
            cache.close()


def _run_sequential(claim_ids: Sequence[str], config: CorpusConfig,
                    metrics: MetricsCollector) -> List[ClaimRecord]:
    cache = _open_cache(config)
    ctx = ClaimContext(config, cache, search_workers=config.workers)
    records = []
    try:
        for claim_id in claim_ids:
            start = time.time()
            produced = trace_claim(claim_id, metrics)(evaluate_claim)(claim_id, ctx)
            records += _stamp(produced, time.time() - start)
    finally:
        if cache is not None:
            cache.close()
    return records


def _run_parallel(claim_ids: Sequence[str], config: CorpusConfig,
                  metrics: MetricsCollector) -> List[ClaimRecord]:
    records = []
    with ProcessPoolExecutor(max_workers=config.workers) as pool:
        futures = {pool.submit(_run_claim, claim_id, config): claim_id for claim_id in claim_ids}
        for future in as_completed(futures):
            claim_id = futures[future]
            try:
                produced, duration = future.result()
            except Exception as e:
                metrics.record_error(claim_id, str(e))
                logger.error(f"{claim_id} failed in a worker: {e}")
                raise
            metrics.record_claim_duration(claim_id, duration, len(produced))
            records += _stamp(produced, duration)
    return records


def run_verification(config: CorpusConfig, claim_ids: Optional[Sequence[str]] = None) -> VerificationReport:
    """
    Evaluate the claim catalogue.

    Args:
        config: Corpus configuration
        claim_ids: Restrict the run to these claims (default: the whole catalogue)

    Returns:
        VerificationReport with records sorted by claim id, instance, quantity

    Raises:
        HarnessError: unknown claim id, or a requested claim produced no record
    """
    check_catalogue()
    requested = list(CLAIM_IDS) if claim_ids is None else list(claim_ids)
    unknown = [claim_id for claim_id in requested if claim_id not in CATALOGUE]
    if unknown:
        raise HarnessError(f"unknown claim ids: {', '.join(unknown)}")

    metrics = MetricsCollector()
    logger.info(f"Verifying {len(requested)} claims with {config.workers} worker(s)")
    if config.workers > 1 and len(requested) > 1:
        records = _run_parallel(requested, config, metrics)
    else:
        records = _run_sequential(requested, config, metrics)
    metrics.log_summary()

    produced = {record.claim_id for record in records}
    silent = [claim_id for claim_id in requested if claim_id not in produced]
    if silent:
        raise HarnessError(f"claims produced no record: {', '.join(silent)}")

    records.sort(key=ClaimRecord.sort_key)
    summary = summarise(records)
    logger.info(
        f"Verification finished: {summary.confirmed} confirmed, {summary.refuted} refuted "
        f"({summary.hard_failures} hard), {summary.not_applicable} not applicable"
    )
    return VerificationReport(version=__version__, summary=summary, claims=records)
