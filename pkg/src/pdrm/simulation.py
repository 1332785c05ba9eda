"""
Decoding experiments for the phased permutation decoder

Every trial draws from its own PCG64 stream, SeedSequence(seed, spawn_key=(weight, trial)),
so results do not depend on how trials are split across workers.
"""

import itertools
import logging
import math
import time
from collections.abc import Callable, Iterable
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import partial
from typing import Any

import numpy as np

from .codes import BudgetError, GroupAlgebraVector
from .decoder import PermutationDecoder, md_oracle
from .field import cached_field
from .infoset import Factorization, select_full_order_factor

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SimConfig:
    """What to simulate: code, error weights, trial budget and seed"""

    m: int
    weights: tuple[int, ...]
    trials_per_weight: int = 1000
    seed: int = 0
    mode: str = "sampled"
    best_effort: bool = False
    r1: int | None = None
    workers: int = 1
    exhaustive_budget: int = 10_000_000
    compare_oracle: bool = False
    oracle_max_m: int = 8


@dataclass
class WeightRecord:
    """Tallies for one error weight"""

    weight: int
    trials: int = 0
    successes: int = 0
    failures_detected: int = 0
    miscorrections: int = 0
    oracle_disagreements: int = 0
    phase_bound_violations: int = 0
    phases_total: int = 0
    phases_max: int = 0
    checks_total: int = 0
    checks_max: int = 0
    wall_time: float = 0.0

    def add(self, other: "WeightRecord") -> None:
        for name in (
            "trials",
            "successes",
            "failures_detected",
            "miscorrections",
            "oracle_disagreements",
            "phase_bound_violations",
            "phases_total",
            "checks_total",
        ):
            setattr(self, name, getattr(self, name) + getattr(other, name))
        self.phases_max = max(self.phases_max, other.phases_max)
        self.checks_max = max(self.checks_max, other.checks_max)

    def as_dict(self, include_time: bool = True) -> dict[str, Any]:
        trials = max(self.trials, 1)
        record = {
            "weight": self.weight,
            "trials": self.trials,
            "successes": self.successes,
            "failures_detected": self.failures_detected,
            "miscorrections": self.miscorrections,
            "success_rate": self.successes / trials,
            "mean_phases": self.phases_total / trials,
            "max_phases": self.phases_max,
            "mean_pd_exponent_scans": self.checks_total / trials,
            "max_syndrome_checks": self.checks_max,
            "phase_bound_violations": self.phase_bound_violations,
            "oracle_disagreements": self.oracle_disagreements,
        }
        if include_time:
            record["wall_time"] = round(self.wall_time, 6)
        return record


@dataclass
class SimReport:
    """Per-weight outcome of a simulation run"""

    m: int
    r1: int
    r2: int
    s: int
    t_check: int
    guarantee_limit: int
    seed: int
    mode: str
    best_effort: bool
    records: list[WeightRecord] = field(default_factory=list)

    def record(self, weight: int) -> WeightRecord:
        for rec in self.records:
            if rec.weight == weight:
                return rec
        raise KeyError(weight)

    def guarantee_violations(self) -> list[int]:
        """Weights inside the guarantee that saw any failure or miscorrection"""
        return [
            rec.weight
            for rec in self.records
            if rec.weight <= self.guarantee_limit
            and (rec.failures_detected or rec.miscorrections)
        ]

    def as_dict(self, include_time: bool = True) -> dict[str, Any]:
        return {
            "schema": 1,
            "m": self.m,
            "r1": self.r1,
            "r2": self.r2,
            "s": self.s,
            "t_check": self.t_check,
            "guarantee_limit": self.guarantee_limit,
            "seed": self.seed,
            "mode": self.mode,
            "best_effort": self.best_effort,
            "records": [rec.as_dict(include_time) for rec in self.records],
        }


def trial_rng(seed: int, weight: int, trial: int) -> np.random.Generator:
    """Independent PCG64 stream for one (weight, trial) pair"""
    seq = np.random.SeedSequence(seed, spawn_key=(weight, trial))
    return np.random.Generator(np.random.PCG64(seq))


def _tally(
    rec: WeightRecord,
    decoder: PermutationDecoder,
    sent: GroupAlgebraVector,
    support: Iterable[int],
    cfg: SimConfig,
) -> None:
    received = sent.copy()
    received[list(support)] ^= 1
    result = decoder.decode(received)

    rec.trials += 1
    if not result.ok:
        rec.failures_detected += 1
    elif np.array_equal(result.codeword, sent):
        rec.successes += 1
    else:
        rec.miscorrections += 1
    if result.phases_used > rec.weight + 1 and result.ok:
        rec.phase_bound_violations += 1
    rec.phases_total += result.phases_used
    rec.phases_max = max(rec.phases_max, result.phases_used)
    rec.checks_total += result.syndrome_checks
    rec.checks_max = max(rec.checks_max, result.syndrome_checks)

    if cfg.compare_oracle:
        oracle = md_oracle(received, decoder.code, cfg.oracle_max_m)
        if not result.ok or not np.array_equal(oracle.codeword, result.codeword):
            rec.oracle_disagreements += 1


def _sampled_chunk(
    decoder: PermutationDecoder, cfg: SimConfig, weight: int, trials: range
) -> WeightRecord:
    rec = WeightRecord(weight=weight)
    length = decoder.field.size
    for trial in trials:
        rng = trial_rng(cfg.seed, weight, trial)
        info_bits = rng.integers(0, 2, size=decoder.dimension, dtype=np.uint8)
        support = rng.choice(length, size=weight, replace=False)
        _tally(rec, decoder, decoder.encode(info_bits), support, cfg)
    return rec


def _exhaustive(decoder: PermutationDecoder, cfg: SimConfig, weight: int) -> WeightRecord:
    rec = WeightRecord(weight=weight)
    codewords = decoder.code.codewords()
    for sent in codewords:
        for support in itertools.combinations(range(decoder.field.size), weight):
            _tally(rec, decoder, sent, support, cfg)
    return rec


def _chunks(total: int, parts: int) -> list[range]:
    step = max(1, math.ceil(total / max(parts, 1)))
    return [range(start, min(total, start + step)) for start in range(0, total, step)]


def run_sim(
    cfg: SimConfig,
    decoder: PermutationDecoder | None = None,
    progress: Callable[[WeightRecord], None] | None = None,
) -> SimReport:
    """Decode random (or all) error patterns of each weight and compare with what was sent"""
    decoder = decoder or PermutationDecoder(
        cached_field(cfg.m), _factor(cfg), best_effort=cfg.best_effort
    )
    _check_decoder(cfg, decoder)
    dec_cfg = decoder.cfg
    if cfg.mode not in ("sampled", "exhaustive"):
        raise ValueError(f"Unknown mode {cfg.mode!r}; use sampled or exhaustive")
    for w in cfg.weights:
        if not 0 <= w <= decoder.field.size:
            raise ValueError(f"Error weight {w} outside 0..{decoder.field.size}")
        if w > dec_cfg.guarantee_limit and not cfg.best_effort:
            raise ValueError(
                f"Weight {w} exceeds the guaranteed {dec_cfg.guarantee_limit}; "
                "enable best_effort to measure it"
            )
    if cfg.mode == "exhaustive":
        total = sum(
            (1 << decoder.dimension) * math.comb(decoder.field.size, w) for w in cfg.weights
        )
        if total > cfg.exhaustive_budget:
            raise BudgetError(
                f"{total} exhaustive patterns exceed the budget of {cfg.exhaustive_budget}"
            )
    if cfg.compare_oracle and decoder.field.m > cfg.oracle_max_m:
        raise BudgetError(
            f"Minimum-distance oracle refused for m={decoder.field.m} > {cfg.oracle_max_m}"
        )

    fact = decoder.pd.factorization
    report = SimReport(
        m=cfg.m,
        r1=fact.r1,
        r2=fact.r2,
        s=decoder.pd.s,
        t_check=dec_cfg.t_check,
        guarantee_limit=dec_cfg.guarantee_limit,
        seed=cfg.seed,
        mode=cfg.mode,
        best_effort=cfg.best_effort,
    )

    for w in cfg.weights:
        started = time.perf_counter()
        if cfg.mode == "exhaustive":
            rec = _exhaustive(decoder, cfg, w)
        else:
            rec = WeightRecord(weight=w)
            chunks = _chunks(cfg.trials_per_weight, cfg.workers)
            with ThreadPoolExecutor(max_workers=max(1, cfg.workers)) as pool:
                run = partial(_sampled_chunk, decoder, cfg, w)
                for part in pool.map(run, chunks):
                    rec.add(part)
        rec.wall_time = time.perf_counter() - started
        report.records.append(rec)

        if w > dec_cfg.guarantee_limit:
            logger.warning(
                f"Weight {w} is beyond the guaranteed {dec_cfg.guarantee_limit}: "
                f"{rec.successes}/{rec.trials} decoded correctly, "
                f"{rec.miscorrections} miscorrected"
            )
        else:
            logger.info(f"Weight {w}: {rec.successes}/{rec.trials} in {rec.wall_time:.2f}s")
        if progress:
            progress(rec)

    return report


def _check_decoder(cfg: SimConfig, decoder: PermutationDecoder) -> None:
    """Reject a decoder built for another code or phase limit than cfg"""
    mismatches = []
    if decoder.field.m != cfg.m:
        mismatches.append(f"m={decoder.field.m} (config {cfg.m})")
    fact = decoder.pd.factorization
    if cfg.r1 is not None and fact.r1 != cfg.r1:
        mismatches.append(f"r1={fact.r1} (config {cfg.r1})")
    if decoder.cfg.best_effort != cfg.best_effort:
        mismatches.append(f"best_effort={decoder.cfg.best_effort} (config {cfg.best_effort})")
    if mismatches:
        raise ValueError(f"Decoder does not match the simulation: {', '.join(mismatches)}")


def _factor(cfg: SimConfig) -> Factorization | None:
    if cfg.r1 is None:
        return None
    return select_full_order_factor(cfg.m, cfg.r1)
