"""
PD-like sets for R(1, m): the cyclic group generated by T_alpha moves any s
error positions of G* off I' = I minus {0}.

Witnesses are found by scanning the powers of T_alpha, or constructively by
working in Z_r1 x Z_r2: pick an r2-class holding at most lambda0 errors, shift
it onto i2 = 0 and slide its r1-coordinates above m - 1.
"""

import itertools
import logging
import math
from collections import defaultdict
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .codes import BudgetError
from .field import GaloisField
from .infoset import (
    CrtMap,
    Factorization,
    InformationSet,
    build_info_set,
    select_full_order_factor,
    valid_factorizations,
)

logger = logging.getLogger(__name__)

# (M - 1) for the largest known (m, M, 3) binary code; display only
COLUMN_B1 = {4: 1, 6: 3, 8: 16, 9: 32, 10: 64, 11: 128, 12: 256, 14: 1024, 15: 2048, 16: 2048}


class WitnessError(ValueError):
    """No power of T_alpha moves the set off I'"""


def lambda0(m: int, r1: int) -> int:
    """max{lambda >= 1 : m < ceil(r1 / lambda)}"""
    if r1 <= m:
        raise ValueError(f"lambda0 needs r1 > m (got r1={r1}, m={m})")
    lam = 1
    while m < math.ceil(r1 / (lam + 1)):
        lam += 1
    return lam


def s_value(fact: Factorization, m: int) -> int:
    """(lambda0 + 1) r2 - 1"""
    if not fact.is_full_order(m):
        raise ValueError(f"s needs Ord_r1(2) = m; r1={fact.r1} has order {fact.a}")
    return (lambda0(m, fact.r1) + 1) * fact.r2 - 1


def ranked_factorizations(m: int) -> list[tuple[Factorization, int]]:
    """Every full-order factorization with its s, best first"""
    ranked = [(f, s_value(f, m)) for f in valid_factorizations(m) if f.is_full_order(m)]
    return sorted(ranked, key=lambda item: (-item[1], item[0].r1))


def junta_mu(r: int, xs) -> int:
    """Shift mu putting every [x + mu]_r at or above ceil(r/h) - 1 and one at r - 1"""
    xs = list(xs)
    h = len(xs)
    if not 1 <= h <= r or len(set(xs)) != h or any(not 0 <= x < r for x in xs):
        raise ValueError(f"Need 1..{r} distinct residues below {r}, got {xs}")
    bound = math.ceil(r / h) - 1
    values = np.asarray(xs)
    for mu in range(r):
        shifted = (values + mu) % r
        if shifted.min() >= bound and shifted.max() == r - 1:
            return mu
    raise AssertionError(f"No shift found for r={r}, xs={xs}")  # pragma: no cover


@dataclass(frozen=True)
class PdLikeSet:
    """<T_alpha> with the information set it is measured against"""

    field: GaloisField
    factorization: Factorization
    info_set: InformationSet
    lambda0: int
    s: int

    @property
    def order(self) -> int:
        return self.field.n

    @property
    def crt(self) -> CrtMap:
        return CrtMap(self.factorization.r1, self.factorization.r2)

    @property
    def i_prime_exponents(self) -> frozenset[int]:
        return self.info_set.exponents

    def with_s(self, s: int) -> "PdLikeSet":
        """Same set with an overridden error budget"""
        return PdLikeSet(self.field, self.factorization, self.info_set, self.lambda0, s)

    def as_dict(self) -> dict:
        return {
            "m": self.field.m,
            "order": self.order,
            **self.factorization.as_dict(),
            "lambda0": self.lambda0,
            "s": self.s,
        }


def pd_like_set(
    field: GaloisField, fact: Factorization | None = None, info: InformationSet | None = None
) -> PdLikeSet:
    fact = fact or select_full_order_factor(field.m)
    info = info or build_info_set(field, fact)
    lam = lambda0(field.m, fact.r1)
    return PdLikeSet(field, fact, info, lam, s_value(fact, field.m))


@dataclass(frozen=True)
class WitnessResult:
    """Power e of T_alpha with T_alpha^e(B) disjoint from I'"""

    exponent: int
    strategy: str
    mu: int | None = None
    delta: int | None = None


def _membership(pd: PdLikeSet) -> np.ndarray:
    in_j = np.zeros(pd.field.n, dtype=bool)
    in_j[list(pd.i_prime_exponents)] = True
    return in_j


def moves_off(pd: PdLikeSet, exponents, e: int) -> bool:
    """Independent recheck: T_alpha^e(B) and I' share no position"""
    n = pd.field.n
    return not any((b + e) % n in pd.i_prime_exponents for b in exponents)


def _scan(pd: PdLikeSet, exponents, in_j: np.ndarray | None = None) -> int | None:
    n = pd.field.n
    members = np.asarray(sorted(exponents), dtype=np.int64)
    if members.size == 0:
        return 0
    in_j = _membership(pd) if in_j is None else in_j
    hits = in_j[(members[None, :] + np.arange(n)[:, None]) % n].any(axis=1)
    free = np.flatnonzero(~hits)
    return int(free[0]) if free.size else None


def _constructive(pd: PdLikeSet, exponents) -> tuple[int, int, int] | None:
    """(e, mu, delta) following the CRT argument, None when no light r2-class exists"""
    crt = pd.crt
    r2 = crt.r2
    classes: dict[int, list[int]] = defaultdict(list)
    for b in exponents:
        i1, i2 = crt.forward(b)
        classes[i2].append(i1)

    missing = [j for j in range(r2) if j not in classes]
    if missing:
        # shifting the empty class onto i2 = 0 leaves nothing on the Gamma row
        delta = (-missing[0]) % r2
        return crt.inverse(0, delta), 0, delta

    light = [j for j in range(r2) if len(classes[j]) <= pd.lambda0]
    if not light:
        return None
    j0 = min(light, key=lambda j: (len(classes[j]), j))
    delta = (-j0) % r2
    mu = junta_mu(crt.r1, sorted(classes[j0]))
    return crt.inverse(mu, delta), mu, delta


def find_witness(exponents, pd: PdLikeSet, strategy: str = "scan") -> WitnessResult:
    """Power of T_alpha moving the error exponents B (alpha^b, b in B) off I'"""
    exponents = frozenset(int(b) % pd.field.n for b in exponents)
    if strategy == "scan":
        e = _scan(pd, exponents)
        result = None if e is None else WitnessResult(exponent=e, strategy="scan")
    elif strategy == "constructive":
        found = _constructive(pd, exponents)
        result = None
        if found is not None:
            e, mu, delta = found
            result = WitnessResult(exponent=e, strategy="constructive", mu=mu, delta=delta)
    else:
        raise ValueError(f"Unknown witness strategy {strategy!r}")

    if result is None:
        raise WitnessError(
            f"no witness for |B|={len(exponents)} (s={pd.s}); only possible when |B| > s"
        )
    if not moves_off(pd, exponents, result.exponent):  # pragma: no cover
        raise AssertionError(f"{strategy} witness e={result.exponent} does not clear I'")
    logger.debug(f"Witness for {sorted(exponents)}: e={result.exponent} ({strategy})")
    return result


@dataclass
class PdLikeReport:
    """Outcome of a PD-like verification run"""

    mode: str
    m: int
    s: int
    checked: int = 0
    failures: int = 0
    constructive_failures: int = 0
    example_failure: list[int] | None = None
    seed: int | None = None

    @property
    def holds(self) -> bool:
        return self.failures == 0

    def as_dict(self) -> dict:
        report = {
            "schema": 1,
            "mode": self.mode,
            "m": self.m,
            "s": self.s,
            "checked": self.checked,
            "failures": self.failures,
            "constructive_failures": self.constructive_failures,
            "holds": self.holds,
        }
        if self.seed is not None:
            report["seed"] = self.seed
        if self.example_failure is not None:
            report["example_failure"] = self.example_failure
        return report


def _check_subsets(pd: PdLikeSet, subsets, report: PdLikeReport, constructive: bool) -> None:
    in_j = _membership(pd)
    for subset in subsets:
        report.checked += 1
        if _scan(pd, subset, in_j) is None:
            report.failures += 1
            if report.example_failure is None:
                report.example_failure = sorted(int(b) for b in subset)
            continue
        if constructive and _constructive(pd, subset) is None:
            report.constructive_failures += 1


def _sample_subset(pd: PdLikeSet, seed: int, trial: int) -> list[int]:
    rng = np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(trial,)))
    return rng.choice(pd.field.n, size=pd.s, replace=False).tolist()


def verify_pd_like(
    pd: PdLikeSet,
    mode: str = "exhaustive",
    trials: int = 100_000,
    seed: int = 0,
    budget: int = 10_000_000,
    constructive: bool = True,
    workers: int = 1,
) -> PdLikeReport:
    """Check that every (exhaustive) or sampled s-subset of G* has a witness"""
    n, s = pd.field.n, pd.s
    if mode == "exhaustive":
        total = math.comb(n, s)
        if total > budget:
            raise BudgetError(f"C({n},{s}) = {total} subsets exceed {budget}; use sampled mode")
        report = PdLikeReport(mode=mode, m=pd.field.m, s=s)
        _check_subsets(pd, itertools.combinations(range(n), s), report, constructive)
    elif mode == "sampled":
        if s > n:
            raise ValueError(f"Cannot sample {s} distinct positions from {n}")
        report = PdLikeReport(mode=mode, m=pd.field.m, s=s, seed=seed)
        chunks = _chunk_ranges(trials, max(1, workers))

        def run(chunk: range) -> PdLikeReport:
            part = PdLikeReport(mode=mode, m=pd.field.m, s=s)
            subsets = (_sample_subset(pd, seed, t) for t in chunk)
            _check_subsets(pd, subsets, part, constructive)
            return part

        with ThreadPoolExecutor(max_workers=max(1, workers)) as pool:
            parts = list(pool.map(run, chunks))
        for part in parts:
            report.checked += part.checked
            report.failures += part.failures
            report.constructive_failures += part.constructive_failures
            if report.example_failure is None:
                report.example_failure = part.example_failure
    else:
        raise ValueError(f"Unknown mode {mode!r}; use exhaustive or sampled")

    logger.info(
        f"PD-like check m={pd.field.m} s={s} {mode}: {report.failures} failures "
        f"in {report.checked}"
    )
    return report


def _chunk_ranges(total: int, parts: int) -> list[range]:
    step = max(1, math.ceil(total / parts))
    return [range(start, min(total, start + step)) for start in range(0, total, step)]


@dataclass(frozen=True)
class BaselineRow:
    """Correctable errors of earlier PD-set constructions next to the phased decoder"""

    m: int
    col_a: int
    col_b1: int | None
    col_b2: int
    s_alg2: int | None

    @property
    def gordon_schonheim_min_size(self) -> int:
        """Smallest possible PD-set for the column-A error count"""
        return self.col_a + 1

    def as_dict(self) -> dict:
        return {
            "m": self.m,
            "A": self.col_a,
            "B1": self.col_b1,
            "B2": self.col_b2,
            "s": self.s_alg2,
            "gs_min_pd_size": self.gordon_schonheim_min_size,
        }


def baselines(m: int) -> BaselineRow:
    if m < 3:
        raise ValueError(f"m must be greater than 2, got {m}")
    col_a = min(((1 << m) - 1) // (1 + m), (1 << (m - 2)) - 1)
    col_b2 = (1 << m) // (m + 1) - 1
    try:
        s = s_value(select_full_order_factor(m), m)
    except ValueError:
        s = None
    return BaselineRow(m=m, col_a=col_a, col_b1=COLUMN_B1.get(m), col_b2=col_b2, s_alg2=s)
