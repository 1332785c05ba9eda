"""
Permutation decoding of R(1, m)

The PD-set scan applies the elements of a PD-set to the received word until the
syndrome in standard form has weight at most t, then re-encodes from the
information symbols and undoes the permutation. The phased decoder wraps that scan
over <T_alpha> in phases: phase 0 uses the received word itself, phase k + 1
uses sigma_k(r), whose position 0 is clean exactly when alpha^k is error-free.
"""

import logging
from dataclasses import dataclass, field
from typing import Any

import numpy as np

from .automorphisms import (
    PointPermutation,
    apply,
    compose,
    invert,
    sigma_sequence,
    t_alpha_gather_table,
    t_alpha_power,
)
from .codes import (
    BudgetError,
    GroupAlgebraVector,
    ReedMullerCode,
    StandardParityCheck,
    encode,
    information_symbols,
    standardize,
    syndrome,
    syndrome_weights,
    to_hex,
    weight,
)
from .field import GaloisField
from .infoset import Factorization
from .pdsets import PdLikeSet, pd_like_set

logger = logging.getLogger(__name__)

DECODED = "decoded"
FAILURE = "failure"


@dataclass(frozen=True)
class DecoderConfig:
    """Syndrome threshold and phase limits for the permutation decoders"""

    t_check: int
    max_phases: int
    guarantee_limit: int
    best_effort: bool = False

    @classmethod
    def for_code(
        cls, m: int, s: int, best_effort: bool = False, t_check: int | None = None
    ) -> "DecoderConfig":
        """t defaults to the packing radius floor((2^(m-1) - 1) / 2)"""
        packing_radius = ((1 << (m - 1)) - 1) // 2
        t = packing_radius if t_check is None else t_check
        # best effort walks the whole sigma sequence
        max_phases = (1 << m) if best_effort else s + 1
        return cls(
            t_check=t,
            max_phases=max_phases,
            guarantee_limit=min(s, t),
            best_effort=best_effort,
        )


@dataclass
class DecodeResult:
    """Recovered codeword with the permutation bookkeeping behind it"""

    status: str
    codeword: GroupAlgebraVector | None = None
    total_perm: PointPermutation | None = None
    phase_index: int | None = None
    pd_exponent: int | None = None
    perm_index: int | None = None  # position in the PD-set list, PD-set scan only
    syndrome_checks: int = 0
    phases_used: int = 0
    err_weight_observed: int | None = None
    notes: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.status == DECODED

    def as_dict(self) -> dict[str, Any]:
        return {
            "schema": 1,
            "status": self.status,
            "codeword": None if self.codeword is None else to_hex(self.codeword),
            "total_perm": None if self.total_perm is None else self.total_perm.label,
            "phase_index": self.phase_index,
            "pd_exponent": self.pd_exponent,
            "perm_index": self.perm_index,
            "syndrome_checks": self.syndrome_checks,
            "phases_used": self.phases_used,
            "err_weight_observed": self.err_weight_observed,
            "notes": self.notes,
        }


def info_symbols_correct(
    std: StandardParityCheck, r: GroupAlgebraVector, cfg: DecoderConfig
) -> bool:
    """weight(H_std r^T) <= t"""
    return int(syndrome(std, r).sum()) <= cfg.t_check


def _recover(
    std: StandardParityCheck, permuted: GroupAlgebraVector, total: PointPermutation
) -> GroupAlgebraVector:
    """Re-encode from the information symbols of tau(r), then apply tau^-1"""
    recovered = encode(information_symbols(std, permuted), std)
    return apply(invert(total), recovered)


def _first_passing(std: StandardParityCheck, candidates: np.ndarray, t: int) -> int | None:
    passing = np.flatnonzero(syndrome_weights(std, candidates) <= t)
    return int(passing[0]) if passing.size else None


def decode_alg1(
    r: GroupAlgebraVector,
    perms: list[PointPermutation],
    std: StandardParityCheck,
    cfg: DecoderConfig,
) -> DecodeResult:
    """Classical permutation decoding over the ordered PD-set perms"""
    r = np.asarray(r, dtype=np.uint8)
    gathers = np.stack([p.gather_index() for p in perms])
    candidates = r[gathers]
    hit = _first_passing(std, candidates, cfg.t_check)
    if hit is None:
        logger.debug(f"PD-set scan: none of {len(perms)} permutations passed")
        return DecodeResult(status=FAILURE, syndrome_checks=len(perms), phases_used=1)

    tau = perms[hit]
    codeword = _recover(std, candidates[hit], tau)
    return DecodeResult(
        status=DECODED,
        codeword=codeword,
        total_perm=tau,
        phase_index=0,
        perm_index=hit,
        syndrome_checks=hit + 1,
        phases_used=1,
        err_weight_observed=weight(codeword ^ r),
    )


def decode_alg2(
    r: GroupAlgebraVector,
    pd: PdLikeSet,
    sigmas: list[PointPermutation],
    std: StandardParityCheck,
    cfg: DecoderConfig,
    gather_table: np.ndarray | None = None,
) -> DecodeResult:
    """Phases over sigmas (identity first), each scanning every power of T_alpha"""
    r = np.asarray(r, dtype=np.uint8)
    n = pd.field.n
    table = t_alpha_gather_table(pd.field) if gather_table is None else gather_table
    checks = 0

    for phase, sig in enumerate(sigmas[: cfg.max_phases]):
        shifted = apply(sig, r)
        candidates = shifted[table]
        e = _first_passing(std, candidates, cfg.t_check)
        if e is None:
            checks += n
            logger.debug(f"Phase {phase} ({sig.label}): no power of T_alpha passed")
            continue

        checks += e + 1
        total = compose(t_alpha_power(pd.field, e), sig)
        codeword = _recover(std, candidates[e], total)
        logger.debug(f"Decoded in phase {phase} with T_alpha^{e} after {checks} checks")
        return DecodeResult(
            status=DECODED,
            codeword=codeword,
            total_perm=total,
            phase_index=phase,
            pd_exponent=e,
            syndrome_checks=checks,
            phases_used=phase + 1,
            err_weight_observed=weight(codeword ^ r),
        )

    phases = min(cfg.max_phases, len(sigmas))
    logger.debug(f"Phased decode failed after {phases} phases")
    return DecodeResult(status=FAILURE, syndrome_checks=checks, phases_used=phases)


@dataclass(frozen=True)
class OracleResult:
    """Nearest codeword by Hamming distance"""

    codeword: GroupAlgebraVector
    distance: int
    tie: bool
    tied: int


def md_oracle(r: GroupAlgebraVector, code: ReedMullerCode, max_m: int = 8) -> OracleResult:
    """Exhaustive minimum-distance decoding over all 2^(m+1) codewords"""
    if code.field.m > max_m:
        raise BudgetError(f"Minimum-distance oracle refused for m={code.field.m} > {max_m}")
    words = code.codewords(max_m)
    distances = (words ^ np.asarray(r, dtype=np.uint8)).sum(axis=1)
    best = int(distances.min())
    nearest = np.flatnonzero(distances == best)
    return OracleResult(
        codeword=words[nearest[0]].copy(),
        distance=best,
        tie=nearest.size > 1,
        tied=int(nearest.size),
    )


class PermutationDecoder:
    """R(1, m) with its information set, standard-form H and PD-like set, ready to decode"""

    def __init__(
        self,
        field: GaloisField,
        fact: Factorization | None = None,
        best_effort: bool = False,
        t_check: int | None = None,
        max_m: int = 12,
    ):
        self.field = field
        self.code = ReedMullerCode(field, rho=1, max_m=max_m)
        self.pd = pd_like_set(field, fact)
        self.info_set = self.pd.info_set
        self.std = standardize(self.code.parity_check, self.info_set)
        self.cfg = DecoderConfig.for_code(field.m, self.pd.s, best_effort, t_check)
        self.sigmas = sigma_sequence(field)
        self.gather_table = t_alpha_gather_table(field)
        logger.info(
            f"Decoder for R(1,{field.m}): r1={self.pd.factorization.r1} "
            f"r2={self.pd.factorization.r2} s={self.pd.s} t={self.cfg.t_check}"
        )

    @property
    def dimension(self) -> int:
        return self.code.dimension

    def encode(self, info_bits) -> GroupAlgebraVector:
        return encode(info_bits, self.std)

    def decode(self, r: GroupAlgebraVector) -> DecodeResult:
        result = decode_alg2(r, self.pd, self.sigmas, self.std, self.cfg, self.gather_table)
        if result.ok and result.err_weight_observed > self.cfg.guarantee_limit:
            result.notes.append(
                f"corrected weight {result.err_weight_observed} exceeds the guaranteed "
                f"{self.cfg.guarantee_limit}"
            )
        return result

    def decode_alg1(self, r: GroupAlgebraVector, perms: list[PointPermutation]) -> DecodeResult:
        return decode_alg1(r, perms, self.std, self.cfg)
