"""
CRT-based information sets for R(1, m)

n = 2^m - 1 is split as r1 * r2 with coprime factors, Z_n is identified with
Z_r1 x Z_r2 by i -> (i mod r1, i mod r2), and the information set is
{0} together with the alpha^i whose CRT image falls in
Gamma = {(i1, i2) : 0 <= i1 < a, 0 <= i2 < m / a}, a = Ord_r1(2).
"""

import logging
from dataclasses import dataclass
from functools import cached_property
from math import gcd

import numpy as np

from .codes import InformationSetError, classical_rm1_generator, exponent_position
from .field import GaloisField
from .gf2 import gf2_rank

logger = logging.getLogger(__name__)


class FactorizationError(ValueError):
    """n = 2^m - 1 admits no coprime splitting with both factors > 1"""


def mult_order(x: int, modulus: int) -> int:
    """Least a > 0 with x^a = 1 mod modulus"""
    if modulus < 1 or gcd(x, modulus) != 1:
        raise ValueError(f"{x} is not a unit modulo {modulus}")
    if modulus == 1:
        return 1
    a, power = 1, x % modulus
    while power != 1:
        power = power * x % modulus
        a += 1
    return a


def lemma1_holds(m: int, delta: int) -> bool:
    """m | delta exactly when 2^m - 1 | 2^delta - 1"""
    return (delta % m == 0) == (((1 << delta) - 1) % ((1 << m) - 1) == 0)


@dataclass(frozen=True)
class Factorization:
    """An oriented splitting n = r1 * r2 with a = Ord_r1(2)"""

    r1: int
    r2: int
    a: int

    @property
    def n(self) -> int:
        return self.r1 * self.r2

    @property
    def b(self) -> int:
        """Ord_r2(2)"""
        return mult_order(2, self.r2)

    def is_full_order(self, m: int) -> bool:
        return self.a == m

    def flipped(self) -> "Factorization":
        return Factorization(r1=self.r2, r2=self.r1, a=mult_order(2, self.r2))

    def as_dict(self) -> dict:
        return {"r1": self.r1, "r2": self.r2, "a": self.a}


def valid_factorizations(m: int) -> list[Factorization]:
    """All coprime splittings n = r1 r2 with r1, r2 > 1, in both orientations, by r1"""
    if m < 3:
        raise ValueError(f"m must be greater than 2, got {m}")
    n = (1 << m) - 1
    found = []
    for r1 in range(2, n):
        if n % r1:
            continue
        r2 = n // r1
        if r2 > 1 and gcd(r1, r2) == 1:
            found.append(Factorization(r1=r1, r2=r2, a=mult_order(2, r1)))
    return found


def full_order_side(fact: Factorization, m: int) -> int:
    """Which factor carries the full order m (1 or 2); one always does"""
    if fact.a == m:
        return 1
    if fact.b == m:
        return 2
    raise AssertionError(f"Neither {fact.r1} nor {fact.r2} has Ord(2) = {m}")  # pragma: no cover


def select_full_order_factor(m: int, r1: int | None = None) -> Factorization:
    """Orientation with Ord_r1(2) = m; the largest correctable s wins unless r1 is given"""
    from .pdsets import s_value

    candidates = [f for f in valid_factorizations(m) if f.is_full_order(m)]
    if not candidates:
        raise FactorizationError(f"no valid decomposition: 2^{m} - 1 admits no coprime split")
    if r1 is not None:
        for fact in candidates:
            if fact.r1 == r1:
                return fact
        choices = ", ".join(str(f.r1) for f in candidates)
        raise FactorizationError(f"r1={r1} is not a full-order factor for m={m} (use {choices})")

    best = max(candidates, key=lambda f: (s_value(f, m), -f.r1))
    if len(candidates) > 1:
        logger.info(f"m={m}: {len(candidates)} full-order factorizations, chose r1={best.r1}")
    return best


@dataclass(frozen=True)
class CrtMap:
    """Z_n -> Z_r1 x Z_r2, i -> (i mod r1, i mod r2), inverted through Bezout coefficients"""

    r1: int
    r2: int

    def __post_init__(self):
        if gcd(self.r1, self.r2) != 1:
            raise ValueError(f"CRT needs coprime factors, got {self.r1} and {self.r2}")

    @cached_property
    def _u(self) -> int:
        """u = 1 mod r1, u = 0 mod r2"""
        return self.r2 * pow(self.r2, -1, self.r1)

    @cached_property
    def _v(self) -> int:
        """v = 0 mod r1, v = 1 mod r2"""
        return self.r1 * pow(self.r1, -1, self.r2)

    @property
    def n(self) -> int:
        return self.r1 * self.r2

    def forward(self, i: int) -> tuple[int, int]:
        return i % self.r1, i % self.r2

    def inverse(self, i1: int, i2: int) -> int:
        return (i1 * self._u + i2 * self._v) % self.n


@dataclass(frozen=True)
class GammaSet:
    """{(i1, i2) : 0 <= i1 < a, 0 <= i2 < m / a}"""

    pairs: frozenset[tuple[int, int]]

    @classmethod
    def build(cls, a: int, m: int) -> "GammaSet":
        if m % a:
            raise ValueError(f"a={a} does not divide m={m}")
        return cls(frozenset((i1, i2) for i1 in range(a) for i2 in range(m // a)))

    def __contains__(self, pair) -> bool:
        return pair in self.pairs

    def __len__(self) -> int:
        return len(self.pairs)


@dataclass(frozen=True)
class InformationSet:
    """I = {0} u {alpha^i : i in phi^-1(Gamma)} as sorted positions"""

    positions: tuple[int, ...]
    exponents: frozenset[int]
    contains_zero: bool = True
    factorization: Factorization | None = None

    @property
    def i_prime(self) -> tuple[int, ...]:
        """Positions of I without the field zero"""
        return tuple(p for p in self.positions if p != 0)

    def __len__(self) -> int:
        return len(self.positions)

    @classmethod
    def from_positions(cls, positions) -> "InformationSet":
        """Arbitrary candidate set, validity not checked"""
        ordered = tuple(sorted(set(positions)))
        return cls(
            positions=ordered,
            exponents=frozenset(p - 1 for p in ordered if p != 0),
            contains_zero=0 in ordered,
        )

    def as_dict(self) -> dict:
        return {
            "positions": list(self.positions),
            "exponents": sorted(self.exponents),
            "contains_zero": self.contains_zero,
            "i_prime": list(self.i_prime),
        }


def is_information_set(generator: np.ndarray, positions) -> bool:
    """|positions| = k and the generator columns there are independent"""
    cols = list(positions)
    return len(cols) == generator.shape[0] and gf2_rank(generator[:, cols]) == generator.shape[0]


def build_info_set(field: GaloisField, fact: Factorization) -> InformationSet:
    """CRT information set for R(1, m), verified by a generator-column rank check"""
    m = field.m
    if fact.n != field.n:
        raise ValueError(f"Factorization {fact.r1}*{fact.r2} does not split n={field.n}")
    crt = CrtMap(fact.r1, fact.r2)
    gamma = GammaSet.build(fact.a, m)
    exponents = frozenset(crt.inverse(i1, i2) for i1, i2 in gamma.pairs)
    positions = tuple(sorted([0] + [exponent_position(e) for e in exponents]))
    info = InformationSet(
        positions=positions, exponents=exponents, contains_zero=True, factorization=fact
    )

    if not is_information_set(classical_rm1_generator(field), positions):
        raise InformationSetError(
            f"Rank check failed for I from r1={fact.r1}, r2={fact.r2} at m={m}"
        )
    logger.info(f"Information set for m={m} (r1={fact.r1}, r2={fact.r2}): {sorted(exponents)}")
    return info


def punctured_rank(field: GaloisField, info: InformationSet) -> int:
    """Rank of the punctured generator's columns at I' (at most m < m + 1)"""
    punctured = classical_rm1_generator(field)[:, 1:]
    return gf2_rank(punctured[:, [p - 1 for p in info.i_prime]])
