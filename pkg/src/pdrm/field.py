"""
Arithmetic of GF(2^m) through log/antilog tables

Elements are held in their canonical form, the m-bit coordinate vector over the
polynomial basis {1, alpha, ..., alpha^(m-1)}, stored as a Python int. The
exponent form alpha^e is a view through the tables.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

logger = logging.getLogger(__name__)

FieldElement = int

MAX_M = 16


class FieldError(ValueError):
    """Invalid extension degree or non-primitive polynomial"""


@dataclass(frozen=True)
class FieldSpec:
    """Parameters of GF(2^m): degree, n = 2^m - 1 and the modulus bitmask"""

    m: int
    n: int
    primitive_poly: int

    @property
    def size(self) -> int:
        return self.n + 1

    def poly_display(self) -> str:
        terms = []
        for power in range(self.m, -1, -1):
            if (self.primitive_poly >> power) & 1:
                terms.append("1" if power == 0 else "x" if power == 1 else f"x^{power}")
        return " + ".join(terms)


@dataclass(frozen=True)
class FieldTables:
    """antilog[e] = alpha^e for 0 <= e < n; log[x] = e for nonzero x, log[0] = -1"""

    antilog: np.ndarray
    log: np.ndarray


def weight2(k: int) -> int:
    """Number of ones in the binary expansion of k"""
    if k < 0:
        raise ValueError(f"2-weight is defined for k >= 0, got {k}")
    return k.bit_count()


def _x_order(poly: int, m: int) -> int | None:
    """Multiplicative order of the class of X modulo poly, None if X never returns to 1"""
    n = (1 << m) - 1
    x = 1
    for e in range(1, n + 1):
        x <<= 1
        if x >> m:
            x ^= poly
        if x == 1:
            return e
    return None


def is_primitive(poly: int, m: int) -> bool:
    """Brute-force order check: the root of poly must have order 2^m - 1"""
    if poly.bit_length() != m + 1 or not poly & 1:
        return False
    return _x_order(poly, m) == (1 << m) - 1


@lru_cache(maxsize=None)
def default_primitive_poly(m: int) -> int:
    """Lexicographically smallest primitive polynomial of degree m"""
    for poly in range((1 << m) | 1, 1 << (m + 1), 2):
        if is_primitive(poly, m):
            return poly
    raise FieldError(f"No primitive polynomial of degree {m}")  # pragma: no cover


class GaloisField:
    """GF(2^m) with fixed primitive element alpha = X mod primitive_poly"""

    def __init__(self, spec: FieldSpec):
        self.spec = spec
        self.tables = self._build_tables(spec)

    @staticmethod
    def _build_tables(spec: FieldSpec) -> FieldTables:
        antilog = np.zeros(spec.n, dtype=np.int64)
        log = np.full(spec.size, -1, dtype=np.int64)
        x = 1
        for e in range(spec.n):
            antilog[e] = x
            log[x] = e
            x <<= 1
            if x >> spec.m:
                x ^= spec.primitive_poly
        antilog.flags.writeable = False
        log.flags.writeable = False
        return FieldTables(antilog=antilog, log=log)

    @property
    def m(self) -> int:
        return self.spec.m

    @property
    def n(self) -> int:
        return self.spec.n

    @property
    def size(self) -> int:
        return self.spec.size

    @property
    def alpha(self) -> FieldElement:
        return self.exp(1)

    def elements(self) -> range:
        return range(self.size)

    def exp(self, e: int) -> FieldElement:
        """alpha^e, exponent taken mod n"""
        return int(self.tables.antilog[e % self.n])

    def log(self, x: FieldElement) -> int:
        """Exponent e with alpha^e = x"""
        if x == 0:
            raise ZeroDivisionError("log of the zero element")
        return int(self.tables.log[x])

    def add(self, x: FieldElement, y: FieldElement) -> FieldElement:
        return x ^ y

    def mul(self, x: FieldElement, y: FieldElement) -> FieldElement:
        if x == 0 or y == 0:
            return 0
        return int(self.tables.antilog[(self.tables.log[x] + self.tables.log[y]) % self.n])

    def inv(self, x: FieldElement) -> FieldElement:
        if x == 0:
            raise ZeroDivisionError("inverse of the zero element")
        return int(self.tables.antilog[(-self.tables.log[x]) % self.n])

    def pow(self, x: FieldElement, k: int) -> FieldElement:
        """x^k with the convention 0^0 = 1"""
        if x == 0:
            if k == 0:
                return 1
            if k < 0:
                raise ZeroDivisionError("negative power of the zero element")
            return 0
        return int(self.tables.antilog[(self.tables.log[x] * k) % self.n])

    def coords(self, x: FieldElement) -> np.ndarray:
        """Coordinate vector of x over {1, alpha, ..., alpha^(m-1)}"""
        return np.array([(x >> j) & 1 for j in range(self.m)], dtype=np.uint8)

    def __repr__(self) -> str:
        return f"GaloisField(m={self.m}, poly={self.spec.poly_display()})"


def field_new(
    m: int, primitive_poly: int | None = None, allow_small_m: bool = False
) -> GaloisField:
    """Build GF(2^m); the default modulus is the smallest primitive polynomial of degree m"""
    min_m = 2 if allow_small_m else 3
    if m < min_m:
        raise FieldError(f"m must be at least {min_m} (got {m}); m <= 2 gives trivial codes")
    if m > MAX_M:
        raise FieldError(f"m must be at most {MAX_M} (got {m})")

    if primitive_poly is None:
        primitive_poly = default_primitive_poly(m)
    elif primitive_poly.bit_length() != m + 1:
        raise FieldError(f"Polynomial {primitive_poly:#x} does not have degree {m}")
    elif not is_primitive(primitive_poly, m):
        order = _x_order(primitive_poly, m)
        raise FieldError(
            f"Polynomial {primitive_poly:#x} is not primitive "
            f"(root order {order}, need {(1 << m) - 1})"
        )

    spec = FieldSpec(m=m, n=(1 << m) - 1, primitive_poly=primitive_poly)
    field = GaloisField(spec)
    logger.info(f"Built GF(2^{m}) modulo {spec.poly_display()}")
    return field


@lru_cache(maxsize=32)
def cached_field(m: int, primitive_poly: int | None = None) -> GaloisField:
    """Shared immutable field instance for (m, poly)"""
    return field_new(m, primitive_poly)
