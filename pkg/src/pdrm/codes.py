"""
Reed-Muller codes R(rho, m) as affine-invariant codes in the group algebra F G

Words are uint8 vectors of length 2^m with positions ordered
[0, alpha^0, alpha^1, ..., alpha^(n-1)]: index 0 carries the coefficient of X^0
and index 1 + i the coefficient of X^(alpha^i).
"""

import logging
from dataclasses import dataclass
from functools import cached_property
from math import comb
from typing import TYPE_CHECKING

import numpy as np

from .field import FieldElement, GaloisField, weight2
from .gf2 import (
    BinaryMatrix,
    gf2_matmul,
    gf2_nullspace_basis,
    gf2_rank,
    gf2_row_basis,
    gf2_row_reduce,
    gf2_span,
    to_gf2,
)

if TYPE_CHECKING:
    from .infoset import InformationSet

logger = logging.getLogger(__name__)

GroupAlgebraVector = np.ndarray


class DefiningSetError(ValueError):
    """Defining set is not a union of cyclotomic cosets"""


class InformationSetError(ValueError):
    """Position set is not an information set for the code"""


class BudgetError(ValueError):
    """Requested enumeration exceeds the configured cost guard"""


# --- positions -------------------------------------------------------------


def position_elements(field: GaloisField) -> np.ndarray:
    """Field element sitting at each position: [0, alpha^0, ..., alpha^(n-1)]"""
    return np.concatenate([[0], field.tables.antilog]).astype(np.int64)


def element_positions(field: GaloisField) -> np.ndarray:
    """Inverse of position_elements, indexed by the element's coordinate int"""
    positions = np.zeros(field.size, dtype=np.int64)
    positions[field.tables.antilog] = np.arange(1, field.size)
    return positions


def position_of(field: GaloisField, g: FieldElement) -> int:
    return 0 if g == 0 else 1 + field.log(g)


def exponent_position(exponent: int) -> int:
    """Position of alpha^exponent"""
    return 1 + exponent


# --- vectors ---------------------------------------------------------------


def zero_vector(field: GaloisField) -> GroupAlgebraVector:
    return np.zeros(field.size, dtype=np.uint8)


def vector_from_positions(field: GaloisField, positions) -> GroupAlgebraVector:
    v = zero_vector(field)
    v[list(positions)] = 1
    return v


def weight(v: GroupAlgebraVector) -> int:
    return int(np.count_nonzero(v))


def to_hex(v: GroupAlgebraVector) -> str:
    """Hex string, most significant bit = position 0"""
    bits = to_gf2(v)
    digits = max(1, (bits.size + 3) // 4)
    value = int("".join(str(int(b)) for b in bits), 2) if bits.size else 0
    return f"{value:0{digits}x}"


def from_hex(text: str, length: int) -> GroupAlgebraVector:
    text = text.strip().lower().removeprefix("0x")
    value = int(text, 16)
    if value >> length:
        raise ValueError(f"Hex word {text!r} does not fit in {length} positions")
    return np.array([(value >> (length - 1 - p)) & 1 for p in range(length)], dtype=np.uint8)


def is_extended_cyclic_word(v: GroupAlgebraVector) -> bool:
    """Coefficient sum b + sum a_i is zero"""
    return int(np.sum(v)) % 2 == 0


# --- defining sets ---------------------------------------------------------


def cyclotomic_cosets(n: int) -> list[tuple[int, ...]]:
    """Orbits of Z_n under multiplication by 2, each listed from its least member"""
    seen: set[int] = set()
    cosets = []
    for s in range(n):
        if s in seen:
            continue
        orbit = [s]
        x = (2 * s) % n
        while x != s:
            orbit.append(x)
            x = (2 * x) % n
        seen.update(orbit)
        cosets.append(tuple(orbit))
    return cosets


def defining_set(rho: int, m: int) -> frozenset[int]:
    """{i : 0 <= i < 2^m - 1, wt(i) < m - rho}"""
    if not 0 < rho <= m:
        raise ValueError(f"Order rho must satisfy 0 < rho <= m (got rho={rho}, m={m})")
    n = (1 << m) - 1
    return frozenset(i for i in range(n) if weight2(i) < m - rho)


def is_closed_under_doubling(indices: frozenset[int], n: int) -> bool:
    return all((2 * s) % n in indices for s in indices)


def phi_eval(field: GaloisField, s: int, v: GroupAlgebraVector) -> FieldElement:
    """phi_s(b X^0 + sum a_i X^(alpha^i)) = 0^s b + sum a_i alpha^(i s)"""
    if not 0 <= s <= field.n:
        raise ValueError(f"phi_s needs 0 <= s <= n, got s={s}")
    b = int(v[0]) & 1
    support = np.flatnonzero(v[1:])
    terms = field.tables.antilog[(support * s) % field.n]
    total = int(np.bitwise_xor.reduce(terms)) if terms.size else 0
    if s == 0:
        total ^= b
    return total


@dataclass(frozen=True)
class CodeSpec:
    """Order, defining set and parameters of an affine-invariant R(rho, m)"""

    field: GaloisField
    rho: int
    defining_set: frozenset[int]
    dimension: int
    design_distance: int

    @property
    def m(self) -> int:
        return self.field.m

    @property
    def length(self) -> int:
        return self.field.size

    @property
    def packing_radius(self) -> int:
        return (self.design_distance - 1) // 2


def code_spec(field: GaloisField, rho: int = 1) -> CodeSpec:
    indices = defining_set(rho, field.m)
    dimension = field.size - len(indices)
    expected = sum(comb(field.m, i) for i in range(rho + 1))
    if dimension != expected:  # pragma: no cover
        raise AssertionError(f"R({rho},{field.m}) dimension {dimension} != {expected}")
    return CodeSpec(
        field=field,
        rho=rho,
        defining_set=indices,
        dimension=dimension,
        design_distance=1 << (field.m - rho),
    )


# --- matrices --------------------------------------------------------------


def build_parity_check(code: CodeSpec, max_m: int = 12) -> BinaryMatrix:
    """Parity-check matrix whose null space is the code.

    One GF(2^m)-linear constraint phi_s(x) = 0 per cyclotomic coset in the
    defining set, expanded over the polynomial basis into m binary rows; s = 0
    contributes the all-ones parity row. Dependent rows are dropped.
    """
    field = code.field
    if field.m > max_m:
        raise BudgetError(f"Dense parity-check matrix refused for m={field.m} > {max_m}")
    if not is_closed_under_doubling(code.defining_set, field.n):
        raise DefiningSetError("Defining set is not closed under doubling mod n")

    rows = []
    exponents = np.arange(field.n)
    bit_index = np.arange(field.m)
    for coset in cyclotomic_cosets(field.n):
        s = coset[0]
        if s not in code.defining_set:
            continue
        if s == 0:
            rows.append(np.ones((1, field.size), dtype=np.uint8))
            continue
        values = field.tables.antilog[(exponents * s) % field.n]
        block = np.zeros((field.m, field.size), dtype=np.uint8)
        block[:, 1:] = (values[None, :] >> bit_index[:, None]) & 1
        rows.append(block)

    basis = gf2_row_basis(np.vstack(rows)) if rows else np.zeros((0, field.size), np.uint8)
    expected = field.size - code.dimension
    if basis.shape[0] != expected:
        raise AssertionError(
            f"Parity-check rank {basis.shape[0]} != {expected} for R({code.rho},{field.m})"
        )
    logger.info(f"Parity-check matrix for R({code.rho},{field.m}): {basis.shape}")
    return basis


def classical_rm1_generator(field: GaloisField) -> BinaryMatrix:
    """Evaluations of the affine functions: all-ones row plus one row per coordinate"""
    elements = position_elements(field)
    gen = np.zeros((field.m + 1, field.size), dtype=np.uint8)
    gen[0] = 1
    for j in range(field.m):
        gen[j + 1] = (elements >> j) & 1
    return gen


@dataclass(frozen=True)
class StandardParityCheck:
    """H in standard form: identity on the columns outside the information set"""

    h_std: BinaryMatrix
    info_set: "InformationSet"
    info_positions: tuple[int, ...]
    check_positions: tuple[int, ...]

    @cached_property
    def parity_map(self) -> BinaryMatrix:
        """Columns of H_std at the information positions, one row per check position"""
        return self.h_std[:, list(self.info_positions)]

    @property
    def dimension(self) -> int:
        return len(self.info_positions)


def standardize(h: BinaryMatrix, info: "InformationSet") -> StandardParityCheck:
    """Row-reduce h so the non-information columns form the identity"""
    info_positions = tuple(sorted(info.positions))
    length = h.shape[1]
    chosen = set(info_positions)
    check_positions = tuple(p for p in range(length) if p not in chosen)
    if len(check_positions) != h.shape[0]:
        raise InformationSetError(
            f"not an information set: {len(info_positions)} positions for "
            f"dimension {length - h.shape[0]}"
        )
    reduced = gf2_row_reduce(h, columns=check_positions)
    if reduced.pivots != check_positions:
        raise InformationSetError("not an information set: check columns are dependent")
    return StandardParityCheck(
        h_std=reduced.matrix,
        info_set=info,
        info_positions=info_positions,
        check_positions=check_positions,
    )


def encode(info_bits, std: StandardParityCheck) -> GroupAlgebraVector:
    """The unique codeword carrying info_bits on the information positions (sorted order)"""
    bits = to_gf2(info_bits).reshape(-1)
    if bits.size != std.dimension:
        raise ValueError(f"Expected {std.dimension} information bits, got {bits.size}")
    word = np.zeros(std.h_std.shape[1], dtype=np.uint8)
    word[list(std.info_positions)] = bits
    word[list(std.check_positions)] = gf2_matmul(std.parity_map, bits)
    return word


def information_symbols(std: StandardParityCheck, r: GroupAlgebraVector) -> np.ndarray:
    return np.asarray(r, dtype=np.uint8)[list(std.info_positions)]


def syndrome(std: StandardParityCheck, r: GroupAlgebraVector) -> np.ndarray:
    """H_std r^T"""
    return gf2_matmul(std.h_std, to_gf2(r))


def syndrome_weights(std: StandardParityCheck, words: np.ndarray) -> np.ndarray:
    """Syndrome weight of each row of words"""
    return gf2_matmul(words, std.h_std.T).sum(axis=1)


# --- the code as a whole ---------------------------------------------------


class ReedMullerCode:
    """R(rho, m) with lazily built matrices"""

    def __init__(self, field: GaloisField, rho: int = 1, max_m: int = 12):
        self.field = field
        self.spec = code_spec(field, rho)
        self.max_m = max_m

    @property
    def rho(self) -> int:
        return self.spec.rho

    @property
    def length(self) -> int:
        return self.field.size

    @property
    def dimension(self) -> int:
        return self.spec.dimension

    @property
    def min_distance(self) -> int:
        return self.spec.design_distance

    @cached_property
    def parity_check(self) -> BinaryMatrix:
        return build_parity_check(self.spec, self.max_m)

    @cached_property
    def generator(self) -> BinaryMatrix:
        if self.rho == 1:
            return classical_rm1_generator(self.field)
        return gf2_nullspace_basis(self.parity_check)

    def contains(self, v: GroupAlgebraVector) -> bool:
        return not gf2_matmul(self.parity_check, to_gf2(v)).any()

    def codewords(self, max_m: int = 8) -> np.ndarray:
        """Every codeword, one per row"""
        if self.field.m > max_m:
            raise BudgetError(f"Codeword enumeration refused for m={self.field.m} > {max_m}")
        return gf2_span(self.generator)

    def __repr__(self) -> str:
        return f"ReedMullerCode(R({self.rho},{self.field.m}), [{self.length}, {self.dimension}])"


def min_distance_bruteforce(code: ReedMullerCode, max_m: int = 8) -> int:
    """Minimum weight over nonzero codewords of the defining-set code"""
    if code.field.m > max_m:
        raise BudgetError(f"Brute-force distance refused for m={code.field.m} > {max_m}")
    generator = gf2_nullspace_basis(code.parity_check)
    if gf2_rank(generator) != code.dimension:  # pragma: no cover
        raise AssertionError("Null space dimension does not match the code dimension")
    weights = gf2_span(generator).sum(axis=1)
    return int(weights[weights > 0].min())
