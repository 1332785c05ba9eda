"""
Permutations of the 2^m positions: translations sigma_k, the multiplicative
shift T_alpha and general affine maps x -> a x + b
"""

import logging
from dataclasses import dataclass

import numpy as np

from .codes import GroupAlgebraVector, element_positions, position_elements
from .field import FieldElement, GaloisField

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class PointPermutation:
    """Bijection on positions; position p is sent to image[p]"""

    image: np.ndarray
    label: str = "perm"

    def __post_init__(self):
        image = np.asarray(self.image, dtype=np.int64)
        if np.any(np.sort(image) != np.arange(image.size)):
            raise ValueError(f"{self.label} is not a bijection on {image.size} positions")
        image.flags.writeable = False
        object.__setattr__(self, "image", image)

    @property
    def size(self) -> int:
        return int(self.image.size)

    def __call__(self, position: int) -> int:
        return int(self.image[position])

    def __eq__(self, other) -> bool:
        if not isinstance(other, PointPermutation):
            return NotImplemented
        return np.array_equal(self.image, other.image)

    def __hash__(self) -> int:
        return hash(self.image.tobytes())

    def is_identity(self) -> bool:
        return bool(np.array_equal(self.image, np.arange(self.size)))

    def fixed_points(self) -> list[int]:
        return np.flatnonzero(self.image == np.arange(self.size)).tolist()

    def gather_index(self) -> np.ndarray:
        """Index g with apply(self, v) == v[g]"""
        inverse = np.empty_like(self.image)
        inverse[self.image] = np.arange(self.size)
        return inverse

    def __repr__(self) -> str:
        return f"PointPermutation({self.label})"


def identity(size: int) -> PointPermutation:
    return PointPermutation(np.arange(size), "identity")


def sigma(field: GaloisField, k: int) -> PointPermutation:
    """Translation x -> x + alpha^k"""
    if not 0 <= k < field.n:
        raise ValueError(f"sigma_k needs 0 <= k < {field.n}, got {k}")
    shifted = position_elements(field) ^ field.exp(k)
    return PointPermutation(element_positions(field)[shifted], f"sigma_{k}")


def t_alpha_power(field: GaloisField, e: int) -> PointPermutation:
    """T_alpha^e: fixes position 0, alpha^i -> alpha^(i+e)"""
    e %= field.n
    image = np.zeros(field.size, dtype=np.int64)
    image[1:] = 1 + (np.arange(field.n) + e) % field.n
    return PointPermutation(image, f"t_alpha^{e}")


def affine(field: GaloisField, a: FieldElement, b: FieldElement) -> PointPermutation:
    """x -> a x + b, a nonzero"""
    if a == 0:
        raise ValueError("Affine map needs a nonzero multiplier")
    if not (0 < a < field.size and 0 <= b < field.size):
        raise ValueError(f"Elements a={a}, b={b} are outside GF(2^{field.m})")
    elements = position_elements(field)
    scaled = np.zeros_like(elements)
    nonzero = elements != 0
    log_a = field.log(a)
    scaled[nonzero] = field.tables.antilog[(field.tables.log[elements[nonzero]] + log_a) % field.n]
    return PointPermutation(element_positions(field)[scaled ^ b], f"affine({a:#x},{b:#x})")


def compose(p: PointPermutation, q: PointPermutation) -> PointPermutation:
    """p after q"""
    if p.size != q.size:
        raise ValueError("Cannot compose permutations of different sizes")
    return PointPermutation(p.image[q.image], f"{p.label}*{q.label}")


def invert(p: PointPermutation) -> PointPermutation:
    return PointPermutation(p.gather_index(), f"({p.label})^-1")


def apply(p: PointPermutation, v: GroupAlgebraVector) -> GroupAlgebraVector:
    """Move coefficients so that new[p(q)] = old[q]"""
    v = np.asarray(v)
    if v.shape[-1] != p.size:
        raise ValueError(f"Vector of length {v.shape[-1]} for a permutation of {p.size}")
    moved = np.empty_like(v)
    moved[..., p.image] = v
    return moved


def sigma_sequence(field: GaloisField) -> list[PointPermutation]:
    """Ordered [1_G, sigma_0, ..., sigma_(n-1)]"""
    return [identity(field.size)] + [sigma(field, k) for k in range(field.n)]


def t_alpha_group(field: GaloisField) -> list[PointPermutation]:
    """<T_alpha> as [T_alpha^0, ..., T_alpha^(n-1)]"""
    return [t_alpha_power(field, e) for e in range(field.n)]


def t_alpha_gather_table(field: GaloisField) -> np.ndarray:
    """Row e is the gather index of T_alpha^e, so words[:, table[e]] applies it"""
    table = np.zeros((field.n, field.size), dtype=np.int64)
    shifts = np.arange(field.n)[:, None]
    table[:, 1:] = 1 + (np.arange(field.n)[None, :] - shifts) % field.n
    return table


def translation_group(field: GaloisField) -> list[PointPermutation]:
    """All x -> x + b; as a set this is the sigma sequence"""
    return sigma_sequence(field)
