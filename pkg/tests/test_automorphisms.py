"""
Tests for position permutations and code automorphisms
"""

import numpy as np
import pytest

from pdrm.automorphisms import (
    PointPermutation,
    affine,
    apply,
    compose,
    identity,
    invert,
    sigma,
    sigma_sequence,
    t_alpha_gather_table,
    t_alpha_group,
    t_alpha_power,
    translation_group,
)
from pdrm.codes import ReedMullerCode, position_of, vector_from_positions
from pdrm.field import cached_field
from pdrm.gf2 import gf2_matmul
from pdrm.infoset import CrtMap


def _all_in_code(code, words) -> bool:
    return not gf2_matmul(code.parity_check, np.atleast_2d(words).T).any()


def test_bijection_check():
    """Test that non-bijective images are rejected"""
    with pytest.raises(ValueError, match="not a bijection"):
        PointPermutation(np.array([0, 0, 1]))


def test_sigma_moves_zero(gf16):
    """Test x -> x + alpha^k on the zero position"""
    s3 = sigma(gf16, 3)
    assert s3(0) == position_of(gf16, gf16.exp(3))
    assert s3(position_of(gf16, gf16.exp(3))) == 0
    assert compose(s3, s3).is_identity()
    with pytest.raises(ValueError):
        sigma(gf16, 15)


def test_t_alpha_fixes_zero(gf16):
    """Test the multiplicative shift"""
    t = t_alpha_power(gf16, 1)
    assert t(0) == 0
    assert t(1) == 2
    assert t(15) == 1
    assert t_alpha_power(gf16, 15).is_identity()
    assert t.fixed_points() == [0]
    assert compose(t_alpha_power(gf16, 4), t_alpha_power(gf16, 13)) == t_alpha_power(gf16, 2)


def test_apply_and_invert(gf16):
    """Test new[p(q)] = old[q] and the inverse"""
    p = sigma(gf16, 0)
    word = vector_from_positions(gf16, [0])
    moved = apply(p, word)
    assert np.flatnonzero(moved).tolist() == [p(0)]
    assert apply(invert(p), moved).tolist() == word.tolist()
    assert compose(invert(p), p).is_identity()


def test_compose_order(gf16):
    """Test that compose(p, q) applies q first"""
    p, q = sigma(gf16, 1), t_alpha_power(gf16, 3)
    word = vector_from_positions(gf16, [5, 9])
    assert apply(compose(p, q), word).tolist() == apply(p, apply(q, word)).tolist()


def test_gather_table_matches_apply(gf16):
    """Test that table row e applies T_alpha^e by indexing"""
    table = t_alpha_gather_table(gf16)
    word = vector_from_positions(gf16, [0, 2, 7])
    for e, t in enumerate(t_alpha_group(gf16)):
        assert word[table[e]].tolist() == apply(t, word).tolist()


def test_sigma_sequence(gf16):
    """Test identity first, then every translation"""
    seq = sigma_sequence(gf16)
    assert len(seq) == 16
    assert seq[0].is_identity()
    assert len(set(translation_group(gf16))) == 16


def test_affine_rejects_zero_multiplier(gf16):
    """Test that a = 0 is not a permutation"""
    with pytest.raises(ValueError):
        affine(gf16, 0, 1)
    assert affine(gf16, 1, 0).is_identity()
    assert affine(gf16, 1, gf16.exp(5)) == sigma(gf16, 5)
    assert affine(gf16, gf16.alpha, 0) == t_alpha_power(gf16, 1)


def test_automorphisms_exhaustive_m4(code4, gf16):
    """Test every sigma_k, T_alpha^e and affine map on all 32 codewords"""
    words = code4.codewords()
    perms = sigma_sequence(gf16) + t_alpha_group(gf16)
    perms += [affine(gf16, a, b) for a in range(1, 16) for b in range(16)]
    for p in perms:
        assert _all_in_code(code4, apply(p, words)), p.label


@pytest.mark.parametrize("m", [6, 8])
def test_automorphisms_sampled(m):
    """Test 1000 random (codeword, automorphism) pairs"""
    field = cached_field(m)
    code = ReedMullerCode(field)
    rng = np.random.default_rng(m)
    generator = code.generator
    for _ in range(1000):
        message = rng.integers(0, 2, size=m + 1)
        word = gf2_matmul(message, generator)
        kind = rng.integers(3)
        if kind == 0:
            p = sigma(field, int(rng.integers(field.n)))
        elif kind == 1:
            p = t_alpha_power(field, int(rng.integers(field.n)))
        else:
            p = affine(field, int(rng.integers(1, field.size)), int(rng.integers(field.size)))
        assert _all_in_code(code, apply(p, word))


def test_identity():
    """Test the identity permutation"""
    assert identity(4).is_identity()
    assert identity(4) != PointPermutation(np.array([1, 0, 2, 3]))


def test_sigma_zero_on_alpha4(gf16):
    """Test alpha^4 + 1 = alpha under x^4 + x + 1"""
    assert sigma(gf16, 0)(position_of(gf16, gf16.exp(4))) == position_of(gf16, gf16.alpha)


def test_inverse_of_composition(gf16):
    """Test (p q)^-1 = q^-1 p^-1"""
    p, q = affine(gf16, 7, 3), sigma(gf16, 9)
    assert invert(compose(p, q)) == compose(invert(q), invert(p))


def test_t_alpha_acts_on_crt_coordinates(gf16):
    """Test that T_alpha^e adds e to both CRT coordinates"""
    crt = CrtMap(5, 3)
    for e in range(15):
        t = t_alpha_power(gf16, e)
        for i in range(15):
            j = t(1 + i) - 1
            i1, i2 = crt.forward(i)
            assert crt.forward(j) == ((i1 + e) % 5, (i2 + e) % 3)
