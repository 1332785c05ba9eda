"""
Tests for GF(2^m) arithmetic
"""

import pytest

from pdrm.field import (
    FieldError,
    cached_field,
    default_primitive_poly,
    field_new,
    is_primitive,
    weight2,
)


def test_default_polynomials():
    """Test the smallest primitive polynomial per degree"""
    assert default_primitive_poly(3) == 0b1011
    assert default_primitive_poly(4) == 0b10011
    assert default_primitive_poly(5) == 0b100101


def test_is_primitive():
    """Test primitivity by root order"""
    assert is_primitive(0x13, 4)
    assert is_primitive(0x19, 4)
    # x^4 + x^3 + x^2 + x + 1 is irreducible but its root has order 5
    assert not is_primitive(0x1F, 4)
    assert not is_primitive(0x12, 4)


def test_antilog_table(gf16):
    """Test powers of alpha modulo x^4 + x + 1"""
    expected = [1, 2, 4, 8, 3, 6, 12, 11, 5, 10, 7, 14, 15, 13, 9]
    assert gf16.tables.antilog.tolist() == expected
    assert gf16.tables.log[0] == -1
    assert gf16.alpha == 2


def test_every_nonzero_element_is_a_power(gf64):
    """Test that alpha generates the multiplicative group"""
    powers = {gf64.exp(e) for e in range(gf64.n)}
    assert powers == set(range(1, gf64.size))


def test_mul_inv_pow(gf16):
    """Test field operations against the tables"""
    for x in range(1, gf16.size):
        assert gf16.mul(x, gf16.inv(x)) == 1
        assert gf16.pow(x, gf16.n) == 1
        assert gf16.log(gf16.exp(gf16.log(x))) == gf16.log(x)
    assert gf16.mul(0, 7) == 0
    assert gf16.add(5, 5) == 0
    assert gf16.mul(gf16.exp(3), gf16.exp(14)) == gf16.exp(2)


def test_zero_edge_cases(gf16):
    """Test 0^0 = 1 and the undefined operations on zero"""
    assert gf16.pow(0, 0) == 1
    assert gf16.pow(0, 3) == 0
    with pytest.raises(ZeroDivisionError):
        gf16.inv(0)
    with pytest.raises(ZeroDivisionError):
        gf16.log(0)


def test_coords(gf16):
    """Test coordinate vectors over the polynomial basis"""
    assert gf16.coords(0b1011).tolist() == [1, 1, 0, 1]


def test_weight2():
    """Test binary weights"""
    assert weight2(0) == 0
    assert weight2(7) == 3
    assert weight2(12) == 2
    with pytest.raises(ValueError):
        weight2(-1)


def test_field_new_rejects_small_and_large_m():
    """Test the accepted range of m"""
    with pytest.raises(FieldError, match="at least 3"):
        field_new(2)
    assert field_new(2, allow_small_m=True).n == 3
    with pytest.raises(FieldError, match="at most 16"):
        field_new(17)


def test_field_new_rejects_bad_polynomial():
    """Test degree and primitivity checks on a user polynomial"""
    with pytest.raises(FieldError, match="degree 4"):
        field_new(4, 0b1011)
    with pytest.raises(FieldError, match="root order 5"):
        field_new(4, 0x1F)


def test_alternative_polynomial():
    """Test a field built from x^4 + x^3 + 1"""
    field = field_new(4, 0x19)
    assert field.exp(4) == 0b1001
    assert "x^4 + x^3 + 1" == field.spec.poly_display()


def test_cached_field_is_shared():
    """Test that cached fields are reused"""
    assert cached_field(5) is cached_field(5)


@pytest.mark.parametrize("m", [3, 4])
def test_field_axioms_exhaustive(m):
    """Test associativity, distributivity and Frobenius over every triple"""
    field = cached_field(m)
    elements = list(field.elements())
    for x in elements:
        for y in elements:
            assert field.mul(x, y) == field.mul(y, x)
            square = field.mul(field.add(x, y), field.add(x, y))
            assert square == field.add(field.mul(x, x), field.mul(y, y))
            for z in elements:
                assert field.mul(field.mul(x, y), z) == field.mul(x, field.mul(y, z))
                assert field.mul(x, field.add(y, z)) == field.add(
                    field.mul(x, y), field.mul(x, z)
                )
