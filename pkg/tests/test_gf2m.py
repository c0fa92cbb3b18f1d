import math

import pytest

from bentforge.gf2m import (
    Field,
    default_modulus,
    is_irreducible,
    is_permutation_exponent,
    parse_field,
    power_map,
    trace_component,
)
from bentforge.vectorial import is_permutation


def test_default_moduli_are_the_smallest_irreducibles():
    assert default_modulus(3) == 0b1011  # x^3 + x + 1
    assert default_modulus(6) == 0b1000011  # x^6 + x + 1
    for m in range(2, 11):
        mod = default_modulus(m)
        assert is_irreducible(mod)
        for p in range((1 << m) + 1, mod):
            assert not is_irreducible(p)


def test_field_rejects_reducible_modulus():
    with pytest.raises(ValueError):
        Field(3, 0b1111)  # x^3 + x^2 + x + 1 = (x+1)(x^2+1)


def test_multiplicative_identity_and_defining_relation():
    fld = Field(3)
    for a in range(8):
        assert fld.mul(a, 1) == a
    # alpha * alpha^2 = alpha^3 = alpha + 1 under x^3 + x + 1
    assert fld.mul(0b010, 0b100) == 0b011


def test_inverse_via_group_order():
    fld = Field(5)
    for a in range(1, 32):
        assert fld.mul(a, fld.pow(a, (1 << 5) - 2)) == 1
        assert fld.mul(a, fld.inv(a)) == 1


def test_frobenius_additivity_exhaustive():
    for m in (2, 3, 4, 6, 8):
        fld = Field(m)
        for a in range(1 << m):
            for b in range(1 << m):
                assert fld.pow(a ^ b, 2) == fld.pow(a, 2) ^ fld.pow(b, 2)


def test_trace_properties():
    assert Field(3).trace(0) == 0
    assert Field(3).trace(1) == 1  # m odd
    for m in range(3, 9):
        fld = Field(m)
        zeros = sum(1 for a in range(1 << m) if fld.trace(a) == 0)
        assert zeros == 1 << (m - 1)
        for a in range(1 << m):
            assert fld.trace(fld.mul(a, a)) == fld.trace(a)


def test_power_map_identity_and_apn():
    fld = Field(3)
    assert list(power_map(fld, 1).table) == list(range(8))
    from bentforge.vectorial import is_apn

    assert is_apn(power_map(fld, 3))


def test_power_map_permutation_flag_matches_gcd():
    fld = Field(6)
    for d in (1, 3, 5, 9, 62):
        assert is_permutation(power_map(fld, d)) == (math.gcd(d, 63) == 1)
        assert is_permutation_exponent(fld, d) == (math.gcd(d, 63) == 1)


def test_power_map_rejects_bad_exponent():
    with pytest.raises(ValueError):
        power_map(Field(3), 0)
    with pytest.raises(ValueError):
        power_map(Field(3), 7)


def test_power_map_composition(rng):
    fld = Field(5)
    order = (1 << 5) - 1
    for _ in range(10):
        d1 = rng.randrange(1, order)
        d2 = rng.randrange(1, order)
        if (d1 * d2) % order == 0:
            continue
        lhs = power_map(fld, d1).table[power_map(fld, d2).table]
        rhs = power_map(fld, (d1 * d2) % order).table
        assert list(lhs[1:]) == list(rhs[1:])  # nonzero elements


def test_trace_component_is_linear_and_balanced():
    fld = Field(4)
    f = trace_component(fld, 0b0110)
    vals = f.table
    for x in range(16):
        for y in range(16):
            assert vals[x ^ y] == vals[x] ^ vals[y]
    assert f.is_balanced()


def test_parse_field():
    fld = parse_field("gf2m:m=3")
    assert fld.m == 3 and fld.modulus == 0b1011
    fld2 = parse_field("gf2m:m=3,mod=b")
    assert fld2 == fld
    with pytest.raises(ValueError):
        parse_field("gf2m:m=")
    with pytest.raises(ValueError):
        parse_field("gf2m:m=3,mod=f")  # reducible
