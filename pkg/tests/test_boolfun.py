import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bentforge import fixtures as fx
from bentforge.boolfun import (
    AnfParseError,
    AnfPoly,
    BooleanFunction,
    algebraic_degree,
    constant_one,
    derivative,
    dual,
    format_anf,
    from_anf,
    from_tt_hex,
    is_bent,
    linear_structures,
    parse_anf,
    second_derivative,
    shift,
    to_anf,
    to_tt_hex,
    walsh_transform,
    zero_function,
)
from conftest import random_function

tables = st.integers(min_value=2, max_value=6).flatmap(
    lambda n: st.lists(
        st.integers(min_value=0, max_value=1), min_size=1 << n, max_size=1 << n
    )
)


def func_from_bits(bits) -> BooleanFunction:
    n = len(bits).bit_length() - 1
    return BooleanFunction(n, bits)


def naive_walsh(f: BooleanFunction, a: int) -> int:
    return sum(
        (-1) ** ((int(f.table[x]) + (x & a).bit_count()) & 1) for x in range(1 << f.n)
    )


def test_from_anf_constants():
    assert from_anf(AnfPoly(3, frozenset())) == zero_function(3)
    assert from_anf(AnfPoly(3, frozenset({0}))) == constant_one(3)


def test_from_anf_rejects_out_of_range_mask():
    with pytest.raises(ValueError):
        from_anf(AnfPoly(2, frozenset({0b100})))


def test_published_anf_has_bent_weight():
    f = fx.published_bent8("delta0_mix")
    assert f.weight() in (2**7 - 2**3, 2**7 + 2**3)


def test_to_anf_examples():
    assert to_anf(zero_function(4)).monomials == frozenset()
    assert to_anf(BooleanFunction(2, [0, 0, 0, 1])).monomials == {0b11}


@given(tables)
@settings(max_examples=50)
def test_anf_round_trip(bits):
    f = func_from_bits(bits)
    assert from_anf(to_anf(f)) == f


def test_walsh_of_zero_function():
    w = walsh_transform(zero_function(4))
    assert w[0] == 16
    assert all(w[a] == 0 for a in range(1, 16))


def test_walsh_x1x2_all_pm2():
    f = BooleanFunction(2, [0, 0, 0, 1])
    w = walsh_transform(f)
    assert sorted(abs(int(v)) for v in w.values) == [2, 2, 2, 2]
    assert all(w[a] == naive_walsh(f, a) for a in range(4))


def test_walsh_quadratic_bent_n4():
    f = from_anf(parse_anf("x1*x2 + x3*x4", 4))
    assert set(abs(int(v)) for v in walsh_transform(f).values) == {4}


@given(tables)
@settings(max_examples=40)
def test_walsh_matches_naive_and_parseval(bits):
    f = func_from_bits(bits)
    w = walsh_transform(f)
    assert int((w.values.astype(np.int64) ** 2).sum()) == 1 << (2 * f.n)
    for a in (0, 1, (1 << f.n) - 1):
        assert w[a] == naive_walsh(f, a)


def test_is_bent_examples():
    assert is_bent(fx.tr_xy3_bent())
    assert not is_bent(zero_function(4))
    assert is_bent(fx.published_bent8("delta0_mix"))
    assert not is_bent(random_function(5, random.Random(1)))  # odd n is never bent


def test_dual_of_inner_product_is_itself():
    from bentforge.construct import mm_bent
    from bentforge.vectorial import identity_map

    f = mm_bent(identity_map(3), zero_function(3))
    assert dual(f) == f


def test_dual_is_involution_on_fixtures():
    for name in ("delta0_mix", "transposed", "apn_family"):
        f = fx.published_bent8(name)
        assert dual(dual(f)) == f


def test_dual_rejects_non_bent():
    with pytest.raises(ValueError):
        dual(zero_function(4))
    with pytest.raises(ValueError):
        dual(zero_function(3))


def test_derivative_in_zero_direction():
    f = random_function(4, random.Random(2))
    assert derivative(f, 0) == zero_function(4)


def test_derivative_of_linear_function_is_constant():
    c = 0b1011
    f = from_anf(parse_anf("x1 + x2 + x4", 4))
    for a in range(16):
        d = derivative(f, a)
        expect = (c & a).bit_count() & 1
        assert set(d.table.tolist()) == {expect}


def test_derivatives_commute(rng):
    f = random_function(5, rng)
    for _ in range(10):
        a, b = rng.randrange(32), rng.randrange(32)
        assert derivative(derivative(f, a), b) == derivative(derivative(f, b), a)
        assert second_derivative(f, a, b) == derivative(derivative(f, a), b)


def test_second_derivative_same_direction_vanishes(rng):
    f = random_function(4, rng)
    a = rng.randrange(16)
    assert second_derivative(f, a, a) == zero_function(4)


def test_second_derivative_of_quadratic_is_constant(rng):
    f = from_anf(parse_anf("x1*x2 + x2*x3 + x4", 4))
    for _ in range(20):
        a, b = rng.randrange(16), rng.randrange(16)
        assert len(set(second_derivative(f, a, b).table.tolist())) == 1


def test_second_derivative_depends_only_on_span(rng):
    for _ in range(25):
        f = random_function(5, rng)
        a, b = rng.randrange(1, 32), rng.randrange(1, 32)
        assert second_derivative(f, a, b) == second_derivative(f, a, a ^ b)


def test_span_closure_identity(rng):
    # D_{a+b} D_c f(x) = D_a D_c f(x+b) + D_b D_c f(x)
    for _ in range(25):
        f = random_function(5, rng)
        a, b, c = (rng.randrange(32) for _ in range(3))
        lhs = second_derivative(f, a ^ b, c)
        rhs = shift(second_derivative(f, a, c), b) ^ second_derivative(f, b, c)
        assert lhs == rhs


def test_linear_structures_of_linear_function():
    f = from_anf(parse_anf("x1 + x3", 4))
    assert linear_structures(f) == set(range(16))


def test_linear_structures_of_bent_function_trivial():
    assert linear_structures(fx.tr_xy3_bent()) == {0}
    assert linear_structures(fx.published_bent8("delta0_mix")) == {0}


def test_linear_structures_of_gold_component_matches_subfield():
    # Tr(delta y^5) on GF(2^6) with delta = beta^5: structures beta^{-1} F_4
    from bentforge.gf2m import Field, power_map

    fld = Field(6)
    beta = 2
    delta = fld.pow(beta, 5)
    x5 = power_map(fld, 5)
    tab = [fld.trace(fld.mul(delta, int(x5.table[y]))) for y in range(64)]
    f = BooleanFunction(6, tab)
    subfield = [x for x in range(64) if fld.pow(x, 4) == x]
    expect = {fld.mul(fld.inv(beta), z) for z in subfield}
    assert linear_structures(f) == expect
    assert len(expect) == 4


def test_algebraic_degree_examples():
    assert algebraic_degree(constant_one(4)) == 0
    from bentforge.construct import delta0

    assert algebraic_degree(delta0(5)) == 5
    assert algebraic_degree(fx.published_bent8("delta0_mix")) == 4


def test_bent_weight_identity():
    for name in ("delta0_mix", "transposed", "apn_family"):
        f = fx.published_bent8(name)
        assert f.weight() in (2 ** (f.n - 1) - 2 ** (f.n // 2 - 1),
                              2 ** (f.n - 1) + 2 ** (f.n // 2 - 1))


# -- text formats -------------------------------------------------------------

def test_tt_hex_round_trip(rng):
    for n in (1, 2, 3, 4, 8):
        f = random_function(n, rng)
        text = to_tt_hex(f)
        assert text.startswith(f"tt:n={n}:")
        assert from_tt_hex(text) == f


def test_tt_hex_bit_order():
    f = BooleanFunction(2, [1, 0, 0, 1])
    # table index 0 is bit 0 of the first byte: 0b1001 = 0x09
    assert to_tt_hex(f) == "tt:n=2:09"


def test_tt_hex_rejects_malformed():
    with pytest.raises(ValueError):
        from_tt_hex("tt:n=3:zz")
    with pytest.raises(ValueError):
        from_tt_hex("tt:n=4:00")  # wrong byte count


def test_parse_anf_accepts_x_y_z():
    for var in "xyz":
        poly = parse_anf(f"{var}1*{var}3 + {var}2 + 1", 3)
        assert poly.monomials == {0b101, 0b010, 0}


def test_parse_anf_reports_position():
    with pytest.raises(AnfParseError) as exc:
        parse_anf("x1 + q7 + x2", 4)
    assert exc.value.position > 0


def test_parse_anf_rejects_out_of_range_variable():
    with pytest.raises(AnfParseError):
        parse_anf("x5", 4)


def test_format_anf_canonical_order():
    poly = parse_anf("x1*x2 + x3 + 1 + x2", 3)
    assert format_anf(poly) == "1 + x2 + x3 + x1*x2"
    assert format_anf(AnfPoly(3, frozenset()), var="z") == "0"


@given(tables)
@settings(max_examples=30)
def test_anf_text_round_trip(bits):
    f = func_from_bits(bits)
    poly = to_anf(f)
    assert parse_anf(format_anf(poly), f.n) == poly
