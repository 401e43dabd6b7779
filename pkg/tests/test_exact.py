import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from patchentropy.exact import (
    Coord,
    ceil_exp,
    exp_bracket,
    exp_le,
    exp_lt,
    exp_upper_dyadic,
    floor_exp,
    floor_num,
    format_number,
    make,
    parse_number,
    sign,
    sort_exact,
)

rationals = st.fractions(min_value=-50, max_value=50, max_denominator=64)


def test_alpha_relation_sqrt2m1():
    a = make(0, 1, "sqrt2m1")
    # alpha^2 + 2 alpha - 1 = 0
    assert a * a + 2 * a - 1 == 0


def test_golden_relation():
    a = make(0, 1, "golden")
    assert a * a + a - 1 == 0


def test_ordering_of_multiples():
    a = make(0, 1, "sqrt2m1")
    assert 2 * a < 1 < 3 * a


def test_floor_of_coord():
    a = make(0, 1, "sqrt2m1")
    assert floor_num(10 * a) == 4
    assert floor_num(-a) == -1


def test_parse_format_roundtrip():
    x = parse_number("1/3+2/5*sqrt2m1")
    assert isinstance(x, Coord)
    assert parse_number(format_number(x)) == x
    assert parse_number("7/4") == Fraction(7, 4)


def test_floats_rejected():
    with pytest.raises(TypeError):
        parse_number(0.5)


@given(rationals, rationals)
def test_coord_sign_matches_float(a, b):
    x = make(a, b, "sqrt2m1")
    val = float(a) + float(b) * (math.sqrt(2) - 1)
    if abs(val) > 1e-9:
        assert sign(x) == (1 if val > 0 else -1)


@given(st.lists(st.tuples(rationals, rationals), min_size=1, max_size=8))
def test_sort_exact_is_sorted(pairs):
    xs = sort_exact([make(a, b, "golden") for a, b in pairs])
    assert all(u <= v for u, v in zip(xs, xs[1:]))


@given(st.fractions(min_value=0, max_value=12, max_denominator=20))
def test_exp_bracket_contains_e(x):
    lo, hi = exp_bracket(x)
    assert lo <= hi
    assert float(lo) <= math.exp(x) * (1 + 1e-12)
    assert float(hi) >= math.exp(x) * (1 - 1e-12)


def test_certified_exponent_helpers():
    assert ceil_exp(2) == 8
    assert floor_exp(2) == 7
    assert floor_exp(3) == 20
    assert exp_lt(1, Fraction(2719, 1000)) and not exp_lt(1, Fraction(2718, 1000))
    assert exp_le(0, 1) and not exp_lt(0, 1)


@given(st.fractions(min_value=0, max_value=10, max_denominator=10))
def test_dyadic_upper_above_exp(x):
    t = exp_upper_dyadic(x)
    if x == 0:
        assert t == 1
    else:
        assert exp_lt(x, t)
        assert not exp_lt(x, t - Fraction(1, 2 ** 32))
