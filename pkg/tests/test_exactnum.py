import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from fibsqrt.exactnum import (
    Digits,
    RootResult,
    digits_of,
    from_digits,
    isqrt_oracle,
    mixed,
    partition,
    rational_arith,
    unit_fraction_sum,
)

naturals = st.integers(min_value=0, max_value=10**40)
rationals = st.fractions(max_denominator=10**6)


@pytest.mark.parametrize(
    "n, digits",
    [(864, (4, 6, 8)), (0, (0,)), (9876543, (3, 4, 5, 6, 7, 8, 9))],
)
def test_digits_least_significant_first(n, digits):
    assert digits_of(n).values == digits


def test_digit_lookup_beyond_top_is_zero():
    d = digits_of(743)
    assert (d[0], d[2], d[3], d.length) == (3, 7, 0, 3)


@pytest.mark.parametrize("bad", [(), (10,), (1, 0), (-1,)])
def test_digits_reject_malformed(bad):
    with pytest.raises(ValueError):
        Digits(bad)


@pytest.mark.parametrize("n, parts", [(12345, (123, 4, 5)), (7, (0, 0, 7)), (743, (7, 4, 3))])
def test_partition_examples(n, parts):
    p = partition(n)
    assert (p.head, p.tens, p.ones) == parts


@pytest.mark.parametrize("bad, exc", [(-1, ValueError), (2.0, TypeError), (True, TypeError)])
def test_naturals_only(bad, exc):
    with pytest.raises(exc):
        digits_of(bad)
    with pytest.raises(exc):
        isqrt_oracle(bad)


@given(naturals)
def test_digit_round_trip(n):
    assert digits_of(n).value == n == from_digits(digits_of(n).values)


@given(naturals)
def test_partition_identity(n):
    assert partition(n).value == n


@pytest.mark.parametrize("n, root, rem", [(25, 5, 0), (864, 29, 23), (927435, 963, 66), (0, 0, 0), (1, 1, 0)])
def test_oracle_examples(n, root, rem):
    assert isqrt_oracle(n) == RootResult(n, root, rem)


def test_oracle_sound_up_to_a_million():
    for n in range(10**6 + 1):
        res = isqrt_oracle(n)
        assert res.root * res.root <= n < (res.root + 1) ** 2


@given(naturals)
def test_oracle_matches_math_isqrt(n):
    assert isqrt_oracle(n).root == math.isqrt(n)


def test_root_result_rejects_non_floor_root():
    with pytest.raises(ValueError):
        RootResult(10, 2, 6)
    with pytest.raises(ValueError):
        RootResult(10, 3, 2)


def test_rational_examples():
    assert rational_arith(Fraction(19, 6), Fraction(1, 228), "sub") == Fraction(721, 228)
    assert rational_arith(Fraction(1, 2), Fraction(1, 2), "add") == 1
    assert rational_arith(Fraction(11, 321), Fraction(11, 321), "mul") == Fraction(121, 103041)
    with pytest.raises(ZeroDivisionError):
        rational_arith(Fraction(1), Fraction(0), "div")


@given(st.lists(st.tuples(rationals, st.sampled_from(["add", "sub", "mul", "div"])), min_size=1, max_size=8))
def test_rational_chains_stay_canonical(chain):
    acc = Fraction(1)
    for value, kind in chain:
        if kind == "div" and value == 0:
            continue
        acc = rational_arith(acc, value, kind)
        assert acc.denominator > 0
        assert math.gcd(acc.numerator, acc.denominator) == 1


def test_mixed_number_text():
    assert mixed(27 + Fraction(7, 27)) == "27 7/27"
    assert mixed(27 + Fraction(7, 27), fibonacci_order=True) == "7/27 27"
    assert mixed(Fraction(5)) == "5"
    assert mixed(Fraction(-1, 36)) == "-1/36"


def test_unit_fraction_sum():
    assert unit_fraction_sum(85 + Fraction(1, 20) + Fraction(1, 400)) == "85 1/20 1/400"
    assert unit_fraction_sum(Fraction(19, 6)) == "3 1/6"
    assert unit_fraction_sum(Fraction(4)) == "4"


@given(st.fractions(min_value=0, max_value=1000, max_denominator=500))
def test_unit_fraction_sum_is_exact(q):
    whole, *units = unit_fraction_sum(q).split()
    assert int(whole) + sum(Fraction(u) for u in units) == q
