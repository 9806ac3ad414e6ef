from fractions import Fraction
from itertools import combinations
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from fibonomials.core import (
    IntegralityError,
    fib,
    fibonomial,
    fibonomial_product,
    fibonomial_recurrence,
    fibonomial_via_bridge,
    gaussian_binomial_at,
    power_sum,
    sign_delta,
)
from fibonomials.exact import ALPHA, Q, Golden, golden_pow

# OEIS A010048, rows 0..7
TRIANGLE = [
    [1],
    [1, 1],
    [1, 1, 1],
    [1, 2, 2, 1],
    [1, 3, 6, 3, 1],
    [1, 5, 15, 15, 5, 1],
    [1, 8, 40, 60, 40, 8, 1],
    [1, 13, 104, 260, 260, 104, 13, 1],
]


def test_fib_small():
    assert [fib(n) for n in range(12)] == [0, 1, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89]
    assert fib(100) == 354224848179261915075
    with pytest.raises(ValueError):
        fib(-1)


@pytest.mark.parametrize("route", [fibonomial_product, fibonomial_recurrence, fibonomial_via_bridge])
def test_known_rows(route):
    for n, row in enumerate(TRIANGLE):
        assert [route(n, k) for k in range(n + 1)] == row


@pytest.mark.parametrize("route", [fibonomial_product, fibonomial_recurrence, fibonomial_via_bridge])
def test_bad_arguments(route):
    for n, k in [(3, 4), (-1, 0), (2, -1)]:
        with pytest.raises(ValueError):
            route(n, k)


def test_fibonomial_zero_extension():
    assert fibonomial(3, 4) == 0
    assert fibonomial(3, -1) == 0
    assert fibonomial(-1, 0) == 0
    assert fibonomial(5, 2) == 15


def test_integrality_error_is_arithmetic():
    assert issubclass(IntegralityError, ArithmeticError)


@pytest.mark.parametrize("n", range(31))
def test_symmetry(n):
    assert all(fibonomial_product(n, k) == fibonomial_product(n, n - k) for k in range(n + 1))


@pytest.mark.parametrize("n", range(26))
def test_routes_agree(n):
    for k in range(n + 1):
        ref = fibonomial_product(n, k)
        assert fibonomial_recurrence(n, k) == ref
        assert fibonomial_via_bridge(n, k) == ref


def test_integrality_up_to_60():
    # the product route raises on a non-integral value, so reaching here is the check
    for n in range(61):
        for k in range(n + 1):
            v = fibonomial_product(n, k)
            assert isinstance(v, int) and v >= 1


@given(st.integers(1, 80), st.data())
def test_product_against_fraction_oracle(n, data):
    k = data.draw(st.integers(0, n))
    num = Fraction(1)
    for r in range(1, k + 1):
        num *= Fraction(fib(n - r + 1), fib(r))
    assert fibonomial_product(n, k) == num


def test_sign_delta():
    assert [sign_delta(k) for k in range(8)] == [1, 1, -1, -1, 1, 1, -1, -1]
    for k in range(40):
        assert sign_delta(k) == (-1) ** comb(k, 2)
        assert sign_delta(k + 4) == sign_delta(k)
    with pytest.raises(ValueError):
        sign_delta(-1)


@pytest.mark.parametrize("k", range(21))
def test_sign_delta_splitting(k):
    # C(k,2) - C(j,2) - C(k-j,2) = j(k-j)
    for j in range(k + 1):
        assert sign_delta(k) * sign_delta(j) * sign_delta(k - j) == (-1) ** (j * (k - j))


@pytest.mark.parametrize("n", range(9))
def test_gaussian_binomial_subset_oracle(n):
    # sum over k-subsets S of {0..n-1} of q^(sum S) equals q^C(k,2) [n, k]_q
    for k in range(n + 1):
        total = Golden(0, 0)
        for S in combinations(range(n), k):
            total = total + golden_pow(Q, sum(S))
        assert total == golden_pow(Q, comb(k, 2)) * gaussian_binomial_at(n, k, Q)


def test_gaussian_binomial_at_one_is_binomial():
    for n in range(12):
        for k in range(n + 1):
            assert gaussian_binomial_at(n, k, Golden(1, 0)) == comb(n, k)


def test_gaussian_binomial_at_integer_q():
    # [4,2]_2 = 35
    assert gaussian_binomial_at(4, 2, Golden(2, 0)) == 35


def test_bridge_deep_row():
    assert fibonomial_via_bridge(300, 150) == fibonomial_product(300, 150)


@pytest.mark.parametrize("n", range(21))
def test_power_sum_closed_form(n):
    for r in range(1, 9):
        assert power_sum(n, r) == Fraction(fib(r * n), fib(r))


def test_power_sum_examples():
    assert power_sum(0, 1) == 0
    assert power_sum(3, 1) == 2
    assert power_sum(3, 2) == 8  # a^4 + (ab)^2 + b^4 = L_4 + 1
    with pytest.raises(ValueError):
        power_sum(3, 0)


def test_alpha_power_bridge_factor():
    # alpha^(k(n-k)) [n,k]_q: for n=2, k=1 this is alpha (1 + q) = alpha + beta = 1
    assert ALPHA * gaussian_binomial_at(2, 1) == 1
