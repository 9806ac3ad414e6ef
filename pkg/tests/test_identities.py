from fractions import Fraction
from itertools import product
from math import factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fibonomials.core import fibonomial, power_sum, sign_delta
from fibonomials.hessenberg import ToeplitzHessenberg, hess_det
from fibonomials.identities import (
    alternating_sum,
    bell_complete,
    bell_det_fibonom,
    bell_det_literal,
    bell_partition_sum,
    bell_recurrence,
    fibonom_via_bell,
    fibonomial_vandermonde,
    gtrudi_roundtrip,
    lemma1_classical,
    lemma2_sum,
    multinomial,
    powersum_det,
    powersum_det_literal,
    q_vandermonde_check,
    th5_sum,
    tha5_sum,
    trudi_eval,
    vandermonde_first_form,
    vandermonde_gf_check,
    weighted_partitions,
)

PARTITION_COUNTS = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]


def exp_series_bell(xs) -> Fraction:
    """``n! [t^n] exp(sum x_m t^m / m!)`` via ``E' = g' E``."""
    n = len(xs)
    g = [Fraction(0)] + [Fraction(x, factorial(m)) for m, x in enumerate(xs, start=1)]
    E = [Fraction(1)]
    for m in range(1, n + 1):
        E.append(sum((k * g[k] * E[m - k] for k in range(1, m + 1)), Fraction(0)) / m)
    return E[n] * factorial(n)


def test_lemma_examples():
    assert lemma1_classical(3, 0) == 1
    assert lemma2_sum(3, 0) == 1
    assert lemma2_sum(2, 2) == 0


@pytest.mark.parametrize("n", range(13))
def test_zero_sums(n):
    for k in range(1, 13):
        assert lemma1_classical(n, k) == 0
        assert lemma2_sum(n, k) == 0


@pytest.mark.parametrize("m", range(1, 16, 2))
def test_alternating_sum_odd(m):
    assert alternating_sum(m) == 0


@pytest.mark.parametrize("m", [0, 2, 4, -1])
def test_alternating_sum_rejects_even(m):
    with pytest.raises(ValueError):
        alternating_sum(m)


def test_vandermonde_example():
    rhs, lhs = fibonomial_vandermonde(2, 3, 2)
    assert lhs == fibonomial(5, 2) == 15
    assert rhs.b == 0 and rhs == 15
    with pytest.raises(ValueError):
        fibonomial_vandermonde(1, 1, 3)


@pytest.mark.parametrize("m", range(11))
def test_vandermonde_range(m):
    for n in range(11):
        for k in range(m + n + 1):
            rhs, lhs = fibonomial_vandermonde(m, n, k)
            assert rhs.b == 0
            assert rhs == lhs
            assert vandermonde_first_form(m, n, k) == lhs


def test_q_vandermonde_and_gf():
    for m in range(6):
        for n in range(6):
            assert vandermonde_gf_check(m, n)
            for k in range(m + n + 1):
                assert q_vandermonde_check(m, n, k)


def brute_partitions(k):
    return [t for t in product(*(range(k // j + 1) for j in range(1, k + 1))) if sum(j * x for j, x in enumerate(t, 1)) == k]


@pytest.mark.parametrize("k", range(11))
def test_weighted_partitions_oracle(k):
    got = list(weighted_partitions(k))
    assert len(got) == PARTITION_COUNTS[k]
    assert len(set(got)) == len(got)
    if k:
        assert sorted(got) == sorted(brute_partitions(k))
    else:
        assert got == [()]


def test_weighted_partitions_order():
    assert list(weighted_partitions(3)) == [(3, 0, 0), (1, 1, 0), (0, 0, 1)]
    with pytest.raises(ValueError):
        list(weighted_partitions(-1))


def test_multinomial():
    assert multinomial((2, 1)) == 3
    assert multinomial((1, 1, 1)) == 6
    assert multinomial(()) == 1


@given(st.integers(-3, 3).filter(bool), st.lists(st.integers(-6, 6), min_size=1, max_size=7))
def test_trudi_matches_determinant(a0, a):
    n = len(a)
    assert trudi_eval(a0, a, n) == hess_det(ToeplitzHessenberg(tuple(a), a0))


def test_trudi_short_input():
    with pytest.raises(ValueError):
        trudi_eval(1, [1, 2], 3)


@pytest.mark.parametrize("n", range(10))
def test_trudi_closures(n):
    for k in range(1, 10):
        assert th5_sum(n, k) == fibonomial(n + 1, k)
        assert tha5_sum(n, k) == fibonomial(n + k, k)


def test_trudi_literal_exponents_disagree_somewhere():
    assert th5_sum(1, 2, literal=True) != fibonomial(2, 2)
    assert tha5_sum(1, 2, literal=True) != fibonomial(3, 2)
    # the printed exponent agrees whenever n and k have equal parity
    assert th5_sum(4, 2, literal=True) == fibonomial(5, 2)


@given(st.lists(st.integers(-5, 5), max_size=8))
def test_bell_routes_match_exp_oracle(xs):
    want = exp_series_bell(xs)
    assert bell_partition_sum(xs) == want
    assert bell_recurrence(xs)[-1] == want
    assert bell_complete(xs) == want


def test_bell_numbers():
    # all-ones arguments give the Bell numbers
    assert [bell_complete([1] * n) for n in range(8)] == [1, 1, 2, 5, 15, 52, 203, 877]


@pytest.mark.parametrize("n", range(1, 13))
def test_bell_closures(n):
    for k in range(0, n + 1):
        assert fibonom_via_bell(n, k) == fibonomial(n, k)
    for k in range(1, n + 1):
        assert bell_det_fibonom(n, k) == fibonomial(n, k)
        assert powersum_det(n, k) == power_sum(n, k)


def test_bell_argument_errors():
    with pytest.raises(ValueError):
        fibonom_via_bell(3, 4)
    with pytest.raises(ValueError):
        bell_det_fibonom(3, 0)
    with pytest.raises(ValueError):
        powersum_det(2, 3)
    with pytest.raises(ValueError):
        bell_det_literal(4, 2, sign="other")


def test_bell_literal_readings_fail():
    # without delta_k outside the determinant neither sign reading is right
    for reading in ("binom_j2", "binom_nj"):
        misses = [
            (n, k) for n in range(1, 8) for k in range(1, n + 1) if bell_det_literal(n, k, reading) != fibonomial(n, k)
        ]
        assert misses


def test_powersum_literal_delta_fails_somewhere():
    misses = [(n, k) for n in range(1, 8) for k in range(1, n + 1) if powersum_det_literal(n, k) != power_sum(n, k)]
    assert misses


def test_gtrudi_example():
    res = gtrudi_roundtrip([power_sum(4, j) for j in range(1, 5)], 4)
    assert res.ok
    assert res.b["bell"] == [sign_delta(k) * fibonomial(4, k) for k in range(5)]
    with pytest.raises(ValueError):
        gtrudi_roundtrip([1], 2)


@settings(max_examples=40)
@given(st.lists(st.fractions(-9, 9, max_denominator=5), min_size=1, max_size=8))
def test_gtrudi_property(a):
    assert gtrudi_roundtrip(a, len(a)).ok


def test_gtrudi_third_coefficient_sign():
    # b_3 = (a_1^3 - 3 a_1 a_2 + 2 a_3) / 6: a_3 enters with +2!
    a = [Fraction(0), Fraction(0), Fraction(1)]
    assert gtrudi_roundtrip(a, 3).b["bell"][3] == Fraction(2, 6)
