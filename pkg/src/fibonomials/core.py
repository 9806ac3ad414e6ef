"""Fibonacci numbers, Fibonomial coefficients and their golden-ring bridge."""

from __future__ import annotations

import threading
from fractions import Fraction
from functools import lru_cache

from .exact import ALPHA, BETA, Q, Golden, golden_pow

__all__ = [
    "fib",
    "fibonomial_product",
    "fibonomial_recurrence",
    "fibonomial",
    "sign_delta",
    "gaussian_binomial_at",
    "fibonomial_via_bridge",
    "power_sum",
]

_fib_table = [0, 1]
_fib_lock = threading.Lock()


def fib(n: int) -> int:
    """``F_n`` with ``F_0 = 0``, ``F_1 = 1``."""
    if n < 0:
        raise ValueError(f"fib index must be >= 0, got {n}")
    if n < len(_fib_table):
        return _fib_table[n]
    with _fib_lock:
        while len(_fib_table) <= n:
            _fib_table.append(_fib_table[-1] + _fib_table[-2])
    return _fib_table[n]


def _check_nk(n: int, k: int) -> None:
    if n < 0 or k < 0:
        raise ValueError(f"need n, k >= 0, got n={n}, k={k}")
    if k > n:
        raise ValueError(f"need k <= n, got n={n}, k={k}")


class IntegralityError(ArithmeticError):
    """An exact computation that must produce an integer did not."""


@lru_cache(maxsize=None)
def fibonomial_product(n: int, k: int) -> int:
    """``prod_{r=1..k} F_{n-r+1} / F_r``; the reference value for every other route."""
    _check_nk(n, k)
    value = Fraction(1)
    for r in range(1, k + 1):
        value *= Fraction(fib(n - r + 1), fib(r))
    if value.denominator != 1:
        raise IntegralityError(f"Fibonomial ({n}, {k}) came out as {value}")
    return value.numerator


def fibonomial(n: int, k: int) -> int:
    """Product-formula value, extended by zero outside ``0 <= k <= n``."""
    if k < 0 or n < 0 or k > n:
        return 0
    return fibonomial_product(n, k)


_rec_rows: list[list[int]] = [[1]]
_rec_lock = threading.Lock()


def fibonomial_recurrence(n: int, k: int) -> int:
    """Value from ``F_{n-k-1} C(n-1,k-1) + F_{k+1} C(n-1,k)`` on a memoized triangle."""
    _check_nk(n, k)
    if n >= len(_rec_rows):
        with _rec_lock:
            while len(_rec_rows) <= n:
                m = len(_rec_rows)
                prev = _rec_rows[-1]
                row = [1] * (m + 1)
                for j in range(1, m):
                    row[j] = fib(m - j - 1) * prev[j - 1] + fib(j + 1) * prev[j]
                _rec_rows.append(row)
    return _rec_rows[n][k]


def sign_delta(k: int) -> int:
    """``(-1)**(k(k-1)/2)``: +, +, -, - repeating from k = 0."""
    if k < 0:
        raise ValueError("sign_delta needs k >= 0")
    return -1 if (k * (k - 1) // 2) % 2 else 1


@lru_cache(maxsize=256)
def _gaussian_row(N: int, q: Golden) -> tuple[Golden, ...]:
    if N == 0:
        return (Golden(1, 0),)
    prev = _gaussian_row(N - 1, q)
    row = [Golden(1, 0)] * (N + 1)
    qk = Golden(1, 0)
    for K in range(1, N):
        qk = qk * q
        row[K] = prev[K - 1] + qk * prev[K]
    return tuple(row)


def gaussian_binomial_at(N: int, K: int, q: Golden = Q) -> Golden:
    """Gaussian binomial ``[N choose K]_q`` evaluated at ``q`` in Z[alpha].

    Division free: rows come from ``[N,K] = [N-1,K-1] + q^K [N-1,K]``.
    """
    _check_nk(N, K)
    q = Golden.coerce(q)
    # build rows bottom-up so deep N does not hit the recursion limit
    for m in range(0, N, 200):
        _gaussian_row(m, q)
    return _gaussian_row(N, q)[K]


def fibonomial_via_bridge(n: int, k: int) -> int:
    """``alpha^(k(n-k)) * [n choose k]_q`` at ``q = beta/alpha``, read off as an integer."""
    _check_nk(n, k)
    value = golden_pow(ALPHA, k * (n - k)) * gaussian_binomial_at(n, k, Q)
    if value.b != 0:
        raise IntegralityError(f"bridge value for ({n}, {k}) is irrational: {value!r}")
    return value.a


@lru_cache(maxsize=None)
def power_sum(n: int, r: int) -> int:
    """``s_{n,r} = sum_j (alpha^(n-1-j) beta^j)^r``, checked against ``F_{rn} / F_r``."""
    if n < 0 or r < 1:
        raise ValueError(f"need n >= 0, r >= 1, got n={n}, r={r}")
    ar, br = golden_pow(ALPHA, r), golden_pow(BETA, r)
    direct = Golden(0, 0)
    term = golden_pow(ar, n - 1) if n else Golden(0, 0)
    # walk j = 0..n-1, trading one alpha^r for one beta^r each step
    ar_inv = ar.inverse()
    for _ in range(n):
        direct = direct + term
        term = term * ar_inv * br
    if direct.b != 0:
        raise IntegralityError(f"s_({n},{r}) is irrational: {direct!r}")
    closed = Fraction(fib(r * n), fib(r))
    if closed != direct.a:
        raise IntegralityError(f"s_({n},{r}): direct sum {direct.a} != F_rn/F_r = {closed}")
    return direct.a
