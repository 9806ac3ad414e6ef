"""Zero-sum lemmas, the Fibonomial Vandermonde identity, Trudi expansions and Bell polynomials."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Iterator, Sequence

from .core import IntegralityError, fibonomial, gaussian_binomial_at, power_sum, sign_delta
from .exact import ALPHA, BETA, Q, Golden, golden_pow, series_mul
from .hessenberg import LowerHessenberg, hess_det

__all__ = [
    "lemma1_classical",
    "lemma2_sum",
    "fibonomial_vandermonde",
    "vandermonde_first_form",
    "q_vandermonde_check",
    "vandermonde_gf_check",
    "alternating_sum",
    "weighted_partitions",
    "multinomial",
    "bell_partition_sum",
    "bell_recurrence",
    "bell_complete",
    "fibonom_via_bell",
    "trudi_eval",
    "th5_sum",
    "tha5_sum",
    "GtrudiResult",
    "gtrudi_roundtrip",
    "bell_det_matrix",
    "bell_det_fibonom",
    "bell_det_literal",
    "powersum_det",
    "powersum_det_literal",
]


def lemma1_classical(n: int, k: int) -> int:
    """``sum_l (-1)^l C(n+l, n) C(n+1, k-l)``; zero for ``k >= 1``."""
    return sum((-1) ** l * comb(n + l, n) * comb(n + 1, k - l) for l in range(k + 1))


def lemma2_sum(n: int, k: int) -> int:
    """``sum_l (-1)^l C(n+l, n)_F delta_(k-l) C(n+1, k-l)_F``; zero for ``k >= 1``."""
    return sum(
        (-1) ** l * fibonomial(n + l, n) * sign_delta(k - l) * fibonomial(n + 1, k - l)
        for l in range(k + 1)
    )


def fibonomial_vandermonde(m: int, n: int, k: int) -> tuple[Golden, int]:
    """Return ``(rhs, lhs)`` of the Fibonomial Vandermonde identity.

    ``rhs = sum_j C(m,k-j)_F C(n,j)_F alpha^(n(k-j)) beta^(mj) (-1)^(j(k-j))``
    is computed in Z[alpha]; ``lhs = C(m+n, k)_F``.
    """
    if k < 0 or k > m + n:
        raise ValueError(f"need 0 <= k <= m+n, got m={m}, n={n}, k={k}")
    rhs = Golden(0, 0)
    for j in range(max(0, k - m), min(k, n) + 1):
        c = fibonomial(m, k - j) * fibonomial(n, j) * (-1) ** (j * (k - j))
        rhs = rhs + golden_pow(ALPHA, n * (k - j)) * golden_pow(BETA, m * j) * c
    return rhs, fibonomial(m + n, k)


def vandermonde_first_form(m: int, n: int, k: int) -> Golden:
    """``sum_j C(m,k-j)_F C(n,j)_F alpha^((n-j)(k-j)) beta^((m-k+j)j)``."""
    rhs = Golden(0, 0)
    for j in range(max(0, k - m), min(k, n) + 1):
        c = fibonomial(m, k - j) * fibonomial(n, j)
        rhs = rhs + golden_pow(ALPHA, (n - j) * (k - j)) * golden_pow(BETA, (m - k + j) * j) * c
    return rhs


def q_vandermonde_check(m: int, n: int, k: int) -> bool:
    """``[m+n, k]_q = sum_j [m, k-j]_q [n, j]_q q^(j(m-k+j))`` at ``q = beta/alpha``."""
    rhs = Golden(0, 0)
    for j in range(max(0, k - m), min(k, n) + 1):
        rhs = rhs + gaussian_binomial_at(m, k - j) * gaussian_binomial_at(n, j) * golden_pow(Q, j * (m - k + j))
    return rhs == gaussian_binomial_at(m + n, k)


def vandermonde_gf_check(m: int, n: int) -> bool:
    """Signed row ``m+n`` equals signed row ``m`` at ``alpha^n z`` times signed row ``n`` at ``beta^m z``."""
    from .series_cf import gf_signed_row

    order = m + n
    whole = gf_signed_row(m + n, order).to("golden")
    left = gf_signed_row(m, order).to("golden").substitute_scaled(golden_pow(ALPHA, n))
    right = gf_signed_row(n, order).to("golden").substitute_scaled(golden_pow(BETA, m))
    return series_mul(left.to("golden"), right.to("golden")) == whole


def alternating_sum(m: int) -> int:
    """``sum_j (-1)^(j(m+j)/2) C(m, j)_F``, defined for odd ``m`` only."""
    if m < 1 or m % 2 == 0:
        raise ValueError(f"alternating sum needs odd m >= 1 (exponent j(m+j)/2 must be integral), got {m}")
    return sum((-1) ** (j * (m + j) // 2) * fibonomial(m, j) for j in range(m + 1))


def weighted_partitions(k: int) -> Iterator[tuple[int, ...]]:
    """Every ``(t_1, ..., t_k)`` with ``sum j t_j == k``, ascending in ``(t_k, ..., t_1)``."""
    if k < 0:
        raise ValueError("k must be >= 0")

    def rec(j: int, remaining: int) -> Iterator[tuple[int, ...]]:
        # choose t_j, ..., t_1 from the top part down; t_1 takes what is left
        if j == 1:
            yield (remaining,)
            return
        for tj in range(remaining // j + 1):
            for rest in rec(j - 1, remaining - j * tj):
                yield rest + (tj,)

    if k == 0:
        yield ()
        return
    yield from rec(k, k)


def multinomial(t: Sequence[int]) -> int:
    out = factorial(sum(t))
    for x in t:
        out //= factorial(x)
    return out


def bell_partition_sum(xs: Sequence):
    """``Y_n`` from the explicit sum over partitions of ``n``."""
    n = len(xs)
    if n == 0:
        return 1
    total = 0
    for t in weighted_partitions(n):
        coef = factorial(n)
        term = 1
        for j, tj in enumerate(t, start=1):
            if tj:
                coef //= factorial(tj) * factorial(j) ** tj
                term = term * xs[j - 1] ** tj
        total = total + term * coef
    return total


def bell_recurrence(xs: Sequence) -> list:
    """``Y_0..Y_n`` from ``Y_(m+1) = sum_i C(m, i) Y_(m-i) x_(i+1)``."""
    ys = [1]
    for m in range(len(xs)):
        acc = 0
        for i in range(m + 1):
            acc = acc + xs[i] * ys[m - i] * comb(m, i)
        ys.append(acc)
    return ys


def bell_complete(xs: Sequence):
    """Complete exponential Bell polynomial ``Y_n(x_1..x_n)``, cross-checked two ways."""
    a = bell_partition_sum(xs)
    b = bell_recurrence(xs)[-1]
    if a != b:
        raise ArithmeticError(f"Bell routes disagree: {a} != {b}")
    return a


def _bell_arguments(values: Sequence) -> list:
    """``x_m = (-1)^(m-1) (m-1)! v_m``."""
    return [(-1) ** (m - 1) * factorial(m - 1) * v for m, v in enumerate(values, start=1)]


def fibonom_via_bell(n: int, k: int) -> int:
    """``C(n, k)_F`` from ``Y_k(s_(n,1), -1! s_(n,2), 2! s_(n,3), ...) / k! = delta_k C(n,k)_F``."""
    if k < 0 or k > n:
        raise ValueError(f"need 0 <= k <= n, got n={n}, k={k}")
    y = Fraction(bell_complete(_bell_arguments([power_sum(n, r) for r in range(1, k + 1)])), factorial(k))
    if y.denominator != 1:
        raise IntegralityError(f"Bell value for ({n}, {k}) is {y}")
    return sign_delta(k) * y.numerator


def trudi_eval(a0, a: Sequence, n: int):
    """Trudi's multinomial expansion of the Toeplitz Hessenberg determinant.

    ``a[j-1]`` is ``a_j``; ``a0`` is the superdiagonal.
    """
    if len(a) < n:
        raise ValueError(f"need {n} terms, got {len(a)}")
    total = 0
    for t in weighted_partitions(n):
        term = multinomial(t) * (-a0) ** (n - sum(t))
        for j, tj in enumerate(t, start=1):
            if tj:
                term = term * a[j - 1] ** tj
        total = total + term
    return total


def th5_sum(n: int, k: int, literal: bool = False) -> int:
    """Trudi form of the Theorem 1 determinant; equals ``C(n+1, k)_F``.

    The sign exponent is ``C(k,2) + k - sum t``.  ``literal=True`` uses the
    printed ``n`` in place of the determinant order ``k``.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    order = n if literal else k
    col = [fibonomial(n + l, n) for l in range(1, k + 1)]
    total = 0
    for t in weighted_partitions(k):
        e = k * (k - 1) // 2 + order - sum(t)
        term = multinomial(t) * (-1) ** (e % 2)
        for l, tl in enumerate(t, start=1):
            if tl:
                term *= col[l - 1] ** tl
        total += term
    return total


def tha5_sum(n: int, k: int, literal: bool = False) -> int:
    """Trudi form of the tha1 determinant; equals ``C(n+k, k)_F``.

    Sign exponent ``k + sum (l+1)(l-2)/2 t_l``; ``literal=True`` uses ``n``.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    order = n if literal else k
    col = [fibonomial(n + 1, l) for l in range(1, k + 1)]
    total = 0
    for t in weighted_partitions(k):
        e = order + sum((l + 1) * (l - 2) // 2 * tl for l, tl in enumerate(t, start=1))
        term = multinomial(t) * (-1) ** (e % 2)
        for l, tl in enumerate(t, start=1):
            if tl:
                term *= col[l - 1] ** tl
        total += term
    return total


@dataclass(frozen=True)
class GtrudiResult:
    b: dict  # route -> b_0..b_n
    a: dict  # route -> a_1..a_n
    ok: bool


def _bell_det(a: Sequence, m: int):
    """``det`` with column ``a_1..a_m`` and superdiagonal ``1, 2, ..., m-1``."""
    M = LowerHessenberg.from_function(m, lambda i, j: i if j == i + 1 else a[i - j])
    return hess_det(M)


def _weighted_first_column_det(b: Sequence, m: int):
    """``det`` with first column ``j b_j``, other columns ``b_(i-j+1)``, unit superdiagonal."""
    M = LowerHessenberg.from_function(
        m, lambda i, j: 1 if j == i + 1 else (i * b[i] if j == 1 else b[i - j + 1])
    )
    return hess_det(M)


def gtrudi_roundtrip(a: Sequence, n: int) -> GtrudiResult:
    """Five equivalent links between ``a_1..a_n`` and ``b_0 = 1, b_1..b_n``.

    ``a[j-1]`` is ``a_j``.  The ``b`` sequence is computed by the Bell form,
    the determinant with superdiagonal ``1..m-1`` and the Newton-type
    recurrence; ``a`` is recovered by the weighted-column determinant and
    by the reverse recurrence.
    """
    if len(a) < n:
        raise ValueError(f"need {n} terms, got {len(a)}")
    a = [Fraction(x) for x in a[:n]]
    args = _bell_arguments(a)
    b_bell = [Fraction(bell_complete(args[:m]), factorial(m)) for m in range(n + 1)]
    b_det = [Fraction(1)] + [Fraction(_bell_det(a, m), factorial(m)) for m in range(1, n + 1)]
    b_rec = [Fraction(1)]
    for m in range(1, n + 1):
        s = sum(((-1) ** (i - 1) * a[i - 1] * b_rec[m - i] for i in range(1, m + 1)), Fraction(0))
        b_rec.append(s / m)
    b = b_rec
    a_det = [Fraction(_weighted_first_column_det(b, m)) for m in range(1, n + 1)]
    a_rec: list[Fraction] = []
    for m in range(1, n + 1):
        s = sum(((-1) ** (j - 1) * b[j] * a_rec[m - j - 1] for j in range(1, m)), Fraction(0))
        a_rec.append(s + (-1) ** (m + 1) * m * b[m])
    routes_b = {"bell": b_bell, "determinant": b_det, "recurrence": b_rec}
    routes_a = {"given": a, "determinant": a_det, "recurrence": a_rec}
    ok = all(v == b for v in routes_b.values()) and all(v == a for v in routes_a.values())
    return GtrudiResult(routes_b, routes_a, ok)


def bell_det_matrix(n: int, k: int) -> LowerHessenberg:
    """Column ``s_(n,1..k)``, superdiagonal ``1, 2, ..., k-1``."""
    s = [power_sum(n, j) for j in range(1, k + 1)]
    return LowerHessenberg.from_function(k, lambda i, j: i if j == i + 1 else s[i - j])


def bell_det_fibonom(n: int, k: int) -> int:
    """``C(n, k)_F = delta_k / k! * det(bell_det_matrix(n, k))``."""
    if k < 1 or k > n:
        raise ValueError(f"need 1 <= k <= n, got n={n}, k={k}")
    v = Fraction(hess_det(bell_det_matrix(n, k)), factorial(k))
    if v.denominator != 1:
        raise IntegralityError(f"Bell determinant for ({n}, {k}) is {v}")
    return sign_delta(k) * v.numerator


def bell_det_literal(n: int, k: int, sign: str = "binom_j2") -> Fraction:
    """The printed matrix: entries ``delta_j s_(n,j)`` below the diagonal, ``s_(n,1)`` on it.

    ``sign="binom_j2"`` takes ``delta_j = (-1)^C(j,2)``; ``sign="binom_nj"``
    takes the printed ``(-1)^C(n,j)``.  No sign outside the determinant.
    """
    if sign == "binom_j2":
        delta = sign_delta
    elif sign == "binom_nj":
        delta = lambda j: -1 if comb(n, j) % 2 else 1  # noqa: E731
    else:
        raise ValueError(f"unknown sign reading {sign!r}")
    s = [power_sum(n, j) for j in range(1, k + 1)]
    col = [s[0]] + [delta(j) * s[j - 1] for j in range(2, k + 1)]
    M = LowerHessenberg.from_function(k, lambda i, j: i if j == i + 1 else col[i - j])
    return Fraction(hess_det(M), factorial(k))


def _powersum_matrix(n: int, k: int, delta) -> LowerHessenberg:
    b = [None] + [delta(j) * fibonomial(n, j) for j in range(1, k + 1)]
    return LowerHessenberg.from_function(
        k, lambda i, j: 1 if j == i + 1 else (i * b[i] if j == 1 else b[i - j + 1])
    )


def powersum_det(n: int, k: int) -> int:
    """``s_(n,k)`` from the determinant with first column ``j delta_j C(n,j)_F``."""
    if k < 1 or k > n:
        raise ValueError(f"need 1 <= k <= n, got n={n}, k={k}")
    return hess_det(_powersum_matrix(n, k, sign_delta))


def powersum_det_literal(n: int, k: int) -> int:
    """As :func:`powersum_det` but with the printed ``delta_j = (-1)^C(n,j)``."""
    return hess_det(_powersum_matrix(n, k, lambda j: -1 if comb(n, j) % 2 else 1))
