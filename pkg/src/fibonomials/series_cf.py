"""Generating functions, continued fractions and the fundamental frame."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .core import IntegralityError, fib, fibonomial, gaussian_binomial_at, sign_delta
from .exact import ALPHA, BETA, Q, Golden, TruncSeries, golden_pow, series_geom_product, series_inverse, series_mul
from .hessenberg import ToeplitzHessenberg, hess_det

__all__ = [
    "golden_row_factors",
    "gf_signed_row",
    "ab_inverse_pair",
    "qbinomial_theorem_check",
    "CFLevel",
    "CFSpec",
    "cf_eval",
    "cf_row_variant",
    "cf_column_variant",
    "row_polynomial",
    "column_series",
    "FrameSpec",
    "FrameResult",
    "frame_check",
    "compositions",
]


def golden_row_factors(n: int) -> list[Golden]:
    """``alpha^(n-1-j) beta^j`` for ``j = 0..n-1``."""
    return [golden_pow(ALPHA, n - 1 - j) * golden_pow(BETA, j) for j in range(n)]


def _rationalize(s: TruncSeries, what: str) -> TruncSeries:
    bad = [i for i, c in enumerate(s.coeffs) if c.b != 0]
    if bad:
        raise IntegralityError(f"{what}: coefficient {bad[0]} is irrational ({s.coeffs[bad[0]]!r})")
    return TruncSeries([c.a for c in s.coeffs], ring="int")


def gf_signed_row(n: int, order: int | None = None) -> TruncSeries:
    """``prod_{j<n} (1 + alpha^(n-1-j) beta^j z)``, whose coefficients are ``delta_k C(n,k)_F``."""
    if order is None:
        order = n
    prod = series_geom_product(golden_row_factors(n), 1, order)
    if n == 0:
        prod = prod.to("golden")
    row = _rationalize(prod, f"signed row {n}")
    for k, c in enumerate(row.coeffs):
        if c != sign_delta(k) * fibonomial(n, k):
            raise IntegralityError(f"signed row {n}: coefficient {k} is {c}")
    return row


def ab_inverse_pair(n: int, order: int) -> tuple[TruncSeries, TruncSeries]:
    """``A = prod 1/(1 + alpha^(n-j) beta^j z)`` and ``B = prod (1 + ...)``, ``j = 0..n``.

    Returned over the integers; raises if ``A*B != 1`` or ``A`` disagrees
    with ``(-1)^l C(n+l, n)_F``.
    """
    factors = golden_row_factors(n + 1)
    A = _rationalize(series_geom_product(factors, -1, order), f"A({n})")
    B = _rationalize(series_geom_product(factors, 1, order), f"B({n})")
    if series_mul(A, B) != TruncSeries.one(order):
        raise ArithmeticError(f"A*B != 1 for n={n}")
    for l, c in enumerate(A.coeffs):
        if c != (-1) ** l * fibonomial(n + l, n):
            raise ArithmeticError(f"A({n}) coefficient {l} is {c}")
    return A, B


def qbinomial_theorem_check(N: int, n: int, order: int) -> bool:
    """Both q-binomial theorems over Z[alpha] at ``q = beta/alpha`` and ``x = alpha^n z``."""
    scale = golden_pow(ALPHA, n)
    factors = [scale * golden_pow(Q, j) for j in range(N)]
    # prod 1/(1 - x q^j) = sum_k [N+k-1, k]_q x^k
    lhs1 = series_geom_product([-g for g in factors], -1, order).to("golden")
    rhs1 = TruncSeries(
        [gaussian_binomial_at(N + k - 1, k, Q) * golden_pow(scale, k) if N else Golden(int(k == 0))
         for k in range(order + 1)],
        order,
        "golden",
    )
    # prod (1 + x q^j) = sum_m q^C(m,2) [N, m]_q x^m
    lhs2 = series_geom_product(factors, 1, order).to("golden")
    rhs2 = TruncSeries(
        [golden_pow(Q, m * (m - 1) // 2) * gaussian_binomial_at(N, m, Q) * golden_pow(scale, m) if m <= N else 0
         for m in range(order + 1)],
        order,
        "golden",
    )
    return lhs1 == rhs1 and lhs2 == rhs2


@dataclass(frozen=True)
class CFLevel:
    """One level ``num * x / (den + lin * x - <deeper levels>)``."""

    num: Fraction
    lin: Fraction
    den: Fraction = Fraction(1)


@dataclass(frozen=True)
class CFSpec:
    """``initial - L_1``, with ``L_j = num_j x / (den_j + lin_j x - L_{j+1})``."""

    initial: Fraction
    levels: tuple[CFLevel, ...]


def cf_eval(spec: CFSpec, order: int) -> TruncSeries:
    """Expand a finite continued fraction as a rational power series mod ``x^(order+1)``."""
    one = TruncSeries.one(order, "rat")
    if not spec.levels:
        return one.scale(Fraction(spec.initial)).to("rat")
    # (P, Q) with L = P / Q, built from the innermost level out
    P = TruncSeries([0], order, "rat")
    Qs = one
    for lvl in reversed(spec.levels):
        lin = TruncSeries([Fraction(lvl.den), Fraction(lvl.lin)], order, "rat")
        P, Qs = series_mul(Qs, TruncSeries([0, Fraction(lvl.num)], order, "rat")), series_mul(lin, Qs) - P
        if Qs.coeffs[0] == 0:
            raise ZeroDivisionError("continued fraction denominator has zero constant term")
    head = one.scale(Fraction(spec.initial)).to("rat")
    return head - series_mul(P, series_inverse(Qs))


def cf_row_variant(n: int) -> CFSpec:
    """Continued fraction for ``sum_k delta_(k+1) C(n+1, k)_F x^k``; partial quotients ``F_(n+j)/F_j``."""
    levels = []
    for j in range(1, n + 2):
        r = Fraction(fib(n + j), fib(j))
        levels.append(CFLevel(r, r))
    return CFSpec(Fraction(1), tuple(levels))


def cf_column_variant(n: int) -> CFSpec:
    """Continued fraction for ``sum_k C(n+k, k)_F x^k``; level j carries ``(-1)^j F_(n+2-j)/F_j``."""
    levels = []
    for j in range(1, n + 2):
        r = (-1) ** j * Fraction(fib(n + 2 - j), fib(j))
        levels.append(CFLevel(r, r))
    return CFSpec(Fraction(1), tuple(levels))


def row_polynomial(n: int) -> list[int]:
    """``delta_(k+1) C(n+1, k)_F`` for ``k = 0..n+1`` straight from the product formula."""
    return [sign_delta(k + 1) * fibonomial(n + 1, k) for k in range(n + 2)]


def column_series(n: int, order: int) -> list[int]:
    """``C(n+k, k)_F`` for ``k = 0..order``."""
    return [fibonomial(n + k, k) for k in range(order + 1)]


@dataclass(frozen=True)
class FrameSpec:
    """Sequences ``g_1..g_N``, ``h_1..h_N`` with ratios ``r_j = (h_1...h_j)/(g_1...g_j)``."""

    g: tuple
    h: tuple

    def __post_init__(self) -> None:
        if len(self.g) != len(self.h):
            raise ValueError("g and h must have equal length")
        if any(x == 0 for x in self.g):
            raise ValueError("g_j must be nonzero")

    @classmethod
    def from_ratios(cls, ratios: Sequence) -> FrameSpec:
        """Spec with ``g_j = 1`` and ``h_j = r_j / r_(j-1)`` (needs every ratio nonzero)."""
        h = []
        prev = Fraction(1)
        for r in ratios:
            r = Fraction(r)
            h.append(r / prev)
            prev = r
        return cls(tuple(Fraction(1) for _ in h), tuple(h))

    @property
    def depth(self) -> int:
        return len(self.g)

    def ratios(self) -> list[Fraction]:
        """``r_0 = 1, r_1, ..., r_N``."""
        out = [Fraction(1)]
        for g, h in zip(self.g, self.h):
            out.append(out[-1] * Fraction(h) / Fraction(g))
        return out

    def continued_fraction(self) -> CFSpec:
        levels = []
        prev_g = Fraction(1)
        for g, h in zip(self.g, self.h):
            levels.append(CFLevel(prev_g * Fraction(h), Fraction(h), Fraction(g)))
            prev_g = Fraction(g)
        return CFSpec(Fraction(1), tuple(levels))


def compositions(n: int):
    """All tuples of positive integers summing to ``n``."""
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in compositions(n - first):
            yield (first, *rest)


@dataclass(frozen=True)
class FrameResult:
    f: dict  # route name -> f_0..f_N
    r: dict  # route name -> r_0..r_N recovered from f
    convolution: tuple
    ok: bool


def _signed_det(seq: Sequence, m: int):
    d = hess_det(ToeplitzHessenberg(tuple(seq[1 : m + 1]), 1))
    return d if m % 2 == 0 else -d


def _trudi_unit(seq: Sequence, m: int):
    from .identities import multinomial, weighted_partitions

    total = Fraction(0)
    for t in weighted_partitions(m):
        term = Fraction(multinomial(t) * (-1) ** sum(t))
        for j, tj in enumerate(t, start=1):
            if tj:
                term *= Fraction(seq[j]) ** tj
        total += term
    return total


def _composition_sum(seq: Sequence, m: int):
    if m == 0:
        return Fraction(1)
    total = Fraction(0)
    for comp in compositions(m):
        term = Fraction((-1) ** len(comp))
        for i in comp:
            term *= seq[i]
        total += term
    return total


def frame_check(spec: FrameSpec, N: int | None = None) -> FrameResult:
    """Compute ``f_0..f_N`` by every route of the frame equivalence and compare."""
    if N is None:
        N = spec.depth
    if N > spec.depth:
        raise ValueError(f"spec has depth {spec.depth}, asked for N={N}")
    r = spec.ratios()[: N + 1]
    series = series_inverse(TruncSeries(r, N, "rat"))
    f = list(series.coeffs)
    routes_f = {
        "inverse": f,
        "determinant": [Fraction(_signed_det(r, m)) for m in range(N + 1)],
        "trudi": [_trudi_unit(r, m) for m in range(N + 1)],
        "composition": [_composition_sum(r, m) for m in range(N + 1)],
        "continued_fraction": list(cf_eval(spec.continued_fraction(), N).coeffs),
    }
    routes_f["determinant"][0] = Fraction(1)
    conv = tuple(sum((f[k] * r[m - k] for k in range(m + 1)), Fraction(0)) for m in range(N + 1))
    routes_r = {
        "given": r,
        "inverse": list(series_inverse(series).coeffs),
        "determinant": [Fraction(_signed_det(f, m)) for m in range(N + 1)],
        "trudi": [_trudi_unit(f, m) for m in range(N + 1)],
        "composition": [_composition_sum(f, m) for m in range(N + 1)],
    }
    ok = (
        all(v == f for v in routes_f.values())
        and all(v == r for v in routes_r.values())
        and conv == tuple(Fraction(int(m == 0)) for m in range(N + 1))
    )
    return FrameResult(routes_f, routes_r, conv, ok)
