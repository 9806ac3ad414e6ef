"""Exact arithmetic substrate: the golden ring Z[alpha] and truncated power series.

Integers are Python ``int`` and rationals are :class:`fractions.Fraction`
(always in lowest terms with a positive denominator).  Elements of
``Z[alpha]`` with ``alpha = (1 + sqrt 5) / 2`` are stored as integer
coordinates in the basis ``{1, alpha}``, so ``alpha``, ``beta = 1 - alpha``
and ``q = beta / alpha = alpha - 2`` never need a denominator.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

__all__ = [
    "Golden",
    "ALPHA",
    "BETA",
    "Q",
    "golden_mul",
    "golden_conj",
    "golden_pow",
    "TruncSeries",
    "series_mul",
    "series_inverse",
    "series_geom_product",
    "ring_of",
]


@dataclass(frozen=True)
class Golden:
    """An element ``a + b*alpha`` of Z[alpha], with ``alpha**2 == alpha + 1``."""

    a: int = 0
    b: int = 0

    def __post_init__(self) -> None:
        if not isinstance(self.a, int) or not isinstance(self.b, int):
            raise TypeError(f"Golden coordinates must be int, got {self.a!r}, {self.b!r}")

    @classmethod
    def coerce(cls, x: Union[int, Golden]) -> Golden:
        if isinstance(x, Golden):
            return x
        if isinstance(x, int):
            return cls(x, 0)
        if isinstance(x, Fraction) and x.denominator == 1:
            return cls(x.numerator, 0)
        raise TypeError(f"cannot coerce {x!r} into Z[alpha]")

    def __repr__(self) -> str:
        return f"Golden({self.a}, {self.b})"

    def __str__(self) -> str:
        if self.b == 0:
            return str(self.a)
        return f"{self.a}{self.b:+}α"

    def __add__(self, other):
        try:
            o = Golden.coerce(other)
        except TypeError:
            return NotImplemented
        return Golden(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self) -> Golden:
        return Golden(-self.a, -self.b)

    def __sub__(self, other):
        try:
            o = Golden.coerce(other)
        except TypeError:
            return NotImplemented
        return Golden(self.a - o.a, self.b - o.b)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return Golden(self.a * other, self.b * other)
        try:
            o = Golden.coerce(other)
        except TypeError:
            return NotImplemented
        # (a + b alpha)(c + d alpha) with alpha^2 = alpha + 1
        bd = self.b * o.b
        return Golden(self.a * o.a + bd, self.a * o.b + self.b * o.a + bd)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> Golden:
        return golden_pow(self, e)

    def __eq__(self, other) -> bool:
        if isinstance(other, Golden):
            return self.a == other.a and self.b == other.b
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.a, self.b)) if self.b else hash(self.a)

    def __bool__(self) -> bool:
        return bool(self.a or self.b)

    def conj(self) -> Golden:
        return Golden(self.a + self.b, -self.b)

    def norm(self) -> int:
        # x * conj(x) = a^2 + ab - b^2
        return self.a * self.a + self.a * self.b - self.b * self.b

    def is_rational(self) -> bool:
        return self.b == 0

    def is_unit(self) -> bool:
        return self.norm() in (1, -1)

    def inverse(self) -> Golden:
        """Inverse in Z[alpha]; only units (norm +-1) are invertible."""
        n = self.norm()
        if n not in (1, -1):
            raise ZeroDivisionError(f"{self!r} is not a unit of Z[alpha]")
        return self.conj() * n

    def to_int(self) -> int:
        if self.b != 0:
            raise ValueError(f"{self!r} is not a rational integer")
        return self.a


ALPHA = Golden(0, 1)
BETA = Golden(1, -1)
Q = Golden(-2, 1)


def golden_mul(x: Golden, y: Golden) -> Golden:
    return x * y


def golden_conj(x: Golden) -> Golden:
    return x.conj()


def golden_pow(x: Golden, e: int) -> Golden:
    """``x**e`` by repeated squaring; negative exponents only for units."""
    if e < 0:
        return golden_pow(x.inverse(), -e)
    result = Golden(1, 0)
    base = x
    while e:
        if e & 1:
            result = result * base
        base = base * base
        e >>= 1
    return result


RING_INT = "int"
RING_RAT = "rat"
RING_GOLDEN = "golden"
_RING_RANK = {RING_INT: 0, RING_RAT: 1, RING_GOLDEN: 2}


def ring_of(values: Iterable) -> str:
    """Smallest of int < rat < golden holding every value."""
    ring = RING_INT
    for v in values:
        if isinstance(v, Golden):
            return RING_GOLDEN
        if isinstance(v, Fraction) and v.denominator != 1:
            ring = RING_RAT
        elif not isinstance(v, (int, Fraction)):
            raise TypeError(f"unsupported coefficient {v!r}")
    return ring


def _convert(v, ring: str):
    if ring == RING_GOLDEN:
        return Golden.coerce(v)
    if ring == RING_RAT:
        return Fraction(v)
    if isinstance(v, Fraction):
        if v.denominator != 1:
            raise ValueError(f"{v} is not an integer")
        return v.numerator
    return int(v)


class TruncSeries:
    """Power series ``c_0 + c_1 x + ... + c_N x^N`` taken modulo ``x^(N+1)``.

    ``ring`` is one of ``"int"``, ``"rat"``, ``"golden"``; it is inferred
    from the coefficients unless given.  Binary operations require equal
    orders and equal rings; use :meth:`to` or :meth:`truncate` explicitly.
    """

    __slots__ = ("coeffs", "ring")

    def __init__(self, coeffs: Sequence, order: int | None = None, ring: str | None = None):
        coeffs = list(coeffs)
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise ValueError("series order must be >= 0")
        coeffs = coeffs[: order + 1] + [0] * (order + 1 - len(coeffs))
        if ring is None:
            ring = ring_of(coeffs)
        elif ring not in _RING_RANK:
            raise ValueError(f"unknown ring {ring!r}")
        self.ring = ring
        self.coeffs = tuple(_convert(c, ring) for c in coeffs)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def one(cls, order: int, ring: str = RING_INT) -> TruncSeries:
        return cls([1], order, ring)

    def __repr__(self) -> str:
        return f"TruncSeries({[str(c) for c in self.coeffs]}, ring={self.ring!r})"

    def __getitem__(self, i: int):
        return self.coeffs[i]

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return self.order == other.order and all(a == b for a, b in zip(self.coeffs, other.coeffs))

    __hash__ = None  # type: ignore[assignment]

    def to(self, ring: str) -> TruncSeries:
        return TruncSeries(self.coeffs, self.order, ring)

    def truncate(self, order: int) -> TruncSeries:
        return TruncSeries(self.coeffs, order, self.ring)

    def _check(self, other: TruncSeries) -> None:
        if not isinstance(other, TruncSeries):
            raise TypeError(f"expected TruncSeries, got {type(other).__name__}")
        if other.order != self.order:
            raise ValueError(f"series order mismatch: {self.order} vs {other.order}")
        if other.ring != self.ring:
            raise ValueError(f"series ring mismatch: {self.ring} vs {other.ring}")

    def __add__(self, other: TruncSeries) -> TruncSeries:
        self._check(other)
        return TruncSeries([a + b for a, b in zip(self.coeffs, other.coeffs)], ring=self.ring)

    def __sub__(self, other: TruncSeries) -> TruncSeries:
        self._check(other)
        return TruncSeries([a - b for a, b in zip(self.coeffs, other.coeffs)], ring=self.ring)

    def __neg__(self) -> TruncSeries:
        return TruncSeries([-a for a in self.coeffs], ring=self.ring)

    def __mul__(self, other):
        if isinstance(other, TruncSeries):
            return series_mul(self, other)
        return self.scale(other)

    def _widened(self, c) -> str:
        # a scalar can promote the ring but never demote it
        other = ring_of([c])
        return other if _RING_RANK[other] > _RING_RANK[self.ring] else self.ring

    def scale(self, c) -> TruncSeries:
        return TruncSeries([c * a for a in self.coeffs], self.order, self._widened(c))

    def shift(self) -> TruncSeries:
        """Multiply by ``x`` (dropping the top coefficient)."""
        zero = self.coeffs[0] * 0
        return TruncSeries([zero, *self.coeffs[:-1]], ring=self.ring)

    def substitute_scaled(self, c) -> TruncSeries:
        """``f(c x)``."""
        out = []
        p = 1
        for a in self.coeffs:
            out.append(a * p)
            p = p * c
        return TruncSeries(out, self.order, self._widened(c))

    def inverse(self) -> TruncSeries:
        return series_inverse(self)


def series_mul(f: TruncSeries, g: TruncSeries) -> TruncSeries:
    """Cauchy product modulo ``x^(N+1)``."""
    f._check(g)
    a, b = f.coeffs, g.coeffs
    n = len(a)
    out = []
    for k in range(n):
        s = 0
        for i in range(k + 1):
            ai = a[i]
            if ai:
                s = s + ai * b[k - i]
        out.append(s)
    return TruncSeries(out, ring=f.ring)


def _unit_inverse(c, ring: str):
    if ring == RING_GOLDEN:
        return c.inverse()
    if ring == RING_INT:
        if c not in (1, -1):
            raise ZeroDivisionError(f"constant term {c} is not invertible over the integers")
        return c
    if c == 0:
        raise ZeroDivisionError("constant term is zero")
    return 1 / Fraction(c)


def series_inverse(f: TruncSeries) -> TruncSeries:
    """``g`` with ``f * g == 1`` mod ``x^(N+1)``, via the convolution recurrence."""
    a = f.coeffs
    inv0 = _unit_inverse(a[0], f.ring)
    g = [inv0]
    for k in range(1, len(a)):
        s = 0
        for i in range(1, k + 1):
            if a[i]:
                s = s + a[i] * g[k - i]
        g.append(-(s * inv0))
    return TruncSeries(g, ring=f.ring)


def series_geom_product(factors: Sequence, sign: int, order: int) -> TruncSeries:
    """``prod (1 + g z)`` for ``sign=+1``, ``prod 1/(1 + g z)`` for ``sign=-1``."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    factors = list(factors)
    ring = ring_of(factors) if factors else RING_INT
    result = TruncSeries.one(order, ring)
    for g in factors:
        if sign == 1:
            term = TruncSeries([1, g], order, ring)
        else:
            coeffs = []
            p = 1
            for _ in range(order + 1):
                coeffs.append(p)
                p = p * (-g)
            term = TruncSeries(coeffs, order, ring)
        result = series_mul(result, term)
    return result
