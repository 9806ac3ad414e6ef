"""Lower Hessenberg determinants and the Fibonomial determinant builders."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Callable, Sequence

from .core import IntegralityError, fibonomial, sign_delta

__all__ = [
    "LowerHessenberg",
    "ToeplitzHessenberg",
    "hess_det",
    "OpCounter",
    "det_theorem1",
    "det_tha1",
    "tha1_general_matrix",
    "det_tha1_general",
    "det_binomial_sanity",
    "inversion_check",
    "InversionResult",
]


@dataclass(frozen=True)
class LowerHessenberg:
    """Dense lower Hessenberg matrix.

    ``rows[i]`` holds entries ``e(i, 0..i+1)`` (0-based); the last entry of
    every row except the final one is the superdiagonal.  Entries above the
    superdiagonal are zero and are not stored.
    """

    rows: tuple[tuple, ...]

    def __post_init__(self) -> None:
        k = len(self.rows)
        for i, row in enumerate(self.rows):
            want = i + 2 if i < k - 1 else i + 1
            if len(row) != want:
                raise ValueError(f"row {i} has {len(row)} entries, expected {want}")

    @classmethod
    def from_function(cls, k: int, entry: Callable[[int, int], object]) -> LowerHessenberg:
        """Build from ``entry(i, j)``, 1-based, queried for ``j <= i + 1``."""
        return cls(
            tuple(tuple(entry(i, j) for j in range(1, min(i + 1, k) + 1)) for i in range(1, k + 1))
        )

    @property
    def size(self) -> int:
        return len(self.rows)

    def entry(self, i: int, j: int):
        """1-based access; zero above the superdiagonal."""
        if j > i + 1:
            return 0
        return self.rows[i - 1][j - 1]

    def dense(self) -> list[list]:
        k = self.size
        return [[self.entry(i, j) for j in range(1, k + 1)] for i in range(1, k + 1)]


@dataclass(frozen=True)
class ToeplitzHessenberg:
    """Toeplitz lower Hessenberg matrix.

    Row ``i``, column ``j`` holds ``column[i - j]`` (that is ``a_{i-j+1}``)
    for ``j <= i`` and ``superdiag`` for ``j = i + 1``.
    """

    column: tuple
    superdiag: object = 1

    @property
    def size(self) -> int:
        return len(self.column)

    def entry(self, i: int, j: int):
        if j > i + 1:
            return 0
        if j == i + 1:
            return self.superdiag
        return self.column[i - j]

    def to_dense(self) -> LowerHessenberg:
        return LowerHessenberg.from_function(self.size, self.entry)

    def dense(self) -> list[list]:
        return self.to_dense().dense()


@dataclass
class OpCounter:
    """Tally of ring multiplications performed by :func:`hess_det`."""

    mul: int = 0
    extra: dict = field(default_factory=dict)


def _toeplitz_det(m: ToeplitzHessenberg, counter: OpCounter | None):
    k = m.size
    s = m.superdiag
    unit_super = s == 1
    # c_j = (-1)^(j-1) a_j s^(j-1), so D_m = sum_j c_j D_{m-j}
    c = []
    sp = 1
    muls = 0
    for j, a in enumerate(m.column, start=1):
        term = a if unit_super else a * sp
        if not unit_super:
            sp = sp * s
            muls += 2
        c.append(term if j % 2 else -term)
    D = [1]
    for mm in range(1, k + 1):
        acc = 0
        for j in range(1, mm + 1):
            cj = c[j - 1]
            if cj:
                acc = acc + cj * D[mm - j]
                muls += 1
        D.append(acc)
    if counter is not None:
        counter.mul += muls
    return D[k]


def _dense_det(m: LowerHessenberg, counter: OpCounter | None):
    k = m.size
    D = [1]
    muls = 0
    for mm in range(1, k + 1):
        acc = m.entry(mm, mm) * D[mm - 1]
        muls += 1
        prod = 1
        sign = 1
        for r in range(mm - 1, 0, -1):
            prod = prod * m.entry(r, r + 1)
            sign = -sign
            muls += 2
            e = m.entry(mm, r)
            if e:
                acc = acc + sign * e * prod * D[r - 1]
        D.append(acc)
    if counter is not None:
        counter.mul += muls
    return D[k]


def hess_det(m: LowerHessenberg | ToeplitzHessenberg, counter: OpCounter | None = None):
    """Determinant of a lower Hessenberg matrix in O(k^2) ring operations.

    Uses ``D_m = e(m,m) D_{m-1} + sum_{r<m} (-1)^(m-r) e(m,r) (prod_{i=r}^{m-1} e(i,i+1)) D_{r-1}``
    with ``D_0 = 1``.  Works over any ring supporting ``+``, ``*`` and
    mixing with ``int`` (int, Fraction, Golden).
    """
    if isinstance(m, ToeplitzHessenberg):
        return _toeplitz_det(m, counter)
    return _dense_det(m, counter)


def det_theorem1(n: int, k: int) -> int:
    """``delta_k * det`` of the Toeplitz matrix with column ``C(n+l, n)_F``; equals ``C(n+1, k)_F``."""
    if n < 0 or k < 0:
        raise ValueError("need n, k >= 0")
    m = ToeplitzHessenberg(tuple(fibonomial(n + l, n) for l in range(1, k + 1)), 1)
    return sign_delta(k) * hess_det(m)


def det_tha1(n: int, k: int) -> int:
    """Determinant with column ``delta_l C(n+1, l)_F`` and unit superdiagonal; equals ``C(n+k, k)_F``."""
    if n < 0 or k < 0:
        raise ValueError("need n, k >= 0")
    m = ToeplitzHessenberg(tuple(sign_delta(l) * fibonomial(n + 1, l) for l in range(1, k + 1)), 1)
    return hess_det(m)


def tha1_general_matrix(n: int, k: int, a) -> ToeplitzHessenberg:
    """Column ``delta_l C(n+1, l)_F / a^(l-1)``, superdiagonal ``a``."""
    a = Fraction(a)
    if a == 0:
        raise ValueError("superdiagonal parameter must be nonzero")
    col = []
    for l in range(1, k + 1):
        v = sign_delta(l) * fibonomial(n + 1, l) / a ** (l - 1)
        col.append(v.numerator if v.denominator == 1 else v)
    sup = a.numerator if a.denominator == 1 else a
    return ToeplitzHessenberg(tuple(col), sup)


def det_tha1_general(n: int, k: int, a) -> int:
    """Same value as :func:`det_tha1` for every nonzero ``a``; computed over the rationals."""
    if n < 0 or k < 0:
        raise ValueError("need n, k >= 0")
    value = Fraction(hess_det(tha1_general_matrix(n, k, a)))
    if value.denominator != 1:
        raise IntegralityError(f"determinant for ({n}, {k}, a={a}) is {value}")
    return value.numerator


def det_binomial_sanity(n: int, k: int) -> int:
    """Ordinary-binomial analogue: column ``C(n+l, n)``, unit superdiagonal; equals ``C(n+1, k)``."""
    if n < 0 or k < 0:
        raise ValueError("need n, k >= 0")
    return hess_det(ToeplitzHessenberg(tuple(comb(n + l, n) for l in range(1, k + 1)), 1))


@dataclass(frozen=True)
class InversionResult:
    alphas: tuple
    betas: tuple
    convolution: tuple  # sum_k (-1)^(m-k) alpha_k beta_(m-k), m = 1..n
    recovered: tuple  # alpha_m rebuilt from the betas, m = 1..n
    ok: bool


def _toeplitz_prefix_dets(seq: Sequence, n: int) -> list:
    """``det`` of the ``m x m`` Toeplitz Hessenberg of ``seq[1..m]`` for m = 0..n."""
    return [hess_det(ToeplitzHessenberg(tuple(seq[1 : m + 1]), 1)) for m in range(n + 1)]


def inversion_check(alphas: Sequence, n: int) -> InversionResult:
    """Check the determinant inversion pair on ``alphas[0..n]`` (``alphas[0] == 1``)."""
    if len(alphas) < n + 1:
        raise ValueError(f"need at least {n + 1} terms, got {len(alphas)}")
    if alphas[0] != 1:
        raise ValueError("sequence must start with 1")
    alphas = tuple(alphas[: n + 1])
    betas = tuple(_toeplitz_prefix_dets(alphas, n))
    conv = []
    for m in range(1, n + 1):
        s = 0
        for k in range(m + 1):
            t = alphas[k] * betas[m - k]
            s = s + (t if (m - k) % 2 == 0 else -t)
        conv.append(s)
    recovered = tuple(_toeplitz_prefix_dets(betas, n)[1:])
    ok = all(c == 0 for c in conv) and all(r == a for r, a in zip(recovered, alphas[1:]))
    return InversionResult(alphas, betas, tuple(conv), recovered, ok)
