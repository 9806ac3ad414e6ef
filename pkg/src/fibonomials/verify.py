"""Verification suites: every identity family checked over a parameter range."""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from math import comb
from typing import Callable, Iterator

from .core import (
    fib,
    fibonomial,
    fibonomial_product,
    fibonomial_recurrence,
    fibonomial_via_bridge,
    power_sum,
    sign_delta,
)
from .hessenberg import (
    OpCounter,
    ToeplitzHessenberg,
    det_binomial_sanity,
    det_tha1,
    det_tha1_general,
    det_theorem1,
    hess_det,
    inversion_check,
    tha1_general_matrix,
)
from .identities import (
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
    powersum_det,
    powersum_det_literal,
    q_vandermonde_check,
    th5_sum,
    tha5_sum,
    trudi_eval,
    vandermonde_first_form,
    vandermonde_gf_check,
)
from .exact import TruncSeries, series_inverse
from .report import FAIL, Entry, VerificationReport, entry, literal_entry
from .series_cf import (
    FrameSpec,
    ab_inverse_pair,
    cf_column_variant,
    cf_eval,
    cf_row_variant,
    column_series,
    frame_check,
    gf_signed_row,
    qbinomial_theorem_check,
    row_polynomial,
)

# Values quoted in the worked examples.
EXAMPLE_ROW6 = [1, -13, -104, 260, 260, -104, -13, 1]
EXAMPLE_ROW6_X8 = 8771626578
EXAMPLE_COLUMN7 = [1, 21, 714, 19635, 582505, 16776144, 488605194, 14169550626, 411591708660]
EXAMPLE_ROW6_PRINTED_LEVELS = {6: Fraction(134, 8), 7: Fraction(223, 13)}

DEFAULTS = {
    "methods": 12,
    "theorem1": 12,
    "tha1": 12,
    "tha1_general": 10,
    "inversion": 12,
    "lemma2": 12,
    "alternating": 15,
    "vandermonde": 10,
    "cf": 12,
    "gf": 14,
    "qbinomial": 6,
    "trudi": 9,
    "bell": 12,
    "frame": 10,
}

FRAME_SEED = 20260
FRAME_CASES = 50
GTRUDI_SEED = 8128
GTRUDI_CASES = 50
PERF_K = 400


def _guard(identity: str, params: dict, fn: Callable[[], Entry]) -> Entry:
    try:
        return fn()
    except Exception as exc:  # a raised consistency error is a failed check, not a crash
        return entry(identity, params, f"error: {type(exc).__name__}: {exc}", "-", FAIL)


def _range(name: str, max_n: int | None) -> int:
    return DEFAULTS[name] if max_n is None else max_n


def suite_methods(max_n: int | None) -> Iterator[Entry]:
    N = _range("methods", max_n)
    routes = {
        "recurrence": fibonomial_recurrence,
        "theorem1": lambda n, k: det_theorem1(n - 1, k) if k else 1,
        "tha1": lambda n, k: det_tha1(n - k, k) if k else 1,
        "bridge": fibonomial_via_bridge,
        "bell_det": lambda n, k: bell_det_fibonom(n, k) if k else 1,
    }
    for n in range(N + 1):
        for k in range(n + 1):
            oracle = fibonomial_product(n, k)
            p = {"n": n, "k": k}
            for name, fn in routes.items():
                yield _guard(f"methods.{name}", p, lambda: entry(f"methods.{name}", p, fn(n, k), oracle))
            yield entry("methods.symmetry", p, fibonomial_product(n, n - k), oracle)


def suite_theorem1(max_n: int | None) -> Iterator[Entry]:
    N = _range("theorem1", max_n)
    for n in range(N + 1):
        for k in range(1, n + 2):
            p = {"n": n, "k": k}
            yield _guard("theorem1.det", p, lambda: entry("theorem1.det", p, det_theorem1(n, k), fibonomial(n + 1, k)))
            yield entry("theorem1.binomial_sanity", p, det_binomial_sanity(n, k), comb(n + 1, k))
    # printed case table: +1 for k = 2, 3 mod 4
    for k in range(8):
        printed = 1 if k % 4 in (2, 3) else -1
        yield literal_entry("theorem1.printed_sign_table", {"k": k}, printed, sign_delta(k))


def suite_tha1(max_n: int | None) -> Iterator[Entry]:
    N = _range("tha1", max_n)
    for n in range(N + 1):
        for k in range(1, N + 1):
            p = {"n": n, "k": k}
            yield _guard("tha1.det", p, lambda: entry("tha1.det", p, det_tha1(n, k), fibonomial(n + k, k)))
    M = _range("tha1_general", max_n)
    params_a = [Fraction(1), Fraction(-1), Fraction(2), Fraction(1, 3), Fraction(-7, 2)]
    for n in range(M + 1):
        for k in range(1, M + 1):
            ref = fibonomial(n + k, k)
            for a in params_a:
                p = {"n": n, "k": k, "a": str(a)}
                yield _guard(
                    "tha1_general.det", p, lambda: entry("tha1_general.det", p, det_tha1_general(n, k, a), ref)
                )
    # the banded n x n matrix with entries 3, 6, -3, -1 and superdiagonal -1
    for size in range(1, max(M, 4) + 1):
        m = tha1_general_matrix(3, size, -1)
        band = list(m.column[:4]) + [m.superdiag]
        want = [3, 6, -3, -1][:size] + [-1]
        p = {"size": size}
        yield entry("tha1_general.band_a_minus1", p, band, want)
        yield entry("tha1_general.band_det", p, hess_det(m), fibonomial(size + 3, 3))


def suite_inversion(max_n: int | None) -> Iterator[Entry]:
    N = _range("inversion", max_n)
    for n in range(N + 1):
        alphas = [fibonomial(n + l, n) for l in range(N + 1)]
        res = inversion_check(alphas, N)
        p = {"n": n, "depth": N}
        yield entry("inversion.convolution", p, list(res.convolution), [0] * N)
        yield entry("inversion.recovered", p, list(res.recovered), alphas[1:])
        # the betas are the signed row of n+1, i.e. the tha1 column
        yield entry("inversion.beta_is_signed_row", p, list(res.betas), [sign_delta(m) * fibonomial(n + 1, m) for m in range(N + 1)])
    for name, seq in {"constant": [1, 1] + [0] * 6, "powers_of_two": [1, 2, 4, 8, 16, 32]}.items():
        res = inversion_check(seq, len(seq) - 1)
        yield entry("inversion.sample", {"sequence": name}, res.ok, True)


def suite_lemma2(max_n: int | None) -> Iterator[Entry]:
    N = _range("lemma2", max_n)
    for n in range(N + 1):
        for k in range(1, N + 1):
            p = {"n": n, "k": k}
            yield entry("lemma1.sum", p, lemma1_classical(n, k), 0)
            yield entry("lemma2.sum", p, lemma2_sum(n, k), 0)
    M = _range("alternating", max_n)
    for m in range(1, M + 1, 2):
        yield entry("alternating_sum.odd", {"m": m}, alternating_sum(m), 0)


def suite_vandermonde(max_n: int | None) -> Iterator[Entry]:
    N = _range("vandermonde", max_n)
    for m in range(N + 1):
        for n in range(N + 1):
            for k in range(m + n + 1):
                p = {"m": m, "n": n, "k": k}
                rhs, lhs = fibonomial_vandermonde(m, n, k)
                yield entry("vandermonde.second_form", p, rhs, lhs)
                yield entry("vandermonde.first_form", p, vandermonde_first_form(m, n, k), lhs)
                yield entry("vandermonde.q_vandermonde", p, q_vandermonde_check(m, n, k), True)
            yield _guard(
                "vandermonde.generating_function",
                {"m": m, "n": n},
                lambda: entry("vandermonde.generating_function", {"m": m, "n": n}, vandermonde_gf_check(m, n), True),
            )


def suite_cf(max_n: int | None) -> Iterator[Entry]:
    N = _range("cf", max_n)
    for n in range(_range("gf", max_n) + 1):
        p = {"n": n}
        yield _guard(
            "gf.signed_row", p,
            lambda: entry("gf.signed_row", p, gf_signed_row(n), [sign_delta(k) * fibonomial(n, k) for k in range(n + 1)]),
        )
    for n in range(N + 1):
        p = {"n": n, "order": 2 * n}

        def ab() -> Entry:
            A, _ = ab_inverse_pair(n, 2 * n)
            return entry("gf.ab_inverse", p, A, [(-1) ** l * fibonomial(n + l, n) for l in range(2 * n + 1)])

        yield _guard("gf.ab_inverse", p, ab)
    Q = _range("qbinomial", max_n)
    for Nq in range(Q + 1):
        for n in range(3):
            p = {"N": Nq, "n": n, "order": 10}
            yield entry("qbinomial.theorems", p, qbinomial_theorem_check(Nq, n, 10), True)
    for n in range(N + 1):
        p = {"n": n}
        yield entry("cf.row", p, cf_eval(cf_row_variant(n), n + 1), row_polynomial(n))
        yield entry("cf.column", p, cf_eval(cf_column_variant(n), n + 1), column_series(n, n + 1))
        if n >= 1:
            # printed last level of the column variant: (-1)^n F_1/F_(n+1)
            last = cf_column_variant(n).levels[-1].num
            printed = (-1) ** n * Fraction(fib(1), fib(n + 1))
            yield literal_entry("cf.column_printed_last_sign", p, printed, last)
    # worked examples
    yield entry("cf.example_row6", {"n": 6}, cf_eval(cf_row_variant(6), 7), EXAMPLE_ROW6)
    yield entry("cf.example_row6_product", {"n": 6}, row_polynomial(6), EXAMPLE_ROW6)
    yield entry("cf.example_row6_x8", {"n": 6}, cf_eval(cf_row_variant(6), 8)[8], EXAMPLE_ROW6_X8)
    for j, printed in EXAMPLE_ROW6_PRINTED_LEVELS.items():
        yield literal_entry("cf.example_row6_printed_level", {"n": 6, "level": j}, printed, cf_row_variant(6).levels[j - 1].num)
    yield entry("cf.example_column7", {"n": 7}, cf_eval(cf_column_variant(7), 8), EXAMPLE_COLUMN7)
    yield entry("cf.example_column7_product", {"n": 7}, column_series(7, 8), EXAMPLE_COLUMN7)


def _column_frame(n: int) -> FrameSpec:
    return FrameSpec.from_ratios([(-1) ** l * sign_delta(l) * fibonomial(n + 1, l) for l in range(1, n + 2)])


def _row_frame(n: int, depth: int) -> FrameSpec:
    return FrameSpec.from_ratios([fibonomial(n + j, n) for j in range(1, depth + 1)])


def random_frame_specs(count: int = FRAME_CASES, seed: int = FRAME_SEED, max_depth: int = 10) -> list[FrameSpec]:
    rng = random.Random(seed)

    def nonzero() -> Fraction:
        while True:
            v = Fraction(rng.randint(-9, 9), rng.randint(1, 6))
            if v:
                return v

    specs = []
    for _ in range(count):
        d = rng.randint(1, max_depth)
        specs.append(FrameSpec(tuple(nonzero() for _ in range(d)), tuple(Fraction(rng.randint(-9, 9), rng.randint(1, 6)) for _ in range(d))))
    return specs


def suite_frame(max_n: int | None) -> Iterator[Entry]:
    N = _range("frame", max_n)
    for i, spec in enumerate(random_frame_specs(max_depth=max(N, 1))):
        p = {"case": i, "depth": spec.depth}
        yield _guard("frame.random", p, lambda: entry("frame.random", p, frame_check(spec).ok, True))
    row = frame_check(_row_frame(6, 7))
    yield entry("frame.example_row6", {"n": 6}, row.f["inverse"], EXAMPLE_ROW6)
    yield entry("frame.example_row6_routes", {"n": 6}, row.ok, True)
    col = frame_check(_column_frame(7))
    yield entry("frame.example_column7", {"n": 7}, col.f["inverse"], EXAMPLE_COLUMN7)
    yield entry("frame.example_column7_routes", {"n": 7}, col.ok, True)


def suite_trudi(max_n: int | None) -> Iterator[Entry]:
    N = _range("trudi", max_n)
    for n in range(N + 1):
        for k in range(1, N + 1):
            p = {"n": n, "k": k}
            yield entry("theorem5.sum", p, th5_sum(n, k), fibonomial(n + 1, k))
            yield entry("theorem_a5.sum", p, tha5_sum(n, k), fibonomial(n + k, k))
            yield literal_entry("theorem5.printed_exponent", p, th5_sum(n, k, literal=True), fibonomial(n + 1, k))
            yield literal_entry("theorem_a5.printed_exponent", p, tha5_sum(n, k, literal=True), fibonomial(n + k, k))
    rng = random.Random(N)
    for case in range(20):
        size = rng.randint(1, 7)
        a = [rng.randint(-5, 5) for _ in range(size)]
        a0 = rng.choice([1, -1, 2, 3])
        p = {"case": case, "n": size}
        yield entry("trudi.lemma", p, trudi_eval(a0, a, size), hess_det(ToeplitzHessenberg(tuple(a), a0)))


def suite_bell(max_n: int | None) -> Iterator[Entry]:
    N = _range("bell", max_n)
    for n in range(1, N + 1):
        for k in range(0, n + 1):
            p = {"n": n, "k": k}
            ref = fibonomial(n, k)
            yield _guard("fibonom_bell.lemma", p, lambda: entry("fibonom_bell.lemma", p, fibonom_via_bell(n, k), ref))
            if k == 0:
                continue
            yield _guard("fibonom_bell1.det", p, lambda: entry("fibonom_bell1.det", p, bell_det_fibonom(n, k), ref))
            for reading in ("binom_j2", "binom_nj"):
                q = {**p, "delta": reading}
                yield literal_entry("fibonom_bell1.printed", q, bell_det_literal(n, k, reading), ref)
            yield entry("bell_fibonom2.det", p, powersum_det(n, k), power_sum(n, k))
            yield literal_entry("bell_fibonom2.printed_delta", p, powersum_det_literal(n, k), power_sum(n, k))
        for r in range(1, 9):
            yield entry("power_sum.closed_form", {"n": n, "r": r}, power_sum(n, r), Fraction(fib(r * n), fib(r)))
    rng = random.Random(GTRUDI_SEED)
    for case in range(20):
        xs = [rng.randint(-6, 6) for _ in range(rng.randint(0, 10))]
        p = {"case": case, "n": len(xs)}
        yield entry("bell.two_routes", p, bell_partition_sum(xs), bell_recurrence(xs)[-1])
    yield entry("bell.bell_number", {"n": 3}, bell_complete([1, 1, 1]), 5)
    for case in range(GTRUDI_CASES):
        n = rng.randint(1, 8)
        a = [Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(n)]
        p = {"case": case, "n": n}
        yield entry("gtrudi.roundtrip", p, gtrudi_roundtrip(a, n).ok, True)
    for n in range(1, min(N, 8) + 1):
        a = [power_sum(n, j) for j in range(1, n + 1)]
        res = gtrudi_roundtrip(a, n)
        yield entry("gtrudi.fibonomial_data", {"n": n}, res.b["bell"], [sign_delta(k) * fibonomial(n, k) for k in range(n + 1)])


PERF_SEED = 400


def perf_matrix(k: int = PERF_K, seed: int = PERF_SEED) -> ToeplitzHessenberg:
    """Dense integer Toeplitz matrix with seeded 20-digit entries; its leading minors grow without bound."""
    rng = random.Random(seed)
    return ToeplitzHessenberg(tuple(rng.randint(-10**20, 10**20) for _ in range(k)), 1)


def suite_performance(max_n: int | None) -> Iterator[Entry]:
    # operation counts only: timings would break byte-identical reports
    k = PERF_K
    m = perf_matrix(k)
    counter = OpCounter()
    value = hess_det(m, counter)
    # det_k = (-1)^k [x^k] 1 / (1 + sum a_l x^l)
    oracle = (-1) ** k * series_inverse(TruncSeries([1, *m.column])).coeffs[k]
    yield entry("performance.hess_det_value", {"k": k}, value, oracle)
    yield entry("performance.hess_det_mul_bound", {"k": k}, counter.mul <= k * k, True)
    yield entry("performance.hess_det_bits", {"k": k}, value.bit_length() > 20 * k, True)


SUITES: dict[str, list[Callable[[int | None], Iterator[Entry]]]] = {
    "methods": [suite_methods],
    "theorem1": [suite_theorem1],
    "tha1": [suite_tha1],
    "inversion": [suite_inversion],
    "lemma2": [suite_lemma2],
    "vandermonde": [suite_vandermonde],
    "cf": [suite_cf],
    "trudi": [suite_trudi],
    "bell": [suite_bell],
    "frame": [suite_frame],
    "performance": [suite_performance],
}
SUITE_NAMES = ["all", *SUITES]


def _run_one(name: str, max_n: int | None) -> list[Entry]:
    out: list[Entry] = []
    for fn in SUITES[name]:
        out.extend(fn(max_n))
    return out


def run_suite(suite: str = "all", max_n: int | None = None, jobs: int = 1) -> VerificationReport:
    if suite not in SUITE_NAMES:
        raise KeyError(f"unknown suite {suite!r}")
    names = list(SUITES) if suite == "all" else [suite]
    entries: list[Entry] = []
    if jobs > 1 and len(names) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for chunk in pool.map(_run_one, names, [max_n] * len(names)):
                entries.extend(chunk)
    else:
        for name in names:
            entries.extend(_run_one(name, max_n))
    return VerificationReport(entries)
