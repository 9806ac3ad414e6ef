"""Deterministic verification reports."""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from . import __version__
from .exact import Golden, TruncSeries

PASS = "pass"
FAIL = "fail"
RECORDED = "recorded-discrepancy"
STATUSES = (PASS, FAIL, RECORDED)


def _int_str(v: int) -> str:
    # str() refuses ints past sys.get_int_max_str_digits(); split in decimal halves instead
    if v < 0:
        return "-" + _int_str(-v)
    try:
        return str(v)
    except ValueError:
        half = v.bit_length() * 3 // 20  # about half the decimal digits
        hi, lo = divmod(v, 10**half)
        return _int_str(hi) + _int_str(lo).rjust(half, "0")


def fmt_value(v) -> str:
    """Exact decimal rendering; sequences become comma-separated lists."""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, Fraction):
        if v.denominator == 1:
            return _int_str(v.numerator)
        return f"{_int_str(v.numerator)}/{_int_str(v.denominator)}"
    if isinstance(v, int):
        return _int_str(v)
    if isinstance(v, Golden):
        if v.b == 0:
            return _int_str(v.a)
        return f"{_int_str(v.a)}{'-' if v.b < 0 else '+'}{_int_str(abs(v.b))}α"
    if isinstance(v, str):
        return v
    if isinstance(v, TruncSeries):
        v = v.coeffs
    if isinstance(v, (list, tuple)):
        return "[" + ", ".join(fmt_value(x) for x in v) + "]"
    if v is None:
        return "-"
    raise TypeError(f"cannot render {v!r}")


def _param_key(params: Mapping) -> tuple:
    out = []
    for k in sorted(params):
        v = params[k]
        out.append((k, (0, v, "") if isinstance(v, int) else (1, 0, str(v))))
    return tuple(out)


@dataclass(frozen=True)
class Entry:
    identity: str
    params: tuple  # sorted (name, value) pairs
    lhs: str
    rhs: str
    status: str

    def sort_key(self) -> tuple:
        return (self.identity, _param_key(dict(self.params)))

    def to_json(self) -> dict:
        return {
            "identity": self.identity,
            "params": {k: fmt_value(v) for k, v in self.params},
            "lhs": self.lhs,
            "rhs": self.rhs,
            "status": self.status,
        }


def _normalize(v):
    if isinstance(v, TruncSeries):
        return list(v.coeffs)
    if isinstance(v, tuple):
        return list(v)
    return v


def entry(identity: str, params: Mapping, lhs, rhs, status: str | None = None) -> Entry:
    """Build an entry; without an explicit status it passes iff ``lhs == rhs``."""
    lhs, rhs = _normalize(lhs), _normalize(rhs)
    if status is None:
        status = PASS if lhs == rhs else FAIL
    if status not in STATUSES:
        raise ValueError(f"unknown status {status!r}")
    return Entry(identity, tuple(sorted(params.items())), fmt_value(lhs), fmt_value(rhs), status)


def literal_entry(identity: str, params: Mapping, literal, correct) -> Entry:
    """A printed formula read literally: agreement passes, disagreement is recorded, never failed."""
    literal, correct = _normalize(literal), _normalize(correct)
    return entry(identity, params, literal, correct, PASS if literal == correct else RECORDED)


class VerificationReport:
    def __init__(self, entries: Iterable[Entry] = ()):
        self.entries = sorted(entries, key=Entry.sort_key)

    def summary(self) -> dict:
        c = Counter(e.status for e in self.entries)
        return {"pass": c[PASS], "fail": c[FAIL], "recorded": c[RECORDED]}

    @property
    def ok(self) -> bool:
        return self.summary()["fail"] == 0

    def by_identity(self) -> dict[str, Counter]:
        out: dict[str, Counter] = {}
        for e in self.entries:
            out.setdefault(e.identity, Counter())[e.status] += 1
        return out

    def families(self) -> list[str]:
        return sorted({e.identity.split(".")[0] for e in self.entries})

    def failures(self) -> list[Entry]:
        return [e for e in self.entries if e.status == FAIL]

    def to_json(self) -> dict:
        return {
            "version": __version__,
            "summary": self.summary(),
            "entries": [e.to_json() for e in self.entries],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, ensure_ascii=False) + "\n"

    def text(self) -> str:
        lines = []
        for identity, c in self.by_identity().items():
            lines.append(f"{identity:<40} pass={c[PASS]:<5} fail={c[FAIL]:<4} recorded={c[RECORDED]}")
        for e in self.failures():
            params = ", ".join(f"{k}={fmt_value(v)}" for k, v in e.params)
            lines.append(f"FAIL {e.identity} ({params}): {e.lhs} != {e.rhs}")
        s = self.summary()
        lines.append(
            f"summary: pass={s['pass']} fail={s['fail']} recorded={s['recorded']} "
            f"families={len(self.families())}"
        )
        return "\n".join(lines) + "\n"
