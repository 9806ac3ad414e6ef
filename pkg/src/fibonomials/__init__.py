"""Exact computation and verification of Fibonomial coefficient identities."""

__version__ = "0.1.0"

from .core import (  # noqa: E402
    fib,
    fibonomial,
    fibonomial_product,
    fibonomial_recurrence,
    fibonomial_via_bridge,
    gaussian_binomial_at,
    power_sum,
    sign_delta,
)
from .exact import ALPHA, BETA, Q, Golden, TruncSeries  # noqa: E402

__all__ = [
    "__version__",
    "ALPHA",
    "BETA",
    "Q",
    "Golden",
    "TruncSeries",
    "fib",
    "fibonomial",
    "fibonomial_product",
    "fibonomial_recurrence",
    "fibonomial_via_bridge",
    "gaussian_binomial_at",
    "power_sum",
    "sign_delta",
]
