"""Precision plumbing shared by the floating-point modules.

Every evaluation runs inside its own :class:`mpmath.MPContext` so that
concurrent callers never fight over the global ``mp.dps`` setting.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

import mpmath

DEFAULT_PRECISION = 50
DEFAULT_TOLERANCE = 1e-30
DEFAULT_MAX_TERMS = 200
MIN_PRECISION = 15

PRECISION_ENV_VAR = "THETASPLIT_PRECISION"


class ConvergenceError(RuntimeError):
    """Raised when a series or product cannot meet its tolerance within ``max_terms``."""

    def __init__(self, message: str, terms_used: int):
        super().__init__(message)
        self.terms_used = terms_used


def default_precision() -> int:
    raw = os.environ.get(PRECISION_ENV_VAR)
    if raw is None:
        return DEFAULT_PRECISION
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{PRECISION_ENV_VAR} must be an integer, got {raw!r}") from None
    if value < MIN_PRECISION:
        raise ValueError(f"{PRECISION_ENV_VAR} must be >= {MIN_PRECISION}, got {value}")
    return value


@dataclass(frozen=True)
class SeriesConfig:
    """Tolerance, term budget and working precision for series/product evaluation.

    ``tolerance`` is absolute for :func:`thetasplit.asymptotics.series_constant`
    and relative for :func:`thetasplit.weierstrass.weierstrass_product`.
    """

    tolerance: float = DEFAULT_TOLERANCE
    max_terms: int = DEFAULT_MAX_TERMS
    precision_digits: int = DEFAULT_PRECISION

    def __post_init__(self):
        if not self.tolerance > 0:
            raise ValueError(f"tolerance must be positive, got {self.tolerance}")
        if self.max_terms < 1:
            raise ValueError(f"max_terms must be >= 1, got {self.max_terms}")
        if self.precision_digits < MIN_PRECISION:
            raise ValueError(
                f"precision_digits must be >= {MIN_PRECISION}, got {self.precision_digits}"
            )

    @classmethod
    def from_env(cls, **overrides) -> "SeriesConfig":
        overrides.setdefault("precision_digits", default_precision())
        return cls(**overrides)

    def context(self) -> mpmath.MPContext:
        return make_context(self.precision_digits)


@dataclass(frozen=True)
class ApproxResult:
    """A truncated series/product value with a rigorous bound on what was omitted."""

    value: mpmath.mpf
    truncation_bound: mpmath.mpf
    terms_used: int

    def __post_init__(self):
        if self.truncation_bound < 0:
            raise ValueError("truncation_bound must be non-negative")
        if self.terms_used < 1:
            raise ValueError("terms_used must be positive")


def make_context(precision_digits: int) -> mpmath.MPContext:
    if precision_digits < MIN_PRECISION:
        raise ValueError(f"precision_digits must be >= {MIN_PRECISION}, got {precision_digits}")
    ctx = mpmath.MPContext()
    ctx.dps = precision_digits
    return ctx


def log_bignat(n: int, ctx: mpmath.MPContext) -> mpmath.mpf:
    """Natural logarithm of a positive integer of any size.

    The integer is split into a mantissa in [1, 2) holding ``ctx.prec`` plus
    guard bits and a binary exponent, so only the final logarithm rounds.
    """
    if n <= 0:
        raise ValueError(f"log_bignat needs a positive integer, got {n}")
    keep = ctx.prec + 32
    shift = max(n.bit_length() - keep, 0)
    top = n >> shift
    top_exp = top.bit_length() - 1
    mantissa = ctx.ldexp(ctx.mpf(top), -top_exp)
    return ctx.log(mantissa) + (top_exp + shift) * ctx.ln2


def format_sig(x, digits: int = 10) -> str:
    """Significant-digit rendering used by human-readable output."""
    if x is None:
        return "-"
    return mpmath.nstr(x, digits, min_fixed=-4, max_fixed=digits)


def format_full(x, precision_digits: int) -> str:
    """Full-precision decimal string for machine-readable output."""
    if x is None:
        return ""
    return mpmath.nstr(x, precision_digits, strip_zeros=False, min_fixed=-4, max_fixed=precision_digits)
