"""High-precision evaluation of the asymptotic approximant to theta(s + 1).

The approximant is

    theta(s + 1) ~ s**s * sqrt(s) * exp(-s) * C,
    C = sum_{m>=1} e**m / m**(m + 1/2),

and this module also measures how the exact values actually behave against
it (:func:`ratio_study`), together with the limit ``(e - 1) * sqrt(2*pi)``
forced by ``theta(s+1)/s! -> e - 1`` and Stirling's formula.
"""

from __future__ import annotations

from functools import lru_cache

import mpmath

from .exact import _require_positive, theta_values
from .numerics import (
    DEFAULT_PRECISION,
    ApproxResult,
    ConvergenceError,
    SeriesConfig,
    log_bignat,
    make_context,
)

LOG_SPACE_THRESHOLD = 300


def _constant_term(ctx, m):
    # e**m / m**(m + 1/2), evaluated through its logarithm
    return ctx.exp(m - (m + ctx.mpf(0.5)) * ctx.log(m))


@lru_cache(maxsize=64)
def series_constant(cfg: SeriesConfig = SeriesConfig()) -> ApproxResult:
    """Partial sum of ``sum e**m / m**(m+1/2)`` with a geometric tail bound.

    Successive term ratios t_{m+1}/t_m decrease monotonically, so once the
    ratio r = t_{M+1}/t_M is below 1/2 the omitted tail is at most
    t_{M+1} / (1 - r). Summation stops at the first M where that bound is
    within ``cfg.tolerance``. All terms are positive, so the returned value
    is a lower bound of C and ``value + truncation_bound`` an upper bound.
    """
    ctx = cfg.context()
    tol = ctx.mpf(cfg.tolerance)
    half = ctx.mpf(1) / 2

    partial = ctx.zero
    term = _constant_term(ctx, 1)
    for m in range(1, cfg.max_terms + 1):
        partial += term
        next_term = _constant_term(ctx, m + 1)
        ratio = next_term / term
        if ratio < half:
            bound = next_term / (1 - ratio)
            if bound <= tol:
                return ApproxResult(value=partial, truncation_bound=bound, terms_used=m)
        term = next_term
    raise ConvergenceError(
        f"series constant tail bound not below {cfg.tolerance} after {cfg.max_terms} terms",
        terms_used=cfg.max_terms,
    )


def stirling_approx(s: int, cfg: SeriesConfig = SeriesConfig(), method: str = "auto"):
    """``s**s * sqrt(s) * exp(-s) * C``, the approximant to theta(s + 1).

    ``method`` is ``"direct"``, ``"log"`` or ``"auto"``; auto switches to
    log space above s = 300.
    """
    _require_positive(s)
    if method == "auto":
        method = "direct" if s <= LOG_SPACE_THRESHOLD else "log"
    constant = series_constant(cfg).value
    ctx = cfg.context()
    x = ctx.mpf(s)
    if method == "direct":
        return x**s * ctx.sqrt(x) * ctx.exp(-x) * constant
    if method == "log":
        ln_s = ctx.log(x)
        return ctx.exp(s * ln_s + ln_s / 2 - x + ctx.log(constant))
    raise ValueError(f"unknown method {method!r}; expected 'auto', 'direct' or 'log'")


def ratio_study(s_max: int, cfg: SeriesConfig = SeriesConfig()) -> list[tuple[int, mpmath.mpf]]:
    """``r(s) = theta(s+1) / (s**s * sqrt(s) * exp(-s))`` for s = 2 .. s_max.

    theta(s+1) stays an exact integer; only its logarithm is rounded.
    """
    _require_positive(s_max, "s_max")
    if s_max < 2:
        raise ValueError(f"s_max must be >= 2, got {s_max}")
    ctx = cfg.context()
    out = []
    for arg, value in theta_values():
        s = arg - 1
        if s < 2:
            continue
        if s > s_max:
            break
        ln_s = ctx.log(s)
        log_ratio = log_bignat(value, ctx) - (s * ln_s + ln_s / 2 - s)
        out.append((s, ctx.exp(log_ratio)))
    return out


def limit_reference(precision_digits: int = DEFAULT_PRECISION) -> mpmath.mpf:
    """``(e - 1) * sqrt(2*pi)``, the true limit of :func:`ratio_study`."""
    ctx = make_context(precision_digits)
    return (ctx.e - 1) * ctx.sqrt(2 * ctx.pi)
