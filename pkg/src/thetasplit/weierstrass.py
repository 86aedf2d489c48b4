"""Weierstrass product for 1/Gamma at positive integers.

For an integer k >= 1,

    P(k) = prod_{m>=1} (1 + k/m) * exp(-k/m) = exp(-gamma*k) / k!,

which makes the sum

    sum_{j=0}^{s-1} exp(-gamma*j) * P(s - j)

collapse to exp(-gamma*s) * theta(s+1) / s!. The functions below evaluate
both sides independently so the collapse can be checked numerically.
"""

from __future__ import annotations

from functools import lru_cache

import mpmath

from .asymptotics import series_constant
from .exact import _require_positive, factorial, theta
from .numerics import DEFAULT_PRECISION, ApproxResult, ConvergenceError, SeriesConfig, make_context

# Euler-Mascheroni constant, 60 decimals.
EULER_GAMMA_DIGITS = "0.577215664901532860606512090082402431042159335939923598805767"

# Factors computed explicitly per unit of k; the rest goes through the tail expansion.
HEAD_FACTORS_PER_K = 3


def _power_sum_tail(ctx, n: int, a: int) -> mpmath.mpf:
    """``sum_{m>=a} m**-n`` for integer n >= 2 and a >= 1, by Euler-Maclaurin.

    A short explicit head is summed, then the tail integral, the half-term and
    Bernoulli corrections. For x**-n the remainder is smaller than the first
    omitted correction, and corrections stop once they fall below the
    working precision.
    """
    cutoff = a + ctx.dps + n
    eps = ctx.mpf(10) ** (-ctx.dps - 5)
    big = ctx.mpf(cutoff)
    head = ctx.fsum(ctx.mpf(m) ** -n for m in range(a, cutoff))
    total = head + big ** (1 - n) / (n - 1) + big**-n / 2
    rising = ctx.mpf(n)  # n (n+1) ... (n + 2j - 2)
    power = big ** (-n - 1)
    factorial_2j = ctx.mpf(2)
    j = 1
    while True:
        correction = ctx.bernoulli(2 * j) / factorial_2j * rising * power
        total += correction
        if abs(correction) <= eps * total:
            return total
        rising *= (n + 2 * j - 1) * (n + 2 * j)
        power /= big * big
        factorial_2j *= (2 * j + 1) * (2 * j + 2)
        j += 1


def euler_gamma(ctx: mpmath.MPContext) -> mpmath.mpf:
    return ctx.mpf(EULER_GAMMA_DIGITS)


def partial_product(k: int, m_max: int, precision_digits: int = DEFAULT_PRECISION) -> mpmath.mpf:
    """Plain truncation ``prod_{m=1}^{m_max} (1 + k/m) exp(-k/m)`` with no tail."""
    _require_positive(k, "k")
    _require_positive(m_max, "m_max")
    ctx = make_context(precision_digits)
    log_sum = ctx.fsum(ctx.log1p(ctx.mpf(k) / m) - ctx.mpf(k) / m for m in range(1, m_max + 1))
    return ctx.exp(log_sum)


@lru_cache(maxsize=256)
def weierstrass_product(k: int, cfg: SeriesConfig = SeriesConfig()) -> ApproxResult:
    """Infinite product ``prod_{m>=1} (1 + k/m) exp(-k/m)`` to relative ``cfg.tolerance``.

    Accumulated in log space. The first M = 3k factors are summed as
    ``log1p(k/m) - k/m``; the remaining tail is expanded as

        sum_{m>M} [log(1 + k/m) - k/m] = sum_{n>=2} (-1)**(n+1) k**n / n * zeta(n, M+1)

    where zeta(n, a) = sum_{m>=a} m**-n. Since k/m <= 1/3 there, each per-factor
    expansion alternates with shrinking terms, so the first omitted order
    bounds the remainder. Orders are added until that bound (plus a rounding
    allowance) keeps the relative error of the product within tolerance.
    ``terms_used`` counts explicit factors plus tail orders.
    """
    _require_positive(k, "k")
    ctx = cfg.context()
    head_count = HEAD_FACTORS_PER_K * k
    if head_count >= cfg.max_terms:
        raise ConvergenceError(
            f"weierstrass_product({k}) needs more than {cfg.max_terms} terms",
            terms_used=cfg.max_terms,
        )

    kk = ctx.mpf(k)
    head = ctx.fsum(ctx.log1p(kk / m) - kk / m for m in range(1, head_count + 1))
    target = ctx.log1p(ctx.mpf(cfg.tolerance))
    ulp = ctx.mpf(10) ** (1 - cfg.precision_digits)
    shift = head_count + 1

    def tail_term(n):
        return (-1) ** (n + 1) * kk**n / n * _power_sum_tail(ctx, n, shift)

    tail = ctx.zero
    n = 2
    term = tail_term(n)
    while True:
        tail += term
        terms_used = head_count + n - 1
        next_term = tail_term(n + 1)
        rounding = terms_used * ulp * (1 + abs(head) + abs(tail))
        log_bound = abs(next_term) + rounding
        if log_bound <= target:
            break
        if terms_used >= cfg.max_terms:
            raise ConvergenceError(
                f"weierstrass_product({k}) did not reach tolerance {cfg.tolerance} "
                f"within {cfg.max_terms} terms",
                terms_used=terms_used,
            )
        n += 1
        term = next_term

    value = ctx.exp(head + tail)
    return ApproxResult(value=value, truncation_bound=value * ctx.expm1(log_bound), terms_used=terms_used)


def weierstrass_oracle(k: int, precision_digits: int = DEFAULT_PRECISION) -> mpmath.mpf:
    """Closed form ``exp(-gamma*k) / k!`` of the product at integer k."""
    _require_positive(k, "k")
    ctx = make_context(precision_digits)
    return ctx.exp(-k * euler_gamma(ctx)) / ctx.mpf(factorial(k))


def theorem3_lhs(s: int, cfg: SeriesConfig = SeriesConfig()) -> mpmath.mpf:
    """``sum_{j=0}^{s-1} exp(-gamma*j) * P(s - j)`` with each product from :func:`weierstrass_product`."""
    _require_positive(s)
    ctx = cfg.context()
    gamma = euler_gamma(ctx)
    return ctx.fsum(ctx.exp(-gamma * j) * weierstrass_product(s - j, cfg).value for j in range(s))


def theorem3_exact_reduction(s: int, precision_digits: int = DEFAULT_PRECISION) -> mpmath.mpf:
    """``exp(-gamma*s) * theta(s+1) / s!``, from exact integers."""
    _require_positive(s)
    ctx = make_context(precision_digits)
    return ctx.exp(-s * euler_gamma(ctx)) * ctx.mpf(theta(s + 1)) / ctx.mpf(factorial(s))


def theorem3_rhs(s: int, cfg: SeriesConfig = SeriesConfig()) -> mpmath.mpf:
    """Claimed asymptotic ``exp(-gamma*s) * C / sqrt(2*pi)``."""
    _require_positive(s)
    ctx = cfg.context()
    constant = series_constant(cfg).value
    return ctx.exp(-s * euler_gamma(ctx)) * constant / ctx.sqrt(2 * ctx.pi)
