"""Exact integer evaluation of the theta splitting function.

The function is defined on positive integers by

    theta(1) = 0,    theta(s + 1) = 1 + s * theta(s),

so theta(s) for s = 1, 2, 3, ... runs 0, 1, 3, 10, 41, 206, ...
Every routine here works in Python integers; nothing is ever rounded.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterator


def _require_positive(s: int, name: str = "s") -> None:
    if isinstance(s, bool) or not isinstance(s, int):
        raise TypeError(f"{name} must be an int, got {type(s).__name__}")
    if s < 1:
        raise ValueError(f"{name} must be a positive integer, got {s}")


def theta_values() -> Iterator[tuple[int, int]]:
    """Yield ``(s, theta(s))`` for s = 1, 2, 3, ... indefinitely."""
    s, value = 1, 0
    while True:
        yield s, value
        value = 1 + s * value
        s += 1


def theta(s: int) -> int:
    """Theta(s) by iterating the recurrence upward from theta(1) = 0.

    >>> [theta(s) for s in range(1, 7)]
    [0, 1, 3, 10, 41, 206]
    """
    _require_positive(s)
    value = 0
    for k in range(1, s):
        value = 1 + k * value
    return value


def theta_sum_form(s: int) -> int:
    """Closed form ``sum_{m=1}^{s-1} (s-1)!/m!``.

    Terms are built as descending products (s-1)(s-2)...(m+1), starting from
    the m = s-1 term, so each one is an exact integer.
    """
    _require_positive(s)
    n = s - 1
    if n == 0:
        return 0
    total = 1  # m = n
    product = 1
    for m in range(n - 1, 0, -1):
        product *= m + 1
        total += product
    return total


def falling_factorial_sum(s: int) -> int:
    """Sum of the falling factorials s(s-1)...(s-k+1) for k = 0 .. s-1.

    The k = 0 term is the empty product 1. Equals ``theta(s + 1)``.
    """
    _require_positive(s)
    total = 1
    term = 1
    for k in range(1, s):
        term *= s - k + 1
        total += term
    return total


def factorial(n: int) -> int:
    if isinstance(n, bool) or not isinstance(n, int):
        raise TypeError(f"n must be an int, got {type(n).__name__}")
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    result = 1
    for k in range(2, n + 1):
        result *= k
    return result


def floor_e_factorial_check(s: int) -> bool:
    """Check ``theta(s+1) = floor(e * s!) - s!`` with exact arithmetic only.

    With S = sum_{m=0}^{s} s!/m! we have e*s! = S + tail where
    tail = sum_{m>s} s!/m!. The tail is positive and is bounded by the
    geometric series 1/(s+1) * sum_k (s+2)^-k = (s+2)/(s+1)^2, which is
    below 1 for every s >= 1, hence S = floor(e*s!).
    """
    _require_positive(s)
    s_fact = factorial(s)
    partial = 0
    quotient = 1  # s!/m! for m = s
    for m in range(s, -1, -1):
        partial += quotient
        quotient *= m

    tail_lower = Fraction(1, s + 1)
    tail_upper = Fraction(s + 2, (s + 1) ** 2)
    if not (0 < tail_lower <= tail_upper < 1):
        return False
    if s >= 2 and not tail_upper < Fraction(1, s):
        return False

    return theta(s + 1) == partial - s_fact


def to_decimal(n: int) -> str:
    """Decimal serialization: no sign, no grouping separators."""
    if n < 0:
        raise ValueError("BigNat values are non-negative")
    return str(n)


def from_decimal(text: str) -> int:
    if not text or not text.isdigit() or not text.isascii():
        raise ValueError(f"not a non-negative decimal integer: {text!r}")
    return int(text)
