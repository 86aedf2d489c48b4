"""Distribution tables, the seating count and the consolidated discrepancy report."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field

import mpmath

from .asymptotics import limit_reference, ratio_study, series_constant, stirling_approx
from .exact import _require_positive, theta, theta_values
from .numerics import SeriesConfig, format_full, make_context

# Published exact values, indexed by column s. Entries for s >= 14 were
# printed in scientific notation with 10 significant digits.
PUBLISHED_THETA = {
    1: 0, 2: 1, 3: 3, 4: 10, 5: 41, 6: 206, 7: 1237, 8: 8660, 9: 69281,
    10: 623530, 11: 6235301, 12: 68588312, 13: 823059745,
}
PUBLISHED_THETA_SCIENTIFIC = {14: "1.069977669e10", 15: "1.604966503e11"}

# Published approximant values, indexed by column s (formula evaluated at s - 1).
PUBLISHED_APPROX = {
    2: "1.688", 3: "3.514", 4: "10.687", 5: "43.04", 6: "216.11", 7: "1300.256",
    8: "9119.823", 9: "73067.075", 10: "658364.17", 11: "6589733.73",
    12: "72541956.39", 13: "871052794.3", 14: "1.132973304e10", 15: "1.586888658e11",
}

PROVENANCE_RECURRENCE = "computed: exact recurrence theta(s+1) = 1 + s*theta(s)"
PROVENANCE_PUBLISHED = "published: printed distribution table"


@dataclass(frozen=True)
class TableRow:
    s: int
    exact: int
    approx: mpmath.mpf | None
    rel_error: mpmath.mpf | None

    @property
    def signed_error(self):
        if self.approx is None:
            return None
        return self.approx - self.exact


@dataclass(frozen=True)
class SeatingInstance:
    """``s`` rows of ``s`` distinguishable seats; row j must seat a fixed group of j people."""

    s: int
    group_sizes: tuple[int, ...] = field(init=False)

    def __post_init__(self):
        _require_positive(self.s)
        object.__setattr__(self, "group_sizes", tuple(range(1, self.s + 1)))

    @property
    def total_people(self) -> int:
        return self.s * (self.s + 1) // 2


def distribution_table(s_max: int, cfg: SeriesConfig = SeriesConfig()) -> list[TableRow]:
    """Rows s = 1..s_max pairing theta(s) with the approximant at s - 1.

    This follows the printed tables, whose column s carries the asymptotic
    formula evaluated at s - 1 (the natural approximant to theta(s)). Row 1
    has no approximant.
    """
    if not 2 <= s_max <= 1000:
        raise ValueError(f"s_max must be in [2, 1000], got {s_max}")
    rows = []
    for s, exact in theta_values():
        if s > s_max:
            break
        if s == 1:
            rows.append(TableRow(s=1, exact=exact, approx=None, rel_error=None))
            continue
        approx = stirling_approx(s - 1, cfg)
        rows.append(TableRow(s=s, exact=exact, approx=approx, rel_error=abs(approx - exact) / exact))
    return rows


def seating_count_formula(s: int) -> int:
    """``prod_{j=1}^{s} s!/(s-j)!``: row j places its j people injectively into s seats."""
    _require_positive(s)
    return math.prod(math.perm(s, j) for j in range(1, s + 1))


def seating_bruteforce(s: int) -> int:
    """Count seatings by listing every injective placement of every row's group."""
    _require_positive(s)
    if s > 4:
        raise ValueError(f"brute-force enumeration is limited to s <= 4, got {s}")
    instance = SeatingInstance(s)
    per_row = [itertools.permutations(range(s), size) for size in instance.group_sizes]
    return sum(1 for _ in itertools.product(*per_row))


def _rel_gap(value, reference):
    return abs(value - reference) / reference


def discrepancy_report(s_max: int, cfg: SeriesConfig = SeriesConfig()) -> dict:
    """Structured comparison of exact computation against the published claims.

    Published figures are recorded as claims next to the computed values;
    they never override exact computation. Every number carries a
    ``provenance`` string.
    """
    if s_max < 15:
        raise ValueError(f"s_max must be >= 15, got {s_max}")
    p = cfg.precision_digits
    ctx = make_context(p)

    theta_14 = theta(14)
    theta_15 = theta(15)
    published_15 = PUBLISHED_THETA_SCIENTIFIC[15]
    wrong_multiplier = 1 + 15 * theta_14
    theta_entry = {
        "s": 15,
        "computed": str(theta_15),
        "computed_provenance": PROVENANCE_RECURRENCE,
        "published": published_15,
        "published_provenance": PROVENANCE_PUBLISHED,
        "published_reconstruction": str(wrong_multiplier),
        "published_reconstruction_provenance": "computed: 1 + 15*theta(14), matches the published figure",
        "agrees": ctx.mpf(published_15) == ctx.mpf(theta_15),
        "relative_gap": format_full(_rel_gap(ctx.mpf(published_15), ctx.mpf(theta_15)), 12),
    }

    constant = series_constant(cfg)
    limit = limit_reference(p)
    ratios = ratio_study(s_max, cfg)
    r_last = ratios[-1][1]
    values = [r for _, r in ratios]
    increasing_until = 2
    for (s, r), (_, r_next) in zip(ratios, ratios[1:]):
        if r_next > r:
            increasing_until = s + 1
    ratio_entry = {
        "s_max": s_max,
        "r_s_max": format_full(r_last, p),
        "r_provenance": "computed: theta(s+1) / (s^s sqrt(s) e^-s), exact theta, log space",
        "series_constant": format_full(constant.value, p),
        "series_constant_bound": format_full(constant.truncation_bound, 6),
        "series_constant_provenance": f"computed: partial sum of e^m/m^(m+1/2), {constant.terms_used} terms",
        "limit_reference": format_full(limit, p),
        "limit_reference_provenance": "computed: (e - 1) sqrt(2 pi)",
        "gap_to_series_constant": format_full(_rel_gap(r_last, constant.value), 12),
        "gap_to_limit_reference": format_full(_rel_gap(r_last, limit), 12),
        "monotone_decreasing_from": increasing_until,
        "max_ratio": format_full(max(values), p),
        "series": [(s, format_full(r, p)) for s, r in ratios],
    }

    theorem3_entry = {
        "claimed_limit": format_full(constant.value / ctx.sqrt(2 * ctx.pi), p),
        "claimed_provenance": "computed: C / sqrt(2 pi)",
        "exact_limit": format_full(ctx.e - 1, p),
        "exact_provenance": "computed: lim theta(s+1)/s! = e - 1",
    }

    seating_entries = []
    for s in range(1, 5):
        count = seating_count_formula(s)
        seating_entries.append(
            {
                "s": s,
                "N": str(count),
                "N_bruteforce": str(seating_bruteforce(s)),
                "theta_s_plus_1": str(theta(s + 1)),
                "equal": count == theta(s + 1),
                "provenance": "computed: prod s!/(s-j)! and exhaustive enumeration",
            }
        )

    return {
        "theta_table": theta_entry,
        "ratio_study": ratio_entry,
        "theorem3_constant": theorem3_entry,
        "seating": seating_entries,
    }


def render_report(report: dict) -> str:
    """Flatten a report into ``key = value`` lines; the ratio series is omitted."""
    lines = []

    def emit(prefix, obj):
        if isinstance(obj, dict):
            for key, value in obj.items():
                if key == "series":
                    continue
                emit(f"{prefix}.{key}" if prefix else key, value)
        elif isinstance(obj, list):
            for i, item in enumerate(obj):
                emit(f"{prefix}[{i}]", item)
        else:
            lines.append(f"{prefix} = {obj}")

    emit("", report)
    return "\n".join(lines) + "\n"
