"""Command-line interface.

Usage:
    thetasplit exact 10                       # 623530
    thetasplit exact 15 --identity-check
    thetasplit approx 4 --precision 30
    thetasplit table --max 15 --format csv --out table.csv
    thetasplit verify --s-max 200

Exit codes: 0 success, 1 a check or convergence failed, 2 bad arguments.
"""

from __future__ import annotations

import csv
import io
import json
import sys

import click

from . import applications, asymptotics, exact, weierstrass
from .numerics import (
    DEFAULT_MAX_TERMS,
    DEFAULT_TOLERANCE,
    MIN_PRECISION,
    ConvergenceError,
    SeriesConfig,
    default_precision,
    format_full,
    format_sig,
)

CSV_HEADER = ("s", "theta_exact", "approx", "rel_error")


def _status(ok: bool) -> str:
    return "PASS" if ok else "FAIL"


def _config(precision, tolerance, max_terms=DEFAULT_MAX_TERMS) -> SeriesConfig:
    if precision is None:
        try:
            precision = default_precision()
        except ValueError as exc:
            raise click.UsageError(str(exc)) from None
    if not tolerance > 0:
        raise click.BadParameter("must be positive", param_hint="--tolerance")
    return SeriesConfig(tolerance=tolerance, max_terms=max_terms, precision_digits=precision)


precision_option = click.option(
    "--precision",
    type=click.IntRange(min=MIN_PRECISION),
    default=None,
    help="Working precision in decimal digits (default 50, or $THETASPLIT_PRECISION).",
)


@click.group()
def cli():
    """Exact and asymptotic evaluation of the theta splitting function."""


@cli.command("exact")
@click.argument("s", type=click.IntRange(min=1))
@click.option("--identity-check", is_flag=True, help="Also check the closed forms against the recurrence.")
def cmd_exact(s, identity_check):
    """Print theta(S) as an exact decimal integer."""
    value = exact.theta(s)
    click.echo(exact.to_decimal(value))
    if not identity_check:
        return
    checks = [
        ("theta_sum_form", exact.theta_sum_form(s) == value),
        ("falling_factorial_sum", exact.falling_factorial_sum(s) == exact.theta(s + 1)),
        ("recurrence", exact.theta(s + 1) == 1 + s * value),
        ("floor_e_factorial", exact.floor_e_factorial_check(s)),
    ]
    for name, ok in checks:
        click.echo(f"{name}: {_status(ok).lower()}")
    if not all(ok for _, ok in checks):
        sys.exit(1)


@cli.command("approx")
@click.argument("s", type=click.IntRange(min=1))
@precision_option
@click.option("--tolerance", type=float, default=DEFAULT_TOLERANCE, show_default=True,
              help="Absolute tail bound target for the series constant.")
@click.option("--max-terms", type=click.IntRange(min=1), default=DEFAULT_MAX_TERMS, show_default=True)
@click.option("--digits", type=click.IntRange(min=1), default=10, show_default=True,
              help="Significant digits shown.")
def cmd_approx(s, precision, tolerance, max_terms, digits):
    """Print the asymptotic approximant s^s sqrt(s) e^-s C to theta(S+1)."""
    cfg = _config(precision, tolerance, max_terms)
    try:
        constant = asymptotics.series_constant(cfg)
        value = asymptotics.stirling_approx(s, cfg)
    except ConvergenceError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(1)
    click.echo(f"approx = {format_sig(value, digits)}")
    click.echo(f"constant = {format_sig(constant.value, digits)}")
    click.echo(f"truncation_bound = {format_sig(constant.truncation_bound, 3)}")
    click.echo(f"terms_used = {constant.terms_used}")


def render_table(rows, fmt: str, precision_digits: int, digits: int = 10) -> str:
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(CSV_HEADER)
        for row in rows:
            writer.writerow(
                [row.s, exact.to_decimal(row.exact),
                 format_full(row.approx, precision_digits), format_full(row.rel_error, precision_digits)]
            )
        return buf.getvalue()
    if fmt == "json":
        payload = [
            {
                "s": row.s,
                "theta_exact": exact.to_decimal(row.exact),
                "approx": None if row.approx is None else format_full(row.approx, precision_digits),
                "rel_error": None if row.rel_error is None else format_full(row.rel_error, precision_digits),
            }
            for row in rows
        ]
        return json.dumps(payload, indent=2) + "\n"
    cells = [("s", "theta(s)", "approx", "rel_error")]
    for row in rows:
        cells.append((str(row.s), str(row.exact), format_sig(row.approx, digits), format_sig(row.rel_error, 3)))
    widths = [max(len(c[i]) for c in cells) for i in range(4)]
    return "".join("  ".join(c.rjust(w) for c, w in zip(line, widths)) + "\n" for line in cells)


@cli.command("table")
@click.option("--max", "s_max", type=click.IntRange(min=2, max=1000), default=15, show_default=True)
@click.option("--format", "fmt", type=click.Choice(["plain", "csv", "json"]), default="plain", show_default=True)
@click.option("--out", type=click.Path(dir_okay=False, writable=True), default=None,
              help="Write to this file instead of stdout.")
@precision_option
@click.option("--tolerance", type=float, default=DEFAULT_TOLERANCE, show_default=True)
@click.option("--digits", type=click.IntRange(min=1), default=10, show_default=True)
def cmd_table(s_max, fmt, out, precision, tolerance, digits):
    """Exact theta(s) next to the approximant at s - 1, for s = 1..MAX."""
    cfg = _config(precision, tolerance)
    try:
        rows = applications.distribution_table(s_max, cfg)
    except ConvergenceError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(1)
    text = render_table(rows, fmt, cfg.precision_digits, digits)
    if out is None:
        click.echo(text, nl=False)
        return
    try:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        click.echo(f"error: cannot write {out}: {exc.strerror}", err=True)
        sys.exit(2)


def run_checks(s_max: int, tolerance: float, cfg: SeriesConfig):
    """Run every implemented invariant; returns a list of ``(name, ok, detail)``."""
    results = []

    identity_max = min(s_max + 1, 2000)
    ok = True
    previous = None
    for s, value in exact.theta_values():
        if s > identity_max:
            break
        if previous is not None and value != 1 + (s - 1) * previous:
            ok = False
        if exact.theta_sum_form(s) != value:
            ok = False
        if s >= 2 and exact.falling_factorial_sum(s - 1) != value:
            ok = False
        previous = value
    results.append(("exact identities", ok, f"s <= {identity_max}"))

    published_ok = all(exact.theta(s) == v for s, v in applications.PUBLISHED_THETA.items())
    results.append(("published exact values s <= 13", published_ok, "exact match"))

    floor_max = min(s_max, 500)
    ok = all(exact.floor_e_factorial_check(s) for s in range(1, floor_max + 1))
    results.append(("floor(e*s!) oracle", ok, f"s <= {floor_max}"))

    product_cfg = SeriesConfig(tolerance=tolerance, max_terms=cfg.max_terms, precision_digits=cfg.precision_digits)
    worst = 0
    for k in range(1, 11):
        got = weierstrass.weierstrass_product(k, product_cfg).value
        want = weierstrass.weierstrass_oracle(k, cfg.precision_digits)
        worst = max(worst, abs(got - want) / want)
    results.append(("weierstrass product oracle", worst <= 10 * tolerance,
                    f"max rel err {format_sig(worst, 3)} for k <= 10"))

    theorem3_max = min(s_max, 20)
    limit = max(1e-8, 100 * tolerance)
    worst = 0
    for s in range(1, theorem3_max + 1):
        lhs = weierstrass.theorem3_lhs(s, product_cfg)
        red = weierstrass.theorem3_exact_reduction(s, cfg.precision_digits)
        worst = max(worst, abs(lhs - red) / red)
    results.append(("gamma-product sum reduction", worst <= limit,
                    f"max rel err {format_sig(worst, 3)} for s <= {theorem3_max}"))

    ratios = asymptotics.ratio_study(s_max, cfg)
    reference = asymptotics.limit_reference(cfg.precision_digits)
    onset = 5
    decreasing = all(b[1] < a[1] for a, b in zip(ratios, ratios[1:]) if a[0] >= onset)
    results.append(("ratio monotone decreasing", decreasing, f"s >= {onset}"))
    gap = abs(ratios[-1][1] - reference) / reference
    results.append(("ratio near (e-1)sqrt(2pi)", gap < 0.01 and ratios[-1][1] > reference,
                    f"rel gap {format_sig(gap, 3)} at s = {s_max}"))

    ok = all(applications.seating_count_formula(s) == applications.seating_bruteforce(s) for s in range(1, 5))
    results.append(("seating formula vs enumeration", ok, "s <= 4"))
    return results


@cli.command("verify")
@click.option("--s-max", type=click.IntRange(min=15), default=200, show_default=True)
@click.option("--tolerance", type=float, default=DEFAULT_TOLERANCE, show_default=True,
              help="Relative tolerance for the Weierstrass products.")
@precision_option
def cmd_verify(s_max, tolerance, precision):
    """Run all invariant checks and print the discrepancy report."""
    cfg = _config(precision, DEFAULT_TOLERANCE)
    if not tolerance > 0:
        raise click.BadParameter("must be positive", param_hint="--tolerance")
    try:
        results = run_checks(s_max, tolerance, cfg)
        report = applications.discrepancy_report(s_max, cfg)
    except ConvergenceError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(1)
    for name, ok, detail in results:
        click.echo(f"[{_status(ok)}] {name}: {detail}")
    click.echo("")
    click.echo(applications.render_report(report), nl=False)
    if not all(ok for _, ok, _ in results):
        sys.exit(1)


def main():
    cli()


if __name__ == "__main__":
    main()
