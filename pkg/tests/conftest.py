import pytest

from thetasplit.numerics import SeriesConfig, make_context

# comparisons run at 70 digits; the global mpmath context stays at 15
HP = make_context(70)


def rel(a, b):
    return abs(HP.mpf(a) - HP.mpf(b)) / abs(HP.mpf(b))

# Frozen from independent oracles: 70-digit mpmath on the global context,
# direct term-by-term sums and explicit closed forms (see test modules).
SERIES_CONSTANT = "4.585970781604859988923326115902115650524516078003295"
LIMIT_REFERENCE = "4.307093815000097335048618516208516932293908703924067"

TABLE_ONE = [0, 1, 3, 10, 41, 206, 1237, 8660, 69281, 623530, 6235301]
TABLE_TWO = {12: 68588312, 13: 823059745, 14: 10699776686}


@pytest.fixture(scope="session")
def cfg():
    return SeriesConfig()


@pytest.fixture(scope="session")
def cfg_1e10():
    return SeriesConfig(tolerance=1e-10)


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance: exit criteria, one test per criterion")


def pytest_terminal_summary(terminalreporter):
    lines = []
    for outcome in ("passed", "failed"):
        for report in terminalreporter.stats.get(outcome, []):
            if report.when == "call" and "test_acceptance.py::test_criterion_" in report.nodeid:
                name = report.nodeid.split("::")[-1].removeprefix("test_")
                lines.append((name, "PASS" if outcome == "passed" else "FAIL"))
    if not lines:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in sorted(lines):
        terminalreporter.write_line(f"{outcome}  {name}")
