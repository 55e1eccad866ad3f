import itertools

import pytest

from qoddtown.field import make_field


def span_set(field, rows, n):
    """All vectors in the span of ``rows``, by brute-force combination."""
    out = set()
    for coeffs in itertools.product(range(field.q), repeat=len(rows)):
        v = [0] * n
        for c, row in zip(coeffs, rows):
            for j, x in enumerate(row):
                v[j] = field.add(v[j], field.mul(c, x))
        out.add(tuple(v))
    return out


@pytest.fixture
def f2():
    return make_field(2)


@pytest.fixture
def f3():
    return make_field(3)


def pytest_terminal_summary(terminalreporter):
    reports = []
    for outcome in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(outcome, []):
            if getattr(rep, "when", "call") == "call" and "test_acceptance.py" in rep.nodeid:
                reports.append((rep.nodeid, outcome))
    if not reports:
        return
    terminalreporter.section("acceptance criteria")
    for nodeid, outcome in sorted(reports):
        name = nodeid.split("::")[-1]
        terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {name}")
