from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import strategies as st

from sklyanin_points.scalars import EisensteinScalar

_acceptance: list[tuple[str, str]] = []

small_fraction = st.fractions(min_value=-20, max_value=20, max_denominator=12)


@st.composite
def eisenstein(draw, nonzero: bool = False):
    a = draw(small_fraction)
    b = draw(small_fraction)
    if nonzero and a == 0 and b == 0:
        a = Fraction(1)
    return EisensteinScalar(a, b)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    if report.when == "call" and item.module.__name__.endswith("test_acceptance"):
        doc = (item.function.__doc__ or item.name).strip().splitlines()[0]
        _acceptance.append((doc, "PASS" if report.passed else "FAIL"))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for doc, verdict in _acceptance:
        terminalreporter.write_line(f"{verdict}  {doc}")
