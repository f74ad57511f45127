from fractions import Fraction

import pytest

from dwcolor.tangle import Frac

ORDERS = tuple(range(3, 16, 2))

RATIONALS = tuple(Frac.of(Fraction(x)) for x in ("1/3", "-1/3", "2/5", "-2/5", "3/7", "5/2", "7/2", "3/1"))
PRETZELS = tuple(
    tuple(Frac(p) for p in spec) for spec in ((3, 3, 3), (-2, 3, 5), (3, 5, 7), (5, 5, 5))
)
MIXED = ((Frac(1, 3), Frac(1, 3)), (Frac(2, 5), Frac(3, 7)))
CORPUS = tuple((f,) for f in RATIONALS) + PRETZELS + MIXED


@pytest.fixture(scope="session")
def corpus():
    return CORPUS


ACCEPTANCE_LINES = []


def record(criterion, passed, detail):
    ACCEPTANCE_LINES.append(f"[{'PASS' if passed else 'FAIL'}] criterion {criterion}: {detail}")


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
