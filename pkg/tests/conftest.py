import contextlib
import math
from itertools import product

import pytest
from hypothesis import strategies as st

from pdskit.groups import AbelianGroup

ACCEPTANCE_LINES = []


@contextlib.contextmanager
def criterion(number, description):
    """Record one PASS/FAIL line per acceptance criterion."""
    try:
        yield
    except BaseException:
        ACCEPTANCE_LINES.append(f"criterion {number} FAIL: {description}")
        raise
    ACCEPTANCE_LINES.append(f"criterion {number} PASS: {description}")


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1])):
            terminalreporter.write_line(line)


PRIME_POWERS = [2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27]


@st.composite
def small_groups(draw, max_order=400):
    factors = []
    while True:
        options = [n for n in PRIME_POWERS if math.prod(factors) * n <= max_order]
        if not options or (factors and draw(st.booleans())):
            break
        factors.append(draw(st.sampled_from(options)))
    return AbelianGroup(tuple(factors))


def naive_counts(G, members):
    """Difference multiset by plain double loop, independent of the table path."""
    counts = {g: 0 for g in G.elements() if g != G.identity}
    for a, b in product(members, repeat=2):
        if a != b:
            counts[G.sub(a, b)] += 1
    return counts


@pytest.fixture
def z13():
    return AbelianGroup((13,))
