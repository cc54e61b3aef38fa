from math import gcd, isqrt

import pytest
from hypothesis import strategies as st

from pptree.boxcore import FibBox


def ppts_by_leg_search(max_c):
    """PPTs with c <= max_c found by scanning legs, no parametrisation involved."""
    out = set()
    for a in range(3, max_c):
        for b in range(a + 1, max_c):
            c2 = a * a + b * b
            if c2 > max_c * max_c:
                break
            c = isqrt(c2)
            if c * c == c2 and gcd(a, b) == 1:
                out.add((a, b, c) if a % 2 else (b, a, c))
    return out


@st.composite
def primitive_boxes_st(draw, max_p=10**6):
    p = draw(st.integers(2, max_p))
    q = draw(st.integers(1, p - 1).filter(lambda q: (p - q) % 2 == 1 and gcd(p, q) == 1))
    return FibBox.from_column(q, p)


@pytest.fixture(scope="session")
def small_ppts():
    return ppts_by_leg_search(400)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
