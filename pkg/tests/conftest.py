import random
from fractions import Fraction

import pytest
from hypothesis import strategies as st

from instabkit import Weight, parse_type

SMALL_TYPES = ["A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "F4", "G2"]

# Filled by tests/test_acceptance.py, printed in the terminal summary.
ACCEPTANCE_RESULTS: dict[str, tuple[bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(ACCEPTANCE_RESULTS):
        ok, detail = ACCEPTANCE_RESULTS[name]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}  {detail}")


def rationals(bound=5, max_den=7):
    return st.builds(
        lambda d, n: Fraction(n, d),
        st.integers(1, max_den),
        st.integers(-bound, bound),
    )


@st.composite
def weight_sets(draw, types=("A1", "A2", "A3", "B2", "G2"), max_points=6):
    rs = parse_type(draw(st.sampled_from(types)))
    n = draw(st.integers(1, max_points))
    pts = draw(st.lists(st.tuples(*[rationals() for _ in range(rs.rank)]), min_size=n, max_size=n))
    return rs, [Weight(p) for p in pts]


def random_weight(rng, rank, bound=5, max_den=7):
    out = []
    for _ in range(rank):
        d = rng.randint(1, max_den)
        out.append(Fraction(rng.randint(-bound * d, bound * d), d))
    return Weight(tuple(out))


@pytest.fixture
def rng():
    return random.Random(12345)
