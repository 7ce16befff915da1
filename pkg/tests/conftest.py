import random
import sys
from pathlib import Path

import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from bergefree import Hypergraph, catalog  # noqa: E402

PATTERNS = {
    "K_2": catalog.complete(2),
    "K_3": catalog.complete(3),
    "P_3": catalog.path(3),
    "P_4": catalog.path(4),
    "C_4": catalog.cycle(4),
    "K_4": catalog.complete(4),
}


@st.composite
def hypergraphs(draw, max_n=7, max_edges=7, min_size=1, max_size=None):
    n = draw(st.integers(min_value=1, max_value=max_n))
    hi = min(max_size or n, n)
    lo = min(min_size, hi)
    edges = draw(
        st.lists(
            st.sets(st.integers(0, n - 1), min_size=lo, max_size=hi),
            max_size=max_edges,
        )
    )
    return Hypergraph(n, tuple(tuple(e) for e in edges))


def random_hypergraph(rng: random.Random, n: int, m: int, lo: int = 2, hi: int = 4) -> Hypergraph:
    hi = min(hi, n)
    lo = min(lo, hi)
    return Hypergraph(n, tuple(tuple(rng.sample(range(n), rng.randint(lo, hi))) for _ in range(m)))


@pytest.fixture
def rng():
    return random.Random(20261016)


def pytest_terminal_summary(terminalreporter):
    from acceptance_log import RESULTS

    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(RESULTS):
        ok, detail = RESULTS[num]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'} criterion {num}: {detail}")
