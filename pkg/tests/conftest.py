import itertools

import pytest
from hypothesis import strategies as st

from connfactor.graph import Graph
from connfactor.tutte import DegreeSpec

ACCEPTANCE = pytest.StashKey[list]()


def pytest_configure(config):
    config.stash[ACCEPTANCE] = []


@pytest.fixture
def record(request):
    """Log one acceptance line; the summary at the end of the run lists them all."""
    rows = request.config.stash[ACCEPTANCE]

    def rec(name: str, ok: bool, detail: str) -> None:
        line = f"{'PASS' if ok else 'FAIL'}  {name}: {detail}"
        rows.append(line)
        print(line)

    return rec


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    rows = config.stash.get(ACCEPTANCE, [])
    if rows:
        terminalreporter.write_sep("=", "acceptance criteria")
        for line in rows:
            terminalreporter.write_line(line)


def complete(n: int) -> Graph:
    return Graph(n, itertools.combinations(range(n), 2))


def cycle(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def star(leaves: int) -> Graph:
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def disjoint(*gs: Graph) -> Graph:
    edges, off = [], 0
    for g in gs:
        edges += [(u + off, v + off) for u, v in g.edges]
        off += g.n
    return Graph(off, edges)


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)


@st.composite
def graphs(draw, min_n: int = 0, max_n: int = 8, density=None):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    if density is None:
        p = draw(st.sampled_from([0.2, 0.4, 0.6, 0.8, 1.0]))
    else:
        p = density
    flags = draw(st.lists(st.floats(0, 1, exclude_max=True), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, [e for e, x in zip(pairs, flags) if x < p])


@st.composite
def graph_and_spec(draw, min_n: int = 1, max_n: int = 8):
    g = draw(graphs(min_n, max_n))
    targets = [draw(st.integers(0, max(len(a), 0))) for a in g.adj]
    return g, DegreeSpec(tuple(targets))
