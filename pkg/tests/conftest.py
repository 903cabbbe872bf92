from pathlib import Path

import pytest

from dpcolor.cover import Cover, uniform_lists
from dpcolor.graph import build_graph

DATA = Path(__file__).parent / "data"
CORPUS = DATA / "corpus"

ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def cycle_graph(n, start=1):
    return build_graph([(start + i, start + (i + 1) % n) for i in range(n)])


def complete_graph(n, start=1):
    return build_graph([(start + a, start + b) for a in range(n) for b in range(a + 1, n)])


def octahedron():
    # a_i = i, b_i = i + 1, c_i = i + 2 (mod-3 classes), non-edges 0-3, 1-4, 2-5
    return build_graph([(a, b) for a in range(6) for b in range(a + 1, 6) if b - a != 3])


def chorded_c6():
    return build_graph([(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 1), (1, 5)])


IDENT = frozenset({(1, 1), (2, 2)})
SWAP = frozenset({(1, 2), (2, 1)})


def c4_one_swap():
    g = cycle_graph(4)
    m = {(1, 2): IDENT, (2, 3): IDENT, (3, 4): IDENT, (1, 4): SWAP}
    return Cover(g, uniform_lists(g, 2), m)


@pytest.fixture
def corpus_files():
    return sorted(CORPUS.glob("*.edges"))
