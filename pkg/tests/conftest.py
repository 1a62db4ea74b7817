import numpy as np
import pytest

from eaocws import reference as ref
from eaocws.builder import assemble_code
from eaocws.induction import BinaryWord
from eaocws.structure import CodeLayout, Graph, build_gauge_group, ring_graph

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def ring6_layout():
    return CodeLayout(**ref.RING6_LAYOUT)


@pytest.fixture(scope="session")
def ring6_group(ring6_layout):
    return build_gauge_group(ring_graph(6), ring6_layout)


@pytest.fixture(scope="session")
def ring5_layout():
    return CodeLayout(**ref.RING5_LAYOUT)


@pytest.fixture(scope="session")
def ring5_group(ring5_layout):
    return build_gauge_group(ring_graph(5), ring5_layout)


@pytest.fixture(scope="session")
def example_code(ring6_layout):
    words = [BinaryWord.parse(w, 6, 3) for w in ref.RING6_CODEWORDS]
    return assemble_code(ring6_layout, ring_graph(6), words, ref.RING6_D)


def random_graph(rng: np.random.Generator, n: int, p: float = 0.5) -> Graph:
    upper = np.triu(rng.random((n, n)) < p, 1)
    return Graph((upper | upper.T).astype(np.uint8))


def random_layout(rng: np.random.Generator, max_width: int = 9, min_n: int = 2) -> CodeLayout:
    while True:
        n = int(rng.integers(min_n, max_width + 1))
        c = int(rng.integers(0, max_width - n + 1))
        r = int(rng.integers(0, n - c + 1)) if n - c >= 0 else 0
        if n - r - c >= 0 and n + c <= max_width:
            return CodeLayout(n, c, r)
