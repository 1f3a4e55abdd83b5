import os

# keep test runs from writing a log file into the working tree
os.environ.setdefault("LOG_FILE", "")

import pytest
from hypothesis import strategies as st

from src.corpus import gen_connected_gnp, named_graph
from src.graph_core import Graph, build_graph


def connected_corpus(count: int, seed: int, min_n: int = 4, max_n: int = 12, p: float = 0.5):
    """Deterministic list of connected G(n, p) graphs with n cycling through [min_n, max_n]"""
    span = max_n - min_n + 1
    return [
        gen_connected_gnp(min_n + i % span, p, seed * 100_003 + i)
        for i in range(count)
    ]


@st.composite
def connected_graphs(draw, min_n: int = 1, max_n: int = 10) -> Graph:
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    p = draw(st.sampled_from([0.3, 0.5, 0.8, 1.0]))
    seed = draw(st.integers(min_value=0, max_value=2 ** 64 - 1))
    return gen_connected_gnp(n, p, seed)


@pytest.fixture
def appendix_g() -> Graph:
    return named_graph("appendix_G")


@pytest.fixture
def appendix_h() -> Graph:
    return named_graph("appendix_H")


@pytest.fixture
def k3() -> Graph:
    return build_graph(3, [(0, 1), (1, 2), (0, 2)])


@pytest.fixture
def p3() -> Graph:
    return build_graph(3, [(0, 1), (1, 2)])


@pytest.fixture
def c4() -> Graph:
    return build_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
