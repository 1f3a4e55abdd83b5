"""
Built-in named graphs

appendix_G and appendix_H are two labelings of the octahedron, pinned so
that the removal loop in ascending id order reproduces the worked example
round by round: G has the antipodal pair (v1, v4) and rim cycle
v2-v3-v5-v6, H has the antipodal pair (u1, u5) and rim cycle u2-u3-u6-u4.
Vertex v<i> / u<i> is id i-1.
"""
from itertools import combinations

from ..graph_core import Graph, build_graph
from .registry import registry


def _require(condition: bool, message: str):
    if not condition:
        raise ValueError(message)


@registry.family("path")
def path_graph(n: int) -> Graph:
    _require(n >= 1, "path_n needs n >= 1")
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


@registry.family("cycle")
def cycle_graph(n: int) -> Graph:
    _require(n >= 3, "cycle_n needs n >= 3")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


@registry.family("complete")
def complete_graph(n: int) -> Graph:
    _require(n >= 1, "complete_n needs n >= 1")
    return build_graph(n, combinations(range(n), 2))


@registry.family("star")
def star_graph(n: int) -> Graph:
    """Vertex 0 joined to n-1 leaves"""
    _require(n >= 1, "star_n needs n >= 1")
    return build_graph(n, [(0, leaf) for leaf in range(1, n)])


@registry.family("wheel")
def wheel_graph(n: int) -> Graph:
    """Hub 0 joined to a rim cycle on 1..n-1"""
    _require(n >= 4, "wheel_n needs n >= 4")
    rim = list(range(1, n))
    spokes = [(0, v) for v in rim]
    return build_graph(n, spokes + [(rim[i], rim[(i + 1) % len(rim)]) for i in range(len(rim))])


@registry.fixture("petersen")
def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    return build_graph(10, outer + inner + spokes)


@registry.fixture("appendix_G")
def appendix_g() -> Graph:
    v1, v2, v3, v4, v5, v6 = range(6)
    return build_graph(6, [
        (v1, v2), (v1, v3), (v1, v5), (v1, v6),
        (v4, v2), (v4, v3), (v4, v5), (v4, v6),
        (v2, v3), (v3, v5), (v5, v6), (v6, v2),
    ])


@registry.fixture("appendix_H")
def appendix_h() -> Graph:
    u1, u2, u3, u4, u5, u6 = range(6)
    return build_graph(6, [
        (u1, u2), (u1, u3), (u1, u4), (u1, u6),
        (u5, u2), (u5, u3), (u5, u4), (u5, u6),
        (u2, u3), (u3, u6), (u6, u4), (u4, u2),
    ])


@registry.fixture("rook_4x4")
def rook_graph() -> Graph:
    """Cells of a 4x4 board, adjacent when they share a row or a column"""
    cells = [(r, c) for r in range(4) for c in range(4)]
    return build_graph(16, [
        (4 * a[0] + a[1], 4 * b[0] + b[1])
        for a, b in combinations(cells, 2)
        if a[0] == b[0] or a[1] == b[1]
    ])


@registry.fixture("shrikhande")
def shrikhande_graph() -> Graph:
    """Z4 x Z4, adjacent when the difference is ±(0,1), ±(1,0) or ±(1,1)"""
    steps = {(0, 1), (0, 3), (1, 0), (3, 0), (1, 1), (3, 3)}
    cells = [(r, c) for r in range(4) for c in range(4)]
    return build_graph(16, [
        (4 * a[0] + a[1], 4 * b[0] + b[1])
        for a, b in combinations(cells, 2)
        if ((b[0] - a[0]) % 4, (b[1] - a[1]) % 4) in steps
    ])
