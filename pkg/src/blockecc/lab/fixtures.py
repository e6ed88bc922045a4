"""Named golden graphs.

C4L      4-cycle 0-1-2-3 with leaf 4+i attached at cycle vertex i.
HEX      6-cycle v1..v6 as 0..5, pendants 6 at v2 and 7 at v4, path 5-8-9 at v6.
PYR2     two square pyramids sharing the peak 0; bases 1-2-3-4 and 5-6-7-8.
TT4      4-cycle 0-1-2-3, triangles 0-4-5 and 1-6-7 at adjacent cycle vertices.
SPIDERZ  a=0, x=1, y=2, z=3, w=4 with edges a-x, x-y, x-z, a-w.
W64      6-cycle 0..5 and 4-cycle 0-6-7-8 wedged at 0.
"""

from __future__ import annotations

from ..graph import Graph


def _cycle(vs: list[int]) -> list[tuple[int, int]]:
    return [(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))]


def _pyramid(peak: int, base: list[int]) -> list[tuple[int, int]]:
    return _cycle(base) + [(peak, v) for v in base]


FIXTURES: dict[str, Graph] = {
    "K1": Graph.from_edges(1, []),
    "K2": Graph.from_edges(2, [(0, 1)]),
    "P3": Graph.from_edges(3, [(0, 1), (1, 2)]),
    "C4": Graph.from_edges(4, _cycle([0, 1, 2, 3])),
    "C6": Graph.from_edges(6, _cycle(list(range(6)))),
    "K4": Graph.from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]),
    "C4L": Graph.from_edges(8, _cycle([0, 1, 2, 3]) + [(i, 4 + i) for i in range(4)]),
    "HEX": Graph.from_edges(10, _cycle(list(range(6))) + [(1, 6), (3, 7), (5, 8), (8, 9)]),
    "PYR2": Graph.from_edges(9, _pyramid(0, [1, 2, 3, 4]) + _pyramid(0, [5, 6, 7, 8])),
    "TT4": Graph.from_edges(8, _cycle([0, 1, 2, 3]) + _cycle([0, 4, 5]) + _cycle([1, 6, 7])),
    "SPIDERZ": Graph.from_edges(5, [(0, 1), (1, 2), (1, 3), (0, 4)]),
    "W64": Graph.from_edges(9, _cycle(list(range(6))) + _cycle([0, 6, 7, 8])),
}

GOLDEN = ("C4L", "HEX", "PYR2", "TT4", "SPIDERZ")


def fixture(name: str) -> Graph:
    """Fresh copy of a named fixture (memoised analyses are not shared)."""
    g = FIXTURES[name]
    return Graph(g.n, g.edges)
