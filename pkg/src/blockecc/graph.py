"""Simple undirected graphs on dense vertex ids, edge-list I/O and BFS distances."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

UNREACHABLE = -1


class GraphError(ValueError):
    """Raised when a graph would violate the simple-graph invariants."""


class GraphParseError(GraphError):
    def __init__(self, message: str, line: int | None = None) -> None:
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class DisconnectedGraphError(ValueError):
    """A metric operation was asked about a graph with more than one component."""


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph on vertices ``0..n-1``.

    ``edges`` is kept as a sorted tuple of ``(u, v)`` pairs with ``u < v``.
    Derived structures (distance matrix, block decomposition, reports) are
    memoised in ``_cache``; it never takes part in equality or hashing.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    _cache: dict = field(default_factory=dict, compare=False, hash=False, repr=False)

    def __post_init__(self) -> None:
        if self.n < 0:
            raise GraphError("vertex count must be non-negative")
        prev = None
        for u, v in self.edges:
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < v < self.n):
                raise GraphError(f"edge ({u}, {v}) is not normalised or out of range")
            if prev is not None and (u, v) <= prev:
                raise GraphError(f"edges not sorted or duplicated at ({u}, {v})")
            prev = (u, v)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        """Build a graph from unordered pairs; duplicates and loops are errors."""
        normal = set()
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) has an endpoint outside [0, {n})")
            key = (u, v) if u < v else (v, u)
            if key in normal:
                raise GraphError(f"duplicate edge {key}")
            normal.add(key)
        return cls(n, tuple(sorted(normal)))

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        adj = self._cache.get("adjacency")
        if adj is None:
            lists: list[list[int]] = [[] for _ in range(self.n)]
            for u, v in self.edges:
                lists[u].append(v)
                lists[v].append(u)
            adj = tuple(tuple(sorted(x)) for x in lists)
            self._cache["adjacency"] = adj
        return adj

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adjacency]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def subgraph_from_edges(
        self, edges: Iterable[tuple[int, int]], keep: Iterable[int] = ()
    ) -> tuple[Graph, tuple[int, ...]]:
        """Re-indexed subgraph spanned by ``edges`` (plus any ``keep`` vertices).

        Returns the new graph and the map from new ids to ids in ``self``;
        vertex order is preserved.
        """
        edges = list(edges)
        verts = set(keep)
        for u, v in edges:
            verts.add(u)
            verts.add(v)
        vmap = tuple(sorted(verts))
        index = {v: i for i, v in enumerate(vmap)}
        return Graph.from_edges(len(vmap), ((index[u], index[v]) for u, v in edges)), vmap

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def parse_edge_list(text: str) -> Graph:
    """Parse the ``n m`` header followed by ``m`` lines ``u v``; ``#`` starts a comment."""
    header: tuple[int, int] | None = None
    header_line = 0
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphParseError(f"expected two integers, got {line!r}", lineno)
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphParseError(f"expected two integers, got {line!r}", lineno) from None
        if header is None:
            if a < 0 or b < 0:
                raise GraphParseError("negative count in header", lineno)
            header, header_line = (a, b), lineno
            continue
        n, m = header
        if len(edges) == m:
            raise GraphParseError(f"more than the declared {m} edges", lineno)
        if a < 0 or b < 0 or a >= n or b >= n:
            raise GraphParseError(f"vertex id out of range [0, {n})", lineno)
        if a == b:
            raise GraphParseError(f"self-loop at vertex {a}", lineno)
        key = (a, b) if a < b else (b, a)
        if key in seen:
            raise GraphParseError(f"duplicate edge {key[0]} {key[1]}", lineno)
        seen.add(key)
        edges.append(key)
    if header is None:
        raise GraphParseError("missing 'n m' header")
    if len(edges) != header[1]:
        raise GraphParseError(f"declared {header[1]} edges, found {len(edges)}", header_line)
    return Graph(header[0], tuple(sorted(edges)))


def dump_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def export_dot(g: Graph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    lines.extend(f"  {v};" for v in range(g.n))
    lines.extend(f"  {u} -- {v};" for u, v in g.edges)
    lines.append("}")
    return "\n".join(lines) + "\n"


def bfs_distances(g: Graph, source: int) -> list[int]:
    """Unweighted distances from ``source``; unreachable vertices get ``UNREACHABLE``."""
    if not 0 <= source < g.n:
        raise IndexError(f"source {source} out of range [0, {g.n})")
    adj = g.adjacency
    dist = [UNREACHABLE] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for w in adj[u]:
            if dist[w] < 0:
                dist[w] = du
                queue.append(w)
    return dist


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    return UNREACHABLE not in bfs_distances(g, 0)


def require_connected(g: Graph) -> None:
    if "connected" not in g._cache:
        g._cache["connected"] = is_connected(g)
    if not g._cache["connected"]:
        raise DisconnectedGraphError(f"graph with n={g.n}, m={g.m} is not connected")


def distance_matrix(g: Graph) -> np.ndarray:
    """All-pairs distances of a connected graph by ``n`` BFS sweeps (read-only, memoised)."""
    dm = g._cache.get("distance_matrix")
    if dm is None:
        require_connected(g)
        dm = np.array([bfs_distances(g, s) for s in range(g.n)], dtype=np.int64)
        dm = dm.reshape(g.n, g.n)
        dm.setflags(write=False)
        g._cache["distance_matrix"] = dm
    return dm


def distance(g: Graph, u: int, v: int) -> int:
    require_connected(g)
    if "distance_matrix" in g._cache:
        return int(g._cache["distance_matrix"][u, v])
    return bfs_distances(g, u)[v]
