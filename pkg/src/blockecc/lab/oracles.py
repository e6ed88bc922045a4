"""Brute-force oracles taken straight from the definitions. Small inputs only."""

from __future__ import annotations

from collections import deque

import numpy as np

from ..graph import Graph


class OracleSizeError(ValueError):
    pass


def _guard(value: int, limit: int, what: str) -> None:
    if value > limit:
        raise OracleSizeError(f"{what}={value} exceeds the oracle limit {limit}")


def _components_without(g: Graph, removed: int) -> int:
    seen = [False] * g.n
    seen[removed] = True
    count = 0
    for s in range(g.n):
        if seen[s]:
            continue
        count += 1
        seen[s] = True
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adjacency[u]:
                if not seen[w]:
                    seen[w] = True
                    queue.append(w)
    return count


def oracle_articulation_points(g: Graph) -> set[int]:
    """Vertices whose removal disconnects a connected graph."""
    _guard(g.n, 64, "n")
    return {a for a in range(g.n) if _components_without(g, a) > 1}


def _simple_paths(g: Graph, src: int, dst: int, banned_edge=None):
    path = [src]
    on_path = {src}

    def extend(u):
        if u == dst:
            yield list(path)
            return
        for w in g.adjacency[u]:
            if w in on_path or banned_edge == (min(u, w), max(u, w)):
                continue
            path.append(w)
            on_path.add(w)
            yield from extend(w)
            path.pop()
            on_path.discard(w)

    yield from extend(src)


def oracle_blocks(g: Graph) -> list[tuple[tuple[int, int], ...]]:
    """Edge classes under "equal or on a common simple cycle", sorted."""
    _guard(g.m, 14, "m")
    classes = []
    for e in g.edges:
        related = {e}
        for p in _simple_paths(g, e[0], e[1], banned_edge=e):
            related.update((min(x, y), max(x, y)) for x, y in zip(p, p[1:]))
        classes.append(tuple(sorted(related)))
    return sorted(set(classes))


def oracle_separates(g: Graph, a: int, u: int, v: int) -> bool:
    """Whether every simple ``u``-``v`` path goes through ``a``."""
    _guard(g.n, 10, "n")
    return all(a in p for p in _simple_paths(g, u, v))


def oracle_distances(g: Graph) -> np.ndarray:
    """Floyd-Warshall all-pairs distances; unreachable pairs stay at ``n``."""
    _guard(g.n, 64, "n")
    inf = g.n
    d = np.full((g.n, g.n), inf, dtype=np.int64)
    np.fill_diagonal(d, 0)
    for u, v in g.edges:
        d[u, v] = d[v, u] = 1
    for k in range(g.n):
        d = np.minimum(d, d[:, k, None] + d[None, k, :])
    return d
