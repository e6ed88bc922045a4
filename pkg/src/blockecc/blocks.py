"""Blocks, articulation points, the block-cutpoint tree and separation.

Blocks are numbered in the order a DFS from vertex 0 (neighbours visited in
increasing id) first enters them. A BC-tree node is either ``("B", i)`` for
block ``i`` or ``("a", v)`` for articulation point ``v``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import NamedTuple, Union

import numpy as np

from .graph import Graph, distance_matrix, require_connected

Node = tuple[str, int]


class BlockRef(NamedTuple):
    """Tags a block index where a vertex-or-block argument is accepted."""

    index: int


Item = Union[int, BlockRef]


@dataclass(frozen=True)
class Block:
    index: int
    vertices: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]
    vertex_set: frozenset[int] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "vertex_set", frozenset(self.vertices))

    def __contains__(self, v: int) -> bool:
        return v in self.vertex_set

    @property
    def is_bridge(self) -> bool:
        return len(self.edges) == 1

    @property
    def is_cycle(self) -> bool:
        return len(self.vertices) >= 3 and len(self.edges) == len(self.vertices)


@dataclass(frozen=True)
class BlockDecomposition:
    blocks: tuple[Block, ...]
    articulation_points: frozenset[int]
    block_of_edge: dict[tuple[int, int], int]
    blocks_of_vertex: tuple[tuple[int, ...], ...]

    def block_containing(self, u: int, v: int) -> int:
        return self.block_of_edge[(u, v) if u < v else (v, u)]


def decompose(g: Graph) -> BlockDecomposition:
    """Split the edges of a connected graph into blocks (iterative lowpoint DFS)."""
    cached = g._cache.get("decompose")
    if cached is not None:
        return cached
    require_connected(g)
    if g.n == 0:
        raise ValueError("decompose needs at least one vertex")
    adj = g.adjacency
    disc = [-1] * g.n
    low = [0] * g.n
    disc[0] = 0
    clock = 1
    raw: list[tuple[int, list[tuple[int, int]]]] = []
    cuts: set[int] = set()
    root_children = 0
    edge_stack: list[tuple[int, int]] = []
    stack = [(0, -1, iter(adj[0]))]
    while stack:
        u, parent, it = stack[-1]
        for w in it:
            if disc[w] < 0:
                disc[w] = low[w] = clock
                clock += 1
                edge_stack.append((u, w))
                stack.append((w, u, iter(adj[w])))
                break
            if w != parent and disc[w] < disc[u]:
                edge_stack.append((u, w))
                if disc[w] < low[u]:
                    low[u] = disc[w]
        else:
            stack.pop()
            if not stack:
                break
            p = stack[-1][0]
            if low[u] < low[p]:
                low[p] = low[u]
            if low[u] >= disc[p]:
                edges = []
                while True:
                    e = edge_stack.pop()
                    edges.append(e)
                    if e == (p, u):
                        break
                raw.append((disc[u], edges))
                if len(stack) == 1:
                    root_children += 1
                else:
                    cuts.add(p)
    if root_children >= 2:
        cuts.add(0)

    raw.sort(key=lambda item: item[0])
    blocks = []
    block_of_edge: dict[tuple[int, int], int] = {}
    of_vertex: list[list[int]] = [[] for _ in range(g.n)]
    for i, (_, edges) in enumerate(raw):
        norm = sorted((a, b) if a < b else (b, a) for a, b in edges)
        verts = sorted({x for e in norm for x in e})
        for e in norm:
            block_of_edge[e] = i
        for v in verts:
            of_vertex[v].append(i)
        blocks.append(Block(i, tuple(verts), tuple(norm)))
    if not blocks:
        blocks.append(Block(0, (0,), ()))
        of_vertex[0].append(0)
    result = BlockDecomposition(
        tuple(blocks), frozenset(cuts), block_of_edge, tuple(tuple(b) for b in of_vertex)
    )
    g._cache["decompose"] = result
    return result


@dataclass(frozen=True)
class BCTree:
    blocks: tuple[Block, ...]
    cut_vertices: tuple[int, ...]
    tree_edges: tuple[tuple[int, int], ...]  # (articulation point, block index)
    adjacency: dict[Node, tuple[Node, ...]]

    @property
    def nodes(self) -> list[Node]:
        return [("B", b.index) for b in self.blocks] + [("a", v) for v in self.cut_vertices]

    def degree(self, node: Node) -> int:
        return len(self.adjacency[node])

    def components_without(self, removed: Node) -> list[list[Node]]:
        """Connected components of the tree minus one node, ordered by first neighbour."""
        comps = []
        for start in self.adjacency[removed]:
            comp = [start]
            seen = {removed, start}
            queue = deque([start])
            while queue:
                x = queue.popleft()
                for y in self.adjacency[x]:
                    if y not in seen:
                        seen.add(y)
                        comp.append(y)
                        queue.append(y)
            comps.append(comp)
        return comps

    def shadow(self, nodes: list[Node]) -> tuple[frozenset[int], tuple[tuple[int, int], ...]]:
        """Vertices and edges of ``G`` covered by the block nodes in ``nodes``."""
        verts: set[int] = set()
        edges: list[tuple[int, int]] = []
        for kind, i in nodes:
            if kind == "B":
                verts.update(self.blocks[i].vertices)
                edges.extend(self.blocks[i].edges)
            else:
                verts.add(i)
        return frozenset(verts), tuple(sorted(edges))

    def to_dot(self, name: str = "BC") -> str:
        lines = [f"graph {name} {{"]
        for b in self.blocks:
            lines.append(f'  B{b.index} [shape=box, label="B{b.index}"];')
        for v in self.cut_vertices:
            lines.append(f'  a{v} [shape=circle, label="a{v}"];')
        for v, b in self.tree_edges:
            lines.append(f"  a{v} -- B{b};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def build_bc_tree(g: Graph, d: BlockDecomposition | None = None) -> BCTree:
    if d is None:
        cached = g._cache.get("bc_tree")
        if cached is not None:
            return cached
        d = decompose(g)
    cuts = tuple(sorted(d.articulation_points))
    adj: dict[Node, list[Node]] = {("B", b.index): [] for b in d.blocks}
    tree_edges = []
    for v in cuts:
        adj[("a", v)] = []
        for b in d.blocks_of_vertex[v]:
            tree_edges.append((v, b))
            adj[("a", v)].append(("B", b))
            adj[("B", b)].append(("a", v))
    tree = BCTree(
        d.blocks,
        cuts,
        tuple(tree_edges),
        {k: tuple(sorted(vs)) for k, vs in adj.items()},
    )
    if d is decompose(g):
        g._cache["bc_tree"] = tree
    return tree


@dataclass(frozen=True)
class ArticulationComponent:
    vertices: frozenset[int]
    edges: tuple[tuple[int, int], ...]
    blocks: tuple[int, ...]
    attachment: int


@dataclass(frozen=True)
class ArticulationComponentSet:
    anchor: Item
    components: tuple[ArticulationComponent, ...]

    def __len__(self) -> int:
        return len(self.components)

    def __iter__(self):
        return iter(self.components)

    def component_of(self, v: int) -> int | None:
        """Index of the component holding ``v`` other than at the anchor itself."""
        for i, c in enumerate(self.components):
            if v in c.vertices and v != c.attachment:
                return i
        return None


def _component(tree: BCTree, nodes: list[Node], attachment: int) -> ArticulationComponent:
    verts, edges = tree.shadow(nodes)
    blocks = tuple(sorted(i for kind, i in nodes if kind == "B"))
    return ArticulationComponent(verts, edges, blocks, attachment)


def articulation_components_at_vertex(g: Graph, a: int) -> ArticulationComponentSet:
    d = decompose(g)
    if a not in d.articulation_points:
        raise ValueError(f"vertex {a} is not an articulation point")
    key = ("components_at_vertex", a)
    if key not in g._cache:
        tree = build_bc_tree(g)
        comps = tree.components_without(("a", a))
        g._cache[key] = ArticulationComponentSet(
            a, tuple(_component(tree, c, a) for c in comps)
        )
    return g._cache[key]


def articulation_components_at_block(g: Graph, b: int) -> ArticulationComponentSet:
    d = decompose(g)
    if not 0 <= b < len(d.blocks):
        raise IndexError(f"no block with index {b}")
    key = ("components_at_block", b)
    if key not in g._cache:
        tree = build_bc_tree(g)
        comps = tree.components_without(("B", b))
        # the first node of each component is the cut node adjacent to B
        g._cache[key] = ArticulationComponentSet(
            BlockRef(b), tuple(_component(tree, c, c[0][1]) for c in comps)
        )
    return g._cache[key]


class _Labels(NamedTuple):
    vertex: np.ndarray  # component index per vertex, -1 when in no component
    block: np.ndarray  # component index per block, -1 when in no component
    attachment: np.ndarray  # attachment vertex per component


def _labels(g: Graph, removed: Node) -> _Labels:
    key = ("labels", removed)
    cached = g._cache.get(key)
    if cached is not None:
        return cached
    tree = build_bc_tree(g)
    vl = np.full(g.n, -1, dtype=np.int64)
    bl = np.full(len(tree.blocks), -1, dtype=np.int64)
    comps = tree.components_without(removed)
    att = np.empty(len(comps), dtype=np.int64)
    for c, nodes in enumerate(comps):
        att[c] = removed[1] if removed[0] == "a" else nodes[0][1]
        for kind, i in nodes:
            if kind == "B":
                bl[i] = c
                vl[list(tree.blocks[i].vertices)] = c
    if removed[0] == "a":
        vl[removed[1]] = -1
    result = _Labels(vl, bl, att)
    g._cache[key] = result
    return result


def vertex_separates(g: Graph, a: int, u: int, v: int) -> bool:
    """True iff every ``u``-``v`` path passes through ``a``."""
    if u == a or v == a:
        raise ValueError("the separating vertex must differ from both queried vertices")
    if a not in decompose(g).articulation_points:
        return False
    vl = _labels(g, ("a", a)).vertex
    return bool(vl[u] != vl[v])


def _label_of(labels: _Labels, x: Item) -> int:
    if isinstance(x, BlockRef):
        return int(labels.block[x.index])
    return int(labels.vertex[x])


def block_separates(g: Graph, b: int, x: Item, y: Item) -> bool:
    """True iff ``x`` and ``y`` fall in different articulation components at block ``b``.

    Non-articulation vertices of ``b`` belong to no component, so queries
    involving them are false.
    """
    if x == BlockRef(b) or y == BlockRef(b):
        raise ValueError("the separating block must differ from both queried items")
    labels = _labels(g, ("B", b))
    lx, ly = _label_of(labels, x), _label_of(labels, y)
    return lx >= 0 and ly >= 0 and lx != ly


def block_vertex_distances(g: Graph) -> np.ndarray:
    """``(blocks, n)`` matrix of ``dist(B, v)``."""
    cached = g._cache.get("block_vertex_distances")
    if cached is None:
        dm = distance_matrix(g)
        d = decompose(g)
        cached = np.stack([dm[list(b.vertices)].min(axis=0) for b in d.blocks])
        cached.setflags(write=False)
        g._cache["block_vertex_distances"] = cached
    return cached


def block_block_distances(g: Graph) -> np.ndarray:
    cached = g._cache.get("block_block_distances")
    if cached is None:
        bv = block_vertex_distances(g)
        d = decompose(g)
        cached = np.stack([bv[:, list(b.vertices)].min(axis=1) for b in d.blocks], axis=1)
        cached.setflags(write=False)
        g._cache["block_block_distances"] = cached
    return cached


def vertex_block_distance(g: Graph, v: int, b: int) -> int:
    return int(block_vertex_distances(g)[b, v])


def block_block_distance(g: Graph, b1: int, b2: int) -> int:
    return int(block_block_distances(g)[b1, b2])


class SeparationViolation(NamedTuple):
    case: str
    separator: Item
    x: Item
    y: Item
    lhs: int
    rhs: int


def _pairs(mask: np.ndarray) -> list[tuple[int, int]]:
    return [(int(i), int(j)) for i, j in zip(*np.nonzero(mask))]


def check_separation_additivity(g: Graph) -> list[SeparationViolation]:
    """Check all six distance identities for every proper separating triple."""
    require_connected(g)
    d = decompose(g)
    dm = distance_matrix(g)
    bv = block_vertex_distances(g)
    bb = block_block_distances(g)
    vb = bv.T
    out: list[SeparationViolation] = []

    def collect(case, sep, lhs, rhs, mask, xkind, ykind):
        bad = mask & (lhs != rhs)
        for i, j in _pairs(bad):
            x = BlockRef(i) if xkind == "B" else i
            y = BlockRef(j) if ykind == "B" else j
            out.append(SeparationViolation(case, sep, x, y, int(lhs[i, j]), int(rhs[i, j])))

    for a in sorted(d.articulation_points):
        lab = _labels(g, ("a", a))
        vl, bl = lab.vertex, lab.block
        vin, bin_ = vl >= 0, bl >= 0
        to_a_v, to_a_b = dm[:, a], bv[:, a]
        mask = vin[:, None] & vin[None, :] & (vl[:, None] != vl[None, :])
        collect("vertex-vertex-vertex", a, dm, to_a_v[:, None] + to_a_v[None, :], mask, "v", "v")
        mask = bin_[:, None] & bin_[None, :] & (bl[:, None] != bl[None, :])
        collect("vertex-block-block", a, bb, to_a_b[:, None] + to_a_b[None, :], mask, "B", "B")
        mask = vin[:, None] & bin_[None, :] & (vl[:, None] != bl[None, :])
        collect("vertex-vertex-block", a, vb, to_a_v[:, None] + to_a_b[None, :], mask, "v", "B")

    if len(d.blocks) > 1:
        for blk in d.blocks:
            lab = _labels(g, ("B", blk.index))
            vl, bl, att = lab.vertex, lab.block, lab.attachment
            vin, bin_ = vl >= 0, bl >= 0
            av = att[np.where(vin, vl, 0)]
            ab = att[np.where(bin_, bl, 0)]
            to_b_v, to_b_b = bv[blk.index], bb[blk.index]
            sep = BlockRef(blk.index)
            mask = vin[:, None] & vin[None, :] & (vl[:, None] != vl[None, :])
            rhs = to_b_v[:, None] + dm[np.ix_(av, av)] + to_b_v[None, :]
            collect("block-vertex-vertex", sep, dm, rhs, mask, "v", "v")
            mask = bin_[:, None] & bin_[None, :] & (bl[:, None] != bl[None, :])
            rhs = to_b_b[:, None] + dm[np.ix_(ab, ab)] + to_b_b[None, :]
            collect("block-block-block", sep, bb, rhs, mask, "B", "B")
            mask = vin[:, None] & bin_[None, :] & (vl[:, None] != bl[None, :])
            rhs = to_b_v[:, None] + dm[np.ix_(av, ab)] + to_b_b[None, :]
            collect("block-vertex-block", sep, vb, rhs, mask, "v", "B")
    return out
