"""Radius- and diameter-preserving pruning around the central point or block.

For a type A graph every articulation component at the central point keeps
one vertex farthest from that point, one geodesic back to it and every block
the geodesic uses an edge of. For type B the same happens per articulation
component at the central block, with distances measured to the block.
Everything else is deleted.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable, Sequence

from .blocks import (
    BlockRef,
    Item,
    articulation_components_at_block,
    articulation_components_at_vertex,
    block_vertex_distances,
    build_bc_tree,
    decompose,
)
from .eccentricity import full_report
from .graph import Graph, distance_matrix, is_connected, require_connected


class PruneError(ValueError):
    """A chooser returned a vertex or path the construction does not allow."""


@dataclass(frozen=True)
class ChoiceContext:
    """What a chooser sees for one articulation component."""

    graph: Graph
    component: int
    attachment: int
    vertices: frozenset[int]
    anchor_distance: Sequence[int]
    candidates: tuple[int, ...]

    def steps_toward_anchor(self, v: int) -> list[int]:
        """Neighbours of ``v`` one step closer to the anchor, in increasing id."""
        target = self.anchor_distance[v] - 1
        return [w for w in self.graph.adjacency[v] if self.anchor_distance[w] == target]


Chooser = Callable[[ChoiceContext], "tuple[int, Sequence[int]]"]


def _walk(ctx: ChoiceContext, v: int, pick: Callable[[list[int]], int]) -> list[int]:
    path = [v]
    while ctx.anchor_distance[path[-1]] > 0:
        path.append(pick(ctx.steps_toward_anchor(path[-1])))
    return path


def default_chooser(ctx: ChoiceContext) -> tuple[int, list[int]]:
    """Smallest farthest vertex; geodesic prefers the smallest-id predecessor."""
    v = ctx.candidates[0]
    return v, _walk(ctx, v, lambda steps: steps[0])


def random_chooser(seed: int) -> Chooser:
    rng = random.Random(seed)

    def choose(ctx: ChoiceContext) -> tuple[int, list[int]]:
        v = rng.choice(ctx.candidates)
        return v, _walk(ctx, v, rng.choice)

    return choose


@dataclass(frozen=True)
class ChoiceRecord:
    component: int
    attachment: int
    chosen: int
    candidates: tuple[int, ...]
    geodesic: tuple[int, ...]

    def to_json(self) -> dict:
        return {
            "component": self.component,
            "attachment": self.attachment,
            "chosen": self.chosen,
            "candidates": list(self.candidates),
            "geodesic": list(self.geodesic),
        }


@dataclass(frozen=True)
class PruneResult:
    pruned: Graph
    vertex_map: tuple[int, ...]  # pruned id -> original id
    graph_type: str
    anchor: Item | None
    retained_geodesics: tuple[tuple[int, ...], ...]
    retained_blocks: frozenset[int]
    deleted_blocks: frozenset[int]
    choice_log: tuple[ChoiceRecord, ...] = field(default=())

    def to_json(self) -> dict:
        anchor = self.anchor
        return {
            "type": self.graph_type,
            "anchor": (
                None if anchor is None
                else {"block": anchor.index} if isinstance(anchor, BlockRef)
                else {"vertex": anchor}
            ),
            "vertexMap": list(self.vertex_map),
            "retainedBlocks": sorted(self.retained_blocks),
            "deletedBlocks": sorted(self.deleted_blocks),
            "retainedGeodesics": [list(p) for p in self.retained_geodesics],
            "choiceLog": [c.to_json() for c in self.choice_log],
        }


def _validate(ctx: ChoiceContext, v: int, path: Sequence[int]) -> tuple[int, ...]:
    if v not in ctx.candidates:
        raise PruneError(f"component {ctx.component}: vertex {v} is not at maximal distance")
    path = tuple(int(x) for x in path)
    if not path or path[0] != v:
        raise PruneError(f"component {ctx.component}: geodesic must start at {v}")
    dist = ctx.anchor_distance
    for x, y in zip(path, path[1:]):
        if not ctx.graph.has_edge(x, y) or dist[y] != dist[x] - 1:
            raise PruneError(f"component {ctx.component}: step {x}->{y} is not on a geodesic")
    if dist[path[-1]] != 0 or path[-1] != ctx.attachment:
        raise PruneError(f"component {ctx.component}: geodesic does not end at {ctx.attachment}")
    return path


def prune_with_choices(g: Graph, chooser: Chooser) -> PruneResult:
    require_connected(g)
    d = decompose(g)
    all_blocks = frozenset(range(len(d.blocks)))
    if len(d.blocks) == 1:
        return PruneResult(
            Graph(g.n, g.edges), tuple(range(g.n)), full_report(g).graph_type, None,
            (), all_blocks, frozenset(),
        )
    report = full_report(g)
    if report.graph_type == "A":
        a = report.central_point
        anchor: Item = a
        comps = articulation_components_at_vertex(g, a)
        dist = [int(x) for x in distance_matrix(g)[a]]
        retained: set[int] = set()
        keep = {a}
    else:
        b = report.central_block
        anchor = BlockRef(b)
        comps = articulation_components_at_block(g, b)
        dist = [int(x) for x in block_vertex_distances(g)[b]]
        retained = {b}
        keep = set(d.blocks[b].vertices)

    geodesics = []
    log = []
    for i, comp in enumerate(comps):
        far = max(dist[v] for v in comp.vertices)
        cands = tuple(sorted(v for v in comp.vertices if dist[v] == far))
        ctx = ChoiceContext(g, i, comp.attachment, comp.vertices, dist, cands)
        v, path = chooser(ctx)
        path = _validate(ctx, v, path)
        for x, y in zip(path, path[1:]):
            retained.add(d.block_containing(x, y))
        geodesics.append(path)
        log.append(ChoiceRecord(i, comp.attachment, v, cands, path))

    edges = [e for i in sorted(retained) for e in d.blocks[i].edges]
    pruned, vmap = g.subgraph_from_edges(edges, keep)
    return PruneResult(
        pruned, vmap, report.graph_type, anchor, tuple(geodesics),
        frozenset(retained), all_blocks - retained, tuple(log),
    )


def prune(g: Graph) -> PruneResult:
    return prune_with_choices(g, default_chooser)


def leaf_deletion_order(g: Graph, deleted: frozenset[int] | set[int]) -> list[tuple[int, int]]:
    """Order in which ``deleted`` blocks can be removed one BC-tree leaf at a time.

    Returns ``(block, attachment vertex)`` pairs; raises ``ValueError`` if at
    some point no remaining deleted block is a leaf.
    """
    d = decompose(g)
    alive = set(range(len(d.blocks)))
    pending = set(deleted)
    order = []
    while pending:
        for b in sorted(pending):
            shared = [
                v for v in d.blocks[b].vertices
                if any(o != b and o in alive for o in d.blocks_of_vertex[v])
            ]
            if len(shared) == 1:
                order.append((b, shared[0]))
                alive.discard(b)
                pending.discard(b)
                break
        else:
            raise ValueError(f"blocks {sorted(pending)} cannot be removed as leaves")
    return order


@dataclass
class ReplacementChecklist:
    connected_subgraph: bool
    bc_subtree: bool
    path_or_starlike: bool
    centers_radii_preserved: bool
    periphery_diameter_preserved: bool
    witnesses: dict[str, str] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(
            (self.connected_subgraph, self.bc_subtree, self.path_or_starlike,
             self.centers_radii_preserved, self.periphery_diameter_preserved)
        )

    def to_json(self) -> dict:
        return {
            "connectedSubgraph": self.connected_subgraph,
            "bcSubtree": self.bc_subtree,
            "pathOrStarlike": self.path_or_starlike,
            "centersRadiiPreserved": self.centers_radii_preserved,
            "peripheryDiameterPreserved": self.periphery_diameter_preserved,
            "witnesses": dict(sorted(self.witnesses.items())),
        }


def verify_replacement(g: Graph, r: PruneResult) -> ReplacementChecklist:
    """Recompute everything on the pruned graph and compare with ``g``."""
    h, vmap = r.pruned, r.vertex_map
    w: dict[str, str] = {}

    bad_edges = [(u, v) for u, v in h.edges if not g.has_edge(vmap[u], vmap[v])]
    connected = is_connected(h) and not bad_edges and len(set(vmap)) == len(vmap)
    if not connected:
        w["connectedSubgraph"] = f"connected={is_connected(h)}, foreign edges={bad_edges[:3]}"
        return ReplacementChecklist(False, False, False, False, False, w)

    dg, dh = decompose(g), decompose(h)
    block_map: dict[int, int] = {}
    bc_ok = True
    for blk in dh.blocks:
        if blk.edges:
            owners = {dg.block_containing(vmap[u], vmap[v]) for u, v in blk.edges}
        else:
            owners = set(dg.blocks_of_vertex[vmap[blk.vertices[0]]])
        if len(owners) != 1:
            bc_ok = False
            w["bcSubtree"] = f"block {blk.index} of the pruned graph spans blocks {sorted(owners)}"
            break
        block_map[blk.index] = owners.pop()
    if bc_ok and len(set(block_map.values())) != len(block_map):
        bc_ok = False
        w["bcSubtree"] = "two pruned blocks map to the same block"
    stray = [vmap[a] for a in dh.articulation_points if vmap[a] not in dg.articulation_points]
    if bc_ok and stray:
        bc_ok = False
        w["bcSubtree"] = f"articulation points {sorted(stray)} of the pruned graph are not cut vertices of G"

    tree = build_bc_tree(h)
    hubs = [node for node in tree.nodes if tree.degree(node) >= 3]
    starlike = len(hubs) <= 1
    if not starlike:
        w["pathOrStarlike"] = f"BC-tree nodes of degree >= 3: {hubs}"

    rg, rh = full_report(g), full_report(h)
    center_h = sorted(vmap[v] for v in rh.center)
    central_h = sorted(block_map.get(b, -1) for b in rh.central_blocks)
    same_center = (
        center_h == list(rg.center)
        and central_h == list(rg.central_blocks)
        and rh.rad == rg.rad
        and rh.brad == rg.brad
    )
    if not same_center:
        w["centersRadiiPreserved"] = (
            f"center {center_h} vs {list(rg.center)}, central blocks {central_h} vs "
            f"{list(rg.central_blocks)}, rad {rh.rad} vs {rg.rad}, brad {rh.brad} vs {rg.brad}"
        )

    periph_h = {vmap[v] for v in rh.periphery}
    periph_ok = periph_h <= set(rg.periphery) and rh.diam == rg.diam
    if not periph_ok:
        w["peripheryDiameterPreserved"] = (
            f"periphery {sorted(periph_h)} vs {list(rg.periphery)}, diam {rh.diam} vs {rg.diam}"
        )
    return ReplacementChecklist(connected, bc_ok, starlike, same_center, periph_ok, w)
