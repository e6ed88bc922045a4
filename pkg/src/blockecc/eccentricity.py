"""Vertex and block eccentricity, radius, block radius, center and type A/B.

A graph is type A when its block radius equals its radius and type B when
the block radius is strictly smaller. Graphs with a single block have block
radius 0; K1 is the one graph where both are 0 and is reported as type A.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .blocks import (
    articulation_components_at_block,
    articulation_components_at_vertex,
    block_vertex_distances,
    decompose,
)
from .graph import Graph, distance_matrix, require_connected


def vertex_eccentricities(g: Graph) -> list[int]:
    if g.n == 0:
        return []
    return [int(x) for x in distance_matrix(g).max(axis=1)]


def block_eccentricities(g: Graph) -> list[int]:
    require_connected(g)
    return [int(x) for x in block_vertex_distances(g).max(axis=1)]


def block_eccentricity(g: Graph, b: int) -> int:
    return block_eccentricities(g)[b]


def eccentric_vertices(g: Graph, v: int) -> list[int]:
    row = distance_matrix(g)[v]
    return [int(u) for u in np.flatnonzero(row == row.max())]


def upper_distance(g: Graph, b: int, v: int) -> int:
    """Largest distance from ``v`` to a vertex of block ``b``."""
    blk = decompose(g).blocks[b]
    return int(distance_matrix(g)[list(blk.vertices), v].max())


def upper_eccentricity(g: Graph, b: int) -> int:
    blk = decompose(g).blocks[b]
    ecc = vertex_eccentricities(g)
    return max(ecc[v] for v in blk.vertices)


def block_diameter(g: Graph, b: int) -> int:
    """Diameter of block ``b`` taken as a standalone graph on its own edges."""
    blk = decompose(g).blocks[b]
    if not blk.edges:
        return 0
    sub, _ = g.subgraph_from_edges(blk.edges)
    return int(distance_matrix(sub).max())


@dataclass(frozen=True)
class EccentricityReport:
    ecc: tuple[int, ...]
    becc: tuple[int, ...]
    rad: int
    brad: int
    diam: int
    center: tuple[int, ...]
    central_blocks: tuple[int, ...]
    periphery: tuple[int, ...]
    peripheral_blocks: tuple[int, ...]
    graph_type: str
    central_point: int | None = None
    central_block: int | None = None
    eccentric: dict[int, tuple[int, ...]] = field(default_factory=dict, repr=False)

    @property
    def n_blocks(self) -> int:
        return len(self.becc)

    def witness(self) -> dict:
        if self.graph_type == "A":
            return {"centralPoint": self.central_point, "centralBlocks": list(self.central_blocks)}
        return {"centralBlock": self.central_block}

    def to_json(self) -> dict:
        return {
            "ecc": list(self.ecc),
            "becc": list(self.becc),
            "rad": self.rad,
            "brad": self.brad,
            "diam": self.diam,
            "center": list(self.center),
            "centralBlocks": list(self.central_blocks),
            "periphery": list(self.periphery),
            "peripheralBlocks": list(self.peripheral_blocks),
            "type": self.graph_type,
            "witness": self.witness(),
        }


def full_report(g: Graph) -> EccentricityReport:
    cached = g._cache.get("report")
    if cached is not None:
        return cached
    require_connected(g)
    d = decompose(g)
    dm = distance_matrix(g)
    ecc_arr = dm.max(axis=1)
    ecc = tuple(int(x) for x in ecc_arr)
    rad, diam = min(ecc), max(ecc)
    becc = tuple(block_eccentricities(g))
    brad = min(becc)
    center = tuple(v for v in range(g.n) if ecc[v] == rad)
    periphery = tuple(v for v in range(g.n) if ecc[v] == diam)
    central_blocks = tuple(b for b, e in enumerate(becc) if e == brad)
    pset = set(periphery)
    peripheral = tuple(b.index for b in d.blocks if pset & b.vertex_set)
    eccentric = {
        v: tuple(int(u) for u in np.flatnonzero(dm[v] == ecc_arr[v])) for v in range(g.n)
    }
    if brad == rad:
        report = EccentricityReport(
            ecc, becc, rad, brad, diam, center, central_blocks, periphery, peripheral, "A",
            central_point=center[0], eccentric=eccentric,
        )
    else:
        report = EccentricityReport(
            ecc, becc, rad, brad, diam, center, central_blocks, periphery, peripheral, "B",
            central_block=central_blocks[0], eccentric=eccentric,
        )
    g._cache["report"] = report
    return report


def peripheral_blocks(g: Graph) -> list[int]:
    return list(full_report(g).peripheral_blocks)


@dataclass
class TheoremCheck:
    """Outcome of a theorem checker; ``verdict`` is ``A``, ``B`` or ``n/a``."""

    verdict: str
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def check_central_block_theorem(g: Graph) -> TheoremCheck:
    d = decompose(g)
    if len(d.blocks) < 2:
        return TheoremCheck("n/a")
    r = full_report(g)
    out = TheoremCheck(r.graph_type)
    center = set(r.center)
    containing = tuple(b.index for b in d.blocks if center <= b.vertex_set)
    if not set(r.central_blocks) <= set(containing):
        out.violations.append(
            f"central blocks {list(r.central_blocks)} do not all contain the center {sorted(center)}"
        )
    # Converse only in type A: with a single articulation central point in
    # type B, other blocks through it contain the center without being central.
    if r.graph_type == "A" and containing != r.central_blocks:
        out.violations.append(
            f"central blocks {list(r.central_blocks)} != blocks containing the center {list(containing)}"
        )
    by_count = "A" if len(r.central_blocks) >= 2 else "B"
    if by_count != r.graph_type:
        out.violations.append(
            f"brad={r.brad}, rad={r.rad} gives type {r.graph_type} but there are "
            f"{len(r.central_blocks)} central blocks"
        )
    if r.graph_type == "A":
        if len(r.center) != 1:
            out.violations.append(f"type A with center {list(r.center)} of size != 1")
        else:
            a = r.center[0]
            if a not in d.articulation_points:
                out.violations.append(f"type A central point {a} is not an articulation point")
            incident = d.blocks_of_vertex[a]
            if not set(incident) <= set(r.central_blocks):
                out.violations.append(f"blocks {list(incident)} at {a} are not all central")
    else:
        if len(r.central_blocks) != 1:
            out.violations.append(f"type B with central blocks {list(r.central_blocks)}")
    return out


def check_eccentric_location(g: Graph) -> TheoremCheck:
    d = decompose(g)
    if len(d.blocks) < 2:
        return TheoremCheck("n/a")
    r = full_report(g)
    out = TheoremCheck(r.graph_type)
    if r.graph_type == "A":
        a = r.central_point
        if a not in d.articulation_points:
            out.violations.append(f"type A central point {a} is not an articulation point")
            return out
        comps = articulation_components_at_vertex(g, a)
        hit = set()
        for i, comp in enumerate(comps):
            inside = comp.vertices
            for v in sorted(inside):
                if v == a:
                    continue
                if all(u in inside for u in r.eccentric[v]):
                    out.violations.append(
                        f"vertex {v} in component {i} at {a} has no eccentric vertex outside it"
                    )
            if any(u in inside and u != a for u in r.eccentric[a]):
                hit.add(i)
        if len(hit) < 2:
            out.violations.append(f"central point {a} has eccentric vertices in {len(hit)} component(s)")
    else:
        comps = articulation_components_at_block(g, r.central_block)
        for i, comp in enumerate(comps):
            inside = comp.vertices
            for v in sorted(inside):
                bad = [u for u in r.eccentric[v] if u in inside]
                if bad:
                    out.violations.append(
                        f"vertex {v} in component {i} at block {r.central_block} "
                        f"has eccentric vertices {bad} inside it"
                    )
    return out


@dataclass
class BoundsCheck(TheoremCheck):
    rad: int = 0
    brad: int = 0
    diam: int = 0
    central_block_diam: int | None = None


def check_radius_diameter_bounds(g: Graph) -> BoundsCheck:
    r = full_report(g)
    out = BoundsCheck(r.graph_type, rad=r.rad, brad=r.brad, diam=r.diam)
    if r.graph_type == "A":
        if r.diam != 2 * r.rad:
            out.violations.append(f"type A with diam {r.diam} != 2*rad {2 * r.rad}")
        return out
    db = block_diameter(g, r.central_block)
    out.central_block_diam = db
    if not 2 * r.rad - db <= r.diam:
        out.violations.append(f"2*rad - diam(B) = {2 * r.rad - db} > diam {r.diam}")
    if not r.diam <= 2 * r.rad:
        out.violations.append(f"diam {r.diam} > 2*rad {2 * r.rad}")
    if not r.diam <= 2 * r.brad + db:
        out.violations.append(f"diam {r.diam} > 2*brad + diam(B) = {2 * r.brad + db}")
    if not r.rad - r.brad <= db:
        out.violations.append(f"rad - brad = {r.rad - r.brad} > diam(B) = {db}")
    return out


def check_self_centered(g: Graph) -> TheoremCheck:
    r = full_report(g)
    nblocks = len(decompose(g).blocks)
    out = TheoremCheck("self-centered" if r.rad == r.diam else "not self-centered")
    if r.rad == r.diam and nblocks != 1:
        out.violations.append(f"rad = diam = {r.rad} but the graph has {nblocks} blocks")
    return out
