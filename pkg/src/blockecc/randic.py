"""Randić index, the wedge inequality at an articulation point, and the cactus bound pipeline."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .blocks import articulation_components_at_vertex, decompose
from .eccentricity import full_report
from .graph import Graph, is_connected, require_connected
from .prune import leaf_deletion_order, prune

TOL = 1e-9
SQRT2 = math.sqrt(2.0)


@dataclass(frozen=True)
class EdgeWeight:
    edge: tuple[int, int]
    w: float
    w_star: float


def edge_weights(g: Graph) -> list[EdgeWeight]:
    deg = g.degrees()
    out = []
    for u, v in g.edges:
        iu, iv = 1.0 / math.sqrt(deg[u]), 1.0 / math.sqrt(deg[v])
        out.append(EdgeWeight((u, v), iu * iv, 0.5 * (iu - iv) ** 2))
    return out


def randic_index(g: Graph) -> float:
    deg = g.degrees()
    return math.fsum(1.0 / math.sqrt(deg[u] * deg[v]) for u, v in g.edges)


def isolated_count(g: Graph) -> int:
    return sum(1 for a in g.adjacency if not a)


def randic_index_alt(g: Graph) -> float:
    """``(n - n0)/2`` minus the summed edge-weight asymmetry."""
    asym = math.fsum(e.w_star for e in edge_weights(g))
    return (g.n - isolated_count(g)) / 2 - asym


def is_cactus(g: Graph) -> bool:
    require_connected(g)
    return all(len(b.edges) <= 1 or b.is_cycle for b in decompose(g).blocks)


def is_chemical(g: Graph) -> bool:
    return max(g.degrees(), default=0) <= 4


def is_even_path(g: Graph) -> bool:
    deg = g.degrees()
    return (
        g.n % 2 == 0
        and g.n >= 2
        and max(deg) <= 2
        and deg.count(1) == 2
        and is_connected(g)
    )


@dataclass(frozen=True)
class WedgeCheck:
    articulation_point: int
    rand: float
    component_rands: tuple[float, ...]
    component_degrees: tuple[int, ...]  # degree of the copy of a in each component
    bound: float

    @property
    def slack(self) -> float:
        return self.rand - self.bound

    @property
    def ok(self) -> bool:
        return self.slack >= -TOL and all(self.rand >= r - TOL for r in self.component_rands)


def check_wedge_inequality(g: Graph, a: int) -> WedgeCheck:
    """Compare Rand(G) with the sum over articulation components at ``a``.

    Each component is re-indexed as a standalone graph, so the degree of ``a``
    inside it only counts that component's edges.
    """
    comps = articulation_components_at_vertex(g, a)
    rands, degs = [], []
    for comp in comps:
        sub, vmap = g.subgraph_from_edges(comp.edges)
        rands.append(randic_index(sub))
        degs.append(sub.degree(vmap.index(a)))
    rand = randic_index(g)
    bound = math.fsum(rands) + math.sqrt(g.degree(a)) - math.fsum(math.sqrt(x) for x in degs)
    return WedgeCheck(a, rand, tuple(rands), tuple(degs), bound)


def _fmt(x: float) -> float:
    return float(f"{x:.12g}")


@dataclass(frozen=True)
class RandicReport:
    n: int
    rad: int
    diam: int
    index: float
    index_alt: float
    n0: int
    is_cactus: bool
    is_chemical: bool
    even_path_flag: bool

    @property
    def slack_radius(self) -> float:
        return self.index - self.rad

    @property
    def slack_radius_strong(self) -> float:
        return self.index - (self.rad + SQRT2 - 1.5)

    @property
    def slack_diameter(self) -> float:
        return self.index - (self.diam + SQRT2 - (self.n + 1) / 2)

    @property
    def radius_conjecture_holds(self) -> bool:
        """``Rand >= rad`` within tolerance; even paths are exempt."""
        return self.even_path_flag or self.slack_radius >= -TOL

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "rad": self.rad,
            "diam": self.diam,
            "index": _fmt(self.index),
            "indexAlt": _fmt(self.index_alt),
            "n0": self.n0,
            "isCactus": self.is_cactus,
            "isChemical": self.is_chemical,
            "evenPath": self.even_path_flag,
            "slackRadius": _fmt(self.slack_radius),
            "slackRadiusStrong": _fmt(self.slack_radius_strong),
            "slackDiameter": _fmt(self.slack_diameter),
        }


def check_conjectures(g: Graph) -> RandicReport:
    r = full_report(g)
    return RandicReport(
        n=g.n,
        rad=r.rad,
        diam=r.diam,
        index=randic_index(g),
        index_alt=randic_index_alt(g),
        n0=isolated_count(g),
        is_cactus=is_cactus(g),
        is_chemical=is_chemical(g),
        even_path_flag=is_even_path(g),
    )


@dataclass
class CactusPipelineReport:
    """One entry per proof step; ``steps`` maps step name to (passed, detail)."""

    rand: float
    rand_pruned: float
    steps: dict[str, tuple[bool, str]] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(ok for ok, _ in self.steps.values())

    def failed_steps(self) -> list[str]:
        return [name for name, (ok, _) in self.steps.items() if not ok]

    def to_json(self) -> dict:
        return {
            "rand": _fmt(self.rand),
            "randPruned": _fmt(self.rand_pruned),
            "passed": self.passed,
            "steps": {k: {"ok": ok, "detail": d} for k, (ok, d) in self.steps.items()},
        }


def leaf_deletion_trace(g: Graph, deleted) -> list[tuple[int, float, WedgeCheck]]:
    """Delete ``deleted`` blocks leaf by leaf, recording Rand after each step.

    Each entry is ``(block, Rand after deletion, wedge check before deletion)``;
    the wedge check is taken at the block's attachment vertex in the graph the
    block is removed from.
    """
    d = decompose(g)
    alive = set(range(len(d.blocks)))
    trace = []
    for b, a in leaf_deletion_order(g, deleted):
        current, vmap = g.subgraph_from_edges(e for i in sorted(alive) for e in d.blocks[i].edges)
        wedge = check_wedge_inequality(current, vmap.index(a))
        alive.discard(b)
        after, _ = g.subgraph_from_edges(e for i in sorted(alive) for e in d.blocks[i].edges)
        trace.append((b, randic_index(after), wedge))
    return trace


def verify_cactus_theorem(g: Graph) -> CactusPipelineReport:
    """Run the cactus argument step by step: prune, chemical, preserved metrics,
    monotone leaf-block deletion, then both lower bounds on ``g`` itself."""
    if not is_cactus(g):
        raise ValueError("graph is not a cactus")
    result = prune(g)
    h = result.pruned
    rg, rh = full_report(g), full_report(h)
    rand, rand_h = randic_index(g), randic_index(h)
    out = CactusPipelineReport(rand, rand_h)

    maxdeg = max(h.degrees(), default=0)
    out.steps["prunedChemical"] = (is_chemical(h), f"max degree {maxdeg}")
    out.steps["radiusPreserved"] = (rh.rad == rg.rad, f"{rh.rad} vs {rg.rad}")
    out.steps["diameterPreserved"] = (rh.diam == rg.diam, f"{rh.diam} vs {rg.diam}")

    prev = rand
    monotone, wedge_ok, detail = True, True, ""
    try:
        trace = leaf_deletion_trace(g, result.deleted_blocks)
    except ValueError as exc:
        trace = []
        monotone, detail = False, str(exc)
    for b, after, wedge in trace:
        if after > prev + TOL:
            monotone = False
            detail = f"deleting block {b} raised Rand from {prev:.12g} to {after:.12g}"
        if not wedge.ok:
            wedge_ok = False
            detail = f"wedge inequality fails before deleting block {b}: slack {wedge.slack:.3g}"
        prev = after
    if monotone and abs(prev - rand_h) > TOL:
        monotone = False
        detail = f"leaf deletions end at Rand {prev:.12g}, pruned graph has {rand_h:.12g}"
    out.steps["leafBlockMonotone"] = (monotone and rand_h <= rand + TOL, detail)
    out.steps["wedgeInequality"] = (wedge_ok, detail if not wedge_ok else "")

    strong = rand - (rg.rad + SQRT2 - 1.5)
    out.steps["radiusBound"] = (strong >= -TOL, f"slack {strong:.12g}")
    if g.n >= 2:
        dslack = rand - (rg.diam + SQRT2 - (g.n + 1) / 2)
        out.steps["diameterBound"] = (dslack >= -TOL, f"slack {dslack:.12g}")
    even = is_even_path(g)
    out.steps["radiusConjecture"] = (
        even or rand - rg.rad >= -TOL,
        "even path, exempt" if even else f"slack {rand - rg.rad:.12g}",
    )
    return out
