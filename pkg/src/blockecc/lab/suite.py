"""Property suite: every theorem checker quantified over a corpus of GenSpecs."""

from __future__ import annotations

import math
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from ..blocks import check_separation_additivity, decompose, vertex_separates
from ..eccentricity import (
    block_diameter,
    check_central_block_theorem,
    check_eccentric_location,
    check_radius_diameter_bounds,
    check_self_centered,
    full_report,
    upper_eccentricity,
)
from ..graph import Graph, distance_matrix
from ..prune import prune, prune_with_choices, random_chooser, verify_replacement
from ..randic import (
    TOL,
    check_conjectures,
    check_wedge_inequality,
    is_cactus,
    randic_index,
    randic_index_alt,
    verify_cactus_theorem,
)
from .generators import GenSpec, fuzz_corpus, generate, seed_stream
from .oracles import (
    oracle_articulation_points,
    oracle_blocks,
    oracle_distances,
    oracle_separates,
)


class Skip(Exception):
    """The property does not apply to this graph."""


Property = Callable[[Graph, GenSpec], list[str]]


def _separation_additivity(g: Graph, spec: GenSpec) -> list[str]:
    return [
        f"{v.case}: sep={v.separator} x={v.x} y={v.y} lhs={v.lhs} rhs={v.rhs}"
        for v in check_separation_additivity(g)
    ]


def _prop_becc(g: Graph, spec: GenSpec) -> list[str]:
    r = full_report(g)
    out = []
    for blk in decompose(g).blocks:
        low = min(r.ecc[v] for v in blk.vertices)
        if r.becc[blk.index] > low:
            out.append(f"becc(B{blk.index})={r.becc[blk.index]} > min ecc {low}")
    return out


def _prop_brad(g: Graph, spec: GenSpec) -> list[str]:
    r = full_report(g)
    return [] if r.brad <= r.rad else [f"brad {r.brad} > rad {r.rad}"]


def _theorem(check) -> Property:
    def run(g: Graph, spec: GenSpec) -> list[str]:
        result = check(g)
        if result.verdict == "n/a":
            raise Skip
        return list(result.violations)

    return run


def _rd_bounds(g: Graph, spec: GenSpec) -> list[str]:
    result = check_radius_diameter_bounds(g)
    out = list(result.violations)
    if spec.model == "cycle-with-paths":
        half, length = spec.get("n"), spec.get("l")
        r = full_report(g)
        db = block_diameter(g, r.central_block)
        if (r.diam, r.rad, db) != (2 * length + half, length + half, half):
            out.append(f"diam/rad/diam(B) = {r.diam}/{r.rad}/{db}, expected {2 * length + half}/{length + half}/{half}")
        if r.diam != 2 * r.rad - db:
            out.append(f"lower bound not attained: diam {r.diam} != 2rad - diam(B) = {2 * r.rad - db}")
    return out


def _upper_ecc_diam(g: Graph, spec: GenSpec) -> list[str]:
    r = full_report(g)
    top = max(upper_eccentricity(g, b.index) for b in decompose(g).blocks)
    return [] if top == r.diam else [f"max upper eccentricity {top} != diam {r.diam}"]


def _replacement(g: Graph, spec: GenSpec) -> list[str]:
    out = []
    seeds = seed_stream(spec.seed ^ 0x5EED)
    runs = [("default", prune(g))]
    runs += [(f"random#{k}", prune_with_choices(g, random_chooser(next(seeds)))) for k in range(3)]
    for name, result in runs:
        check = verify_replacement(g, result)
        if not check.ok:
            out.append(f"{name}: {check.witnesses}")
    return out


def _prune_idempotent(g: Graph, spec: GenSpec) -> list[str]:
    once = prune(g).pruned
    twice = prune(once).pruned
    return [] if once == twice else [f"prune twice gives {twice.edges} instead of {once.edges}"]


def _randic_agreement(g: Graph, spec: GenSpec) -> list[str]:
    a, b = randic_index(g), randic_index_alt(g)
    return [] if abs(a - b) <= TOL else [f"Rand {a!r} vs alternative form {b!r}"]


def _randic_star_bound(g: Graph, spec: GenSpec) -> list[str]:
    if g.n < 2:
        raise Skip
    rand = randic_index(g)
    out = []
    if rand < math.sqrt(g.n - 1) - TOL:
        out.append(f"Rand {rand:.12g} < sqrt(n-1) = {math.sqrt(g.n - 1):.12g}")
    if rand > g.n / 2 + TOL:
        out.append(f"Rand {rand:.12g} > n/2 = {g.n / 2}")
    return out


def _wedge(g: Graph, spec: GenSpec) -> list[str]:
    cuts = sorted(decompose(g).articulation_points)
    if not cuts:
        raise Skip
    out = []
    for a in cuts:
        w = check_wedge_inequality(g, a)
        if not w.ok:
            out.append(f"a={a}: slack {w.slack:.3g}, Rand {w.rand:.12g}, parts {w.component_rands}")
    return out


def _leaf_block_monotone(g: Graph, spec: GenSpec) -> list[str]:
    d = decompose(g)
    if len(d.blocks) < 2:
        raise Skip
    rand = randic_index(g)
    out = []
    for blk in d.blocks:
        if sum(1 for v in blk.vertices if v in d.articulation_points) != 1:
            continue
        rest = [e for e in g.edges if d.block_of_edge[e] != blk.index]
        h, _ = g.subgraph_from_edges(rest)
        after = randic_index(h)
        if after > rand + TOL:
            out.append(f"deleting leaf block B{blk.index} raises Rand {rand:.12g} -> {after:.12g}")
    return out


def _cactus_randic(g: Graph, spec: GenSpec) -> list[str]:
    if not is_cactus(g):
        raise Skip
    report = verify_cactus_theorem(g)
    return [f"{name}: {report.steps[name][1]}" for name in report.failed_steps()]


def _block_isometric(g: Graph, spec: GenSpec) -> list[str]:
    if g.n > 24:
        raise Skip
    dm = distance_matrix(g)
    out = []
    for blk in decompose(g).blocks:
        if not blk.edges:
            continue
        sub, vmap = g.subgraph_from_edges(blk.edges)
        inner = distance_matrix(sub)
        outer = dm[np.ix_(vmap, vmap)]
        if not np.array_equal(inner, outer):
            out.append(f"B{blk.index}: distances inside the block differ from distances in G")
    return out


def _oracle_bfs(g: Graph, spec: GenSpec) -> list[str]:
    if g.n > 64:
        raise Skip
    bad = np.argwhere(distance_matrix(g) != oracle_distances(g))
    return [f"dist{tuple(int(x) for x in p)} disagrees with Floyd-Warshall" for p in bad[:5]]


def _oracle_articulation(g: Graph, spec: GenSpec) -> list[str]:
    if g.n > 64:
        raise Skip
    fast, slow = set(decompose(g).articulation_points), oracle_articulation_points(g)
    return [] if fast == slow else [f"decompose {sorted(fast)} vs removal oracle {sorted(slow)}"]


def _oracle_blocks(g: Graph, spec: GenSpec) -> list[str]:
    if g.m > 14:
        raise Skip
    fast = sorted(b.edges for b in decompose(g).blocks if b.edges)
    slow = oracle_blocks(g)
    return [] if fast == slow else [f"decompose {fast} vs cycle oracle {slow}"]


def _oracle_separates(g: Graph, spec: GenSpec) -> list[str]:
    if g.n > 10:
        raise Skip
    out = []
    for a in range(g.n):
        for u in range(g.n):
            for v in range(u + 1, g.n):
                if a in (u, v):
                    continue
                if vertex_separates(g, a, u, v) != oracle_separates(g, a, u, v):
                    out.append(f"a={a}, u={u}, v={v}")
    return out


PROPERTIES: dict[str, Property] = {
    "separation-additivity": _separation_additivity,
    "prop-becc": _prop_becc,
    "prop-brad": _prop_brad,
    "central-block-theorem": _theorem(check_central_block_theorem),
    "eccentric-location": _theorem(check_eccentric_location),
    "rd-bounds": _rd_bounds,
    "self-centered": _theorem(check_self_centered),
    "replacement": _replacement,
    "prune-idempotent": _prune_idempotent,
    "randic-agreement": _randic_agreement,
    "randic-star-bound": _randic_star_bound,
    "wedge-inequality": _wedge,
    "leaf-block-monotone": _leaf_block_monotone,
    "cactus-randic": _cactus_randic,
    "upper-ecc-diam": _upper_ecc_diam,
    "block-isometric": _block_isometric,
    "oracle-bfs": _oracle_bfs,
    "oracle-articulation": _oracle_articulation,
    "oracle-blocks": _oracle_blocks,
    "oracle-separates": _oracle_separates,
}


@dataclass(frozen=True, order=True)
class Violation:
    spec: GenSpec
    witness: str

    def to_json(self) -> dict:
        return {"spec": self.spec.to_json(), "witness": self.witness}


@dataclass
class PropertyResult:
    trials: int = 0
    skipped: int = 0
    violations: list[Violation] = field(default_factory=list)
    wall_time: float = 0.0


@dataclass
class SuiteReport:
    properties: dict[str, PropertyResult]

    @property
    def violation_count(self) -> int:
        return sum(len(p.violations) for p in self.properties.values())

    @property
    def ok(self) -> bool:
        return self.violation_count == 0

    def to_json(self, timing: bool = False) -> dict:
        props = {}
        for name, res in self.properties.items():
            entry = {
                "trials": res.trials,
                "skipped": res.skipped,
                "violations": [v.to_json() for v in res.violations],
            }
            if timing:
                entry["wallTime"] = round(res.wall_time, 3)
            props[name] = entry
        return {"violationCount": self.violation_count, "properties": props}

    def to_text(self) -> str:
        lines = []
        for name, res in self.properties.items():
            status = "ok" if not res.violations else f"{len(res.violations)} VIOLATION(S)"
            lines.append(
                f"{name:24s} trials={res.trials:<6d} skipped={res.skipped:<6d} "
                f"{res.wall_time:7.2f}s  {status}"
            )
            for v in res.violations[:5]:
                lines.append(f"    {v.spec}: {v.witness}")
        lines.append(f"total violations: {self.violation_count}")
        return "\n".join(lines)


def _run_one(names: tuple[str, ...], spec: GenSpec):
    g = generate(spec)
    rows = []
    for name in names:
        start = time.perf_counter()
        try:
            witnesses = PROPERTIES[name](g, spec)
            skipped = False
        except Skip:
            witnesses, skipped = [], True
        except Exception as exc:  # a crash is reported as a violation with replay data
            witnesses, skipped = [f"{type(exc).__name__}: {exc}"], False
        rows.append((name, skipped, witnesses, time.perf_counter() - start))
    return spec, rows


def _workers() -> int:
    try:
        return max(1, int(os.environ.get("THREADS", "1")))
    except ValueError:
        return 1


def run_suite(properties: list[str], corpus: list[GenSpec]) -> SuiteReport:
    unknown = [p for p in properties if p not in PROPERTIES]
    if unknown:
        raise KeyError(f"unknown properties: {', '.join(unknown)}")
    names = tuple(dict.fromkeys(properties))
    results = {name: PropertyResult() for name in names}
    workers = _workers()
    if workers > 1 and len(corpus) > 1:
        with ProcessPoolExecutor(workers) as pool:
            outcomes = list(pool.map(_run_one, [names] * len(corpus), corpus, chunksize=64))
    else:
        outcomes = [_run_one(names, spec) for spec in corpus]
    for spec, rows in outcomes:
        for name, skipped, witnesses, elapsed in rows:
            res = results[name]
            res.wall_time += elapsed
            if skipped:
                res.skipped += 1
                continue
            res.trials += 1
            res.violations.extend(Violation(spec, w) for w in witnesses)
    for res in results.values():
        res.violations.sort()
    return SuiteReport(results)


def fuzz_radius_conjecture(trials: int, seed: int, max_n: int = 60, top: int = 10) -> dict:
    """Search random graphs for Rand < rad; even paths are tallied separately."""
    rows, exempt = [], []
    seen: set[Graph] = set()
    for spec in fuzz_corpus(trials, seed, max_n):
        g = generate(spec)
        if g in seen:  # the same labelled graph drawn twice is reported once
            continue
        seen.add(g)
        rep = check_conjectures(g)
        row = {
            "spec": spec.to_json(),
            "n": g.n,
            "rad": rep.rad,
            "rand": float(f"{rep.index:.12g}"),
            "slackRadius": float(f"{rep.slack_radius:.12g}"),
        }
        (exempt if rep.even_path_flag else rows).append((rep.slack_radius, spec, row))
    rows.sort(key=lambda t: (t[0], t[1]))
    exempt.sort(key=lambda t: (t[0], t[1]))
    return {
        "trials": trials,
        "seed": seed,
        "distinctGraphs": len(seen),
        "counterexamples": [r for s, _, r in rows if s < -TOL],
        "smallestSlacks": [r for _, _, r in rows[:top]],
        "exemptEvenPaths": [r for _, _, r in exempt],
    }
