"""Acceptance criteria, one test (or one test per step) each.

Every test prints a single ``[PASS]``/``[FAIL]`` line; the lines are also
collected into an "acceptance criteria" section of the terminal summary.
"""

from __future__ import annotations

import time
from collections import Counter

import pytest
from conftest import record_acceptance

from blockecc.blocks import decompose
from blockecc.eccentricity import (
    block_diameter,
    block_eccentricity,
    eccentric_vertices,
    full_report,
)
from blockecc.lab.fixtures import fixture
from blockecc.lab.generators import GenSpec, cactus_corpus, default_corpus, generate, grid_specs
from blockecc.lab.suite import fuzz_radius_conjecture, run_suite
from blockecc.randic import SQRT2, TOL, randic_index, verify_cactus_theorem

TRIALS = 10_000
MAX_N = 60

STRUCTURE_PROPS = (
    "separation-additivity", "prop-becc", "prop-brad", "central-block-theorem",
    "eccentric-location", "rd-bounds", "self-centered", "upper-ecc-diam",
)
PRUNER_PROPS = ("replacement", "prune-idempotent")
ORACLE_PROPS = ("oracle-blocks", "oracle-articulation", "oracle-separates", "oracle-bfs")
CACTUS_STEPS = (
    "prunedChemical", "radiusPreserved", "diameterPreserved", "leafBlockMonotone",
    "wedgeInequality", "radiusBound", "diameterBound", "radiusConjecture",
)


def report(criterion: str, ok: bool, detail: str) -> None:
    record_acceptance(f"[{'PASS' if ok else 'FAIL'}] {criterion}: {detail}")


@pytest.fixture(scope="module")
def default_run():
    props = list(STRUCTURE_PROPS + PRUNER_PROPS + ORACLE_PROPS) + ["randic-agreement"]
    start = time.perf_counter()
    result = run_suite(props, default_corpus(TRIALS, 42, MAX_N))
    return result, time.perf_counter() - start


def _suite_outcome(result, names):
    bad = {n: len(result.properties[n].violations) for n in names if result.properties[n].violations}
    seconds = sum(result.properties[n].wall_time for n in names)
    trials = {n: result.properties[n].trials for n in names}
    return bad, seconds, trials


def test_c1_golden_fixtures():
    start = time.perf_counter()
    problems = []

    def expect(label, got, want):
        if got != want:
            problems.append(f"{label}: got {got}, want {want}")

    g = fixture("C4L")
    d = decompose(g)
    r = full_report(g)
    expect("C4L cycle becc", block_eccentricity(g, d.block_containing(0, 1)), 1)
    expect("C4L pendant becc", [block_eccentricity(g, d.block_containing(i, 4 + i)) for i in range(4)], [3] * 4)
    expect("C4L cycle ecc", [r.ecc[v] for v in range(4)], [3] * 4)

    g = fixture("HEX")
    r = full_report(g)
    cycle = decompose(g).block_containing(0, 1)
    expect("HEX center", r.center, (5,))
    expect("HEX rad", r.rad, 3)
    expect("HEX central blocks", r.central_blocks, (cycle,))
    expect("HEX central becc", r.becc[cycle], 2)

    g = fixture("PYR2")
    r = full_report(g)
    expect("PYR2 type", r.graph_type, "A")
    expect("PYR2 peak ecc", r.ecc[0], 1)
    expect("PYR2 base ecc", set(r.ecc[1:]), {2})
    expect("PYR2 eccentric counts", {len(eccentric_vertices(g, v)) for v in range(1, 9)}, {5})

    g = fixture("TT4")
    d = decompose(g)
    r = full_report(g)
    expect("TT4 type", r.graph_type, "B")
    expect("TT4 cycle becc", r.becc[d.block_containing(0, 1)], 1)
    expect("TT4 articulation ecc", sorted(r.ecc[a] for a in d.articulation_points), [2, 2])
    far = eccentric_vertices(g, 4)
    expect("TT4 triangle eccentric count", len(far), 3)
    expect("TT4 eccentric on cycle", sum(v < 4 for v in far), 1)

    elapsed = time.perf_counter() - start
    ok = not problems and elapsed < 1.0
    report("C1 golden fixtures", ok, f"{len(problems)} mismatches, {elapsed:.3f}s" + "".join(f"; {p}" for p in problems))
    assert ok, problems


def test_c2_cycle_with_paths_grid():
    start = time.perf_counter()
    specs = grid_specs(10**6, halves=range(1, 7), lengths=range(1, 6))
    problems = []
    for spec in specs:
        half, length = spec.get("n"), spec.get("l")
        g = generate(spec)
        r = full_report(g)
        db = block_diameter(g, r.central_block)
        if (r.diam, r.rad) != (2 * length + half, length + half) or r.diam != 2 * r.rad - db:
            problems.append(f"{spec}: diam {r.diam}, rad {r.rad}, diam(B) {db}")
    elapsed = time.perf_counter() - start
    ok = len(specs) == 30 and not problems and elapsed < 1.0
    report("C2 cycle-with-paths grid", ok, f"{len(specs)} points, {len(problems)} mismatches, {elapsed:.3f}s")
    assert ok, problems


def test_c3_randic_closed_forms(default_run):
    errors = []
    p2 = randic_index(generate(GenSpec.of("path", n=2)))
    if abs(p2 - 1) > TOL:
        errors.append(f"P2 {p2!r}")
    for n in range(3, 51):
        p = randic_index(generate(GenSpec.of("path", n=n)))
        c = randic_index(generate(GenSpec.of("cycle", n=n)))
        if abs(p - ((n - 3) / 2 + SQRT2)) > TOL:
            errors.append(f"P{n} {p!r}")
        if abs(c - n / 2) > TOL:
            errors.append(f"C{n} {c!r}")
    result, _ = default_run
    agreement = result.properties["randic-agreement"]
    ok = not errors and not agreement.violations
    report(
        "C3 Randic closed forms",
        ok,
        f"{len(errors)} closed-form misses, {len(agreement.violations)} disagreements "
        f"between the two forms over {agreement.trials} corpus graphs",
    )
    assert ok, (errors, agreement.violations[:5])


def test_c4_structure_suite(default_run):
    result, _ = default_run
    bad, seconds, trials = _suite_outcome(result, STRUCTURE_PROPS)
    ok = not bad and seconds < 120
    report("C4 property suite", ok, f"violations {bad or 0}, {min(trials.values())}+ trials per property, {seconds:.1f}s")
    assert ok, {n: result.properties[n].violations[:3] for n in bad}


def test_c5_pruner_suite(default_run):
    result, _ = default_run
    bad, seconds, trials = _suite_outcome(result, PRUNER_PROPS)
    ok = not bad and seconds < 180
    report("C5 pruner suite", ok, f"violations {bad or 0}, {trials['replacement']} graphs x 4 choosers, {seconds:.1f}s")
    assert ok, {n: result.properties[n].violations[:3] for n in bad}


@pytest.fixture(scope="module")
def cactus_run():
    start = time.perf_counter()
    failures: Counter[str] = Counter()
    examples: dict[str, str] = {}
    for spec in cactus_corpus(TRIALS, 42, MAX_N):
        steps = verify_cactus_theorem(generate(spec)).steps
        for name, (passed, detail) in steps.items():
            if not passed:
                failures[name] += 1
                examples.setdefault(name, f"{spec}: {detail}")
    return failures, examples, time.perf_counter() - start


@pytest.mark.parametrize("step", CACTUS_STEPS)
def test_c6_cactus_pipeline(cactus_run, step):
    failures, examples, seconds = cactus_run
    ok = failures[step] == 0 and seconds < 120
    detail = f"{failures[step]} of {TRIALS} cacti fail, {seconds:.1f}s for the corpus"
    if step in examples:
        detail += f"; first: {examples[step]}"
    report(f"C6 cactus pipeline [{step}]", ok, detail)
    assert ok, detail


def test_c7_oracle_equivalence(default_run):
    result, _ = default_run
    bad, seconds, trials = _suite_outcome(result, ORACLE_PROPS)
    ok = not bad
    report("C7 oracle equivalence", ok, f"disagreements {bad or 0}, checked graphs {trials}, {seconds:.1f}s")
    assert ok, {n: result.properties[n].violations[:3] for n in bad}


def test_c8_fuzz_general_graphs():
    start = time.perf_counter()
    result = fuzz_radius_conjecture(TRIALS, 7, MAX_N, top=10)
    elapsed = time.perf_counter() - start
    slacks = [row["slackRadius"] for row in result["smallestSlacks"]]
    ok = not result["counterexamples"] and len(slacks) == 10 and min(slacks) >= -TOL
    lines = ", ".join(f"{s:.6g}" for s in slacks)
    report(
        "C8 fuzz Rand >= rad",
        ok,
        f"{len(result['counterexamples'])} counterexamples in {result['distinctGraphs']} distinct graphs, "
        f"{len(result['exemptEvenPaths'])} even paths exempt, smallest slacks [{lines}], {elapsed:.1f}s",
    )
    for row in result["counterexamples"][:10]:
        record_acceptance(f"    FINDING: Rand < rad on {GenSpec.from_json(row['spec'])}")
    assert ok
