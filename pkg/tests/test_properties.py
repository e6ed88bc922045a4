"""Randomised invariants driven by hypothesis over seeded generator specs."""

from __future__ import annotations

import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

from blockecc.blocks import check_separation_additivity, decompose
from blockecc.eccentricity import check_central_block_theorem, full_report
from blockecc.graph import Graph, distance_matrix, dump_edge_list, parse_edge_list
from blockecc.lab.generators import GenSpec, generate
from blockecc.lab.oracles import oracle_articulation_points, oracle_distances
from blockecc.prune import prune, prune_with_choices, random_chooser, verify_replacement
from blockecc.randic import TOL, is_cactus, randic_index, randic_index_alt, verify_cactus_theorem

seeds = st.integers(min_value=0, max_value=2**64 - 1)


@st.composite
def connected_graphs(draw, max_n=25):
    model = draw(st.sampled_from(["tree", "cactus", "connected-gnm"]))
    n = draw(st.integers(min_value=1, max_value=max_n))
    params = {"n": n}
    if model == "connected-gnm":
        top = n * (n - 1) // 2
        params["m"] = draw(st.integers(min_value=max(n - 1, 0), max_value=min(top, 2 * n)))
    return generate(GenSpec.of(model, draw(seeds), **params))


@given(connected_graphs())
@settings(max_examples=150, deadline=None)
def test_edge_list_round_trip(g: Graph):
    assert parse_edge_list(dump_edge_list(g)) == g


@given(connected_graphs())
@settings(max_examples=150, deadline=None)
def test_structure_matches_oracles(g: Graph):
    assert set(decompose(g).articulation_points) == oracle_articulation_points(g)
    assert np.array_equal(distance_matrix(g), oracle_distances(g))


@given(connected_graphs())
@settings(max_examples=150, deadline=None)
def test_block_invariants(g: Graph):
    assert check_separation_additivity(g) == []
    r = full_report(g)
    assert r.brad <= r.rad
    assert check_central_block_theorem(g).ok


@given(connected_graphs(), seeds)
@settings(max_examples=150, deadline=None)
def test_pruning_preserves_metrics(g: Graph, seed: int):
    for result in (prune(g), prune_with_choices(g, random_chooser(seed))):
        assert verify_replacement(g, result).ok


@given(connected_graphs())
@settings(max_examples=150, deadline=None)
def test_randic_forms_agree(g: Graph):
    assert abs(randic_index(g) - randic_index_alt(g)) <= TOL


@given(connected_graphs())
@settings(max_examples=100, deadline=None)
def test_cactus_bounds(g: Graph):
    if not is_cactus(g):
        return
    steps = verify_cactus_theorem(g).steps
    for name in ("radiusPreserved", "diameterPreserved", "leafBlockMonotone", "radiusBound"):
        assert steps[name][0], (name, steps[name][1])
