from __future__ import annotations

import numpy as np
import pytest

from blockecc.blocks import decompose, vertex_separates
from blockecc.graph import Graph, distance_matrix
from blockecc.lab.generators import GenSpec, generate
from blockecc.lab.oracles import (
    OracleSizeError,
    oracle_articulation_points,
    oracle_blocks,
    oracle_distances,
    oracle_separates,
)

THETA = Graph.from_edges(5, [(0, 2), (2, 1), (0, 3), (3, 1), (0, 4), (4, 1)])
C4_PENDANT = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (0, 3), (0, 4)])
P4 = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])


def test_articulation_oracle(fx):
    assert oracle_articulation_points(fx("P3")) == {1}
    assert oracle_articulation_points(fx("C4")) == set()


def test_block_oracle_examples():
    assert len(oracle_blocks(THETA)) == 1
    assert len(oracle_blocks(C4_PENDANT)) == 2


def test_separation_oracle(fx):
    assert oracle_separates(P4, 1, 0, 3)
    g = fx("C4")
    assert not any(
        oracle_separates(g, a, u, v)
        for a in range(4) for u in range(4) for v in range(4) if len({a, u, v}) == 3
    )


def test_size_guards():
    big = generate(GenSpec.of("cycle", n=20))
    with pytest.raises(OracleSizeError):
        oracle_blocks(big)
    with pytest.raises(OracleSizeError):
        oracle_separates(big, 0, 1, 2)


@pytest.mark.parametrize("seed", range(40))
def test_fast_paths_match_oracles(seed):
    g = generate(GenSpec.of("connected-gnm", seed, n=8, m=8 + seed % 5))
    d = decompose(g)
    assert set(d.articulation_points) == oracle_articulation_points(g)
    assert sorted(b.edges for b in d.blocks) == oracle_blocks(g)
    assert np.array_equal(distance_matrix(g), oracle_distances(g))
    for a in range(g.n):
        for u in range(g.n):
            for v in range(u + 1, g.n):
                if a not in (u, v):
                    assert vertex_separates(g, a, u, v) == oracle_separates(g, a, u, v)
