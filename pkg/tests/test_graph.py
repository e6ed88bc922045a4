from __future__ import annotations

import numpy as np
import pytest

from blockecc.graph import (
    UNREACHABLE,
    DisconnectedGraphError,
    Graph,
    GraphError,
    GraphParseError,
    bfs_distances,
    distance,
    distance_matrix,
    dump_edge_list,
    export_dot,
    is_connected,
    parse_edge_list,
    require_connected,
)


def test_parse_k2():
    g = parse_edge_list("2 1\n0 1")
    assert (g.n, g.edges) == (2, ((0, 1),))


def test_parse_c4_normalises_edge_order():
    g = parse_edge_list("4 4\n0 1\n1 2\n2 3\n3 0")
    assert g.edges == ((0, 1), (0, 3), (1, 2), (2, 3))


def test_parse_ignores_comments_and_blank_lines():
    g = parse_edge_list("# a path\n3 2\n\n0 1  # first\n1 2\n")
    assert g.edges == ((0, 1), (1, 2))


@pytest.mark.parametrize(
    "text, line, fragment",
    [
        ("3 2\n0 1\n1 1", 3, "self-loop"),
        ("3 2\n0 1\n1 0", 3, "duplicate"),
        ("3 2\n0 1\n1 5", 3, "range"),
        ("3 2\n0 1", 1, "2"),
        ("3 x\n0 1\n1 2", 1, ""),
        ("2 1\n0 1 2", 2, ""),
    ],
)
def test_parse_errors_carry_line_numbers(text, line, fragment):
    with pytest.raises(GraphParseError) as info:
        parse_edge_list(text)
    assert info.value.line == line
    assert fragment in str(info.value)


def test_graph_rejects_unnormalised_edges():
    with pytest.raises(GraphError):
        Graph(3, ((1, 0),))
    with pytest.raises(GraphError):
        Graph.from_edges(2, [(0, 1), (1, 0)])


def test_connectivity():
    assert is_connected(parse_edge_list("4 4\n0 1\n1 2\n2 3\n3 0"))
    assert not is_connected(Graph.from_edges(4, [(0, 1), (2, 3)]))
    assert is_connected(Graph.from_edges(1, []))
    with pytest.raises(DisconnectedGraphError):
        require_connected(Graph.from_edges(4, [(0, 1), (2, 3)]))


def test_bfs_rows(fx):
    assert bfs_distances(fx("C6"), 0) == [0, 1, 2, 3, 2, 1]
    p5 = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4)])
    assert bfs_distances(p5, 2) == [2, 1, 0, 1, 2]
    assert bfs_distances(Graph.from_edges(3, [(0, 1)]), 0)[2] == UNREACHABLE


def test_named_distances(fx):
    assert distance(fx("C4L"), 4, 6) == 4
    assert distance(fx("HEX"), 5, 6) == 3
    g = fx("TT4")
    assert all(distance(g, u, u) == 0 for u in range(g.n))


def test_distance_matrix_is_symmetric_and_read_only(fx):
    dm = distance_matrix(fx("HEX"))
    assert np.array_equal(dm, dm.T)
    with pytest.raises(ValueError):
        dm[0, 1] = 7


def test_distance_matrix_requires_connected():
    with pytest.raises(DisconnectedGraphError):
        distance_matrix(Graph.from_edges(4, [(0, 1), (2, 3)]))


def test_export_dot():
    assert "0 -- 1;" in export_dot(Graph.from_edges(2, [(0, 1)]))
    dot = export_dot(parse_edge_list("4 4\n0 1\n1 2\n2 3\n3 0"))
    body = [line.strip() for line in dot.splitlines() if "--" in line]
    assert body == ["0 -- 1;", "0 -- 3;", "1 -- 2;", "2 -- 3;"]


def test_edge_list_round_trip(fx):
    for name in ("K1", "C4L", "HEX", "PYR2"):
        g = fx(name)
        assert parse_edge_list(dump_edge_list(g)) == g


def test_subgraph_reindexes(fx):
    g = fx("HEX")
    sub, vmap = g.subgraph_from_edges([(5, 8), (8, 9)])
    assert list(vmap) == [5, 8, 9]
    assert sub.edges == ((0, 1), (1, 2))
