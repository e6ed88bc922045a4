"""Block-level eccentricity invariants, radius-preserving pruning and the Randić index."""

from .blocks import (
    BlockRef,
    articulation_components_at_block,
    articulation_components_at_vertex,
    block_separates,
    build_bc_tree,
    decompose,
    vertex_separates,
)
from .eccentricity import full_report
from .graph import Graph, bfs_distances, distance, is_connected, parse_edge_list
from .prune import prune, prune_with_choices, verify_replacement
from .randic import check_conjectures, randic_index, verify_cactus_theorem

__all__ = [
    "BlockRef",
    "Graph",
    "articulation_components_at_block",
    "articulation_components_at_vertex",
    "bfs_distances",
    "block_separates",
    "build_bc_tree",
    "check_conjectures",
    "decompose",
    "distance",
    "full_report",
    "is_connected",
    "parse_edge_list",
    "prune",
    "prune_with_choices",
    "randic_index",
    "vertex_separates",
    "verify_cactus_theorem",
    "verify_replacement",
]
