"""Generated graph families and tree enumeration."""

from asua.families.generators import (
    attach_stem,
    gen_cycle,
    gen_path,
    gen_sea_dragon,
    gen_star,
    random_connected_graph,
    random_tree,
)
from asua.families.trees import (
    enumerate_trees,
    is_path,
    is_star,
    labeled_trees,
    tree_canonical_form,
    tree_centers,
)

__all__ = [
    "attach_stem",
    "enumerate_trees",
    "gen_cycle",
    "gen_path",
    "gen_sea_dragon",
    "gen_star",
    "is_path",
    "is_star",
    "labeled_trees",
    "random_connected_graph",
    "random_tree",
    "tree_canonical_form",
    "tree_centers",
]
