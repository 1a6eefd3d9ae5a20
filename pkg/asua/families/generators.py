"""Graph families: paths, cycles, stars, sea dragons, and seeded random instances."""

import random

from asua.errors import OutOfRange
from asua.formulas.spec import SeaDragonSpec
from asua.graph.core import build_graph, check_vertex
from asua.graph.types import Graph, VertexId


def gen_path(n: int, absorber: VertexId | None = None) -> Graph:
    """P_n on v_1..v_n; absorbs at v_n unless told otherwise."""
    if n < 2:
        raise OutOfRange(f"path needs n >= 2, got {n}")
    edges = [(i, i + 1) for i in range(n - 1)]
    return build_graph(n, edges, {n - 1 if absorber is None else absorber})


def gen_cycle(n: int, absorber: VertexId | None = None) -> Graph:
    """C_n on v_1..v_n; absorbs at v_n unless told otherwise."""
    if n < 3:
        raise OutOfRange(f"cycle needs n >= 3, got {n}")
    edges = [(i, (i + 1) % n) for i in range(n)]
    return build_graph(n, edges, {n - 1 if absorber is None else absorber})


def gen_star(n: int, absorber: VertexId | None = None) -> Graph:
    """S_n with center v_1 and leaves v_2..v_n; absorbs at the center by default."""
    if n < 2:
        raise OutOfRange(f"star needs n >= 2, got {n}")
    edges = [(0, leaf) for leaf in range(1, n)]
    return build_graph(n, edges, {0 if absorber is None else absorber})


def gen_sea_dragon(spec: SeaDragonSpec) -> Graph:
    """
    Build the tree a spec names.

    Spine v_1..v_n first, then attached vertices ordered by (position, stem,
    distance from the spine); v_n absorbs.
    """
    n = spec.n
    edges = [(i, i + 1) for i in range(n - 1)]
    previous: dict[int, VertexId] = {}
    for node in spec.layout():
        anchor = previous.get(node.stem, node.position - 1)
        edges.append((anchor, node.vertex))
        previous[node.stem] = node.vertex
    return build_graph(spec.vertex_count, edges, {n - 1})


def attach_stem(g: Graph, v: VertexId, length: int) -> tuple[Graph, tuple[VertexId, ...]]:
    """
    Hang a new stem of ``length`` vertices on ``v``.

    Returns:
        The new graph and the stem ids ordered u_1 (leaf) .. u_length (next to v).
    """
    check_vertex(v, g.vertex_count)
    if length < 1:
        raise OutOfRange(f"stem length must be at least 1, got {length}")
    first = g.vertex_count
    new_ids = list(range(first, first + length))  # by distance from v
    edges = [(u, w, m) for u, w, m in g.edges()]
    edges.append((v, new_ids[0], 1))
    edges.extend((a, b, 1) for a, b in zip(new_ids, new_ids[1:]))
    grown = build_graph(first + length, edges, g.absorbing)
    return grown, tuple(reversed(new_ids))


def random_tree(n: int, rng: random.Random, absorber: VertexId | None = None) -> Graph:
    """Random recursive tree: vertex i joins a uniformly chosen earlier vertex."""
    if n < 1:
        raise OutOfRange(f"tree needs n >= 1, got {n}")
    edges = [(rng.randrange(i), i) for i in range(1, n)]
    return build_graph(n, edges, {n - 1 if absorber is None else absorber})


def random_connected_graph(
    n: int,
    rng: random.Random,
    extra_edges: int | None = None,
    max_multiplicity: int = 1,
    absorbing: set[VertexId] | None = None,
) -> Graph:
    """
    Random connected multigraph: a random spanning tree plus extra edges.

    Args:
        n: Vertex count (at least 2).
        rng: Seeded generator; same seed, same graph.
        extra_edges: Edges beyond the spanning tree; random in 0..n when None.
        max_multiplicity: Each edge gets a multiplicity in 1..max_multiplicity.
        absorbing: Absorbing set, default {v_n}.
    """
    if n < 2:
        raise OutOfRange(f"need n >= 2, got {n}")
    edges = [(rng.randrange(i), i, rng.randint(1, max_multiplicity)) for i in range(1, n)]
    extra = rng.randint(0, n) if extra_edges is None else extra_edges
    for _ in range(extra):
        u, v = rng.sample(range(n), 2)
        edges.append((u, v, rng.randint(1, max_multiplicity)))
    return build_graph(n, edges, {n - 1} if absorbing is None else absorbing)
