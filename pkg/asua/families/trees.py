"""Unlabeled tree enumeration by canonical rooted strings."""

from itertools import product
from typing import Iterator

from loguru import logger

from asua.errors import OutOfRange
from asua.graph.core import build_graph
from asua.graph.types import Graph, VertexId

MAX_ORDER = 10


def tree_centers(g: Graph) -> list[VertexId]:
    """The one or two centers of a tree, found by peeling leaves."""
    n = g.vertex_count
    if n <= 2:
        return list(range(n))
    deg = {v: len(g.neighbors(v)) for v in range(n)}
    layer = [v for v in range(n) if deg[v] <= 1]
    remaining = n
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for v in layer:
            for u, _ in g.neighbors(v):
                deg[u] -= 1
                if deg[u] == 1:
                    nxt.append(u)
            deg[v] = 0
        layer = nxt
    return sorted(layer)


def _rooted_code(g: Graph, root: VertexId, parent: VertexId | None) -> str:
    children = sorted(_rooted_code(g, u, root) for u, _ in g.neighbors(root) if u != parent)
    return "(" + "".join(children) + ")"


def tree_canonical_form(g: Graph) -> str:
    """
    Isomorphism-invariant string of a tree.

    Rooted at the center; bicentral trees are rooted at the central edge,
    with the two half-codes sorted.
    """
    centers = tree_centers(g)
    if len(centers) == 1:
        return "c" + _rooted_code(g, centers[0], None)
    a, b = centers
    halves = sorted([_rooted_code(g, a, b), _rooted_code(g, b, a)])
    return "e" + "".join(halves)


def _relabel(g: Graph) -> Graph:
    """Number vertices breadth-first from the center, children in code order."""
    centers = tree_centers(g)
    order: list[VertexId] = []
    frontier: list[tuple[VertexId, VertexId | None]] = []
    if len(centers) == 1:
        frontier = [(centers[0], None)]
    else:
        a, b = sorted(centers, key=lambda c: _rooted_code(g, c, [x for x in centers if x != c][0]))
        frontier = [(a, b), (b, a)]
    while frontier:
        nxt = []
        for v, parent in frontier:
            order.append(v)
            kids = [u for u, _ in g.neighbors(v) if u != parent and u not in centers]
            kids.sort(key=lambda u: _rooted_code(g, u, v))
            nxt.extend((u, v) for u in kids)
        frontier = nxt
    new_id = {old: new for new, old in enumerate(order)}
    edges = [(new_id[u], new_id[v]) for u, v, _ in g.edges()]
    return build_graph(g.vertex_count, edges)


def enumerate_trees(n: int) -> Iterator[Graph]:
    """
    Yield one tree per isomorphism class on ``n`` vertices (2 <= n <= 10).

    Trees on n vertices come from adding a leaf to every vertex of every tree
    on n - 1 vertices, deduplicated by canonical form. Output is sorted by
    canonical form and relabeled from the center, so it is deterministic.
    Absorbing sets are left empty.
    """
    if not 2 <= n <= MAX_ORDER:
        raise OutOfRange(f"tree enumeration supports 2 <= n <= {MAX_ORDER}, got {n}")
    level: dict[str, Graph] = {}
    seed = build_graph(2, [(0, 1)])
    level[tree_canonical_form(seed)] = seed
    for order in range(3, n + 1):
        grown: dict[str, Graph] = {}
        for tree in level.values():
            edges = [(u, v) for u, v, _ in tree.edges()]
            for v in range(tree.vertex_count):
                candidate = build_graph(order, [*edges, (v, order - 1)])
                grown.setdefault(tree_canonical_form(candidate), candidate)
        level = grown
        logger.debug(f"{len(level)} unlabeled tree(s) on {order} vertices")
    for form in sorted(level):
        yield _relabel(level[form])


def labeled_trees(n: int) -> Iterator[Graph]:
    """Every labeled tree on ``n`` vertices, decoded from Prüfer sequences."""
    if n < 2:
        raise OutOfRange(f"need n >= 2, got {n}")
    if n == 2:
        yield build_graph(2, [(0, 1)])
        return
    for seq in product(range(n), repeat=n - 2):
        degree = [1] * n
        for x in seq:
            degree[x] += 1
        edges = []
        for x in seq:
            leaf = min(v for v in range(n) if degree[v] == 1)
            edges.append((leaf, x))
            degree[leaf] -= 1
            degree[x] -= 1
        u, v = (w for w in range(n) if degree[w] == 1)
        edges.append((u, v))
        yield build_graph(n, edges)


def is_star(g: Graph) -> bool:
    """S_n for n >= 3: one vertex adjacent to all others (P_2 counts as both)."""
    n = g.vertex_count
    return g.edge_total == n - 1 and any(len(g.neighbors(v)) == n - 1 for v in range(n))


def is_path(g: Graph) -> bool:
    n = g.vertex_count
    return g.edge_total == n - 1 and all(len(g.neighbors(v)) <= 2 for v in range(n))
