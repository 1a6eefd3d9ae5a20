"""Graph construction, validation and absorber contraction."""

from collections import deque
from dataclasses import replace
from typing import Iterable

from loguru import logger

from asua.errors import GraphError, IdOutOfRange, SameVertex, SelfLoop, UnreachableAbsorber
from asua.graph.types import DegreeProfile, Graph, Stem, VertexId

EdgeSpec = tuple[VertexId, VertexId] | tuple[VertexId, VertexId, int]


def check_vertex(v: VertexId, vertex_count: int) -> None:
    if not 0 <= v < vertex_count:
        raise IdOutOfRange(v, vertex_count)


def build_graph(
    vertex_count: int,
    edges: Iterable[EdgeSpec],
    absorbing: Iterable[VertexId] = (),
) -> Graph:
    """
    Build a validated multigraph.

    Args:
        vertex_count: Number of vertices, ids ``0..vertex_count-1``.
        edges: ``(u, v)`` or ``(u, v, multiplicity)``; repeated pairs add up.
        absorbing: Absorbing vertex ids. May be empty while a graph is being
            assembled; solving an empty set fails later.

    Raises:
        SelfLoop, IdOutOfRange, GraphError (non-positive multiplicity).
    """
    if vertex_count < 1:
        raise GraphError(f"vertex count must be positive, got {vertex_count}")
    multiplicity: dict[tuple[VertexId, VertexId], int] = {}
    for edge in edges:
        u, v = edge[0], edge[1]
        m = edge[2] if len(edge) > 2 else 1
        check_vertex(u, vertex_count)
        check_vertex(v, vertex_count)
        if u == v:
            raise SelfLoop(u)
        if m < 1:
            raise GraphError(f"edge v{u + 1}-v{v + 1} has multiplicity {m}; must be >= 1")
        key = (min(u, v), max(u, v))
        multiplicity[key] = multiplicity.get(key, 0) + m
    absorbers = frozenset(absorbing)
    for a in absorbers:
        check_vertex(a, vertex_count)
    return Graph(vertex_count=vertex_count, multiplicity=multiplicity, absorbing=absorbers)


def with_absorbing(g: Graph, absorbing: Iterable[VertexId]) -> Graph:
    """Same edges, new absorbing set."""
    absorbers = frozenset(absorbing)
    for a in absorbers:
        check_vertex(a, g.vertex_count)
    return replace(g, absorbing=absorbers)


def check_invariants(g: Graph) -> list[str]:
    """Return every violated structural invariant (empty when the graph is sound)."""
    problems = []
    for (u, v), m in g.multiplicity.items():
        if u == v:
            problems.append(f"self-loop at v{u + 1}")
        if u > v:
            problems.append(f"edge key (v{u + 1}, v{v + 1}) not ordered")
        if m < 1:
            problems.append(f"edge v{u + 1}-v{v + 1} has multiplicity {m}")
    for u in range(g.vertex_count):
        for v, m in g.neighbors(u):
            if g.edge_multiplicity(v, u) != m:
                problems.append(f"asymmetric multiplicity between v{u + 1} and v{v + 1}")
    profile = degree_profile(g)
    if sum(profile.degrees) != 2 * g.edge_total:
        problems.append("degree sum is not twice the edge total")
    for v in g.transient:
        if profile.degrees[v] < 1:
            problems.append(f"transient vertex v{v + 1} is isolated")
    return problems


def stranded_vertices(g: Graph) -> list[VertexId]:
    """Transient vertices with no path to any absorbing vertex."""
    seen = set(g.absorbing)
    queue = deque(g.absorbing)
    while queue:
        v = queue.popleft()
        for u, _ in g.neighbors(v):
            if u not in seen:
                seen.add(u)
                queue.append(u)
    return [v for v in g.transient if v not in seen]


def validate_reachability(g: Graph) -> None:
    """
    Ensure every transient vertex can reach an absorbing vertex.

    Raises:
        UnreachableAbsorber: listing the stranded vertices.
    """
    stranded = stranded_vertices(g)
    if stranded:
        raise UnreachableAbsorber(stranded)


def contracted_id(v: VertexId, x: VertexId, y: VertexId) -> VertexId:
    """Where ``v`` lands after ``merge_absorbers(g, x, y)``."""
    keep, drop = min(x, y), max(x, y)
    if v == drop:
        return keep
    return v - 1 if v > drop else v


def merge_absorbers(g: Graph, x: VertexId, y: VertexId) -> Graph:
    """
    Identify ``x`` and ``y`` into one vertex (add the edge ``xy``, then contract it).

    The merged vertex takes the smaller id; ids above the larger one shift
    down by one. Parallel edges created by the identification add up and the
    ``xy`` edges themselves vanish.

    Raises:
        SameVertex: if ``x == y``.
    """
    check_vertex(x, g.vertex_count)
    check_vertex(y, g.vertex_count)
    if x == y:
        raise SameVertex(x)
    edges = []
    dropped = 0
    for (u, v), m in g.multiplicity.items():
        cu, cv = contracted_id(u, x, y), contracted_id(v, x, y)
        if cu == cv:
            dropped += m
            continue
        edges.append((cu, cv, m))
    absorbing = {contracted_id(a, x, y) for a in g.absorbing}
    logger.debug(f"Merged v{x + 1} and v{y + 1}; dropped {dropped} loop edge(s)")
    return build_graph(g.vertex_count - 1, edges, absorbing)


def degree_profile(g: Graph) -> DegreeProfile:
    """Degrees with multiplicity and per-vertex neighbor multisets."""
    neighbors = tuple(
        tuple(u for u, m in g.neighbors(v) for _ in range(m)) for v in range(g.vertex_count)
    )
    return DegreeProfile(degrees=tuple(len(ns) for ns in neighbors), neighbors=neighbors)


def is_connected(g: Graph) -> bool:
    seen = {0}
    queue = deque([0])
    while queue:
        v = queue.popleft()
        for u, _ in g.neighbors(v):
            if u not in seen:
                seen.add(u)
                queue.append(u)
    return len(seen) == g.vertex_count


def find_stems(g: Graph) -> list[Stem]:
    """
    Maximal stems: pendant paths of transient vertices on simple edges.

    Each stem starts at a transient leaf and follows transient vertices of
    degree 2 until it meets the attachment vertex, which may have any degree
    or be absorbing. A path whose far end is absorbing is itself a stem.
    """
    stems = []
    for leaf in g.transient:
        nbrs = g.neighbors(leaf)
        if len(nbrs) != 1 or nbrs[0][1] != 1:
            continue
        path = [leaf]
        prev, cur = leaf, nbrs[0][0]
        while True:
            cur_nbrs = g.neighbors(cur)
            simple_deg2 = len(cur_nbrs) == 2 and all(m == 1 for _, m in cur_nbrs)
            if g.is_absorbing(cur) or not simple_deg2:
                break
            path.append(cur)
            prev, cur = cur, next(u for u, _ in cur_nbrs if u != prev)
        if g.degree(cur) == 1 and not g.is_absorbing(cur):
            # isolated path with no absorber; each end would claim the other
            continue
        stems.append(Stem(attachment=cur, vertices=tuple(path)))
    return stems
