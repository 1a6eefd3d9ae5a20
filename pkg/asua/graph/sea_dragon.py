"""Sea-dragon classification.

A sea dragon is a tree whose vertices of degree at least 3 all lie on one
path, the spine.
"""

from dataclasses import dataclass
from typing import Literal

from asua.graph.core import is_connected
from asua.graph.types import Graph, VertexId

Kind = Literal["not-a-tree", "sea-dragon", "no-spine"]


@dataclass(frozen=True)
class SeaDragonClass:
    """Classification result; ``spine`` is empty unless ``kind == "sea-dragon"``."""

    kind: Kind
    spine: tuple[VertexId, ...] = ()

    @property
    def is_sea_dragon(self) -> bool:
        return self.kind == "sea-dragon"


def is_tree(g: Graph) -> bool:
    """Connected, simple, and exactly ``n - 1`` edges."""
    if any(m != 1 for m in g.multiplicity.values()):
        return False
    return g.edge_total == g.vertex_count - 1 and is_connected(g)


def _leg(g: Graph, start: VertexId, came_from: VertexId) -> list[VertexId]:
    """Follow a branch-free leg from ``start`` away from ``came_from`` to its leaf."""
    leg = [start]
    prev, cur = came_from, start
    while True:
        ahead = [u for u, _ in g.neighbors(cur) if u != prev]
        if len(ahead) != 1:
            return leg
        prev, cur = cur, ahead[0]
        leg.append(cur)


def _best_leg(g: Graph, end: VertexId, used: set[VertexId]) -> list[VertexId]:
    # longest first, then smallest first vertex
    legs = [_leg(g, u, end) for u, _ in g.neighbors(end) if u not in used]
    if not legs:
        return []
    return min(legs, key=lambda leg: (-len(leg), leg[0]))


def _steiner_core(g: Graph, branch: set[VertexId]) -> set[VertexId]:
    """Minimal subtree spanning ``branch``: strip non-branch leaves until none remain."""
    alive = set(range(g.vertex_count))
    deg = {v: len(g.neighbors(v)) for v in alive}
    leaves = [v for v in alive if deg[v] <= 1 and v not in branch]
    while leaves:
        v = leaves.pop()
        if v not in alive:
            continue
        alive.discard(v)
        for u, _ in g.neighbors(v):
            if u in alive:
                deg[u] -= 1
                if deg[u] <= 1 and u not in branch:
                    leaves.append(u)
    return alive


def is_sea_dragon(g: Graph) -> SeaDragonClass:
    """
    Classify ``g`` and, for sea dragons, return a canonical spine.

    The spine is the path between the two branch vertices farthest apart,
    extended at both ends along the longest branch-free leg (smallest
    vertex id breaks ties), oriented so that its first id is the smaller end.
    A path is its own spine.
    """
    if not is_tree(g):
        return SeaDragonClass("not-a-tree")
    n = g.vertex_count
    if n == 1:
        return SeaDragonClass("sea-dragon", (0,))

    branch = {v for v in range(n) if g.degree(v) >= 3}
    if not branch:
        ends = sorted(v for v in range(n) if g.degree(v) == 1)
        spine = [ends[0], *_leg(g, g.neighbors(ends[0])[0][0], ends[0])]
        return SeaDragonClass("sea-dragon", tuple(spine))

    core = _steiner_core(g, branch)
    core_deg = {v: sum(1 for u, _ in g.neighbors(v) if u in core) for v in core}
    if any(d > 2 for d in core_deg.values()):
        return SeaDragonClass("no-spine")

    if len(core) == 1:
        path = [next(iter(core))]
    else:
        start = min(v for v, d in core_deg.items() if d == 1)
        path = [start]
        prev = None
        while True:
            ahead = [u for u, _ in g.neighbors(path[-1]) if u in core and u != prev]
            if not ahead:
                break
            prev = path[-1]
            path.append(ahead[0])

    used = set(path)
    head = _best_leg(g, path[0], used)
    used.update(head)
    tail = _best_leg(g, path[-1], used)
    spine = [*reversed(head), *path, *tail]
    if spine[0] > spine[-1]:
        spine.reverse()
    return SeaDragonClass("sea-dragon", tuple(spine))
