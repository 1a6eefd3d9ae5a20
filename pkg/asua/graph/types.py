"""Graph types."""

from dataclasses import dataclass, field
from functools import cached_property
from typing import Mapping

# 0-based internally, printed as v<id + 1>
VertexId = int


@dataclass(frozen=True)
class Graph:
    """
    Undirected multigraph with a designated absorbing vertex set.

    Edges are stored once, keyed by ``(min id, max id)``, so symmetry holds by
    construction. Instances are immutable; build them with ``build_graph``.
    """

    vertex_count: int
    multiplicity: Mapping[tuple[VertexId, VertexId], int] = field(default_factory=dict)
    absorbing: frozenset[VertexId] = frozenset()

    @cached_property
    def _adjacency(self) -> tuple[tuple[tuple[VertexId, int], ...], ...]:
        adj: list[list[tuple[VertexId, int]]] = [[] for _ in range(self.vertex_count)]
        for (u, v), m in self.multiplicity.items():
            adj[u].append((v, m))
            adj[v].append((u, m))
        return tuple(tuple(sorted(row)) for row in adj)

    def neighbors(self, v: VertexId) -> tuple[tuple[VertexId, int], ...]:
        """Distinct neighbors of ``v`` with edge multiplicities, ascending by id."""
        return self._adjacency[v]

    def degree(self, v: VertexId) -> int:
        """Degree counting multiplicity."""
        return sum(m for _, m in self._adjacency[v])

    def edge_multiplicity(self, u: VertexId, v: VertexId) -> int:
        return self.multiplicity.get((min(u, v), max(u, v)), 0)

    def edges(self) -> list[tuple[VertexId, VertexId, int]]:
        """Edges as ``(u, v, m)`` with ``u < v``, sorted."""
        return sorted((u, v, m) for (u, v), m in self.multiplicity.items())

    @property
    def edge_total(self) -> int:
        """Number of edges counting multiplicity."""
        return sum(self.multiplicity.values())

    @property
    def transient(self) -> tuple[VertexId, ...]:
        return tuple(v for v in range(self.vertex_count) if v not in self.absorbing)

    def is_absorbing(self, v: VertexId) -> bool:
        return v in self.absorbing


@dataclass(frozen=True)
class DegreeProfile:
    """Degrees and neighbor multisets; parallel edges repeat the neighbor."""

    degrees: tuple[int, ...]
    neighbors: tuple[tuple[VertexId, ...], ...]


@dataclass(frozen=True)
class Stem:
    """
    Pendant path u_1..u_l hanging off ``attachment``.

    ``vertices[0]`` is the leaf u_1; ``vertices[-1]`` is u_l, adjacent to the
    attachment vertex.
    """

    attachment: VertexId
    vertices: tuple[VertexId, ...]

    @property
    def length(self) -> int:
        return len(self.vertices)
