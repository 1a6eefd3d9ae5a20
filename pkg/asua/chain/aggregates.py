"""Derived quantities: t_sigma, round trips, hitting matrices and ASUA-equation residuals."""

from fractions import Fraction
from typing import Mapping, Sequence

from asua.chain.solver import AsuaVector, solve_asua
from asua.chain.transition import ZERO, TransitionMatrix, as_chain, build_transition
from asua.errors import EmptyAbsorbingSet, IndexMismatch, MultipleAbsorbers, SameVertex
from asua.graph.core import check_vertex, with_absorbing
from asua.graph.types import Graph, VertexId


def solve(instance: Graph | TransitionMatrix) -> AsuaVector:
    """Exact ASUA vector of a graph's walk or of a raw chain."""
    return solve_asua(as_chain(instance))


def asua_sum(instance: Graph | TransitionMatrix) -> Fraction:
    """
    t_sigma: total ASUA over all vertices for a single absorber.

    Raises:
        EmptyAbsorbingSet, MultipleAbsorbers, plus anything ``solve_asua`` raises.
    """
    count = len(instance.absorbing)
    if count == 0:
        raise EmptyAbsorbingSet()
    if count > 1:
        raise MultipleAbsorbers(count)
    return solve(instance).total()


def round_trip(g: Graph, v: VertexId, u: VertexId) -> Fraction:
    """
    t': expected steps from ``v`` to ``u`` and back to ``v``.

    Computed as two independent one-way walks: t(G, v, u) + t(G, u, v).

    Raises:
        SameVertex, UnreachableAbsorber.
    """
    check_vertex(v, g.vertex_count)
    check_vertex(u, g.vertex_count)
    if v == u:
        raise SameVertex(v)
    there = solve_asua(build_transition(with_absorbing(g, {u})))[v]
    back = solve_asua(build_transition(with_absorbing(g, {v})))[u]
    return there + back


def hitting_matrix(g: Graph) -> list[list[Fraction]]:
    """``H[v][u] = t(G, v, u)`` for every ordered pair; one solve per target."""
    n = g.vertex_count
    h = [[ZERO] * n for _ in range(n)]
    for u in range(n):
        t = solve_asua(build_transition(with_absorbing(g, {u})))
        for v in range(n):
            h[v][u] = t[v]
    return h


def _as_mapping(
    transient: Sequence[VertexId],
    t: AsuaVector | Mapping[VertexId, Fraction] | Sequence[Fraction],
) -> dict[VertexId, Fraction]:
    if isinstance(t, AsuaVector):
        t = t.values
    if isinstance(t, Mapping):
        if set(t) != set(transient):
            missing = sorted(set(transient) - set(t))
            extra = sorted(set(t) - set(transient))
            raise IndexMismatch(
                f"missing {[v + 1 for v in missing]}, unexpected {[v + 1 for v in extra]}"
            )
        return {v: Fraction(t[v]) for v in transient}
    if len(t) != len(transient):
        raise IndexMismatch(f"{len(t)} values for {len(transient)} transient vertices")
    return {v: Fraction(x) for v, x in zip(transient, t)}


def asua_equation_residuals(
    instance: Graph | TransitionMatrix,
    t: AsuaVector | Mapping[VertexId, Fraction] | Sequence[Fraction],
) -> dict[VertexId, Fraction]:
    """
    Residual of the ASUA equation t(v) = mean of neighbor ASUAs + 1 at every
    transient vertex.

    The mean counts parallel edges by multiplicity; absorbing neighbors
    contribute 0. A plain sequence ``t`` is read in ascending transient order.
    All residuals vanish exactly iff ``t`` is the true ASUA vector.

    Raises:
        IndexMismatch: when ``t`` does not cover exactly the transient vertices.
    """
    if isinstance(instance, TransitionMatrix):
        transient = instance.transient
        values = _as_mapping(transient, t)
        return {
            v: values[v]
            - sum((p * values.get(j, ZERO) for j, p in instance.rows[v].items()), ZERO)
            - 1
            for v in transient
        }

    transient = instance.transient
    values = _as_mapping(transient, t)
    residuals = {}
    for v in transient:
        degree = instance.degree(v)
        if degree == 0:
            raise IndexMismatch(f"v{v + 1} has no neighbors")
        total = sum((m * values.get(u, ZERO) for u, m in instance.neighbors(v)), ZERO)
        residuals[v] = values[v] - total / degree - 1
    return residuals
