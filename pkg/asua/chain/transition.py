"""Transition matrices of absorbing random walks."""

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Mapping, Sequence

from loguru import logger

from asua.errors import EmptyAbsorbingSet, GraphError, IdOutOfRange, UnreachableAbsorber
from asua.graph.core import validate_reachability
from asua.graph.types import Graph, VertexId

ZERO = Fraction(0)
ONE = Fraction(1)


@dataclass(frozen=True)
class TransitionMatrix:
    """
    Row-stochastic matrix over states ``0..order-1``.

    Rows are stored sparsely (missing entries are zero); ``dense()`` gives the
    full matrix. Absorbing rows are identity rows.
    """

    order: int
    rows: tuple[Mapping[VertexId, Fraction], ...]
    absorbing: frozenset[VertexId]

    @cached_property
    def transient(self) -> tuple[VertexId, ...]:
        return tuple(s for s in range(self.order) if s not in self.absorbing)

    @cached_property
    def transient_index(self) -> dict[VertexId, int]:
        """State id to its row in the canonical Q block."""
        return {s: i for i, s in enumerate(self.transient)}

    def entry(self, i: VertexId, j: VertexId) -> Fraction:
        return self.rows[i].get(j, ZERO)

    def dense(self) -> list[list[Fraction]]:
        return [[row.get(j, ZERO) for j in range(self.order)] for row in self.rows]


@dataclass(frozen=True)
class CanonicalForm:
    """T permuted to [[Q, R], [0, I]]: transient states first, then absorbing."""

    transient: tuple[VertexId, ...]
    absorbing: tuple[VertexId, ...]
    q: list[list[Fraction]]
    r: list[list[Fraction]]


def build_transition(g: Graph) -> TransitionMatrix:
    """
    Random-walk matrix T = D·A of ``g`` with absorbing rows made identity.

    A transient vertex steps to neighbor ``u`` with probability
    ``multiplicity(v, u) / degree(v)``.

    Raises:
        EmptyAbsorbingSet, UnreachableAbsorber.
    """
    if not g.absorbing:
        raise EmptyAbsorbingSet()
    validate_reachability(g)
    rows: list[Mapping[VertexId, Fraction]] = []
    for v in range(g.vertex_count):
        if g.is_absorbing(v):
            rows.append({v: ONE})
            continue
        degree = g.degree(v)
        rows.append({u: Fraction(m, degree) for u, m in g.neighbors(v)})
    return TransitionMatrix(order=g.vertex_count, rows=tuple(rows), absorbing=g.absorbing)


def _chain_stranded(order: int, rows: Sequence[Mapping[VertexId, Fraction]],
                    absorbing: frozenset[VertexId]) -> list[VertexId]:
    """States from which no absorbing state is reachable along positive entries."""
    predecessors: list[list[VertexId]] = [[] for _ in range(order)]
    for i, row in enumerate(rows):
        for j, p in row.items():
            if p and i != j:
                predecessors[j].append(i)
    seen = set(absorbing)
    queue = deque(absorbing)
    while queue:
        j = queue.popleft()
        for i in predecessors[j]:
            if i not in seen:
                seen.add(i)
                queue.append(i)
    return [s for s in range(order) if s not in seen]


def transition_from_rows(
    rows: Sequence[Sequence[Fraction] | Mapping[VertexId, Fraction]],
    absorbing: Iterable[VertexId],
) -> TransitionMatrix:
    """
    Accept a raw row-stochastic matrix, taken verbatim.

    Rows may be dense sequences or sparse ``{column: probability}`` maps.

    Raises:
        GraphError: negative entry, row not summing to exactly 1, or an
            absorbing row that is not an identity row.
        EmptyAbsorbingSet, UnreachableAbsorber.
    """
    order = len(rows)
    absorbers = frozenset(absorbing)
    if not absorbers:
        raise EmptyAbsorbingSet()
    for a in absorbers:
        if not 0 <= a < order:
            raise IdOutOfRange(a, order)

    sparse: list[dict[VertexId, Fraction]] = []
    for i, row in enumerate(rows):
        if isinstance(row, Mapping):
            items = [(int(j), Fraction(p)) for j, p in row.items()]
        else:
            if len(row) != order:
                raise GraphError(f"row {i + 1} has {len(row)} entries, expected {order}")
            items = [(j, Fraction(p)) for j, p in enumerate(row)]
        entries = {}
        for j, p in items:
            if not 0 <= j < order:
                raise IdOutOfRange(j, order)
            if p < 0:
                raise GraphError(f"row {i + 1} has negative entry {p} in column {j + 1}")
            if p:
                entries[j] = p
        total = sum(entries.values(), ZERO)
        if total != 1:
            raise GraphError(f"row {i + 1} sums to {total}, not 1")
        if i in absorbers and entries != {i: ONE}:
            raise GraphError(f"absorbing state {i + 1} must have an identity row")
        sparse.append(entries)

    stranded = _chain_stranded(order, sparse, absorbers)
    if stranded:
        raise UnreachableAbsorber(stranded)
    logger.debug(f"Accepted raw {order}x{order} chain with {len(absorbers)} absorbing state(s)")
    return TransitionMatrix(order=order, rows=tuple(sparse), absorbing=absorbers)


def as_chain(instance: Graph | TransitionMatrix) -> TransitionMatrix:
    """Pass chains through; turn graphs into their random-walk chain."""
    if isinstance(instance, TransitionMatrix):
        return instance
    return build_transition(instance)


def canonical_blocks(tm: TransitionMatrix) -> CanonicalForm:
    """Split T into the Q (transient→transient) and R (transient→absorbing) blocks."""
    transient = tm.transient
    absorbing = tuple(sorted(tm.absorbing))
    q = [[tm.entry(s, j) for j in transient] for s in transient]
    r = [[tm.entry(s, a) for a in absorbing] for s in transient]
    return CanonicalForm(transient=transient, absorbing=absorbing, q=q, r=r)


def step_distribution(tm: TransitionMatrix, start: VertexId, steps: int) -> list[Fraction]:
    """Exact state distribution after ``steps`` transitions from ``start`` (row of T^k)."""
    if not 0 <= start < tm.order:
        raise IdOutOfRange(start, tm.order)
    if steps < 0:
        raise ValueError("steps must be non-negative")
    dist: dict[VertexId, Fraction] = {start: ONE}
    for _ in range(steps):
        nxt: dict[VertexId, Fraction] = {}
        for s, p in dist.items():
            for j, q in tm.rows[s].items():
                nxt[j] = nxt.get(j, ZERO) + p * q
        dist = nxt
    return [dist.get(s, ZERO) for s in range(tm.order)]
