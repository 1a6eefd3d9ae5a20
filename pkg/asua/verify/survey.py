"""
Extremal survey over all trees of small order.

Reports where stars and paths fall among every tree's t_sigma and round-trip
values. The absorber choice behind t_sigma(T) is a convention:

    max   the absorber maximizing t_sigma(T, u)
    min   the absorber minimizing it
    each  every (tree, absorber) pair counts separately

Round trips use ``max`` (largest t' over all pairs) or ``diameter`` (the
first diametral pair in vertex order).
"""

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Literal, Sequence

from loguru import logger

from asua.chain.aggregates import hitting_matrix
from asua.errors import OutOfRange
from asua.families.trees import MAX_ORDER, enumerate_trees, is_path, is_star, tree_canonical_form
from asua.graph.types import Graph, VertexId

AbsorberConvention = Literal["max", "min", "each"]
PairConvention = Literal["max", "diameter"]
ABSORBER_CONVENTIONS: tuple[AbsorberConvention, ...] = ("max", "min", "each")
PAIR_CONVENTIONS: tuple[PairConvention, ...] = ("max", "diameter")


@dataclass
class TreeRow:
    """Survey numbers for one tree; ``index`` is its position in enumeration order."""

    index: int
    canonical: str
    degrees: tuple[int, ...]
    is_star: bool
    is_path: bool
    t_sigma: tuple[Fraction, ...]  # per absorber vertex
    round_trip: dict[str, Fraction] = field(default_factory=dict)

    @property
    def t_sigma_min(self) -> Fraction:
        return min(self.t_sigma)

    @property
    def t_sigma_max(self) -> Fraction:
        return max(self.t_sigma)


@dataclass
class Extremes:
    """Lowest and highest value under one convention, with the trees attaining them."""

    convention: str
    low: Fraction
    high: Fraction
    low_trees: list[int]
    high_trees: list[int]
    star_attains_low: bool
    path_attains_high: bool


@dataclass
class SurveyReport:
    order: int
    tree_count: int
    trees: list[TreeRow]
    t_sigma: dict[str, Extremes]
    round_trip: dict[str, Extremes]


def _distances(g: Graph, source: VertexId) -> list[int]:
    dist = [-1] * g.vertex_count
    dist[source] = 0
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for u, _ in g.neighbors(v):
            if dist[u] < 0:
                dist[u] = dist[v] + 1
                queue.append(u)
    return dist


def diametral_pair(g: Graph) -> tuple[VertexId, VertexId]:
    """First pair (v, u), v < u, at maximum distance, in lexicographic order."""
    best, pair = -1, (0, 0)
    for v in range(g.vertex_count):
        dist = _distances(g, v)
        for u in range(v + 1, g.vertex_count):
            if dist[u] > best:
                best, pair = dist[u], (v, u)
    return pair


def _tree_row(index: int, g: Graph) -> TreeRow:
    h = hitting_matrix(g)
    n = g.vertex_count
    t_sigma = tuple(sum((h[v][u] for v in range(n)), Fraction(0)) for u in range(n))
    pairs = [h[v][u] + h[u][v] for v in range(n) for u in range(v + 1, n)]
    v, u = diametral_pair(g)
    return TreeRow(
        index=index,
        canonical=tree_canonical_form(g),
        degrees=tuple(sorted((g.degree(x) for x in range(n)), reverse=True)),
        is_star=is_star(g),
        is_path=is_path(g),
        t_sigma=t_sigma,
        round_trip={"max": max(pairs), "diameter": h[v][u] + h[u][v]},
    )


def _extremes(convention: str, rows: list[TreeRow], values: list[Sequence[Fraction]]) -> Extremes:
    """``values[i]`` holds every value tree ``i`` takes under the convention."""
    low = min(min(vs) for vs in values)
    high = max(max(vs) for vs in values)
    low_trees = [row.index for row, vs in zip(rows, values) if low in vs]
    high_trees = [row.index for row, vs in zip(rows, values) if high in vs]
    return Extremes(
        convention=convention,
        low=low,
        high=high,
        low_trees=low_trees,
        high_trees=high_trees,
        star_attains_low=any(rows[i].is_star for i in low_trees),
        path_attains_high=any(rows[i].is_path for i in high_trees),
    )


def survey_order(n: int, conventions: Iterable[AbsorberConvention] = ABSORBER_CONVENTIONS
                 ) -> SurveyReport:
    """Survey every tree on ``n`` vertices (2 <= n <= 10)."""
    if not 2 <= n <= MAX_ORDER:
        raise OutOfRange(f"survey supports 2 <= n <= {MAX_ORDER}, got {n}")
    rows = [_tree_row(i, g) for i, g in enumerate(enumerate_trees(n))]
    t_sigma = {}
    for convention in conventions:
        if convention == "max":
            values = [[row.t_sigma_max] for row in rows]
        elif convention == "min":
            values = [[row.t_sigma_min] for row in rows]
        else:
            values = [row.t_sigma for row in rows]
        t_sigma[convention] = _extremes(convention, rows, values)
    round_trip = {
        pc: _extremes(pc, rows, [[row.round_trip[pc]] for row in rows]) for pc in PAIR_CONVENTIONS
    }
    logger.info(f"Surveyed {len(rows)} tree(s) of order {n}")
    return SurveyReport(
        order=n, tree_count=len(rows), trees=rows, t_sigma=t_sigma, round_trip=round_trip
    )


def survey(orders: Iterable[int], conventions: Iterable[AbsorberConvention] = ABSORBER_CONVENTIONS
           ) -> list[SurveyReport]:
    """One report per order, in the order given."""
    chosen = tuple(conventions)
    return [survey_order(n, chosen) for n in orders]
