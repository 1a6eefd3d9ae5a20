"""
ASUA solvers.

The exact solver runs Gaussian elimination on (I - Q) t = 1 over Fractions
and never forms N = (I - Q)^-1. Rows are kept sparse, so paths, cycles and
trees stay cheap even at a few hundred states.
"""

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

import numpy as np
from loguru import logger
from scipy import linalg

from asua.chain.transition import ONE, ZERO, TransitionMatrix
from asua.errors import SingularSystem
from asua.graph.types import VertexId


@dataclass(frozen=True)
class AsuaVector:
    """Exact ASUA per transient state; absorbing states read as 0."""

    order: int
    values: Mapping[VertexId, Fraction]
    absorbing: frozenset[VertexId]

    def __getitem__(self, v: VertexId) -> Fraction:
        if v in self.absorbing:
            return ZERO
        return self.values[v]

    def as_list(self) -> list[Fraction]:
        """Values for every state, absorbing ones as 0."""
        return [self[v] for v in range(self.order)]

    def transient_values(self) -> list[Fraction]:
        return [self.values[v] for v in sorted(self.values)]

    def total(self) -> Fraction:
        return sum(self.values.values(), ZERO)


@dataclass(frozen=True)
class FloatSolution:
    """Double-precision ASUA estimate with its max-norm residual."""

    order: int
    values: Mapping[VertexId, float]
    absorbing: frozenset[VertexId]
    residual: float

    def __getitem__(self, v: VertexId) -> float:
        return 0.0 if v in self.absorbing else self.values[v]

    def as_list(self) -> list[float]:
        return [self[v] for v in range(self.order)]


def _system_rows(tm: TransitionMatrix) -> list[dict[int, Fraction]]:
    """Sparse rows of (I - Q) in canonical (transient) order."""
    index = tm.transient_index
    rows = []
    for s in tm.transient:
        row: dict[int, Fraction] = {index[s]: ONE}
        for j, p in tm.rows[s].items():
            if j in index:
                k = index[j]
                value = row.get(k, ZERO) - p
                if value:
                    row[k] = value
                else:
                    row.pop(k, None)
        rows.append(row)
    return rows


def gaussian_solve(rows: list[dict[int, Fraction]], rhs: list[Fraction]) -> list[Fraction]:
    """
    Solve a sparse square system exactly. ``rows`` and ``rhs`` are consumed.

    Partial pivoting picks the candidate with the largest absolute value,
    lowest row index on ties.

    Raises:
        SingularSystem: when a column has no remaining nonzero.
    """
    n = len(rows)
    col_rows: dict[int, set[int]] = defaultdict(set)
    for r, row in enumerate(rows):
        for c in row:
            col_rows[c].add(r)

    pivot_of = [0] * n
    done: set[int] = set()
    for c in range(n):
        candidates = [r for r in col_rows[c] if r not in done]
        if not candidates:
            raise SingularSystem(c)
        p = max(candidates, key=lambda r: (abs(rows[r][c]), -r))
        done.add(p)
        pivot_of[c] = p
        prow, pval = rows[p], rows[p][c]
        for r in candidates:
            if r == p:
                continue
            row = rows[r]
            factor = row[c] / pval
            for k, val in prow.items():
                new = row.get(k, ZERO) - factor * val
                if new:
                    if k not in row:
                        col_rows[k].add(r)
                    row[k] = new
                elif k in row:
                    del row[k]
                    col_rows[k].discard(r)
            rhs[r] -= factor * rhs[p]

    x = [ZERO] * n
    for c in reversed(range(n)):
        row = rows[pivot_of[c]]
        acc = rhs[pivot_of[c]]
        for k, val in row.items():
            if k != c:
                acc -= val * x[k]
        x[c] = acc / row[c]
    return x


def solve_asua(tm: TransitionMatrix) -> AsuaVector:
    """
    Exact ASUA vector: the unique t with (I - Q)·t = 1.

    Raises:
        SingularSystem: only if the chain skipped reachability validation.
    """
    rows = _system_rows(tm)
    solution = gaussian_solve(rows, [ONE] * len(rows))
    logger.debug(f"Exact solve over {len(rows)} transient state(s)")
    values = dict(zip(tm.transient, solution))
    return AsuaVector(order=tm.order, values=values, absorbing=tm.absorbing)


def solve_asua_float(tm: TransitionMatrix) -> FloatSolution:
    """
    Double-precision LU solve of (I - Q)·t = 1.

    The caller decides whether ``residual`` (max-norm of (I - Q)t - 1) is
    acceptable.

    Raises:
        SingularSystem: on a zero pivot.
    """
    index = tm.transient_index
    n = len(index)
    if n == 0:
        return FloatSolution(order=tm.order, values={}, absorbing=tm.absorbing, residual=0.0)
    a = np.eye(n)
    for s in tm.transient:
        for j, p in tm.rows[s].items():
            if j in index:
                a[index[s], index[j]] -= float(p)
    lu, piv = linalg.lu_factor(a, check_finite=False)
    zero_pivots = np.flatnonzero(np.diag(lu) == 0.0)
    if zero_pivots.size:
        raise SingularSystem(int(zero_pivots[0]))
    ones = np.ones(n)
    t = linalg.lu_solve((lu, piv), ones, check_finite=False)
    residual = float(np.max(np.abs(a @ t - ones)))
    logger.debug(f"Float solve over {n} transient state(s), residual {residual:.3e}")
    values = {s: float(t[i]) for s, i in index.items()}
    return FloatSolution(order=tm.order, values=values, absorbing=tm.absorbing, residual=residual)


def fundamental_matrix(tm: TransitionMatrix) -> list[list[Fraction]]:
    """
    N = (I - Q)^-1 in canonical transient order, exactly.

    Only for display; ``solve_asua`` never builds it. Row sums equal the ASUA
    vector.
    """
    n = len(tm.transient)
    columns = []
    for j in range(n):
        rhs = [ZERO] * n
        rhs[j] = ONE
        columns.append(gaussian_solve(_system_rows(tm), rhs))
    return [[columns[j][i] for j in range(n)] for i in range(n)]
