"""Monte Carlo estimation of ASUA by simulating absorbing random walks."""

import math
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from multiprocessing import Pool

import numpy as np
from loguru import logger

from asua.chain.transition import TransitionMatrix, as_chain
from asua.errors import SimulationError, StartIsAbsorbing, WeightOverflow
from asua.graph.core import check_vertex
from asua.graph.types import Graph, VertexId
from asua.montecarlo.rng import WEIGHT_LIMIT, substream_states, uniform_below


@dataclass(frozen=True)
class WalkConfig:
    """One simulation request."""

    start: VertexId
    walk_count: int
    seed: int
    step_cap: int = 10**9

    def __post_init__(self):
        if self.walk_count < 1:
            raise SimulationError(f"walk_count must be at least 1, got {self.walk_count}")
        if self.step_cap < 1:
            raise SimulationError(f"step_cap must be at least 1, got {self.step_cap}")


@dataclass(frozen=True)
class SimEstimate:
    """Sample mean and standard error of absorption times over completed walks."""

    mean: float
    stderr: float
    walks_completed: int
    walks_capped: int

    @property
    def walk_count(self) -> int:
        return self.walks_completed + self.walks_capped

    def within(self, exact: Fraction | float, sigmas: float = 4.0) -> bool:
        """Whether ``exact`` lies within ``sigmas`` standard errors of the mean."""
        return abs(self.mean - float(exact)) <= sigmas * self.stderr


@dataclass(frozen=True)
class _WalkTables:
    """Integer-weighted successor tables; state s moves to targets[s, c] w.p. weight / total."""

    targets: np.ndarray  # (order, width) int64
    cumulative: np.ndarray  # (order, width) uint64, padded with total
    totals: np.ndarray  # (order,) uint64
    absorbing: np.ndarray  # (order,) bool


def _walk_tables(tm: TransitionMatrix) -> _WalkTables:
    width = max(len(row) for row in tm.rows)
    targets = np.zeros((tm.order, width), dtype=np.int64)
    cumulative = np.zeros((tm.order, width), dtype=np.uint64)
    totals = np.ones(tm.order, dtype=np.uint64)
    for s, row in enumerate(tm.rows):
        items = sorted((j, p) for j, p in row.items() if p)
        scale = lcm(*(p.denominator for _, p in items))
        if scale >= WEIGHT_LIMIT:
            raise WeightOverflow(s, scale)
        running = 0
        for c, (j, p) in enumerate(items):
            running += p.numerator * (scale // p.denominator)
            targets[s, c] = j
            cumulative[s, c] = running
        targets[s, len(items):] = items[-1][0]
        cumulative[s, len(items):] = running
        totals[s] = running
    absorbing = np.zeros(tm.order, dtype=bool)
    absorbing[list(tm.absorbing)] = True
    return _WalkTables(targets, cumulative, totals, absorbing)


def _run_walks(
    tables: _WalkTables, start: VertexId, seed: int, first: int, stop: int, step_cap: int
) -> tuple[np.ndarray, int]:
    """
    Walks ``first..stop-1`` in lockstep.

    Returns the step counts of completed walks in walk-index order and the
    number of capped walks.
    """
    count = stop - first
    states = substream_states(seed, first, stop)
    position = np.full(count, start, dtype=np.int64)
    walk_ids = np.arange(count)
    steps = np.zeros(count, dtype=np.int64)
    done = np.zeros(count, dtype=bool)

    step = 0
    while walk_ids.size and step < step_cap:
        step += 1
        pos = position[walk_ids]
        states[walk_ids], draws = uniform_below(states[walk_ids], tables.totals[pos])
        column = (tables.cumulative[pos] <= draws[:, None]).sum(axis=1)
        pos = tables.targets[pos, column]
        position[walk_ids] = pos
        finished = tables.absorbing[pos]
        steps[walk_ids[finished]] = step
        done[walk_ids[finished]] = True
        walk_ids = walk_ids[~finished]

    return steps[done], int(walk_ids.size)


def _run_chunk(args: tuple) -> tuple[np.ndarray, int]:
    return _run_walks(*args)


def _chunks(total: int, parts: int) -> list[tuple[int, int]]:
    size, extra = divmod(total, parts)
    bounds, lo = [], 0
    for i in range(parts):
        hi = lo + size + (1 if i < extra else 0)
        if hi > lo:
            bounds.append((lo, hi))
        lo = hi
    return bounds


def _estimate(completed: list[int], capped: int) -> SimEstimate:
    k = len(completed)
    if k == 0:
        return SimEstimate(mean=math.nan, stderr=math.nan, walks_completed=0, walks_capped=capped)
    s1 = sum(completed)
    s2 = sum(x * x for x in completed)
    mean = float(Fraction(s1, k))
    if k == 1:
        return SimEstimate(mean=mean, stderr=0.0, walks_completed=1, walks_capped=capped)
    # stderr^2 = sample variance / k, formed exactly before the square root
    variance_of_mean = Fraction(k * s2 - s1 * s1, k * k * (k - 1))
    return SimEstimate(
        mean=mean,
        stderr=math.sqrt(variance_of_mean),
        walks_completed=k,
        walks_capped=capped,
    )


def simulate(
    instance: Graph | TransitionMatrix, cfg: WalkConfig, workers: int = 1
) -> SimEstimate:
    """
    Estimate t(start) from ``cfg.walk_count`` independent walks.

    Each step picks the next state with the chain's exact probabilities (for a
    graph, neighbors weighted by edge multiplicity). Walks still running after
    ``cfg.step_cap`` steps are left out of the mean and counted as capped.
    Output depends only on (instance, cfg); ``workers`` only splits the walk
    indices across processes.

    Raises:
        StartIsAbsorbing, IdOutOfRange, UnreachableAbsorber.
        WeightOverflow: a row whose probabilities need a denominator of 2^64 or more.
    """
    tm = as_chain(instance)
    check_vertex(cfg.start, tm.order)
    if cfg.start in tm.absorbing:
        raise StartIsAbsorbing(cfg.start)

    tables = _walk_tables(tm)
    spans = _chunks(cfg.walk_count, max(1, workers))
    tasks = [(tables, cfg.start, cfg.seed, lo, hi, cfg.step_cap) for lo, hi in spans]
    logger.info(
        f"Simulating {cfg.walk_count} walk(s) from v{cfg.start + 1} "
        f"(seed {cfg.seed}, {len(tasks)} chunk(s))"
    )
    if workers > 1 and len(tasks) > 1:
        with Pool(processes=min(workers, len(tasks))) as pool:
            results = pool.map(_run_chunk, tasks)
    else:
        results = [_run_chunk(task) for task in tasks]

    completed: list[int] = []
    capped = 0
    for steps, chunk_capped in results:  # walk-index order
        completed.extend(steps.tolist())
        capped += chunk_capped
    if capped:
        logger.warning(f"{capped} walk(s) hit the step cap of {cfg.step_cap}")
    return _estimate(completed, capped)
