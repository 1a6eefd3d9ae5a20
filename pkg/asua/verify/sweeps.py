"""Closed forms against the exact solver, swept over whole families."""

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Callable, Iterator, Literal

from loguru import logger

from asua.chain.aggregates import asua_equation_residuals, solve
from asua.chain.solver import AsuaVector, solve_asua_float
from asua.chain.transition import build_transition
from asua.errors import BadSpec
from asua.families.generators import (
    attach_stem,
    gen_cycle,
    gen_path,
    gen_sea_dragon,
    random_connected_graph,
    random_tree,
)
from asua.formulas.closed_forms import (
    cycle_asua,
    local_rule_degree3,
    local_rule_stem_branch,
    path_asua,
    sea_dragon_values,
    stem_offset,
)
from asua.formulas.spec import SeaDragonSpec
from asua.graph.core import contracted_id, find_stems, merge_absorbers
from asua.graph.types import Graph

Family = Literal[
    "path", "cycle", "stem", "sd1", "sd2", "sd3", "sd4", "identity", "contraction", "leaf",
    "monotone",
]
FAMILIES: tuple[str, ...] = (
    "path", "cycle", "stem", "sd1", "sd2", "sd3", "sd4", "identity", "contraction", "leaf",
    "monotone",
)

# Smallest order each family is defined for; smaller n in a sweep are skipped.
MIN_ORDER = {
    "path": 2, "cycle": 3, "stem": 1, "sd1": 3, "sd2": 3, "sd3": 3, "sd4": 3,
    "identity": 2, "contraction": 3, "leaf": 2, "monotone": 2,
}

DEFAULT_N = {
    "path": range(2, 51), "cycle": range(3, 51), "stem": range(1, 11),
    "sd1": range(3, 13), "sd2": range(3, 13), "sd3": range(3, 13), "sd4": range(3, 13),
    "identity": range(2, 13), "contraction": range(3, 11), "leaf": range(2, 13),
    "monotone": range(2, 13),
}
DEFAULT_D = {"stem": range(1, 5), "sd2": range(1, 6), "sd3": range(1, 6), "sd4": range(1, 6)}
DEFAULT_SAMPLES = {
    "stem": 50, "identity": 200, "contraction": 100, "leaf": 200, "monotone": 100,
}

MISMATCH_SAMPLE = 10
MAX_STEMS = 3


@dataclass
class Mismatch:
    instance: str
    vertex: int  # 1-based
    expected: Fraction
    actual: Fraction


@dataclass
class VerifyReport:
    """Outcome of one family sweep."""

    family: str
    instances: int = 0
    values_checked: int = 0
    mismatch_count: int = 0
    mismatches: list[Mismatch] = field(default_factory=list)
    printed_checked: bool = False
    printed_instances: int = 0
    printed_refuted: int = 0
    float_max_rel_error: float | None = None
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return self.mismatch_count == 0

    def record(self, instance: str, vertex: int, expected: Fraction, actual: Fraction) -> None:
        self.values_checked += 1
        if expected != actual:
            self.mismatch_count += 1
            if len(self.mismatches) < MISMATCH_SAMPLE:
                self.mismatches.append(Mismatch(instance, vertex + 1, expected, actual))

    def record_at_least(
        self, instance: str, vertex: int, floor: Fraction, actual: Fraction
    ) -> None:
        """Like ``record``, but only ``actual < floor`` counts as a mismatch."""
        self.values_checked += 1
        if actual < floor:
            self.mismatch_count += 1
            if len(self.mismatches) < MISMATCH_SAMPLE:
                self.mismatches.append(Mismatch(instance, vertex + 1, floor, actual))

    def note_float(self, g: Graph, exact: AsuaVector) -> None:
        approx = solve_asua_float(build_transition(g))
        worst = self.float_max_rel_error or 0.0
        for v, value in exact.values.items():
            if value:
                worst = max(worst, abs(approx[v] - float(value)) / abs(float(value)))
        self.float_max_rel_error = worst


def stem_partitions(d: int, max_parts: int = MAX_STEMS) -> Iterator[tuple[int, ...]]:
    """Non-increasing compositions of ``d`` into at most ``max_parts`` stem lengths."""

    def parts(rest: int, cap: int, slots: int) -> Iterator[tuple[int, ...]]:
        if rest == 0:
            yield ()
            return
        if slots == 0:
            return
        for first in range(min(rest, cap), 0, -1):
            for tail in parts(rest - first, first, slots - 1):
                yield (first, *tail)

    yield from parts(d, d, max_parts)


def _sea_dragon_specs(family: str, ns: range, ds: range) -> Iterator[SeaDragonSpec]:
    for n in ns:
        if family == "sd1":
            inner = range(2, n)
            for size in range(1, len(inner) + 1):
                for ks in combinations(inner, size):
                    yield SeaDragonSpec.sd1(n, ks)
            continue
        for k in range(2, n):
            for d in ds:
                if family == "sd2":
                    yield SeaDragonSpec.sd2(n, k, d)
                elif family == "sd3":
                    yield SeaDragonSpec.sd3(n, k, d)
                else:
                    for lengths in stem_partitions(d):
                        yield SeaDragonSpec.sd4(n, k, lengths)


def _local_rules(spec: SeaDragonSpec, exact: AsuaVector) -> Iterator[tuple[int, Fraction]]:
    """``(k, value)`` predicted for each branch vertex v_k from its two spine neighbors."""
    if spec.variant == "sd1":
        for k in spec.leaf_positions:
            yield k, local_rule_degree3(exact[k - 2], exact[k])
        return
    k = spec.position
    yield k, local_rule_stem_branch(exact[k - 2], exact[k], spec.stem_mass)


def _verify_sea_dragons(
    report: VerifyReport, ns: range, ds: range, printed_constant: bool, float_check: bool
) -> None:
    family = report.family
    report.printed_checked = printed_constant and family in ("sd2", "sd3")
    for spec in _sea_dragon_specs(family, ns, ds):
        g = gen_sea_dragon(spec)
        exact = solve(g)
        report.instances += 1
        for v, expected in sea_dragon_values(spec).items():
            report.record(spec.label, v, Fraction(expected), exact[v])
        for k, rule in _local_rules(spec, exact):
            report.record(f"{spec.label} local@v{k}", k - 1, rule, exact[k - 1])
        if report.printed_checked:
            printed = sea_dragon_values(spec, printed_constant=True)
            report.printed_instances += 1
            if any(Fraction(value) != exact[v] for v, value in printed.items()):
                report.printed_refuted += 1
        if float_check:
            report.note_float(g, exact)


def _verify_closed_family(
    report: VerifyReport,
    ns: range,
    make: Callable[[int], Graph],
    formula: Callable[[int, int], int],
    float_check: bool,
) -> None:
    symmetric = report.family == "cycle"
    for n in ns:
        g = make(n)
        exact = solve(g)
        report.instances += 1
        label = f"{report.family.upper()}_{n}"
        for i in range(1, n):
            report.record(label, i - 1, Fraction(formula(n, i)), exact[i - 1])
            if symmetric:
                report.record(f"{label} mirror", n - i - 1, exact[i - 1], exact[n - i - 1])
        if float_check:
            report.note_float(g, exact)


def _verify_stems(
    report: VerifyReport, ns: range, ds: range, samples: int, seed: int, float_check: bool
) -> None:
    rng = random.Random(seed)
    for sample in range(samples):
        n = rng.choice(ns)
        tree = random_tree(n, rng, absorber=rng.randrange(n))
        v = rng.randrange(n)
        length = rng.choice(ds)
        g, stem = attach_stem(tree, v, length)
        exact = solve(g)
        report.instances += 1
        label = f"tree#{sample}(n={n})+stem(v{v + 1},l={length})"
        for j, u in enumerate(stem, start=1):
            report.record(label, u, Fraction(stem_offset(length, j)), exact[u] - exact[v])
        # every maximal pendant path obeys the same offsets
        for found in find_stems(g):
            base = exact[found.attachment]
            for j, u in enumerate(found.vertices, start=1):
                report.record(
                    f"{label} stem@v{found.attachment + 1}",
                    u,
                    Fraction(stem_offset(found.length, j)),
                    exact[u] - base,
                )
        if float_check:
            report.note_float(g, exact)


def _verify_identity(report: VerifyReport, ns: range, samples: int, seed: int) -> None:
    rng = random.Random(seed)
    for sample in range(samples):
        n = rng.choice(ns)
        g = random_connected_graph(n, rng, max_multiplicity=3)
        residuals = asua_equation_residuals(g, solve(g))
        report.instances += 1
        for v, r in residuals.items():
            report.record(f"graph#{sample}(n={n})", v, Fraction(0), r)


def _verify_contraction(report: VerifyReport, ns: range, samples: int, seed: int) -> None:
    rng = random.Random(seed)
    for sample in range(samples):
        n = rng.choice(ns)
        x, y = sorted(rng.sample(range(n), 2))
        g = random_connected_graph(n, rng, max_multiplicity=2, absorbing={x, y})
        native = solve(g)
        merged = solve(merge_absorbers(g, x, y))
        report.instances += 1
        for v in g.transient:
            report.record(
                f"graph#{sample}(n={n},v{x + 1}~v{y + 1})",
                v,
                native[v],
                merged[contracted_id(v, x, y)],
            )


def _sample_graph(rng: random.Random, n: int, sample: int) -> tuple[str, Graph]:
    # even samples are trees with a random absorber, odd ones multigraphs
    if sample % 2:
        return f"graph#{sample}(n={n})", random_connected_graph(n, rng, max_multiplicity=2)
    return f"tree#{sample}(n={n})", random_tree(n, rng, absorber=rng.randrange(n))


def _verify_leaves(report: VerifyReport, ns: range, samples: int, seed: int) -> None:
    """A transient vertex with one distinct neighbor v sits exactly 1 above v."""
    rng = random.Random(seed)
    for sample in range(samples):
        label, g = _sample_graph(rng, rng.choice(ns), sample)
        exact = solve(g)
        report.instances += 1
        for u in g.transient:
            if len(g.neighbors(u)) == 1:
                v = g.neighbors(u)[0][0]
                report.record(label, u, Fraction(1), exact[u] - exact[v])


def _verify_monotone(report: VerifyReport, ns: range, samples: int, seed: int) -> None:
    """Hanging a pendant leaf anywhere never lowers the ASUA of an existing vertex."""
    rng = random.Random(seed)
    for sample in range(samples):
        n = rng.choice(ns)
        label, g = _sample_graph(rng, n, sample)
        v = rng.randrange(n)
        grown, _ = attach_stem(g, v, 1)
        before, after = solve(g), solve(grown)
        report.instances += 1
        for w in g.transient:
            report.record_at_least(f"{label}+leaf@v{v + 1}", w, before[w], after[w])


def verify_family(
    family: str,
    n_range: range | None = None,
    d_range: range | None = None,
    printed_constant: bool = False,
    float_check: bool = False,
    samples: int | None = None,
    seed: int = 7,
) -> VerifyReport:
    """
    Compare closed forms with exact solves over a family sweep.

    Args:
        family: One of ``FAMILIES``.
        n_range: Orders to sweep (spine length for sea dragons, tree order for
            ``stem``); orders below the family minimum are skipped.
        d_range: Leaf count (sd2), stem length (sd3, stem) or stem mass (sd4).
        printed_constant: For sd2/sd3, also test the (k+1)^2 prefix constant
            and count the instances it gets wrong.
        float_check: Track the worst relative error of the float solver.
        samples: Random instances for ``stem``, ``identity``, ``contraction``, ``leaf``
            and ``monotone``.
        seed: Seed for the random families.
    """
    if family not in FAMILIES:
        raise BadSpec(f"unknown family {family!r}; expected one of {', '.join(FAMILIES)}")
    ns = range(max(MIN_ORDER[family], (n_range or DEFAULT_N[family]).start),
               (n_range or DEFAULT_N[family]).stop)
    ds = d_range or DEFAULT_D.get(family, range(1, 2))
    if min(ds, default=1) < 1:
        raise BadSpec(f"d must be at least 1, got {ds.start}")
    count = DEFAULT_SAMPLES.get(family, 0) if samples is None else samples

    report = VerifyReport(family=family)
    began = time.perf_counter()
    if not ns:
        logger.warning(f"{family}: empty order range, nothing to verify")
    elif family == "path":
        _verify_closed_family(report, ns, gen_path, path_asua, float_check)
    elif family == "cycle":
        _verify_closed_family(report, ns, gen_cycle, cycle_asua, float_check)
    elif family == "stem":
        _verify_stems(report, ns, ds, count, seed, float_check)
    elif family == "identity":
        _verify_identity(report, ns, count, seed)
    elif family == "contraction":
        _verify_contraction(report, ns, count, seed)
    elif family == "leaf":
        _verify_leaves(report, ns, count, seed)
    elif family == "monotone":
        _verify_monotone(report, ns, count, seed)
    else:
        _verify_sea_dragons(report, ns, ds, printed_constant, float_check)
    report.seconds = time.perf_counter() - began

    logger.info(
        f"{family}: {report.instances} instance(s), {report.values_checked} value(s), "
        f"{report.mismatch_count} mismatch(es) in {report.seconds:.2f}s"
    )
    return report
