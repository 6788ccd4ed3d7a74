"""Per-graph cross-checks and the sweeps built from them."""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .chordal import is_chordal, quasi_forest_leaf_order
from .classify import all_free_vertex_types, classify, is_gorenstein, socle_type_oracle
from .covers import maximal_independent_sets, minimal_vertex_covers
from .graph import Graph, all_graphs, random_chordal
from .oracle import ALL_FIELDS, FieldSpec, oracle_verdicts


@dataclass(frozen=True)
class GraphCheck:
    graph: Graph
    chordal: bool
    cm: bool | None
    disagreements: tuple[str, ...]


def check_graph(
    g: Graph,
    fields: Sequence[FieldSpec] = ALL_FIELDS,
    oracle: bool = True,
    free_choices: bool = False,
) -> GraphCheck:
    """Run every applicable equivalence on one graph without isolated vertices.

    Non-chordal graphs are only checked for cover/independence duality.
    """
    problems: list[str] = []
    mis = {frozenset(s) for s in maximal_independent_sets(g)}
    covers = {frozenset(c) for c in minimal_vertex_covers(g)}
    if covers != {frozenset(range(1, g.n + 1)) - s for s in mis}:
        problems.append("covers are not the complements of maximal independent sets")

    report = classify(g)
    if not report.chordal:
        return GraphCheck(g, False, None, tuple(problems))

    if quasi_forest_leaf_order(report.facets) is None:
        problems.append("chordal graph without a quasi-forest leaf order")
    if report.unmixed != report.cm:
        problems.append(f"unmixed={report.unmixed} but free-vertex partition={report.cm}")
    if oracle:
        for k, verdict in oracle_verdicts(g, fields).items():
            if verdict != report.cm:
                problems.append(f"Reisner over {k} says {verdict}, free-vertex partition says {report.cm}")
    edges_only = all(len(c) == 2 for c in g.components())
    if report.cm:
        socle = socle_type_oracle(g)
        if socle != report.cm_type:
            problems.append(f"type {report.cm_type} but socle dimension {socle}")
        if report.cover_size_range != (g.n - report.m, g.n - report.m):
            problems.append(f"cover sizes {report.cover_size_range}, expected n - m = {g.n - report.m}")
        if max(len(s) for s in mis) != report.m:
            problems.append("independence number differs from m")
        if free_choices and len(all_free_vertex_types(g)) != 1:
            problems.append("type depends on the choice of free vertices")
    type_one = bool(report.cm and report.cm_type == 1)
    if not is_gorenstein(g) == type_one == edges_only:
        problems.append(
            f"is_gorenstein={is_gorenstein(g)}, cm and type 1={type_one}, "
            f"disjoint union of edges={edges_only}"
        )
    return GraphCheck(g, True, report.cm, tuple(problems))


def _check_args(args) -> GraphCheck:
    return check_graph(*args)


@dataclass
class SweepSummary:
    tested: int = 0
    skipped_isolated: int = 0
    chordal: int = 0
    cm: int = 0
    failures: list[GraphCheck] = field(default_factory=list)

    @property
    def disagreements(self) -> int:
        return len(self.failures)

    def add(self, check: GraphCheck) -> None:
        self.tested += 1
        self.chordal += check.chordal
        self.cm += bool(check.cm)
        if check.disagreements:
            self.failures.append(check)


def exhaustive_graphs(n: int) -> Iterator[Graph]:
    """All labeled graphs on exactly n vertices."""
    return all_graphs(n)


def random_chordal_graphs(
    count: int, n_values: Sequence[int], seed: int, max_extra: int = 3
) -> Iterator[Graph]:
    """``count`` generator samples with n and clique growth drawn per sample."""
    rng = random.Random(seed)
    for _ in range(count):
        yield random_chordal(rng.choice(list(n_values)), rng.randint(0, max_extra), rng.getrandbits(32))


def sweep(
    graphs: Iterable[Graph],
    fields: Sequence[FieldSpec] = ALL_FIELDS,
    oracle: bool = True,
    free_choices: bool = False,
    jobs: int = 1,
) -> SweepSummary:
    """Check each graph; graphs with isolated vertices are counted and skipped."""
    summary = SweepSummary()
    todo = []
    for g in graphs:
        if g.isolated_vertices():
            summary.skipped_isolated += 1
        else:
            todo.append((g, tuple(fields), oracle, free_choices))
    if jobs > 1:
        with ProcessPoolExecutor(jobs) as pool:
            results = list(pool.map(_check_args, todo, chunksize=64))
    else:
        results = map(_check_args, todo)
    for check in results:
        summary.add(check)
    return summary


def chordal_without_isolated(n: int) -> Iterator[Graph]:
    for g in all_graphs(n):
        if not g.isolated_vertices() and is_chordal(g):
            yield g


__all__ = [
    "GraphCheck",
    "SweepSummary",
    "check_graph",
    "chordal_without_isolated",
    "exhaustive_graphs",
    "random_chordal_graphs",
    "sweep",
]
