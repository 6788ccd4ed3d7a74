"""Cohen-Macaulay classification of chordal graphs: verdict, type, Gorenstein
test and an independent socle computation for the type."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional, Sequence

from .bits import to_mask
from .chordal import FacetList, FreeVertexReport, free_vertex_facets, is_chordal, maximal_cliques
from .covers import maximal_independent_sets, minimal_vertex_covers
from .errors import IsolatedVertexError, NotChordalError, NotCohenMacaulayError
from .graph import Graph, VertexSet, induced_subgraph


@dataclass(frozen=True)
class ClassificationReport:
    chordal: bool
    facets: FacetList
    free_report: FreeVertexReport
    partition: Optional[tuple[VertexSet, ...]]
    unmixed: bool
    cover_size_range: tuple[int, int]
    cm: Optional[bool]
    m: int
    cm_type: Optional[int]
    gorenstein: Optional[bool]
    chosen_free_vertices: Optional[VertexSet]

    def to_dict(self) -> dict:
        """Stable serialization consumed by the CLI's JSON output."""
        return {
            "chordal": self.chordal,
            "cm": self.cm,
            "unmixed": self.unmixed,
            "m": self.m,
            "partition": [list(f) for f in self.partition] if self.partition is not None else None,
            "type": self.cm_type,
            "gorenstein": self.gorenstein,
            "free_vertices": list(self.chosen_free_vertices) if self.chosen_free_vertices is not None else None,
            "cover_size_min": self.cover_size_range[0],
            "cover_size_max": self.cover_size_range[1],
        }


@dataclass(frozen=True)
class SocleComputation:
    variables: tuple[int, ...]
    generators: tuple[tuple[tuple[int, int], ...], ...]  # sparse exponent vectors
    basis_count: int
    socle_count: int


def _require_no_isolated(g: Graph) -> None:
    iso = g.isolated_vertices()
    if iso:
        raise IsolatedVertexError(iso)


def _require_chordal(g: Graph) -> None:
    _require_no_isolated(g)
    if not is_chordal(g):
        raise NotChordalError("graph is not chordal; the classification does not apply")


def _partition_from(report: FreeVertexReport, n: int) -> Optional[tuple[VertexSet, ...]]:
    seen = 0
    for f in report.free_facets:
        fm = to_mask(f)
        if seen & fm:
            return None
        seen |= fm
    if seen != (1 << n) - 1:
        return None
    return report.free_facets


def cm_partition(g: Graph) -> Optional[tuple[VertexSet, ...]]:
    """Free-vertex facets if they partition the vertex set, else None."""
    _require_chordal(g)
    return _partition_from(free_vertex_facets(maximal_cliques(g)), g.n)


def _smallest_free(report: FreeVertexReport) -> VertexSet:
    return tuple(fv[0] for fv in report.free_vertices)


def _type_for_choice(g: Graph, chosen: Sequence[int]) -> int:
    rest = sorted(set(range(1, g.n + 1)) - set(chosen))
    return len(maximal_independent_sets(induced_subgraph(g, rest)))


def _cm_context(g: Graph) -> FreeVertexReport:
    _require_chordal(g)
    report = free_vertex_facets(maximal_cliques(g))
    if _partition_from(report, g.n) is None:
        raise NotCohenMacaulayError("graph is not Cohen-Macaulay")
    return report


def classify(g: Graph) -> ClassificationReport:
    """Full verdict for a graph without isolated vertices.

    Non-chordal graphs get ``chordal=False`` with cm, type and gorenstein left
    as None; the unmixed flag is always computed from the cover enumeration.
    """
    _require_no_isolated(g)
    facets = maximal_cliques(g)
    report = free_vertex_facets(facets)
    sizes = minimal_vertex_covers(g).sizes
    unmixed = len(set(sizes)) <= 1
    chordal = is_chordal(g)
    partition = _partition_from(report, g.n) if chordal else None
    cm = cm_type = gorenstein = chosen = None
    if chordal:
        cm = partition is not None
        if cm:
            chosen = _smallest_free(report)
            cm_type = _type_for_choice(g, chosen)
            gorenstein = cm_type == 1
    return ClassificationReport(
        chordal=chordal,
        facets=facets,
        free_report=report,
        partition=partition,
        unmixed=unmixed,
        cover_size_range=(sizes[0], sizes[-1]),
        cm=cm,
        m=report.m,
        cm_type=cm_type,
        gorenstein=gorenstein,
        chosen_free_vertices=chosen,
    )


def cm_type(g: Graph, chosen: Optional[Sequence[int]] = None) -> int:
    """Number of maximal independent sets of G minus one free vertex per facet.

    ``chosen`` overrides the default choice (smallest free vertex of each
    free-vertex facet, in facet order).
    """
    report = _cm_context(g)
    if chosen is None:
        chosen = _smallest_free(report)
    else:
        if len(chosen) != report.m or any(
            v not in fv for v, fv in zip(chosen, report.free_vertices)
        ):
            raise ValueError("chosen must pick one free vertex from each free-vertex facet")
    return _type_for_choice(g, chosen)


def all_free_vertex_types(g: Graph) -> set[int]:
    """Type computed for every possible choice of free vertices."""
    report = _cm_context(g)
    return {_type_for_choice(g, ch) for ch in itertools.product(*report.free_vertices)}


def is_gorenstein(g: Graph) -> bool:
    """True iff every connected component is a single edge."""
    _require_chordal(g)
    return all(len(c) == 2 for c in g.components())


def socle_computation(g: Graph) -> SocleComputation:
    """Socle dimension of the Artinian reduction, read off its monomial ideal.

    The polynomial ring has one variable per vertex that is not a chosen free
    vertex. The ideal holds every product x_a * x_b (squares included) of two
    non-chosen vertices of the same free-vertex facet, plus x_u * x_v for every
    edge lying inside no free-vertex facet. Standard monomials are enumerated
    directly; the independent-set count is not used.
    """
    report = _cm_context(g)
    chosen = _smallest_free(report)
    variables = tuple(v for v in range(1, g.n + 1) if v not in chosen)
    gens: set[tuple[tuple[int, int], ...]] = set()
    for facet, i in zip(report.free_facets, chosen):
        rest = [v for v in facet if v != i]
        for a, b in itertools.combinations_with_replacement(rest, 2):
            gens.add(((a, 2),) if a == b else ((a, 1), (b, 1)))
    facet_masks = [to_mask(f) for f in report.free_facets]
    for u, v in g.edges:
        em = to_mask((u, v))
        if not any(em & fm == em for fm in facet_masks):
            gens.add(((u, 1), (v, 1)))
    generators = tuple(sorted(gens))

    def in_ideal(mono: dict[int, int]) -> bool:
        return any(all(mono.get(x, 0) >= e for x, e in gen) for gen in generators)

    for x in variables:
        if not in_ideal({x: 2}):
            raise ArithmeticError(f"x_{x}^2 is not in the ideal; the quotient is not Artinian")

    # every standard monomial is squarefree, since all squares lie in the ideal
    basis = []
    for r in range(len(variables) + 1):
        for subset in itertools.combinations(variables, r):
            mono = dict.fromkeys(subset, 1)
            if not in_ideal(mono):
                basis.append(mono)
    socle = 0
    for mono in basis:
        if all(in_ideal({**mono, x: mono.get(x, 0) + 1}) for x in variables):
            socle += 1
    return SocleComputation(variables, generators, len(basis), socle)


def socle_type_oracle(g: Graph) -> int:
    return socle_computation(g).socle_count


__all__ = [
    "ClassificationReport",
    "SocleComputation",
    "all_free_vertex_types",
    "classify",
    "cm_partition",
    "cm_type",
    "is_gorenstein",
    "socle_computation",
    "socle_type_oracle",
]
