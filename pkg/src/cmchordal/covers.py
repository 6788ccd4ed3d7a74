"""Maximal independent sets, minimal vertex covers and unmixedness."""

from __future__ import annotations

from dataclasses import dataclass

from .bits import members
from .chordal import _bron_kerbosch
from .graph import Graph, VertexSet


@dataclass(frozen=True)
class CoverList:
    covers: tuple[VertexSet, ...]

    @property
    def sizes(self) -> tuple[int, ...]:
        """Sorted cardinality multiset."""
        return tuple(sorted(len(c) for c in self.covers))

    def __len__(self):
        return len(self.covers)

    def __iter__(self):
        return iter(self.covers)


def _independent_masks(g: Graph) -> list[int]:
    full = (1 << g.n) - 1
    co_adj = [0] + [full & ~g.adjacency[v] & ~(1 << (v - 1)) for v in range(1, g.n + 1)]
    return _bron_kerbosch(co_adj, g.n)


def maximal_independent_sets(g: Graph) -> list[VertexSet]:
    """Inclusion-maximal independent sets in lexicographic order.

    Enumerated as maximal cliques of the complement. The empty graph has the
    single maximal independent set ``()``.
    """
    return sorted(members(m) for m in _independent_masks(g))


def minimal_vertex_covers(g: Graph) -> CoverList:
    full = (1 << g.n) - 1
    return CoverList(tuple(sorted(members(full & ~m) for m in _independent_masks(g))))


def is_unmixed(g: Graph) -> bool:
    return len(set(minimal_vertex_covers(g).sizes)) <= 1
