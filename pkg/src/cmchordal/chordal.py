"""Chordality, clique-complex facets, leaf orders and free vertices."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .bits import members, popcount, to_mask
from .complex import maximal_masks
from .graph import Graph, VertexSet


@dataclass(frozen=True)
class EliminationOrder:
    order: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.order) != list(range(1, len(self.order) + 1)):
            raise ValueError(f"{self.order} is not a permutation of 1..{len(self.order)}")

    def positions(self) -> dict[int, int]:
        return {v: i for i, v in enumerate(self.order)}


@dataclass(frozen=True)
class FacetList:
    """Maximal cliques of a graph on 1..n, sorted lexicographically."""

    n: int
    facets: tuple[VertexSet, ...]

    def __len__(self):
        return len(self.facets)

    def __iter__(self):
        return iter(self.facets)


@dataclass(frozen=True)
class FreeVertexReport:
    """``free[i]`` lists the free vertices of ``facets[i]``."""

    facets: tuple[VertexSet, ...]
    free: tuple[VertexSet, ...]

    @property
    def free_facets(self) -> tuple[VertexSet, ...]:
        return tuple(f for f, fv in zip(self.facets, self.free) if fv)

    @property
    def free_vertices(self) -> tuple[VertexSet, ...]:
        """Free vertices of each facet in :attr:`free_facets`, aligned."""
        return tuple(fv for fv in self.free if fv)

    @property
    def m(self) -> int:
        return len(self.free_facets)


def mcs_order(g: Graph) -> EliminationOrder:
    """Maximum cardinality search, lowest label on ties.

    Returns the reverse of the visiting order, which is a perfect elimination
    order whenever ``g`` is chordal.
    """
    weight = [0] * (g.n + 1)
    unvisited = set(range(1, g.n + 1))
    visit = []
    while unvisited:
        v = min(unvisited, key=lambda u: (-weight[u], u))
        unvisited.remove(v)
        visit.append(v)
        for u in members(g.adjacency[v]):
            if u in unvisited:
                weight[u] += 1
    return EliminationOrder(tuple(reversed(visit)))


def is_perfect_elimination(g: Graph, o: EliminationOrder | Sequence[int]) -> bool:
    """True iff each vertex's later-ordered neighbors form a clique."""
    if not isinstance(o, EliminationOrder):
        o = EliminationOrder(tuple(o))
    if len(o.order) != g.n:
        raise ValueError(f"order has {len(o.order)} entries for a graph on {g.n} vertices")
    later = 0
    for v in reversed(o.order):
        nbrs = g.adjacency[v] & later
        for u in members(nbrs):
            if nbrs & ~g.adjacency[u] & ~(1 << (u - 1)):
                return False
        later |= 1 << (v - 1)
    return True


def is_chordal(g: Graph) -> bool:
    return is_perfect_elimination(g, mcs_order(g))


def _bron_kerbosch(adj: Sequence[int], n: int) -> list[int]:
    out: list[int] = []

    def expand(r: int, p: int, x: int) -> None:
        if not p and not x:
            out.append(r)
            return
        pivot = max(members(p | x), key=lambda u: popcount(p & adj[u]))
        for v in members(p & ~adj[pivot]):
            bit = 1 << (v - 1)
            expand(r | bit, p & adj[v], x & adj[v])
            p &= ~bit
            x |= bit

    expand(0, (1 << n) - 1, 0)
    return out


def _sorted_sets(masks) -> tuple[VertexSet, ...]:
    return tuple(sorted(members(m) for m in masks))


def maximal_cliques(g: Graph) -> FacetList:
    """All maximal cliques; isolated vertices give singleton facets.

    Chordal graphs use the perfect elimination order (at most n candidates);
    anything else falls back to pivoted Bron-Kerbosch.
    """
    order = mcs_order(g)
    if g.n and is_perfect_elimination(g, order):
        later = 0
        candidates = []
        for v in reversed(order.order):
            candidates.append((g.adjacency[v] & later) | 1 << (v - 1))
            later |= 1 << (v - 1)
        return FacetList(g.n, _sorted_sets(maximal_masks(candidates)))
    return FacetList(g.n, _sorted_sets(_bron_kerbosch(g.adjacency, g.n)))


def _is_leaf(idx: int, masks: list[int]) -> bool:
    if len(masks) == 1:
        return True
    f = masks[idx]
    others = [h & f for j, h in enumerate(masks) if j != idx]
    for j, branch in enumerate(masks):
        if j == idx:
            continue
        common = branch & f
        if all(h & ~common == 0 for h in others):
            return True
    return False


def quasi_forest_leaf_order(f: FacetList) -> Optional[list[VertexSet]]:
    """An order F_1..F_r with each F_i a leaf of <F_1..F_i>, or None.

    Leaves are stripped greedily from the full complex (first leaf in
    lexicographic facet order each round) and the stripping order is reversed.
    """
    remaining = [to_mask(x) for x in f.facets]
    stripped: list[int] = []
    while remaining:
        for i in range(len(remaining)):
            if _is_leaf(i, remaining):
                stripped.append(remaining.pop(i))
                break
        else:
            return None
    return [members(m) for m in reversed(stripped)]


def free_vertex_facets(f: FacetList) -> FreeVertexReport:
    """A vertex is free for F when F is the only facet containing it."""
    count = [0] * (f.n + 1)
    for facet in f.facets:
        for v in facet:
            count[v] += 1
    free = tuple(tuple(v for v in facet if count[v] == 1) for facet in f.facets)
    return FreeVertexReport(f.facets, free)
