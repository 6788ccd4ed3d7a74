"""Finite simple graphs on 1..n, the edge-list format, and test-graph generators."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable

from .bits import members, to_mask
from .complex import SimplicialComplex, face_poset
from .errors import GraphFormatError

Edge = tuple[int, int]
VertexSet = tuple[int, ...]


@dataclass(frozen=True)
class Graph:
    """Simple graph on vertices ``1..n``.

    ``labels[i - 1]`` is the label vertex ``i`` carried in the graph this one
    was cut from (identity for graphs built directly).
    """

    n: int
    edges: frozenset[Edge]
    labels: tuple[int, ...] = field(default=(), compare=False)

    def __post_init__(self):
        if self.n < 0:
            raise GraphFormatError(f"vertex count must be nonnegative, got {self.n}")
        for u, v in self.edges:
            if u == v:
                raise GraphFormatError(f"loop at vertex {u}")
            if not u < v:
                raise GraphFormatError(f"edge ({u}, {v}) is not normalized")
            if u < 1 or v > self.n:
                raise GraphFormatError(f"edge ({u}, {v}) outside 1..{self.n}")
        if not self.labels:
            object.__setattr__(self, "labels", tuple(range(1, self.n + 1)))
        elif len(self.labels) != self.n:
            raise ValueError("label map length must equal n")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Iterable[int]]) -> "Graph":
        """Build a graph, rejecting loops and repeated edges."""
        seen: set[Edge] = set()
        for e in edges:
            u, v = e
            if u == v:
                raise GraphFormatError(f"loop at vertex {u}")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise GraphFormatError(f"duplicate edge {key}")
            seen.add(key)
        return cls(n, frozenset(seen))

    @cached_property
    def adjacency(self) -> tuple[int, ...]:
        """``adjacency[v]`` is the neighbor bitmask of v (index 0 unused)."""
        adj = [0] * (self.n + 1)
        for u, v in self.edges:
            adj[u] |= 1 << (v - 1)
            adj[v] |= 1 << (u - 1)
        return tuple(adj)

    def neighbors(self, v: int) -> VertexSet:
        return members(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adjacency[u] >> (v - 1) & 1)

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def isolated_vertices(self) -> VertexSet:
        return tuple(v for v in range(1, self.n + 1) if not self.adjacency[v])

    def complement(self) -> "Graph":
        return Graph(
            self.n,
            frozenset(
                (u, v)
                for u in range(1, self.n + 1)
                for v in range(u + 1, self.n + 1)
                if not self.has_edge(u, v)
            ),
        )

    def components(self) -> list[VertexSet]:
        """Connected components, each sorted, ordered by smallest member."""
        left = (1 << self.n) - 1
        comps = []
        while left:
            frontier = left & -left
            comp = 0
            while frontier:
                comp |= frontier
                nxt = 0
                for v in members(frontier):
                    nxt |= self.adjacency[v]
                frontier = nxt & ~comp
            comps.append(members(comp))
            left &= ~comp
        return comps


def parse_graph(text: str) -> Graph:
    """Read the edge-list format: header ``n m`` then m lines ``u v``.

    Lines starting with ``#`` and blank lines are skipped. ``u > v`` is
    accepted and normalized; loops, repeats and out-of-range labels raise
    :class:`GraphFormatError`.
    """
    lines = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        s = raw.strip()
        if s and not s.startswith("#"):
            lines.append((lineno, s))
    if not lines:
        raise GraphFormatError("missing header line 'n m'")

    def ints(lineno: int, s: str) -> tuple[int, int]:
        parts = s.split()
        if len(parts) != 2:
            raise GraphFormatError(f"line {lineno}: expected two integers, got {s!r}")
        try:
            return int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(f"line {lineno}: expected two integers, got {s!r}") from None

    n, m = ints(*lines[0])
    if n < 1:
        raise GraphFormatError(f"vertex count must be positive, got {n}")
    if m < 0:
        raise GraphFormatError(f"edge count must be nonnegative, got {m}")
    body = lines[1:]
    if len(body) != m:
        raise GraphFormatError(f"header announces {m} edges, found {len(body)}")
    edges = []
    for lineno, s in body:
        u, v = ints(lineno, s)
        for x in (u, v):
            if not 1 <= x <= n:
                raise GraphFormatError(f"line {lineno}: label {x} outside 1..{n}")
        if u == v:
            raise GraphFormatError(f"line {lineno}: loop at vertex {u}")
        edges.append((u, v))
    return Graph.from_edges(n, edges)


def format_graph(g: Graph) -> str:
    out = [f"{g.n} {len(g.edges)}"]
    out.extend(f"{u} {v}" for u, v in g.sorted_edges())
    return "\n".join(out) + "\n"


def induced_subgraph(g: Graph, s: Iterable[int]) -> Graph:
    """Subgraph on ``s``, relabeled 1..|s| in increasing order of old label.

    The result's ``labels`` maps new vertices back to ``g``'s labels.
    """
    keep = sorted(set(s))
    for v in keep:
        if not 1 <= v <= g.n:
            raise ValueError(f"vertex {v} outside 1..{g.n}")
    new = {old: i for i, old in enumerate(keep, 1)}
    edges = frozenset(
        (new[u], new[v]) for u, v in g.edges if u in new and v in new
    )
    return Graph(len(keep), edges, tuple(g.labels[v - 1] for v in keep))


def disjoint_union(*graphs: Graph) -> Graph:
    edges: set[Edge] = set()
    offset = 0
    for h in graphs:
        edges.update((u + offset, v + offset) for u, v in h.edges)
        offset += h.n
    return Graph(offset, frozenset(edges))


def complete_graph(n: int) -> Graph:
    return Graph(n, frozenset((u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)))


def path_graph(n: int) -> Graph:
    return Graph(n, frozenset((i, i + 1) for i in range(1, n)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, i % n + 1) for i in range(1, n + 1)])


def all_graphs(n: int):
    """Every labeled graph on 1..n, in edge-bitmask order."""
    pairs = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)]
    for code in range(1 << len(pairs)):
        yield Graph(n, frozenset(p for i, p in enumerate(pairs) if code >> i & 1))


def random_chordal(n: int, extra: int, seed: int) -> Graph:
    """Random connected chordal graph built by clique attachment.

    Vertex ``v = 2..n`` is joined to a clique among ``1..v-1``: a random anchor
    vertex plus up to ``rng.randint(0, extra)`` further vertices, each chosen
    among the common neighbors of those already picked. Every vertex's earlier
    neighborhood is a clique, so reversed insertion order is a perfect
    elimination order. ``extra = 0`` yields random trees.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if extra < 0:
        raise ValueError(f"extra must be nonnegative, got {extra}")
    rng = random.Random(seed)
    adj = [0] * (n + 1)
    edges: set[Edge] = set()
    for v in range(2, n + 1):
        anchor = rng.randint(1, v - 1)
        clique = 1 << (anchor - 1)
        common = adj[anchor]
        want = rng.randint(0, extra)
        while common and want > 0:
            w = rng.choice(members(common))
            clique |= 1 << (w - 1)
            common &= adj[w]
            want -= 1
        for u in members(clique):
            edges.add((u, v))
            adj[u] |= 1 << (v - 1)
            adj[v] |= 1 << (u - 1)
    return Graph(n, frozenset(edges))


def incomparability_graph_of_face_poset(c: SimplicialComplex) -> Graph:
    """Graph on the nonempty faces of ``c`` joining incomparable pairs.

    Faces are numbered 1..N in (size, lexicographic) order, so
    ``face_poset(c)[v - 1]`` is the face behind vertex v. Independent sets of
    the result are exactly the chains of the face poset.
    """
    if c.is_void or c.facets == ((),):
        raise ValueError("the face poset of an empty complex has no elements")
    elems = [to_mask(f) for f in face_poset(c)]
    edges = set()
    for i, a in enumerate(elems, 1):
        for j in range(i + 1, len(elems) + 1):
            b = elems[j - 1]
            if a & b != a and a & b != b:
                edges.add((i, j))
    return Graph(len(elems), frozenset(edges))
