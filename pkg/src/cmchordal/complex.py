"""Facet-described simplicial complexes on vertices 1..n."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from .bits import members, to_mask
from .errors import NotAFaceError


def maximal_masks(masks: Iterable[int]) -> list[int]:
    uniq = sorted(set(masks), key=lambda m: -bin(m).count("1"))
    kept: list[int] = []
    for m in uniq:
        if not any(m & k == m for k in kept):
            kept.append(m)
    return kept


@dataclass(frozen=True)
class SimplicialComplex:
    """A complex given by its facets.

    ``facets == ()`` is the void complex (no faces at all); ``facets == ((),)``
    is the empty complex ``{∅}`` of dimension -1. Non-maximal generators passed
    to :meth:`from_generators` are dropped.
    """

    n: int
    facets: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        masks = [to_mask(f) for f in self.facets]
        for f in self.facets:
            if list(f) != sorted(set(f)):
                raise ValueError(f"facet {f} is not a sorted duplicate-free tuple")
            if f and (f[0] < 1 or f[-1] > self.n):
                raise ValueError(f"facet {f} has labels outside 1..{self.n}")
        for i, a in enumerate(masks):
            for j, b in enumerate(masks):
                if i != j and a & b == a:
                    raise ValueError("facets must be pairwise incomparable")

    @classmethod
    def from_generators(cls, n: int, generators: Iterable[Iterable[int]]) -> "SimplicialComplex":
        kept = maximal_masks(to_mask(g) for g in generators)
        return cls(n, tuple(sorted(members(m) for m in kept)))

    @property
    def is_void(self) -> bool:
        return not self.facets

    @property
    def dimension(self) -> int:
        if self.is_void:
            raise ValueError("the void complex has no dimension")
        return max(len(f) for f in self.facets) - 1

    @cached_property
    def facet_masks(self) -> tuple[int, ...]:
        return tuple(to_mask(f) for f in self.facets)

    @cached_property
    def face_masks(self) -> frozenset[int]:
        """Every face (the empty face included) as a bitmask."""
        faces: set[int] = set()
        for fm in self.facet_masks:
            sub = fm
            while True:
                faces.add(sub)
                if sub == 0:
                    break
                sub = (sub - 1) & fm
        return frozenset(faces)

    def faces(self) -> list[tuple[int, ...]]:
        """All faces, ordered by size then lexicographically."""
        return sorted((members(m) for m in self.face_masks), key=lambda f: (len(f), f))

    def f_vector(self) -> list[int]:
        """Face counts f_{-1}, f_0, ..., f_dim."""
        counts = [0] * (self.dimension + 2)
        for m in self.face_masks:
            counts[bin(m).count("1")] += 1
        return counts

    def is_face(self, face: Iterable[int]) -> bool:
        return to_mask(face) in self.face_masks

    def is_pure(self) -> bool:
        return len({len(f) for f in self.facets}) <= 1


def link(c: SimplicialComplex, face: Iterable[int]) -> SimplicialComplex:
    """Faces disjoint from ``face`` whose union with it is a face of ``c``."""
    fm = to_mask(face)
    if fm not in c.face_masks:
        raise NotAFaceError(f"{members(fm)} is not a face of the complex")
    gens = [m & ~fm for m in c.facet_masks if m & fm == fm]
    return SimplicialComplex.from_generators(c.n, (members(m) for m in gens))


def face_poset(c: SimplicialComplex) -> list[tuple[int, ...]]:
    """Nonempty faces of ``c`` in (size, lexicographic) order."""
    return [f for f in c.faces() if f]
