"""Stanley-Reisner ground truth: independence complexes, reduced homology and
Reisner's criterion over Q, GF(2) and GF(3)."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .bits import members, to_mask
from .complex import SimplicialComplex, link, maximal_masks
from .covers import maximal_independent_sets
from .errors import VoidComplexError
from .graph import Graph
from .linalg import rank_gf2, rank_mod_p, rank_rational


@dataclass(frozen=True)
class FieldSpec:
    name: str
    characteristic: int  # 0 for the rationals

    def __post_init__(self):
        if self.characteristic not in (0, 2, 3):
            raise ValueError(f"unsupported characteristic {self.characteristic}")

    def __str__(self):
        return self.name


Q = FieldSpec("Q", 0)
F2 = FieldSpec("F2", 2)
F3 = FieldSpec("F3", 3)
ALL_FIELDS = (Q, F2, F3)

_FIELD_NAMES = {"q": Q, "f2": F2, "f3": F3}


def parse_fields(spec: str) -> tuple[FieldSpec, ...]:
    """Parse a comma list such as ``"q,f2,f3"``."""
    out = []
    for token in spec.split(","):
        token = token.strip().lower()
        if token not in _FIELD_NAMES:
            raise ValueError(f"unknown field {token!r}; choose from q, f2, f3")
        if _FIELD_NAMES[token] not in out:
            out.append(_FIELD_NAMES[token])
    if not out:
        raise ValueError("no fields given")
    return tuple(out)


@dataclass(frozen=True)
class BettiProfile:
    """Reduced Betti numbers ``numbers[i + 1] = b~_i`` for i = -1..dim."""

    field: FieldSpec
    numbers: tuple[int, ...]

    def __getitem__(self, i: int) -> int:
        if i < -1 or i + 1 >= len(self.numbers):
            return 0
        return self.numbers[i + 1]

    @property
    def dimension(self) -> int:
        return len(self.numbers) - 2

    def vanishes_below(self, d: int) -> bool:
        return all(self[i] == 0 for i in range(-1, d))


def independence_complex(g: Graph) -> SimplicialComplex:
    """Stanley-Reisner complex of the edge ideal: faces are independent sets."""
    return SimplicialComplex(g.n, tuple(maximal_independent_sets(g)))


def _faces_by_size(facet_masks: tuple[int, ...]) -> list[list[int]]:
    faces: set[int] = set()
    for fm in facet_masks:
        sub = fm
        while True:
            faces.add(sub)
            if sub == 0:
                break
            sub = (sub - 1) & fm
    top = max(bin(m).count("1") for m in facet_masks)
    by_size: list[list[int]] = [[] for _ in range(top + 1)]
    for m in faces:
        by_size[bin(m).count("1")].append(m)
    for lst in by_size:
        lst.sort()
    return by_size


def _boundary_rank(upper: list[int], lower: list[int], characteristic: int) -> int:
    """Rank of the boundary map from faces ``upper`` to faces ``lower``."""
    if not upper or not lower:
        return 0
    index = {m: i for i, m in enumerate(lower)}
    if characteristic == 2:
        rows = []
        for face in upper:
            row = 0
            rest = face
            while rest:
                bit = rest & -rest
                row |= 1 << index[face & ~bit]
                rest &= ~bit
            rows.append(row)
        return rank_gf2(rows)
    matrix = []
    for face in upper:
        row = [0] * len(lower)
        rest = face
        pos = 0
        while rest:
            bit = rest & -rest
            row[index[face & ~bit]] = -1 if pos % 2 else 1
            rest &= ~bit
            pos += 1
        matrix.append(row)
    if characteristic == 0:
        return rank_rational(matrix)
    return rank_mod_p(matrix, characteristic)


@lru_cache(maxsize=200_000)
def _betti_of_masks(facet_masks: tuple[int, ...], characteristic: int) -> tuple[int, ...]:
    by_size = _faces_by_size(facet_masks)
    # ranks[k] = rank of boundary from size-k faces to size-(k-1) faces
    ranks = [0] * (len(by_size) + 1)
    for k in range(1, len(by_size)):
        ranks[k] = _boundary_rank(by_size[k], by_size[k - 1], characteristic)
    betti = tuple(
        len(by_size[k]) - ranks[k] - ranks[k + 1] for k in range(len(by_size))
    )
    euler_faces = sum((-1) ** k * len(by_size[k]) for k in range(len(by_size)))
    euler_betti = sum((-1) ** k * b for k, b in enumerate(betti))
    if euler_faces != euler_betti:
        raise ArithmeticError("Euler characteristic mismatch in homology computation")
    return betti


def _compact(facet_masks: Iterable[int]) -> tuple[int, ...]:
    """Relabel the support to consecutive bits; homology is unchanged."""
    masks = list(facet_masks)
    support = 0
    for m in masks:
        support |= m
    remap = {v: i for i, v in enumerate(members(support))}
    return tuple(sorted(to_mask(remap[v] + 1 for v in members(m)) for m in masks))


def _reduced_betti_masks(facet_masks: Iterable[int], field: FieldSpec) -> tuple[int, ...]:
    return _betti_of_masks(_compact(facet_masks), field.characteristic)


def reduced_betti(c: SimplicialComplex, field: FieldSpec = Q) -> BettiProfile:
    """Reduced Betti numbers of the augmented chain complex of ``c``.

    The empty complex ``{∅}`` has ``b~_{-1} = 1``; the void complex raises.
    """
    if c.is_void:
        raise VoidComplexError("the void complex has no reduced homology")
    return BettiProfile(field, _reduced_betti_masks(c.facet_masks, field))


def reisner_is_cm(c: SimplicialComplex, field: FieldSpec = Q) -> bool:
    """Reisner's criterion: every link has vanishing homology below its dimension.

    Raises AssertionError if a complex passes but is not pure, which would mean
    the homology engine is wrong.
    """
    if c.is_void:
        raise VoidComplexError("the void complex has no Cohen-Macaulay status")
    result = True
    for face in sorted(c.face_masks):
        lk = maximal_masks(m & ~face for m in c.facet_masks if m & face == face)
        dim = max(bin(m).count("1") for m in lk) - 1
        betti = _reduced_betti_masks(lk, field)
        if any(betti[i + 1] for i in range(-1, dim)):
            result = False
            break
    if result and not c.is_pure():
        raise AssertionError(f"non-pure complex {c.facets} passed Reisner's criterion")
    return result


def oracle_verdicts(g: Graph, fields: Iterable[FieldSpec] = ALL_FIELDS) -> dict[FieldSpec, bool]:
    c = independence_complex(g)
    return {k: reisner_is_cm(c, k) for k in fields}


__all__ = [
    "ALL_FIELDS",
    "BettiProfile",
    "F2",
    "F3",
    "FieldSpec",
    "Q",
    "independence_complex",
    "link",
    "oracle_verdicts",
    "parse_fields",
    "reduced_betti",
    "reisner_is_cm",
]
