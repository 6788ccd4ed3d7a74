"""Vertex-set <-> bitmask helpers. Vertex ``v`` occupies bit ``v - 1``."""

from __future__ import annotations

from typing import Iterable


def to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << (v - 1)
    return mask


def members(mask: int) -> tuple[int, ...]:
    out = []
    v = 1
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return tuple(out)


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def lowest(mask: int) -> int:
    """Label of the lowest set bit (mask must be nonzero)."""
    return (mask & -mask).bit_length()
