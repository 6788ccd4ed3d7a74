"""Exact matrix rank over GF(2), GF(p) and the rationals."""

from __future__ import annotations

from typing import Sequence


def rank_gf2(rows: Sequence[int]) -> int:
    """Rank of a GF(2) matrix whose rows are given as int bitmasks."""
    basis: dict[int, int] = {}  # leading bit -> reduced row
    for row in rows:
        while row:
            lead = row.bit_length() - 1
            if lead not in basis:
                basis[lead] = row
                break
            row ^= basis[lead]
    return len(basis)


def rank_mod_p(matrix: Sequence[Sequence[int]], p: int) -> int:
    """Rank over GF(p), p prime, by Gaussian elimination."""
    m = [[x % p for x in row] for row in matrix]
    if not m:
        return 0
    ncols = len(m[0])
    rank = 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(m)) if m[r][col]), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        inv = pow(m[rank][col], p - 2, p)
        prow = [x * inv % p for x in m[rank]]
        m[rank] = prow
        for r in range(rank + 1, len(m)):
            f = m[r][col]
            if f:
                m[r] = [(a - f * b) % p for a, b in zip(m[r], prow)]
        rank += 1
        if rank == len(m):
            break
    return rank


def rank_rational(matrix: Sequence[Sequence[int]]) -> int:
    """Rank over Q of an integer matrix via fraction-free (Bareiss) elimination.

    Every intermediate entry is a minor of the input, so each division by the
    previous pivot is exact.
    """
    m = [list(row) for row in matrix]
    if not m:
        return 0
    nrows, ncols = len(m), len(m[0])
    rank = 0
    prev = 1
    for col in range(ncols):
        pivot = next((r for r in range(rank, nrows) if m[r][col]), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        p = m[rank][col]
        prow = m[rank]
        for r in range(rank + 1, nrows):
            row = m[r]
            f = row[col]
            for c in range(col + 1, ncols):
                row[c] = (row[c] * p - f * prow[c]) // prev
            row[col] = 0
        prev = p
        rank += 1
        if rank == nrows:
            break
    return rank
