"""Brute-force reference implementations used only by the tests.

Nothing here imports the package's algorithms; each function works straight
from the definition so it can be trusted at small n.
"""

from __future__ import annotations

import itertools
from fractions import Fraction


def subsets(n):
    for mask in range(1 << n):
        yield frozenset(v + 1 for v in range(n) if mask >> v & 1)


def is_independent(edges, s):
    return not any(u in s and v in s for u, v in edges)


def is_cover(edges, s):
    return all(u in s or v in s for u, v in edges)


def brute_maximal_independent_sets(n, edges):
    ind = [s for s in subsets(n) if is_independent(edges, s)]
    return {s for s in ind if not any(s < t for t in ind)}


def brute_minimal_covers(n, edges):
    cov = [s for s in subsets(n) if is_cover(edges, s)]
    return {s for s in cov if not any(t < s for t in cov)}


def brute_maximal_cliques(n, edges):
    adj = {frozenset(e) for e in edges}
    cl = [s for s in subsets(n) if all(frozenset(p) in adj for p in itertools.combinations(s, 2))]
    return {s for s in cl if not any(s < t for t in cl)}


def has_induced_long_cycle(n, edges):
    """True iff some vertex subset of size >= 4 induces a cycle."""
    adj = {v: set() for v in range(1, n + 1)}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    for k in range(4, n + 1):
        for s in itertools.combinations(range(1, n + 1), k):
            ss = set(s)
            if any(len(adj[v] & ss) != 2 for v in s):
                continue
            # 2-regular: a cycle iff connected
            seen, stack = {s[0]}, [s[0]]
            while stack:
                for w in adj[stack.pop()] & ss:
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
            if seen == ss:
                return True
    return False


def naive_is_chordal(n, edges):
    return not has_induced_long_cycle(n, edges)


def is_literal_leaf(f, facets):
    if len(facets) == 1:
        return True
    others = [h for h in facets if h != f]
    return any(all(h & f <= g & f for h in others) for g in others)


def brute_quasi_forest(facets):
    """Search every facet order for one where each F_i is a leaf of its prefix."""
    facets = [frozenset(f) for f in facets]
    for perm in itertools.permutations(facets):
        if all(is_literal_leaf(perm[i], list(perm[: i + 1])) for i in range(len(perm))):
            return True
    return False


def fraction_rank(matrix):
    m = [[Fraction(x) for x in row] for row in matrix]
    rank = 0
    ncols = len(m[0]) if m else 0
    for c in range(ncols):
        piv = next((r for r in range(rank, len(m)) if m[r][c] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for r in range(len(m)):
            if r != rank and m[r][c] != 0:
                f = m[r][c] / m[rank][c]
                m[r] = [a - f * b for a, b in zip(m[r], m[rank])]
        rank += 1
    return rank


def all_faces(facets):
    faces = set()
    for f in facets:
        for k in range(len(f) + 1):
            faces.update(frozenset(c) for c in itertools.combinations(f, k))
    return faces


def betti_by_fraction(facets):
    """Reduced Betti numbers over Q from dense boundary matrices and Fractions."""
    faces = all_faces(facets)
    top = max(len(f) for f in faces)
    by_size = [sorted(tuple(sorted(f)) for f in faces if len(f) == k) for k in range(top + 1)]
    ranks = [0] * (top + 2)
    for k in range(1, top + 1):
        lower = {f: i for i, f in enumerate(by_size[k - 1])}
        mat = []
        for face in by_size[k]:
            row = [0] * len(lower)
            for pos in range(len(face)):
                row[lower[face[:pos] + face[pos + 1:]]] = (-1) ** pos
            mat.append(row)
        ranks[k] = fraction_rank(mat) if mat and lower else 0
    return [len(by_size[k]) - ranks[k] - ranks[k + 1] for k in range(top + 1)]


def maximal_chains(elements):
    """Maximal chains of a family of frozensets ordered by strict inclusion."""
    out = set()

    def extend(chain):
        ups = [e for e in elements if chain[-1] < e]
        if not ups:
            out.add(frozenset(chain))
        for e in ups:
            extend(chain + [e])

    for e in elements:
        if not any(d < e for d in elements):
            extend([e])
    # chains that skip a level are contained in longer ones
    return {c for c in out if not any(c < d for d in out)}


def socle_count_by_definition(variables, generators):
    """Socle dimension of K[variables]/(generators) for monomial generators.

    Generators are dicts var -> exponent. Monomials are enumerated with every
    exponent up to 2 so the squarefree shortcut is not assumed.
    """
    def in_ideal(mono):
        return any(all(mono.get(x, 0) >= e for x, e in gen.items()) for gen in generators)

    standard = []
    for exps in itertools.product(range(3), repeat=len(variables)):
        mono = {x: e for x, e in zip(variables, exps) if e}
        if not in_ideal(mono):
            standard.append(mono)
    return sum(
        all(in_ideal({**mono, x: mono.get(x, 0) + 1}) for x in variables) for mono in standard
    )
