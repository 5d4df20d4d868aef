"""Stable-set and clique enumeration over small graphs."""

from __future__ import annotations

from .errors import BudgetError


def stable_sets(n, adj, exclude=(), cap=1 << 20):
    """Yield every nonempty stable set, lexicographically by element list.

    `adj` maps each vertex to a set of neighbors; vertices in `exclude`
    (typically looped ones) are never used.  Raises BudgetError once more
    than `cap` sets have been produced.
    """
    usable = [v for v in range(n) if v not in set(exclude)]
    produced = 0

    def walk(current, candidates):
        nonlocal produced
        for idx, v in enumerate(candidates):
            produced += 1
            if produced > cap:
                raise BudgetError(
                    f"stable-set enumeration exceeded cap {cap}", count=produced
                )
            picked = current + [v]
            yield frozenset(picked)
            rest = [w for w in candidates[idx + 1:] if w not in adj[v]]
            yield from walk(picked, rest)

    yield from walk([], usable)


def maximal_cliques(n, adj):
    """All maximal cliques (Bron-Kerbosch with pivoting), canonically sorted."""
    found = []

    def expand(r, p, x):
        if not p and not x:
            found.append(frozenset(r))
            return
        pivot = max(p | x, key=lambda v: len(adj[v] & p))
        for v in sorted(p - adj[pivot]):
            expand(r | {v}, p & adj[v], x & adj[v])
            p = p - {v}
            x = x | {v}

    expand(frozenset(), set(range(n)), set())
    return sorted(found, key=sorted)


def maximal_stable_sets(n, adj):
    """Maximal stable sets, via maximal cliques of the complement."""
    comp = [set(range(n)) - adj[v] - {v} for v in range(n)]
    return maximal_cliques(n, comp)
