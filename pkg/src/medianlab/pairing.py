"""Pairings of even profiles, auxiliary-graph b-matchings, and the exact
polytope procedure deciding the double-pairing property.

Conventions that the rest of the package relies on:

* In the auxiliary graph of a base vertex u, the only loop sits at u
  (u lies in I(v,v) only for v = u), and a loop covers its endpoint twice:
  one unit of x on the loop contributes 2 toward the degree demand at u.
  This is what makes integral matchings correspond to pairings.
* All polytope questions are answered in exact rational arithmetic.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .combinatorics import maximal_stable_sets, stable_sets
from .errors import InputError
from .graph import Graph
from .profiles import Profile, canonical_profiles, f_vector, median_set
from .rational_lp import EQ, GE, LE, RationalLinearSystem


@dataclass(frozen=True)
class Pairing:
    """Multiset of unordered vertex pairs; pairs (a,a) are allowed."""

    pairs: tuple[tuple[int, int], ...]

    @classmethod
    def from_pairs(cls, pairs) -> "Pairing":
        return cls(tuple(sorted(tuple(sorted(p)) for p in pairs)))

    def covers(self) -> Profile:
        counts: Counter = Counter()
        for a, b in self.pairs:
            counts[a] += 1
            counts[b] += 1
        return Profile.from_counts(counts)

    def cost(self, g: Graph) -> int:
        return sum(g.dist[a][b] for a, b in self.pairs)


def pairing_cost(g: Graph, pairing: Pairing) -> int:
    return pairing.cost(g)


@dataclass(frozen=True)
class AuxiliaryGraph:
    """Graph A_u on the vertices of G: v ~ w iff u lies between them."""

    base: int
    n: int
    edges: tuple[tuple[int, int], ...]  # sorted pairs (v,w) v<w, no loop entry

    def adjacency(self) -> list[set[int]]:
        adj = [set() for _ in range(self.n)]
        for v, w in self.edges:
            adj[v].add(w)
            adj[w].add(v)
        return adj

    def neighborhood(self, members) -> frozenset[int]:
        adj = self.adjacency()
        out: set[int] = set()
        for v in members:
            out |= adj[v]
        return frozenset(out)


def auxiliary_graph(g: Graph, u: int) -> AuxiliaryGraph:
    d = g.dist
    edges = tuple(
        (v, w)
        for v in range(g.n)
        for w in range(v + 1, g.n)
        if d[v][u] + d[u][w] == d[v][w]
    )
    return AuxiliaryGraph(u, g.n, edges)


# -- exact b-matchings on explicit edge lists ----------------------------------
#
# Edge lists may contain loops (a,a); a loop covers its vertex twice.


def perfect_b_matching(n, edges, demand):
    """Backtracking search for an integral perfect b-matching.

    Returns the multiset of used edges as a sorted tuple, or None.  The
    search always extends the currently scarcest vertex, breaking ties by
    index, and never revisits a partner smaller than the previous choice
    for the same vertex.
    """
    nbr = [set() for _ in range(n)]
    loops = set()
    for a, b in edges:
        if a == b:
            loops.add(a)
        else:
            nbr[a].add(b)
            nbr[b].add(a)
    need = {v: k for v, k in demand.items() if k > 0}
    if sum(need.values()) % 2:
        return None
    used: list[tuple[int, int]] = []

    def options(v):
        opts = [w for w in nbr[v] if need.get(w, 0) > 0]
        if v in loops and need.get(v, 0) >= 2:
            opts.append(v)
        return sorted(opts)

    def step(last_vertex, last_partner):
        if not need:
            return True
        v = min(need, key=lambda x: (len(options(x)), x))
        opts = options(v)
        if v == last_vertex:
            opts = [w for w in opts if w >= last_partner]
        if not opts:
            return False
        for w in opts:
            dec = 2 if w == v else 1
            need[v] -= dec
            if w != v:
                need[w] -= 1
            emptied = [x for x in {v, w} if need.get(x) == 0]
            for x in emptied:
                del need[x]
            used.append((min(v, w), max(v, w)))
            if step(v, w):
                return True
            used.pop()
            for x in emptied:
                need[x] = 0
            need[v] = need.get(v, 0) + dec
            if w != v:
                need[w] = need.get(w, 0) + 1
        return False

    if step(None, None):
        return tuple(sorted(used))
    return None


def fractional_b_matching_lp(n, edges, demand) -> RationalLinearSystem:
    """Degree-equality system over nonnegative edge weights."""
    system = RationalLinearSystem(len(edges))
    for v in range(n):
        coeffs = {}
        for j, (a, b) in enumerate(edges):
            if a == v and b == v:
                coeffs[j] = Fraction(2)
            elif a == v or b == v:
                coeffs[j] = coeffs.get(j, Fraction(0)) + 1
        system.add(coeffs, EQ, Fraction(demand.get(v, 0)))
    return system


def fractional_perfect_b_matching(n, edges, demand):
    """Exact feasibility; returns the edge-weight certificate or None."""
    result = fractional_b_matching_lp(n, edges, demand).solve()
    if result.status == "infeasible":
        return None
    return {edges[j]: x for j, x in enumerate(result.point) if x}


@dataclass
class FractionalMatchingResult:
    feasible: bool
    certificate: dict | None = None
    disabling_set: frozenset | None = None


def has_fractional_perfect_b_matching(
    aux: AuxiliaryGraph, demand, cap: int = 1 << 20
) -> FractionalMatchingResult:
    """Decide feasibility on A_u; on failure produce a disabling stable set,
    a stable set S with b(S) > b(N(S))."""
    demand = {v: Fraction(k) for v, k in dict(demand).items() if k}
    if any(k < 0 for k in demand.values()):
        raise InputError("demands must be nonnegative")
    edges = list(aux.edges) + [(aux.base, aux.base)]
    cert = fractional_perfect_b_matching(aux.n, edges, demand)
    if cert is not None:
        return FractionalMatchingResult(True, certificate=cert)
    adj = aux.adjacency()
    for s in stable_sets(aux.n, adj, exclude=(aux.base,), cap=cap):
        inside = sum(demand.get(v, 0) for v in s)
        around = sum(demand.get(v, 0) for v in aux.neighborhood(s))
        if inside > around:
            return FractionalMatchingResult(False, disabling_set=s)
    raise RuntimeError("infeasible b-matching without disabling stable set")


# -- pairings ------------------------------------------------------------------


def has_perfect_pi_matching(aux: AuxiliaryGraph, profile: Profile):
    """Integral perfect profile-matching on A_u, as a Pairing, or None."""
    if not profile.is_even:
        raise InputError("profile must have even total multiplicity")
    edges = list(aux.edges) + [(aux.base, aux.base)]
    hit = perfect_b_matching(aux.n, edges, dict(profile.counts))
    if hit is None:
        return None
    return Pairing.from_pairs(hit)


def has_perfect_pairing(g: Graph, profile: Profile):
    """A pairing of the profile whose cost reaches min F, plus the median
    vertex witnessing it, or None.

    Testing a single median suffices: a perfect pairing forces equality of
    weak duality at every median, so either every median works or none does.
    """
    if not profile.counts:
        raise InputError("profile must be nonempty")
    if not profile.is_even:
        raise InputError("profile must have even total multiplicity")
    u = min(median_set(g, profile))
    pairing = has_perfect_pi_matching(auxiliary_graph(g, u), profile)
    if pairing is None:
        return None
    return pairing, u


def maximum_pairing(g: Graph, profile: Profile):
    """Exact maximum-cost pairing by branch and bound.

    Pruning uses the weak duality ceiling min_v F(v) and a per-element
    bound of half the sum of largest available distances.
    """
    if not profile.is_even:
        raise InputError("profile must have even total multiplicity")
    if not profile.counts:
        return Pairing(()), 0
    ceiling = min(f_vector(g, profile))
    d = g.dist
    best_pairs: list[tuple[int, int]] | None = None
    best = -1
    need = Counter(dict(profile.counts))
    chosen: list[tuple[int, int]] = []

    def upper(remaining: Counter) -> int:
        # twice the attainable remaining cost, at most
        total = 0
        support = [v for v, k in remaining.items() if k > 0]
        for v in support:
            partners = [w for w in support if w != v or remaining[v] >= 2]
            if not partners:
                return -1
            total += remaining[v] * max(d[v][w] for w in partners)
        return total

    def step(cost: int):
        nonlocal best, best_pairs
        if best == ceiling:
            return
        live = [v for v, k in need.items() if k > 0]
        if not live:
            if cost > best:
                best = cost
                best_pairs = list(chosen)
            return
        bound = upper(need)
        if bound < 0 or 2 * cost + bound <= 2 * best:
            return
        a = min(live)
        partners = sorted(w for w in live if w != a or need[a] >= 2)
        for b in partners:
            need[a] -= 1
            need[b] -= 1
            chosen.append((min(a, b), max(a, b)))
            step(cost + d[a][b])
            chosen.pop()
            need[a] += 1
            need[b] += 1

    step(0)
    assert best_pairs is not None
    return Pairing.from_pairs(best_pairs), best


def pairing_property_bounded_search(
    g: Graph, max_support: int, max_mult: int
):
    """First even profile within budget with no perfect pairing, or None."""
    for profile in canonical_profiles(g.n, max_support, max_mult, even_only=True):
        if has_perfect_pairing(g, profile) is None:
            return profile
    return None


# -- the Me(u) / Ma(u) polytopes ------------------------------------------------


def me_polytope(g: Graph, u: int) -> RationalLinearSystem:
    """Weight functions b >= 0 with u a median of b:
    sum_w b(w) (d(v,w) - d(u,w)) >= 0 for every vertex v."""
    system = RationalLinearSystem(g.n)
    d = g.dist
    for v in range(g.n):
        system.add([Fraction(d[v][w] - d[u][w]) for w in range(g.n)], GE, 0)
    return system


@dataclass
class MaViolation:
    stable_set: frozenset[int]
    point: tuple[Fraction, ...]
    optimum: Fraction


def ma_violation_search(g: Graph, u: int, cap: int = 1 << 20):
    """Search for a stable set of A_u whose Hall constraint cuts into Me(u).

    For each stable set S the exact LP minimizes b(N(S)) - b(S) over the
    slice of Me(u) with total weight 1; a negative optimum exhibits a
    weight function proving Ma(u) != Me(u).
    """
    aux = auxiliary_graph(g, u)
    adj = aux.adjacency()
    for s in stable_sets(aux.n, adj, exclude=(aux.base,), cap=cap):
        system = me_polytope(g, u)
        system.add([Fraction(1)] * g.n, EQ, 1)
        hood = aux.neighborhood(s)
        objective = [Fraction(0)] * g.n
        for v in hood:
            objective[v] += 1
        for v in s:
            objective[v] -= 1
        system.minimize(objective)
        result = system.solve()
        if result.status != "optimal":
            raise RuntimeError(f"Me(u) slice LP ended {result.status}")
        if result.value < 0:
            return MaViolation(s, result.point, result.value)
    return None


def scale_to_even_profile(point, vertices=None) -> Profile:
    """Clear denominators and double, turning a rational weight vector into
    an even integral profile."""
    scale = 2 * lcm(*(x.denominator for x in point), 1)
    counts = {}
    for idx, x in enumerate(point):
        if x:
            v = idx if vertices is None else vertices[idx]
            counts[v] = int(x * scale)
    return Profile.from_counts(counts)


@dataclass
class DoublePairingResult:
    holds: bool
    vertex: int | None = None
    stable_set: frozenset[int] | None = None
    witness: Profile | None = None

    def as_dict(self) -> dict:
        out = {"holds": self.holds}
        if not self.holds:
            out["vertex"] = self.vertex
            out["stable_set"] = sorted(self.stable_set)
            out["witness"] = self.witness.format()
        return out


def double_pairing_property(g: Graph, cap: int = 1 << 20) -> DoublePairingResult:
    """True iff Ma(u) = Me(u) at every vertex.

    On failure the violating rational point is scaled to an even integral
    profile pi with u in Med(pi) and no fractional perfect pi-matching in
    A_u, so pi^2 has no perfect pairing.
    """
    for u in range(g.n):
        violation = ma_violation_search(g, u, cap=cap)
        if violation is not None:
            witness = scale_to_even_profile(violation.point)
            return DoublePairingResult(False, u, violation.stable_set, witness)
    return DoublePairingResult(True)


# -- local graphs and the matching-stable-set property ---------------------------


@dataclass
class LocalGraph:
    """The radius-2 ball around a base vertex with betweenness adjacency."""

    graph: Graph
    vertices: tuple[int, ...]  # original labels, sorted
    base: int  # index of the base vertex inside `vertices`


def local_graph(g: Graph, u: int) -> LocalGraph:
    members = sorted(g.ball(u, 2))
    index = {v: i for i, v in enumerate(members)}
    d = g.dist
    edges = [
        (i, j)
        for i, v in enumerate(members)
        for j, w in enumerate(members[i + 1:], start=i + 1)
        if d[v][u] + d[u][w] == d[v][w]
    ]
    return LocalGraph(Graph(len(members), edges), tuple(members), index[u])


@dataclass
class MatchingStableSetResult:
    holds: bool
    variant: str
    witness: Profile | None = None
    stable_set: frozenset[int] | None = None

    def as_dict(self) -> dict:
        out = {"holds": self.holds, "variant": self.variant}
        if not self.holds:
            out["witness"] = self.witness.format()
            if self.stable_set is not None:
                out["stable_set"] = sorted(self.stable_set)
        return out


def _profile_violates_msp(g: Graph, profile: Profile) -> bool:
    """True when none of the three escape clauses hold for this profile."""
    adj = [set(g.neighbors(v)) for v in range(g.n)]
    for z in range(g.n):
        if profile.multiplicity(z) > profile.weight(adj[z]):
            return False
    for s in maximal_stable_sets(g.n, adj):
        hood = set().union(*(adj[v] for v in s)) if s else set()
        if profile.weight(s) > profile.weight(hood):
            return False
    return perfect_b_matching(g.n, g.edges(), dict(profile.counts)) is None


def matching_stable_set_check(
    g: Graph,
    variant: str,
    max_support: int | None = None,
    max_mult: int | None = None,
    cap: int = 1 << 20,
) -> MatchingStableSetResult:
    """Check the (double-)matching-stable-set property of a graph.

    The double variant is decided exactly: for each stable set S an LP asks
    for a weight vector whose only Hall violation is at S while every vertex
    and every maximal stable set stays within its neighborhood weight; a
    feasible point scales to an even integral counterexample profile.  The
    single variant is a bounded exhaustive search over even profiles.
    """
    adj = [set(g.neighbors(v)) for v in range(g.n)]
    if variant == "double":
        max_stables = maximal_stable_sets(g.n, adj)
        for s in stable_sets(g.n, adj, cap=cap):
            system = RationalLinearSystem(g.n)
            row = [Fraction(0)] * g.n
            for v in s:
                row[v] += 1
            for v in set().union(*(adj[v] for v in s)):
                row[v] -= 1
            system.add(row, GE, 1)
            for z in range(g.n):
                row = [Fraction(0)] * g.n
                row[z] += 1
                for v in adj[z]:
                    row[v] -= 1
                system.add(row, LE, 0)
            for t in max_stables:
                row = [Fraction(0)] * g.n
                for v in t:
                    row[v] += 1
                for v in set().union(*(adj[v] for v in t)):
                    row[v] -= 1
                system.add(row, LE, 0)
            result = system.solve()
            if result.feasible:
                witness = scale_to_even_profile(result.point)
                return MatchingStableSetResult(False, variant, witness, s)
        return MatchingStableSetResult(True, variant)
    if variant == "single":
        if max_support is None or max_mult is None:
            raise InputError("single variant needs a profile budget")
        for profile in canonical_profiles(
            g.n, max_support, max_mult, even_only=True
        ):
            if _profile_violates_msp(g, profile):
                return MatchingStableSetResult(False, variant, profile)
        return MatchingStableSetResult(True, variant)
    raise InputError(f"unknown variant {variant!r}")
