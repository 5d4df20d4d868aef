"""Profiles (vertex multisets), total-distance functions and median sets."""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass, field
from itertools import combinations, product
from math import comb

from .errors import BudgetError, FormatError, InputError
from .graph import Graph


@dataclass(frozen=True)
class Profile:
    """Finite multiset of vertices, canonically a sorted (vertex, mult) list."""

    counts: tuple[tuple[int, int], ...]

    def __post_init__(self):
        prev = -1
        for v, k in self.counts:
            if v <= prev:
                raise InputError("profile counts must be sorted by vertex")
            if k < 1:
                raise InputError("profile multiplicities must be positive")
            prev = v

    @classmethod
    def from_vertices(cls, vertices) -> "Profile":
        c = Counter(vertices)
        return cls(tuple(sorted(c.items())))

    @classmethod
    def from_counts(cls, mapping) -> "Profile":
        items = [(v, k) for v, k in sorted(dict(mapping).items()) if k != 0]
        if any(k < 0 for _, k in items):
            raise InputError("profile multiplicities must be nonnegative")
        return cls(tuple(items))

    @classmethod
    def parse(cls, text: str) -> "Profile":
        """Parse whitespace-separated tokens, each `v` or `v:k`."""
        counts: Counter = Counter()
        for tok in text.split():
            v, _, k = tok.partition(":")
            try:
                counts[int(v)] += int(k) if k else 1
            except ValueError:
                raise FormatError(f"bad profile token {tok!r}") from None
        return cls.from_counts(counts)

    def format(self) -> str:
        return " ".join(f"{v}:{k}" if k > 1 else str(v) for v, k in self.counts)

    def multiplicity(self, v: int) -> int:
        for w, k in self.counts:
            if w == v:
                return k
        return 0

    @property
    def total(self) -> int:
        return sum(k for _, k in self.counts)

    @property
    def is_even(self) -> bool:
        return self.total % 2 == 0

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(v for v, _ in self.counts)

    def vertices(self):
        for v, k in self.counts:
            for _ in range(k):
                yield v

    def as_tuple(self) -> tuple[int, ...]:
        return tuple(self.vertices())

    def concat(self, other: "Profile") -> "Profile":
        c = Counter(dict(self.counts))
        c.update(dict(other.counts))
        return Profile.from_counts(c)

    def power(self, k: int) -> "Profile":
        if k < 1:
            raise InputError("profile power must be >= 1")
        return Profile(tuple((v, m * k) for v, m in self.counts))

    def restrict(self, keep) -> "Profile":
        keep = set(keep)
        return Profile(tuple((v, k) for v, k in self.counts if v in keep))

    def weight(self, vertex_set) -> int:
        vs = set(vertex_set)
        return sum(k for v, k in self.counts if v in vs)


def total_distance(g: Graph, profile: Profile, v: int) -> int:
    dv = g.dist[v]
    return sum(k * dv[x] for x, k in profile.counts)


def f_vector(g: Graph, profile: Profile) -> list[int]:
    return [total_distance(g, profile, v) for v in range(g.n)]


def median_set(g: Graph, profile: Profile) -> frozenset[int]:
    """Vertices minimizing the total distance; all of V for the empty profile."""
    if not profile.counts:
        return frozenset(range(g.n))
    f = f_vector(g, profile)
    best = min(f)
    return frozenset(v for v in range(g.n) if f[v] == best)


def is_local_median(g: Graph, profile: Profile, v: int, p: int) -> bool:
    """No vertex within hop distance p beats v."""
    if p < 1:
        raise InputError(f"power must be >= 1, got {p}")
    fv = total_distance(g, profile, v)
    dv = g.dist[v]
    return all(
        fv <= total_distance(g, profile, w)
        for w in range(g.n)
        if 0 < dv[w] <= p
    )


# -- profile enumeration -------------------------------------------------------


def count_canonical_profiles(n: int, max_support: int, max_mult: int,
                             even_only: bool = False) -> int:
    """Closed-form count of the profiles canonical_profiles() yields."""
    total = 0
    s = min(max_support, n)
    for k in range(1, s + 1):
        if not even_only:
            total += comb(n, k) * max_mult ** k
        else:
            # multiplicity vectors in {1..m}^k with even sum
            evens = max_mult // 2
            odds = max_mult - evens
            even_sum = ((evens + odds) ** k + (evens - odds) ** k) // 2
            total += comb(n, k) * even_sum
    return total


def canonical_profiles(n: int, max_support: int, max_mult: int,
                       even_only: bool = False):
    """Yield nonempty profiles in canonical order: supports in lexicographic
    order of their sorted tuples, multiplicity vectors in lexicographic order."""
    if max_support < 1 or max_mult < 1:
        raise InputError("budget must allow at least one vertex")
    s = min(max_support, n)
    supports = sorted(
        (sup for k in range(1, s + 1) for sup in combinations(range(n), k))
    )
    for sup in supports:
        for mults in product(range(1, max_mult + 1), repeat=len(sup)):
            if even_only and sum(mults) % 2:
                continue
            yield Profile(tuple(zip(sup, mults)))


# -- bounded verification of connected / unimodal medians ----------------------


def _connected_in_power(g: Graph, members: frozenset[int], p: int) -> bool:
    if not members:
        return False
    members = sorted(members)
    start = members[0]
    seen = {start}
    queue = deque([start])
    pool = set(members)
    while queue:
        x = queue.popleft()
        for y in pool - seen:
            if g.dist[x][y] <= p:
                seen.add(y)
                queue.append(y)
    return len(seen) == len(pool)


def _unimodal_in_power(g: Graph, f: list[int], p: int) -> bool:
    best = min(f)
    for v in range(g.n):
        if f[v] == best:
            continue
        if all(f[v] <= f[w] for w in range(g.n) if 0 < g.dist[v][w] <= p):
            return False
    return True


def _weakly_peakless(g: Graph, f: list[int], p: int) -> bool:
    # local criterion: every pair at distance p+1..2p admits an interior
    # vertex below the max, with equality only on plateaus
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if not p + 1 <= g.dist[u][v] <= 2 * p:
                continue
            hi = max(f[u], f[v])
            ok = any(
                f[w] < hi or f[u] == f[w] == f[v]
                for w in g.interval_interior(u, v)
            )
            if not ok:
                return False
    return True


@dataclass
class MedianVerificationReport:
    power: int
    max_support: int
    max_mult: int
    profiles_checked: int
    failures: list = field(default_factory=list)
    note: str = "verified within budget only"

    @property
    def ok(self) -> bool:
        return not self.failures

    def as_dict(self) -> dict:
        return {
            "power": self.power,
            "max_support": self.max_support,
            "max_mult": self.max_mult,
            "profiles_checked": self.profiles_checked,
            "failures": [
                {
                    "profile": rec["profile"].format(),
                    "unimodal": rec["unimodal"],
                    "connected": rec["connected"],
                    "peakless": rec["peakless"],
                }
                for rec in self.failures
            ],
            "ok": self.ok,
            "note": self.note,
        }


def check_unimodal_equals_connected(
    g: Graph,
    p: int,
    max_support: int,
    max_mult: int,
    cap: int = 2_000_000,
) -> MedianVerificationReport:
    """Exhaustively check, over all budget profiles, that the total distance
    function is unimodal on the p-th power, that the median set is connected
    there, and that the local peaklessness criterion holds.

    Any profile for which the three verdicts are not all true is reported.
    """
    if p < 1:
        raise InputError(f"power must be >= 1, got {p}")
    count = count_canonical_profiles(g.n, max_support, max_mult)
    if count > cap:
        raise BudgetError(
            f"profile budget {count} exceeds cap {cap}", count=count
        )
    report = MedianVerificationReport(p, max_support, max_mult, 0)
    for profile in canonical_profiles(g.n, max_support, max_mult):
        f = f_vector(g, profile)
        uni = _unimodal_in_power(g, f, p)
        best = min(f)
        med = frozenset(v for v in range(g.n) if f[v] == best)
        conn = _connected_in_power(g, med, p)
        peak = _weakly_peakless(g, f, p)
        report.profiles_checked += 1
        if not (uni and conn and peak):
            report.failures.append(
                {"profile": profile, "unimodal": uni, "connected": conn, "peakless": peak}
            )
    return report
