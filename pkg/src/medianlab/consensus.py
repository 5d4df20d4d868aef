"""Tabulated consensus functions, axiom checkers, and the alternate-profile
consensus rule on the 6-cycle that disagrees with the median function."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, combinations_with_replacement
from math import comb

from .errors import BudgetError, FormatError, InputError
from .graph import Graph, cycle
from .profiles import Profile, median_set

AXIOMS = ("A", "B", "C", "T", "Tminus", "T2", "Ek")


@dataclass
class TabulatedConsensus:
    """Extensional consensus function: every canonical profile of length
    1..max_len maps to a nonempty vertex set.

    Keys are sorted vertex tuples, which bakes anonymity into the
    representation.
    """

    graph: Graph
    max_len: int
    table: dict[tuple[int, ...], frozenset[int]]

    def __post_init__(self):
        expected = table_size(self.graph.n, self.max_len)
        if len(self.table) != expected:
            raise InputError(
                f"table has {len(self.table)} entries, expected {expected}"
            )
        for key, value in self.table.items():
            if tuple(sorted(key)) != key or not 1 <= len(key) <= self.max_len:
                raise InputError(f"bad profile key {key}")
            if not value:
                raise InputError(f"empty value at {key}")

    def value(self, vertices) -> frozenset[int]:
        return self.table[tuple(sorted(vertices))]

    def same_domain(self, other: "TabulatedConsensus") -> bool:
        return (
            self.max_len == other.max_len
            and self.graph.n == other.graph.n
            and self.graph.edges() == other.graph.edges()
        )


def table_size(n: int, max_len: int) -> int:
    return sum(comb(n + k - 1, k) for k in range(1, max_len + 1))


def profile_keys(n: int, max_len: int):
    for k in range(1, max_len + 1):
        yield from combinations_with_replacement(range(n), k)


def tabulate_function(g: Graph, max_len: int, fn, cap: int = 200_000) -> TabulatedConsensus:
    count = table_size(g.n, max_len)
    if count > cap:
        raise BudgetError(f"table would hold {count} profiles, cap {cap}", count=count)
    table = {key: frozenset(fn(key)) for key in profile_keys(g.n, max_len)}
    return TabulatedConsensus(g, max_len, table)


def tabulate_median(g: Graph, max_len: int, cap: int = 200_000) -> TabulatedConsensus:
    return tabulate_function(
        g, max_len, lambda key: median_set(g, Profile.from_vertices(key)), cap=cap
    )


# -- axiom checking --------------------------------------------------------------


@dataclass
class AxiomResult:
    axiom: str
    holds: bool
    witness: tuple | None = None
    note: str = ""

    def as_dict(self) -> dict:
        out = {"axiom": self.axiom, "holds": self.holds}
        if self.witness is not None:
            out["witness"] = [
                list(part) if isinstance(part, (tuple, frozenset)) else part
                for part in self.witness
            ]
        if self.note:
            out["note"] = self.note
        return out


def equilateral_metric_triangles(g: Graph, k: int):
    """All vertex triples pairwise at distance k whose intervals meet only
    at the endpoints, in lexicographic order."""
    d = g.dist
    out = []
    for u, v, w in combinations(range(g.n), 3):
        if d[u][v] == d[u][w] == d[v][w] == k and g.is_metric_triangle(u, v, w):
            out.append((u, v, w))
    return out


def check_axiom(f: TabulatedConsensus, axiom: str, k: int | None = None) -> AxiomResult:
    """Check one consensus axiom against the whole table.

    The witness is the first violating instance in canonical order.  Axioms
    that need profiles longer than the table supports are rejected.
    """
    g = f.graph
    if axiom == "A":
        return AxiomResult(
            "A", True, note="holds by construction: table keyed on sorted multisets"
        )
    if axiom == "B":
        if f.max_len < 2:
            raise BudgetError("axiom B needs profiles of length 2")
        for u in range(g.n):
            for v in range(u, g.n):
                if f.value((u, v)) != g.interval(u, v):
                    return AxiomResult("B", False, ((u, v), f.value((u, v))))
        return AxiomResult("B", True)
    if axiom == "C":
        keys = list(profile_keys(g.n, f.max_len - 1))
        for left in keys:
            for right in keys:
                if right < left or len(left) + len(right) > f.max_len:
                    continue
                lv, rv = f.table[left], f.table[right]
                meet = lv & rv
                if not meet:
                    continue
                combined = f.value(left + right)
                if combined != meet:
                    return AxiomResult("C", False, (left, right, combined, meet))
        return AxiomResult("C", True)
    if axiom in ("T", "Tminus"):
        if f.max_len < 3:
            raise BudgetError(f"axiom {axiom} needs profiles of length 3")
        for u, v, w in combinations(range(g.n), 3):
            if not (g.is_adjacent(u, v) and g.is_adjacent(u, w) and g.is_adjacent(v, w)):
                continue
            value = f.value((u, v, w))
            if axiom == "T" and value != {u, v, w}:
                return AxiomResult("T", False, ((u, v, w), value))
            if axiom == "Tminus" and value & {u, v, w} and not value >= {u, v, w}:
                return AxiomResult("Tminus", False, ((u, v, w), value))
        return AxiomResult(axiom, True)
    if axiom == "T2":
        if f.max_len < 3:
            raise BudgetError("axiom T2 needs profiles of length 3")
        for u, v, w in equilateral_metric_triangles(g, 2):
            value = f.value((u, v, w))
            if not value >= {u, v, w}:
                return AxiomResult("T2", False, ((u, v, w), value))
        return AxiomResult("T2", True)
    if axiom == "Ek":
        if k is None or k < 1:
            raise InputError("axiom Ek needs a positive size parameter k")
        if f.max_len < 3:
            raise BudgetError("axiom Ek needs profiles of length 3")
        for u, v, w in equilateral_metric_triangles(g, k):
            value = f.value((u, v, w))
            if value & {u, v, w} and not value >= {u, v, w}:
                return AxiomResult("Ek", False, ((u, v, w), value), note=f"k={k}")
        return AxiomResult("Ek", True, note=f"k={k}")
    raise InputError(f"unknown axiom {axiom!r}; choose from {AXIOMS}")


def compare_functions(f1: TabulatedConsensus, f2: TabulatedConsensus):
    """All canonical profiles where the two tables differ, in order."""
    if not f1.same_domain(f2):
        raise InputError("consensus functions live on different domains")
    return [
        (key, f1.table[key], f2.table[key])
        for key in profile_keys(f1.graph.n, f1.max_len)
        if f1.table[key] != f2.table[key]
    ]


# -- table serialization -----------------------------------------------------------


def table_to_text(f: TabulatedConsensus) -> str:
    lines = [f"{f.graph.n} {f.max_len}"]
    for key in profile_keys(f.graph.n, f.max_len):
        verts = " ".join(map(str, key))
        value = " ".join(map(str, sorted(f.table[key])))
        lines.append(f"{verts} | {value}")
    return "\n".join(lines) + "\n"


def table_from_text(g: Graph, text: str) -> TabulatedConsensus:
    lines = [
        ln.strip()
        for ln in text.splitlines()
        if ln.strip() and not ln.lstrip().startswith("#")
    ]
    if not lines:
        raise FormatError("empty consensus table")
    try:
        n, max_len = map(int, lines[0].split())
    except ValueError:
        raise FormatError(f"bad table header {lines[0]!r}") from None
    if n != g.n:
        raise FormatError(f"table is for {n} vertices, graph has {g.n}")
    table = {}
    for ln in lines[1:]:
        left, sep, right = ln.partition("|")
        if not sep:
            raise FormatError(f"missing '|' in table line {ln!r}")
        try:
            key = tuple(sorted(int(t) for t in left.split()))
            value = frozenset(int(t) for t in right.split())
        except ValueError:
            raise FormatError(f"bad table line {ln!r}") from None
        table[key] = value
    return TabulatedConsensus(g, max_len, table)


# -- the six-cycle rule -------------------------------------------------------------


_C6: Graph | None = None


def c6_graph() -> Graph:
    global _C6
    if _C6 is None:
        _C6 = cycle(6)
    return _C6


@dataclass(frozen=True)
class C6Profile:
    """Profile on the 6-cycle as a vector of six multiplicities."""

    counts: tuple[int, int, int, int, int, int]

    def __post_init__(self):
        if len(self.counts) != 6 or any(k < 0 for k in self.counts):
            raise InputError("need six nonnegative multiplicities")

    @classmethod
    def from_profile(cls, profile: Profile) -> "C6Profile":
        if any(v > 5 for v in profile.support):
            raise InputError("profile does not live on the 6-cycle")
        return cls(tuple(profile.multiplicity(v) for v in range(6)))

    def to_profile(self) -> Profile:
        return Profile.from_counts({v: k for v, k in enumerate(self.counts) if k})

    @property
    def total(self) -> int:
        return sum(self.counts)

    def reduced(self) -> tuple[int, ...]:
        """Cancel opposite vertices: entry i drops by min(count_i, count_{i+3})."""
        c = self.counts
        return tuple(c[i] - min(c[i], c[(i + 3) % 6]) for i in range(6))

    @property
    def is_alternate(self) -> bool:
        r = self.reduced()
        return any(
            r[i] > 0 and r[(i + 2) % 6] > 0 and r[(i + 4) % 6] > 0
            for i in (0, 1)
        )


def l6_eval(profile: Profile) -> frozenset[int]:
    """The alternate-profile consensus rule on the 6-cycle.

    When the reduced profile has all three multiplicities of one parity
    class positive, answer the singleton of the smallest index carrying the
    maximum reduced multiplicity; otherwise fall back to the median set.
    """
    if not profile.counts:
        raise InputError("profile must be nonempty")
    cp = C6Profile.from_profile(profile)
    if cp.is_alternate:
        r = cp.reduced()
        cls = (0, 2, 4) if r[0] > 0 else (1, 3, 5)
        top = max(r[i] for i in cls)
        return frozenset({min(i for i in cls if r[i] == top)})
    return median_set(c6_graph(), profile)


@dataclass
class L6Report:
    max_len: int
    axiom_a: bool
    axiom_b: bool
    axiom_c: bool
    reduction_identity: bool
    non_alternate_matches_median: bool
    divergence_witness: tuple
    profiles_checked: int
    failures: list = field(default_factory=list)
    note: str = "verified within budget only"

    @property
    def ok(self) -> bool:
        return (
            self.axiom_a
            and self.axiom_b
            and self.axiom_c
            and self.reduction_identity
            and self.non_alternate_matches_median
        )

    def as_dict(self) -> dict:
        return {
            "max_len": self.max_len,
            "axiom_a": self.axiom_a,
            "axiom_b": self.axiom_b,
            "axiom_c": self.axiom_c,
            "reduction_identity": self.reduction_identity,
            "non_alternate_matches_median": self.non_alternate_matches_median,
            "divergence_witness": [
                list(part) if isinstance(part, (tuple, frozenset)) else part
                for part in self.divergence_witness
            ],
            "profiles_checked": self.profiles_checked,
            "failures": self.failures,
            "ok": self.ok,
            "note": self.note,
        }


def verify_l6_is_abc(max_len: int = 6, cap: int = 200_000) -> L6Report:
    """Tabulate the 6-cycle rule up to max_len and run the anonymity,
    betweenness and consistency checks, the reduction identity over all
    concatenation pairs, and the agreement with the median function on
    non-alternate profiles; also report where the two functions part ways.
    """
    g = c6_graph()
    table = tabulate_function(
        g, max_len, lambda key: l6_eval(Profile.from_vertices(key)), cap=cap
    )
    failures = []
    res_a = check_axiom(table, "A")
    res_b = check_axiom(table, "B")
    res_c = check_axiom(table, "C")
    for res in (res_a, res_b, res_c):
        if not res.holds:
            failures.append(res.as_dict())

    reduction_ok = True
    keys = list(profile_keys(6, max_len - 1))
    for left in keys:
        for right in keys:
            if right < left or len(left) + len(right) > max_len:
                continue
            pi = C6Profile.from_profile(Profile.from_vertices(left))
            rho = C6Profile.from_profile(Profile.from_vertices(right))
            sigma = C6Profile.from_profile(Profile.from_vertices(left + right))
            tau = C6Profile(
                tuple(a + b for a, b in zip(pi.reduced(), rho.reduced()))
            )
            if sigma.reduced() != tau.reduced():
                reduction_ok = False
                failures.append({"reduction": [left, right]})

    med = tabulate_median(g, max_len, cap=cap)
    non_alt_ok = True
    count = 0
    for key in profile_keys(6, max_len):
        count += 1
        cp = C6Profile.from_profile(Profile.from_vertices(key))
        if not cp.is_alternate and table.table[key] != med.table[key]:
            non_alt_ok = False
            failures.append({"non_alternate_mismatch": list(key)})

    witness_key = (0, 2, 4)
    divergence = (witness_key, table.value(witness_key), med.value(witness_key))
    return L6Report(
        max_len=max_len,
        axiom_a=res_a.holds,
        axiom_b=res_b.holds,
        axiom_c=res_c.holds,
        reduction_identity=reduction_ok,
        non_alternate_matches_median=non_alt_ok,
        divergence_witness=divergence,
        profiles_checked=count,
        failures=failures,
    )
