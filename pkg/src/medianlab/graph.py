"""Immutable simple connected graphs with cached all-pairs distances.

Distances are hop counts, computed once by breadth-first search from every
vertex.  Every other primitive (intervals, gates, balls, quasi-medians) is a
pure read of that table, so instances are safe to share freely.
"""

from __future__ import annotations

import hashlib
from collections import deque
from collections.abc import Iterable

from .errors import DisconnectedGraphError, InputError


class Graph:
    """Undirected simple connected graph on vertices 0..n-1."""

    __slots__ = ("n", "adj", "dist", "_edges", "_bipartition")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if n < 1:
            raise InputError(f"vertex count must be positive, got {n}")
        seen = set()
        adj = [[] for _ in range(n)]
        for e in edges:
            try:
                u, v = e
            except (TypeError, ValueError):
                raise InputError(f"malformed edge {e!r}") from None
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge {e!r} out of range 0..{n - 1}")
            if u == v:
                raise InputError(f"self-loop at vertex {u} not allowed")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise InputError(f"duplicate edge {key}")
            seen.add(key)
            adj[u].append(v)
            adj[v].append(u)
        self.n = n
        self.adj = tuple(tuple(sorted(nbrs)) for nbrs in adj)
        self._edges = tuple(sorted(seen))
        self.dist = tuple(self._bfs(s) for s in range(n))
        self._bipartition = self._two_color()

    def _bfs(self, source: int) -> tuple[int, ...]:
        dist = [-1] * self.n
        dist[source] = 0
        queue = deque([source])
        while queue:
            x = queue.popleft()
            for y in self.adj[x]:
                if dist[y] < 0:
                    dist[y] = dist[x] + 1
                    queue.append(y)
        for v, d in enumerate(dist):
            if d < 0:
                raise DisconnectedGraphError(source, v)
        return tuple(dist)

    def _two_color(self):
        color = [-1] * self.n
        color[0] = 0
        queue = deque([0])
        while queue:
            x = queue.popleft()
            for y in self.adj[x]:
                if color[y] < 0:
                    color[y] = 1 - color[x]
                    queue.append(y)
                elif color[y] == color[x]:
                    return None
        side0 = frozenset(v for v in range(self.n) if color[v] == 0)
        return (side0, frozenset(range(self.n)) - side0)

    # -- basic accessors ---------------------------------------------------

    def edges(self) -> tuple[tuple[int, int], ...]:
        return self._edges

    @property
    def edge_count(self) -> int:
        return len(self._edges)

    def vertices(self) -> range:
        return range(self.n)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def d(self, u: int, v: int) -> int:
        return self.dist[u][v]

    def is_adjacent(self, u: int, v: int) -> bool:
        return self.dist[u][v] == 1

    @property
    def diameter(self) -> int:
        return max(max(row) for row in self.dist)

    @property
    def is_bipartite(self) -> bool:
        return self._bipartition is not None

    def bipartition(self) -> tuple[frozenset[int], frozenset[int]]:
        """The two color classes, the one containing vertex 0 first."""
        if self._bipartition is None:
            raise InputError("graph is not bipartite")
        return self._bipartition

    def fingerprint(self) -> dict:
        text = f"{self.n} {len(self._edges)}\n" + "".join(
            f"{u} {v}\n" for u, v in self._edges
        )
        return {
            "vertices": self.n,
            "edges": len(self._edges),
            "hash": hashlib.sha256(text.encode()).hexdigest()[:16],
        }

    # -- metric primitives ---------------------------------------------------

    def interval(self, u: int, v: int) -> frozenset[int]:
        """All vertices on shortest (u,v)-paths."""
        duv = self.dist[u][v]
        du, dv = self.dist[u], self.dist[v]
        return frozenset(w for w in range(self.n) if du[w] + dv[w] == duv)

    def interval_interior(self, u: int, v: int) -> frozenset[int]:
        return self.interval(u, v) - {u, v}

    def ball(self, v: int, r: int) -> frozenset[int]:
        if r < 0:
            raise InputError(f"radius must be nonnegative, got {r}")
        dv = self.dist[v]
        return frozenset(x for x in range(self.n) if dv[x] <= r)

    def half_ball(self, v: int, r: int, side: int) -> frozenset[int]:
        """Ball intersected with the color class containing the vertex `side`."""
        cls0, cls1 = self.bipartition()
        mask = cls0 if side in cls0 else cls1
        return self.ball(v, r) & mask

    def gate(self, x: int, members: Iterable[int]):
        """The unique vertex of `members` on shortest paths from x to all of
        them, or None if no such vertex exists."""
        target = sorted(set(members))
        if not target:
            raise InputError("gate of an empty set is undefined")
        dx = self.dist[x]
        for cand in target:
            dc = self.dist[cand]
            if all(dx[cand] + dc[y] == dx[y] for y in target):
                return cand
        return None

    def is_gated(self, members: Iterable[int]) -> bool:
        target = sorted(set(members))
        if not target:
            raise InputError("gatedness of an empty set is undefined")
        inside = set(target)
        return all(
            self.gate(x, target) is not None
            for x in range(self.n)
            if x not in inside
        )

    def is_metric_triangle(self, v1: int, v2: int, v3: int) -> bool:
        """Pairwise intervals meet only in the shared endpoints."""
        i12 = self.interval(v1, v2)
        i13 = self.interval(v1, v3)
        i23 = self.interval(v2, v3)
        return (
            i12 & i13 == {v1}
            and i12 & i23 == {v2}
            and i13 & i23 == {v3}
        )

    def quasi_median(self, x: int, y: int, z: int) -> tuple[int, int, int]:
        """A metric triangle (v1,v2,v3) splitting the three pairwise
        distances of x,y,z, lexicographically smallest among valid triples.

        A size-0 result means the triplet has a median vertex.
        """
        d = self.dist
        c1 = sorted(self.interval(x, y) & self.interval(x, z))
        c2 = sorted(self.interval(y, x) & self.interval(y, z))
        c3 = sorted(self.interval(z, x) & self.interval(z, y))
        for v1 in c1:
            for v2 in c2:
                if d[x][y] != d[x][v1] + d[v1][v2] + d[v2][y]:
                    continue
                for v3 in c3:
                    if d[y][z] != d[y][v2] + d[v2][v3] + d[v3][z]:
                        continue
                    if d[z][x] != d[z][v3] + d[v3][v1] + d[v1][x]:
                        continue
                    if self.is_metric_triangle(v1, v2, v3):
                        return (v1, v2, v3)
        raise RuntimeError("no quasi-median found; distance table corrupt")


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Validate and build a graph, rejecting malformed or disconnected input."""
    return Graph(n, edges)


# -- generators ---------------------------------------------------------------
#
# Vertex numbering is fixed so that identical parameters always produce an
# identical edge list:
#   cycle k       : v_i ~ v_{i+1 mod k}, k >= 3
#   path k        : 0-1-...-(k-1)
#   complete k    : all pairs
#   kmn m n       : left part 0..m-1, right part m..m+n-1
#   hypercube d   : vertices are d-bit numbers, edges flip one bit
#   bn n          : a_i = i-1, b_j = n+j-1; a_i ~ b_j iff i != j (n >= 3)
#   bhat n        : bn n plus a = 2n ~ all b_j and b = 2n+1 ~ all a_i, a ~ b
#   grid m n      : vertex (i,j) -> i*n+j, 4-neighbor lattice
#   tree p1,...   : vertex i+1 hangs below parent p_i (p_i <= i)


def cycle(k: int) -> Graph:
    if k < 3:
        raise InputError(f"cycle needs at least 3 vertices, got {k}")
    return Graph(k, [(i, (i + 1) % k) for i in range(k)])


def path(k: int) -> Graph:
    if k < 1:
        raise InputError(f"path needs at least 1 vertex, got {k}")
    return Graph(k, [(i, i + 1) for i in range(k - 1)])


def complete(k: int) -> Graph:
    if k < 1:
        raise InputError(f"complete graph needs at least 1 vertex, got {k}")
    return Graph(k, [(i, j) for i in range(k) for j in range(i + 1, k)])


def complete_bipartite(m: int, n: int) -> Graph:
    if m < 1 or n < 1:
        raise InputError(f"complete bipartite needs positive parts, got {m},{n}")
    return Graph(m + n, [(i, m + j) for i in range(m) for j in range(n)])


def hypercube(d: int) -> Graph:
    if d < 1:
        raise InputError(f"hypercube dimension must be >= 1, got {d}")
    edges = [
        (v, v | (1 << b))
        for v in range(1 << d)
        for b in range(d)
        if not v & (1 << b)
    ]
    return Graph(1 << d, edges)


def bn(n: int) -> Graph:
    """K_{n,n} minus a perfect matching: a_i ~ b_j iff i != j."""
    if n < 3:
        raise InputError(f"bn needs n >= 3 to stay connected, got {n}")
    return Graph(
        2 * n,
        [(i, n + j) for i in range(n) for j in range(n) if i != j],
    )


def bhat(n: int) -> Graph:
    """bn(n) extended by two adjacent apexes covering the two sides."""
    if n < 3:
        raise InputError(f"bhat needs n >= 3, got {n}")
    edges = [(i, n + j) for i in range(n) for j in range(n) if i != j]
    a, b = 2 * n, 2 * n + 1
    edges += [(a, n + j) for j in range(n)]
    edges += [(b, i) for i in range(n)]
    edges.append((a, b))
    return Graph(2 * n + 2, edges)


def grid(m: int, n: int) -> Graph:
    if m < 1 or n < 1:
        raise InputError(f"grid needs positive sides, got {m},{n}")
    edges = []
    for i in range(m):
        for j in range(n):
            if j + 1 < n:
                edges.append((i * n + j, i * n + j + 1))
            if i + 1 < m:
                edges.append((i * n + j, (i + 1) * n + j))
    return Graph(m * n, edges)


def tree_from_parent_list(parents: Iterable[int]) -> Graph:
    parents = list(parents)
    for i, p in enumerate(parents):
        if not 0 <= p <= i:
            raise InputError(f"parent of vertex {i + 1} must be in 0..{i}, got {p}")
    return Graph(len(parents) + 1, [(i + 1, p) for i, p in enumerate(parents)])


_GENERATORS = {
    "cycle": (cycle, 1),
    "path": (path, 1),
    "complete": (complete, 1),
    "kmn": (complete_bipartite, 2),
    "complete_bipartite": (complete_bipartite, 2),
    "hypercube": (hypercube, 1),
    "bn": (bn, 1),
    "bhat": (bhat, 1),
    "grid": (grid, 2),
    "tree": (tree_from_parent_list, None),
}


def generator_names() -> tuple[str, ...]:
    return tuple(sorted(_GENERATORS))


def generate(spec: str) -> Graph:
    """Build a named graph from a spec string such as 'cycle:6' or 'grid:3,4'."""
    name, sep, arg_text = spec.partition(":")
    name = name.strip().lower()
    if name not in _GENERATORS:
        raise InputError(f"unknown generator {name!r}; known: {', '.join(generator_names())}")
    fn, arity = _GENERATORS[name]
    if not sep:
        raise InputError(f"generator {name!r} needs parameters, e.g. '{name}:4'")
    try:
        args = [int(tok) for tok in arg_text.replace(",", " ").split()]
    except ValueError:
        raise InputError(f"non-integer parameter in {spec!r}") from None
    if arity is None:
        return fn(args)
    if len(args) != arity:
        raise InputError(f"generator {name!r} takes {arity} parameter(s), got {len(args)}")
    return fn(*args)
