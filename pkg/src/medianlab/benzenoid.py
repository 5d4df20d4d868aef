"""Benzenoids built from hexagonal cells, their three edge direction
classes, and the isometric embedding into a product of three trees.

Cells are axial coordinates (q, r) on a pointy-top hexagonal lattice.  A
cell's center sits at lattice point (2q + r, 3r) and its six corners at the
fixed offsets below, so vertex numbering, edge lists and class labels are
all reproducible from the cell set alone.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import InputError
from .graph import Graph
from .errors import BudgetError
from .profiles import canonical_profiles, count_canonical_profiles, f_vector

_CORNERS = ((0, 2), (1, 1), (1, -1), (0, -2), (-1, -1), (-1, 1))
_CELL_NEIGHBORS = ((1, 0), (-1, 0), (0, 1), (0, -1), (1, -1), (-1, 1))


def _corner(q: int, r: int, k: int) -> tuple[int, int]:
    cx, cy = 2 * q + r, 3 * r
    dx, dy = _CORNERS[k]
    return (cx + dx, cy + dy)


def edge_class(p: tuple[int, int], q: tuple[int, int]) -> int:
    """Direction class of a unit lattice edge: 1 vertical, 2 rising, 3 falling."""
    dx, dy = q[0] - p[0], q[1] - p[1]
    if dx == 0:
        return 1
    return 2 if dx * dy > 0 else 3


@dataclass
class Benzenoid:
    cells: tuple[tuple[int, int], ...]
    graph: Graph
    coords: tuple[tuple[int, int], ...]  # lattice point of each vertex
    edge_classes: dict  # (u,v) sorted -> 1|2|3
    hexagons: tuple[tuple[int, ...], ...]  # per cell, corners in cyclic order

    def class_edges(self, label: int) -> list[tuple[int, int]]:
        return sorted(e for e, c in self.edge_classes.items() if c == label)


def build_benzenoid(cells) -> Benzenoid:
    """Assemble the graph of a hole-free connected union of hexagon cells.

    Cell connectivity is BFS over cell adjacency; hole-freeness is the Euler
    count v - e + (cells + 1) = 2, which fails exactly when the union
    encloses extra faces.
    """
    cell_list = sorted(set((int(q), int(r)) for q, r in cells))
    if not cell_list:
        raise InputError("benzenoid needs at least one cell")
    cell_set = set(cell_list)
    seen = {cell_list[0]}
    queue = deque([cell_list[0]])
    while queue:
        q, r = queue.popleft()
        for dq, dr in _CELL_NEIGHBORS:
            nxt = (q + dq, r + dr)
            if nxt in cell_set and nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    if len(seen) < len(cell_set):
        stray = sorted(cell_set - seen)[0]
        raise InputError(f"cell set is disconnected at cell {stray}")

    points = sorted({_corner(q, r, k) for q, r in cell_list for k in range(6)})
    index = {p: i for i, p in enumerate(points)}
    edge_set = set()
    for q, r in cell_list:
        ring = [index[_corner(q, r, k)] for k in range(6)]
        for k in range(6):
            a, b = ring[k], ring[(k + 1) % 6]
            edge_set.add((min(a, b), max(a, b)))
    v, e, f = len(points), len(edge_set), len(cell_list) + 1
    if v - e + f != 2:
        raise InputError(
            f"cell set encloses holes: Euler count v-e+f = {v - e + f} != 2"
        )
    graph = Graph(v, sorted(edge_set))
    classes = {
        (a, b): edge_class(points[a], points[b]) for a, b in sorted(edge_set)
    }
    hexes = tuple(
        tuple(index[_corner(q, r, k)] for k in range(6)) for q, r in cell_list
    )
    return Benzenoid(tuple(cell_list), graph, tuple(points), classes, hexes)


def hexagons(b: Benzenoid) -> tuple[tuple[int, ...], ...]:
    return b.hexagons


def incomplete_hexagons(b: Benzenoid) -> list[tuple[int, int, int, int]]:
    """Length-3 paths using one edge of each class that lie in no hexagon."""
    g = b.graph
    hex_sets = [set(h) for h in b.hexagons]
    found = []
    for v1 in range(g.n):
        for v0 in g.neighbors(v1):
            for v2 in g.neighbors(v1):
                if v2 == v0:
                    continue
                for v3 in g.neighbors(v2):
                    if v3 in (v0, v1) or v0 > v3:
                        continue
                    labels = {
                        b.edge_classes[(min(v0, v1), max(v0, v1))],
                        b.edge_classes[(min(v1, v2), max(v1, v2))],
                        b.edge_classes[(min(v2, v3), max(v2, v3))],
                    }
                    if labels != {1, 2, 3}:
                        continue
                    if any({v0, v1, v2, v3} <= h for h in hex_sets):
                        continue
                    found.append((v0, v1, v2, v3))
    return sorted(found)


@dataclass
class TreeEmbedding:
    trees: tuple[Graph, Graph, Graph]
    phi: tuple[tuple[int, int, int], ...]  # vertex -> component ids

    def embedded_distance(self, u: int, v: int) -> int:
        return sum(
            t.dist[self.phi[u][i]][self.phi[v][i]] for i, t in enumerate(self.trees)
        )


def tree_embedding(b: Benzenoid) -> TreeEmbedding:
    """Split off each direction class, contract components, and map every
    vertex to its component triple; verifies the three factors are trees
    and that distances add up exactly."""
    g = b.graph
    trees = []
    coords = [[0] * g.n for _ in range(3)]
    for label in (1, 2, 3):
        removed = set(b.class_edges(label))
        comp = [-1] * g.n
        order = []
        for start in range(g.n):
            if comp[start] >= 0:
                continue
            comp[start] = len(order)
            order.append(start)
            queue = deque([start])
            while queue:
                x = queue.popleft()
                for y in g.neighbors(x):
                    key = (min(x, y), max(x, y))
                    if key in removed or comp[y] >= 0:
                        continue
                    comp[y] = comp[x]
                    queue.append(y)
        links = {
            (min(comp[a], comp[b]), max(comp[a], comp[b]))
            for a, b in removed
        }
        tree = Graph(len(order), sorted(links))
        if tree.edge_count != tree.n - 1:
            raise RuntimeError(
                f"class {label} contraction is not a tree "
                f"({tree.n} components, {tree.edge_count} links)"
            )
        trees.append(tree)
        coords[label - 1] = comp
    phi = tuple(
        (coords[0][v], coords[1][v], coords[2][v]) for v in range(g.n)
    )
    if len(set(phi)) != g.n:
        raise RuntimeError("tree embedding is not injective")
    embedding = TreeEmbedding(tuple(trees), phi)
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if embedding.embedded_distance(u, v) != g.dist[u][v]:
                raise RuntimeError(
                    f"tree embedding fails isometry at pair ({u}, {v})"
                )
    return embedding


@dataclass
class BenzenoidReport:
    cells: int
    gated_ok: bool
    opposition_ok: bool
    peakless_pairs_in_hexagons: bool
    medians_g2_connected: bool
    profiles_checked: int
    failures: list

    @property
    def ok(self) -> bool:
        return (
            self.gated_ok
            and self.opposition_ok
            and self.peakless_pairs_in_hexagons
            and self.medians_g2_connected
        )

    def as_dict(self) -> dict:
        return {
            "cells": self.cells,
            "gated_ok": self.gated_ok,
            "opposition_ok": self.opposition_ok,
            "peakless_pairs_in_hexagons": self.peakless_pairs_in_hexagons,
            "medians_g2_connected": self.medians_g2_connected,
            "profiles_checked": self.profiles_checked,
            "failures": self.failures,
            "ok": self.ok,
        }


def verify_benzenoid_properties(
    b: Benzenoid, max_support: int, max_mult: int, cap: int = 500_000
) -> BenzenoidReport:
    """Finite checks behind the benzenoid consensus results.

    (a) every hexagon and incomplete hexagon is gated;
    (b) each hexagon lies in the interval from any vertex x to the hexagon
        vertex opposite x's gate;
    (c) within the profile budget, every 2-pair where the total distance
        fails local peaklessness lies in a common hexagon;
    (d) within the budget, median sets are connected in the square of the
        graph.
    """
    g = b.graph
    failures = []

    gated_ok = True
    for hexa in b.hexagons:
        if not g.is_gated(hexa):
            gated_ok = False
            failures.append({"not_gated_hexagon": list(hexa)})
    for pth in incomplete_hexagons(b):
        if not g.is_gated(pth):
            gated_ok = False
            failures.append({"not_gated_incomplete_hexagon": list(pth)})

    opposition_ok = True
    for hexa in b.hexagons:
        ring = list(hexa)
        members = set(ring)
        for x in range(g.n):
            gate = g.gate(x, ring) if x not in members else x
            if gate is None:
                opposition_ok = False
                failures.append({"missing_gate": [x, ring]})
                continue
            opposite = ring[(ring.index(gate) + 3) % 6]
            if not members <= g.interval(x, opposite):
                opposition_ok = False
                failures.append({"opposition": [x, ring, opposite]})

    count = count_canonical_profiles(g.n, max_support, max_mult)
    if count > cap:
        raise BudgetError(f"profile budget {count} exceeds cap {cap}", count=count)

    hex_sets = [set(h) for h in b.hexagons]
    two_pairs = [
        (u, v)
        for u in range(g.n)
        for v in range(u + 1, g.n)
        if g.dist[u][v] == 2
    ]
    peakless_ok = True
    connected_ok = True
    checked = 0
    for profile in canonical_profiles(g.n, max_support, max_mult):
        checked += 1
        f = f_vector(g, profile)
        for u, v in two_pairs:
            hi = max(f[u], f[v])
            fine = any(
                f[w] < hi or f[u] == f[w] == f[v]
                for w in g.interval_interior(u, v)
            )
            if not fine and not any({u, v} <= h for h in hex_sets):
                peakless_ok = False
                failures.append(
                    {"peakless_pair_outside_hexagon": [u, v, profile.format()]}
                )
        best = min(f)
        med = sorted(v for v in range(g.n) if f[v] == best)
        seen = {med[0]}
        queue = deque([med[0]])
        pool = set(med)
        while queue:
            x = queue.popleft()
            for y in pool - seen:
                if g.dist[x][y] <= 2:
                    seen.add(y)
                    queue.append(y)
        if len(seen) != len(pool):
            connected_ok = False
            failures.append({"median_not_g2_connected": [profile.format(), med]})

    return BenzenoidReport(
        cells=len(b.cells),
        gated_ok=gated_ok,
        opposition_ok=opposition_ok,
        peakless_pairs_in_hexagons=peakless_ok,
        medians_g2_connected=connected_ok,
        profiles_checked=checked,
        failures=failures,
    )
