"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with `pytest tests/test_acceptance.py -v -s` to see the per-criterion
lines; every stated tolerance and runtime bound is asserted here.
"""

import random
import time

import pytest

from medianlab.benzenoid import build_benzenoid, incomplete_hexagons, tree_embedding
from medianlab.classify import (
    bipartite_helly_via_half_balls,
    bipartite_helly_via_interval_condition,
    is_bipartite_helly,
)
from medianlab.consensus import (
    c6_graph,
    check_axiom,
    tabulate_median,
    verify_l6_is_abc,
    l6_eval,
)
from medianlab.graph import (
    bhat,
    bn,
    complete,
    complete_bipartite,
    cycle,
    hypercube,
    path,
)
from medianlab.hypergraphs import Hypergraph, build_counterexample, incidence_graph
from medianlab.pairing import (
    Pairing,
    auxiliary_graph,
    double_pairing_property,
    has_fractional_perfect_b_matching,
    has_perfect_pairing,
    local_graph,
    matching_stable_set_check,
    pairing_property_bounded_search,
    perfect_b_matching,
)
from medianlab.profiles import (
    Profile,
    check_unimodal_equals_connected,
    median_set,
    total_distance,
)

from conftest import random_connected_bipartite, random_tree


def report(number, name, ok):
    print(f"ACCEPTANCE {number:2d} {name}: {'PASS' if ok else 'FAIL'}")
    assert ok, f"criterion {number} ({name}) failed"


@pytest.fixture(scope="module")
def corpus():
    return {
        "k3": complete(3),
        "c4": cycle(4),
        "c6": cycle(6),
        "path5": path(5),
        "k23": complete_bipartite(2, 3),
        "q3": hypercube(3),
        "b4": bn(4),
        "bhat4": bhat(4),
    }


def test_criterion_01_c6_divergence():
    started = time.monotonic()
    profile = Profile.parse("0 2 4")
    ok = (
        l6_eval(profile) == {0}
        and median_set(c6_graph(), profile) == {0, 2, 4}
        and time.monotonic() - started < 1.0
    )
    report(1, "six-cycle rule diverges from the median set", ok)


def test_criterion_02_l6_is_abc_within_budget():
    started = time.monotonic()
    result = verify_l6_is_abc(6)
    elapsed = time.monotonic() - started
    ok = (
        result.axiom_a
        and result.axiom_b
        and result.axiom_c
        and result.profiles_checked == 923
        and elapsed < 60.0
    )
    report(2, "six-cycle rule satisfies A, B, C up to length 6", ok)


def test_criterion_03_median_axioms_on_corpus(corpus):
    violations = []
    for name, g in corpus.items():
        table = tabulate_median(g, 5)
        for axiom in ("A", "B", "C", "T", "Tminus", "T2"):
            if not check_axiom(table, axiom).holds:
                violations.append((name, axiom))
        for k in range(1, g.diameter + 1):
            if not check_axiom(table, "Ek", k=k).holds:
                violations.append((name, f"E{k}"))
    report(3, "median function satisfies all axioms at length 5", not violations)


def test_criterion_04_weak_duality(corpus):
    rng = random.Random(20240)
    graphs = list(corpus.values())
    violations = 0
    for _ in range(10_000):
        g = rng.choice(graphs)
        items = rng.choices(range(g.n), k=rng.choice([2, 4, 6]))
        profile = Profile.from_vertices(items)
        rng.shuffle(items)
        pairing = Pairing.from_pairs(
            (items[2 * i], items[2 * i + 1]) for i in range(len(items) // 2)
        )
        v = rng.randrange(g.n)
        cost = pairing.cost(g)
        fv = total_distance(g, profile, v)
        inside = all(v in g.interval(a, b) for a, b in pairing.pairs)
        if cost > fv or (cost == fv) != inside:
            violations += 1
    report(4, "weak duality with tight-iff-between over 10^4 samples", violations == 0)


def test_criterion_05_three_cube_pairing_failure():
    witness = pairing_property_bounded_search(hypercube(3), 8, 2)
    found = witness is not None and has_perfect_pairing(hypercube(3), witness) is None
    clean = pairing_property_bounded_search(complete_bipartite(2, 3), 5, 2) is None
    report(5, "three-cube fails the pairing search, K_{2,3} passes", found and clean)


def test_criterion_06_counterexample_constructions():
    started = time.monotonic()
    cx = build_counterexample("pairing")
    m = cx.seed_vertices // 2
    pairing_ok = (
        is_bipartite_helly(cx.graph)
        and cx.profile.total == 6
        and has_perfect_pairing(cx.graph, cx.profile) is None
        and total_distance(cx.graph, cx.profile, cx.hub) == 4 * m
    )
    first_elapsed = time.monotonic() - started

    started = time.monotonic()
    cx2 = build_counterexample("double_pairing")
    verdict = double_pairing_property(cx2.graph)
    double_ok = (
        is_bipartite_helly(cx2.graph)
        and not verdict.holds
        and verdict.witness.is_even
        and all(k % 2 == 0 for _, k in verdict.witness.counts)
        and has_perfect_pairing(cx2.graph, verdict.witness) is None
        and has_perfect_pairing(cx2.graph, verdict.witness.power(2)) is None
    )
    second_elapsed = time.monotonic() - started
    ok = pairing_ok and double_ok and first_elapsed < 300 and second_elapsed < 300
    report(6, "both counterexample constructions behave as built", ok)


def test_criterion_07_half_integrality(corpus):
    rng = random.Random(7_007)
    graphs = list(corpus.values())
    disagreements = 0
    for _ in range(1_000):
        g = rng.choice(graphs)
        u = rng.randrange(g.n)
        aux = auxiliary_graph(g, u)
        support = rng.sample(range(g.n), rng.randint(1, min(5, g.n)))
        b = {v: rng.choice([2, 4]) for v in support}
        fractional = has_fractional_perfect_b_matching(aux, b).feasible
        edges = list(aux.edges) + [(u, u)]
        integral = perfect_b_matching(aux.n, edges, b) is not None
        if fractional != integral:
            disagreements += 1
    report(7, "fractional equals integral for even demands, 10^3 samples",
           disagreements == 0)


def test_criterion_08_power_pairings_collapse(corpus):
    rng = random.Random(8_808)
    graphs = list(corpus.values())
    hits = 0
    violations = 0
    while hits < 500:
        g = rng.choice(graphs)
        support = rng.sample(range(g.n), rng.randint(1, 3))
        pi = Profile.from_counts({v: rng.randint(1, 2) for v in support})
        k = rng.choice([2, 3])
        if has_perfect_pairing(g, pi.power(2 * k)) is None:
            continue
        hits += 1
        if has_perfect_pairing(g, pi.power(2)) is None:
            violations += 1
    report(8, "profiles pairable at power 4 or 6 are pairable doubled",
           violations == 0)


def test_criterion_09_recognizer_equivalence(corpus):
    rng = random.Random(9_909)
    disagreements = 0
    tested = 0
    for g in corpus.values():
        if not g.is_bipartite:
            continue
        tested += 1
        if bipartite_helly_via_half_balls(g) != bipartite_helly_via_interval_condition(g):
            disagreements += 1
    for _ in range(200):
        g = random_connected_bipartite(rng, max_n=10)
        tested += 1
        if bipartite_helly_via_half_balls(g) != bipartite_helly_via_interval_condition(g):
            disagreements += 1
    report(9, f"half-ball and interval recognizers agree on {tested} graphs",
           disagreements == 0)


def test_criterion_10_local_to_global():
    rng = random.Random(10_010)
    single_edge = Hypergraph.from_lists(2, [[0, 1]])
    two_edges = Hypergraph.from_lists(3, [[0, 1], [1, 2]])
    candidates = [
        incidence_graph(single_edge).graph,
        incidence_graph(two_edges).graph,
        complete_bipartite(2, 3),
        complete_bipartite(2, 4),
        random_tree(rng, 6),
        random_tree(rng, 7),
        build_counterexample("double_pairing").graph,
    ]
    disagreements = 0
    for g in candidates:
        assert is_bipartite_helly(g)
        global_verdict = double_pairing_property(g).holds
        local_verdict = all(
            matching_stable_set_check(local_graph(g, u).graph, "double").holds
            for u in range(g.n)
        )
        if global_verdict != local_verdict:
            disagreements += 1
    report(10, "double-pairing property equals all-local matching checks",
           disagreements == 0)


def test_criterion_11_connected_medians():
    # Median graphs pass at power 1; K_{2,3} and the 6-cycle are bipartite
    # Helly / benzenoid cases and pass at power 2.  At power 1 the profile
    # (2,3,4) on K_{2,3} has the two degree-3 vertices as its median set,
    # which is disconnected, and the checker must detect that.
    started = time.monotonic()
    rng = random.Random(11_011)
    failures = []
    for g in (hypercube(3), random_tree(rng, 8), random_tree(rng, 9)):
        rep = check_unimodal_equals_connected(g, 1, 4, 2)
        if not rep.ok:
            failures.append(rep.failures[0])
    for g in (complete_bipartite(2, 3), cycle(6)):
        rep = check_unimodal_equals_connected(g, 2, 4, 2)
        if not rep.ok:
            failures.append(rep.failures[0])
    detector = check_unimodal_equals_connected(complete_bipartite(2, 3), 1, 4, 2)
    caught = any(
        rec["profile"] == Profile.parse("2 3 4") and not rec["connected"]
        for rec in detector.failures
    )
    elapsed = time.monotonic() - started
    report(11, "unimodal, connected and peakless verdicts all hold in budget",
           not failures and caught and elapsed < 300)


def test_criterion_12_benzenoids():
    one = build_benzenoid([(0, 0)])
    embedding = tree_embedding(one)  # raises unless isometric
    q3 = hypercube(3)
    codes = [
        sum(bit << i for i, bit in enumerate(triple)) for triple in embedding.phi
    ]
    into_cube = all(
        one.graph.d(u, v) == q3.d(codes[u], codes[v])
        for u in range(6)
        for v in range(6)
    )
    gated = True
    for cells in ([(0, 0)], [(0, 0), (1, 0)],
                  [(0, 0), (1, 0), (2, 0)], [(0, 0), (1, 0), (1, 1)]):
        b = build_benzenoid(cells)
        tree_embedding(b)
        for ring in b.hexagons:
            gated &= b.graph.is_gated(ring)
        for p in incomplete_hexagons(b):
            gated &= b.graph.is_gated(p)
    report(12, "benzenoid embeddings are isometric and hexagons gated",
           into_cube and gated)


def test_criterion_13_feasible_matchings_pin_medians(corpus):
    rng = random.Random(13_013)
    graphs = list(corpus.values())
    violations = 0
    for _ in range(1_000):
        g = rng.choice(graphs)
        u = rng.randrange(g.n)
        aux = auxiliary_graph(g, u)
        edges = list(aux.edges) + [(u, u)]
        chosen = rng.choices(edges, k=rng.randint(1, 6))
        b = {}
        for a, c in chosen:
            b[a] = b.get(a, 0) + (2 if a == c else 1)
            if a != c:
                b[c] = b.get(c, 0) + 1
        if not has_fractional_perfect_b_matching(aux, b).feasible:
            violations += 1
            continue
        if u not in median_set(g, Profile.from_counts(b)):
            violations += 1
    report(13, "feasible fractional matchings certify median membership",
           violations == 0)
