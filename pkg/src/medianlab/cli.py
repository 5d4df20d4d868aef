"""Command-line front end.

Every verb prints one JSON report on stdout (schema 1, byte-stable for
identical inputs) and a short human summary with timing on stderr.  Exit
codes: 0 when the checked property holds or the command is informational,
1 when a property fails and a witness is attached, 2 for usage, format or
budget errors.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from . import benzenoid as bz
from . import consensus as cs
from . import formats
from . import hypergraphs as hg
from . import pairing as pr
from . import profiles as pf
from .classify import classify as classify_graph
from .errors import BudgetError, FormatError, InputError
from .graph import Graph, generate, generator_names


def load_graph(target: str) -> Graph:
    name = target.partition(":")[0].lower()
    if ":" in target and name in generator_names():
        return generate(target)
    path = Path(target)
    if not path.exists():
        raise InputError(f"no such file or generator: {target!r}")
    return formats.graph_from_text(path.read_text())


def _maybe_write(args, payload: str) -> None:
    if getattr(args, "out", None):
        Path(args.out).write_text(payload)


# -- command handlers; each returns (body, exit_code) ---------------------------


def cmd_classify(args):
    g = load_graph(args.target)
    report = classify_graph(g)
    return {"graph": g.fingerprint(), "verdicts": report.as_dict()}, 0


def cmd_median(args):
    g = load_graph(args.target)
    profile = pf.Profile.parse(args.profile)
    med = sorted(pf.median_set(g, profile))
    body = {
        "graph": g.fingerprint(),
        "verdicts": {
            "median_set": med,
            "min_total_distance": (
                pf.total_distance(g, profile, med[0]) if profile.counts else 0
            ),
        },
    }
    return body, 0


def cmd_verify_connected_medians(args):
    g = load_graph(args.target)
    report = pf.check_unimodal_equals_connected(
        g, args.power, args.support, args.mult, cap=args.cap
    )
    return {"graph": g.fingerprint(), "verdicts": report.as_dict()}, 0 if report.ok else 1


def cmd_pairing_check(args):
    g = load_graph(args.target)
    profile = pf.Profile.parse(args.profile)
    if not profile.counts or not profile.is_even:
        raise InputError("pairing check needs a nonempty even profile")
    hit = pr.has_perfect_pairing(g, profile)
    if hit is None:
        body = {
            "graph": g.fingerprint(),
            "verdicts": {"perfect_pairing": False},
            "witnesses": {"profile": profile.format()},
        }
        return body, 1
    pairing, vertex = hit
    body = {
        "graph": g.fingerprint(),
        "verdicts": {
            "perfect_pairing": True,
            "pairing": [list(p) for p in pairing.pairs],
            "median_vertex": vertex,
            "cost": pairing.cost(g),
        },
    }
    return body, 0


def cmd_pairing_search(args):
    g = load_graph(args.target)
    witness = pr.pairing_property_bounded_search(g, args.support, args.mult)
    budget = {"support": args.support, "mult": args.mult}
    if witness is None:
        body = {
            "graph": g.fingerprint(),
            "verdicts": {"unpairable_profile_found": False},
            "budget": budget,
        }
        return body, 0
    body = {
        "graph": g.fingerprint(),
        "verdicts": {"unpairable_profile_found": True},
        "witnesses": {"profile": witness.format()},
        "budget": budget,
    }
    return body, 1


def cmd_pairing_double(args):
    g = load_graph(args.target)
    result = pr.double_pairing_property(g, cap=args.cap)
    body = {"graph": g.fingerprint(), "verdicts": result.as_dict()}
    return body, 0 if result.holds else 1


def cmd_pairing_local(args):
    g = load_graph(args.target)
    if not 0 <= args.vertex < g.n:
        raise InputError(f"vertex {args.vertex} out of range")
    local = pr.local_graph(g, args.vertex)
    result = pr.matching_stable_set_check(
        local.graph, args.variant, args.support, args.mult, cap=args.cap
    )
    body = {
        "graph": g.fingerprint(),
        "verdicts": {
            "local_vertices": list(local.vertices),
            **result.as_dict(),
        },
    }
    return body, 0 if result.holds else 1


def cmd_construct(args):
    if args.what in ("bn", "bhat"):
        g = generate(f"{args.what}:{args.n}")
        text = formats.graph_to_text(g)
        _maybe_write(args, text)
        return {"graph": g.fingerprint(), "verdicts": {"graph_text": text}}, 0
    if args.what == "incidence":
        h = formats.hypergraph_from_text(Path(args.hypergraph).read_text())
        inc = hg.incidence_graph(h)
        text = formats.graph_to_text(inc.graph)
        _maybe_write(args, text)
        body = {
            "graph": inc.graph.fingerprint(),
            "verdicts": {
                "graph_text": text,
                "hub": inc.hub,
                "labels": inc.labels(),
            },
        }
        return body, 0
    if args.what == "counterexample":
        kind = "double_pairing" if args.kind == "double" else "pairing"
        cx = hg.build_counterexample(kind)
        text = formats.graph_to_text(cx.graph)
        _maybe_write(args, text)
        body = {
            "graph": cx.graph.fingerprint(),
            "verdicts": {**cx.as_dict(), "graph_text": text},
        }
        return body, 0
    raise InputError(f"unknown construct target {args.what!r}")


def _load_consensus(g: Graph, name: str, max_len: int) -> cs.TabulatedConsensus:
    if name == "med":
        return cs.tabulate_median(g, max_len)
    if name == "l6":
        if g.edges() != cs.c6_graph().edges():
            raise InputError("the l6 rule is defined on cycle:6 only")
        return cs.tabulate_function(
            g, max_len, lambda key: cs.l6_eval(pf.Profile.from_vertices(key))
        )
    return cs.table_from_text(g, Path(name).read_text())


def cmd_consensus_tabulate_med(args):
    g = load_graph(args.target)
    table = cs.tabulate_median(g, args.max_len)
    text = cs.table_to_text(table)
    _maybe_write(args, text)
    body = {
        "graph": g.fingerprint(),
        "verdicts": {"entries": len(table.table), "table_text": text},
    }
    return body, 0


def cmd_consensus_check(args):
    g = load_graph(args.target)
    table = _load_consensus(g, args.function, args.max_len)
    result = cs.check_axiom(table, args.axiom, k=args.k)
    body = {"graph": g.fingerprint(), "verdicts": result.as_dict()}
    return body, 0 if result.holds else 1


def cmd_consensus_l6(args):
    profile = pf.Profile.parse(args.profile)
    value = sorted(cs.l6_eval(profile))
    med = sorted(pf.median_set(cs.c6_graph(), profile))
    body = {
        "graph": cs.c6_graph().fingerprint(),
        "verdicts": {"l6": value, "median": med},
    }
    return body, 0


def cmd_consensus_verify_l6(args):
    report = cs.verify_l6_is_abc(args.max_len)
    body = {
        "graph": cs.c6_graph().fingerprint(),
        "verdicts": report.as_dict(),
    }
    return body, 0 if report.ok else 1


def cmd_consensus_compare(args):
    g = load_graph(args.target)
    left = _load_consensus(g, args.left, args.max_len)
    right = _load_consensus(g, args.right, args.max_len)
    diffs = cs.compare_functions(left, right)
    body = {
        "graph": g.fingerprint(),
        "verdicts": {"divergences": len(diffs)},
        "witnesses": {
            "profiles": [
                {
                    "profile": list(key),
                    "left": sorted(a),
                    "right": sorted(b),
                }
                for key, a, b in diffs[:50]
            ]
        },
    }
    return body, 0 if not diffs else 1


def cmd_benzenoid_build(args):
    b = formats.cells_from_text(Path(args.cells).read_text())
    body = {
        "graph": b.graph.fingerprint(),
        "verdicts": {
            "cells": len(b.cells),
            "vertices": b.graph.n,
            "edges": b.graph.edge_count,
            "hexagons": [list(h) for h in b.hexagons],
            "incomplete_hexagons": [list(p) for p in bz.incomplete_hexagons(b)],
            "graph_text": formats.graph_to_text(b.graph),
        },
    }
    return body, 0


def cmd_benzenoid_embed(args):
    b = formats.cells_from_text(Path(args.cells).read_text())
    emb = bz.tree_embedding(b)
    body = {
        "graph": b.graph.fingerprint(),
        "verdicts": {
            "tree_sizes": [t.n for t in emb.trees],
            "phi": [list(t) for t in emb.phi],
            "isometric": True,
        },
    }
    return body, 0


def cmd_benzenoid_verify(args):
    b = formats.cells_from_text(Path(args.cells).read_text())
    report = bz.verify_benzenoid_properties(b, args.support, args.mult, cap=args.cap)
    body = {"graph": b.graph.fingerprint(), "verdicts": report.as_dict()}
    return body, 0 if report.ok else 1


def cmd_corpus(args):
    manifest = json.loads(Path(args.manifest).read_text())
    entries = manifest.get("entries", [])
    results = []
    worst = 0
    for entry in entries:
        argv = None
        try:
            argv = entry["argv"] if isinstance(entry, dict) else list(entry)
            body, code = run([str(a) for a in argv])
        except (InputError, FormatError, BudgetError, OSError,
                KeyError, TypeError, json.JSONDecodeError) as exc:
            body, code = {"error": str(exc)}, 2
        except SystemExit:
            body, code = {"error": f"unusable command line {argv!r}"}, 2
        results.append({"argv": argv, "exit": code, "report": body})
        if code == 2:
            worst = 2
        elif code == 1 and worst != 2:
            worst = 1
    body = {"verdicts": {"entries": len(results), "exit": worst}, "runs": results}
    return body, worst


HANDLERS = {
    "classify": cmd_classify,
    "median": cmd_median,
    "verify-connected-medians": cmd_verify_connected_medians,
    "pairing.check": cmd_pairing_check,
    "pairing.search": cmd_pairing_search,
    "pairing.double": cmd_pairing_double,
    "pairing.local": cmd_pairing_local,
    "construct": cmd_construct,
    "consensus.tabulate-med": cmd_consensus_tabulate_med,
    "consensus.check": cmd_consensus_check,
    "consensus.l6": cmd_consensus_l6,
    "consensus.verify-l6": cmd_consensus_verify_l6,
    "consensus.compare": cmd_consensus_compare,
    "benzenoid.build": cmd_benzenoid_build,
    "benzenoid.embed": cmd_benzenoid_embed,
    "benzenoid.verify": cmd_benzenoid_verify,
    "corpus": cmd_corpus,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="medianlab",
        description="median sets, pairings and consensus checks on finite graphs",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("classify", help="recognize graph classes")
    p.add_argument("target")

    p = sub.add_parser("median", help="median set of a profile")
    p.add_argument("target")
    p.add_argument("--profile", required=True)

    p = sub.add_parser("verify-connected-medians")
    p.add_argument("target")
    p.add_argument("--power", type=int, default=1)
    p.add_argument("--support", type=int, required=True)
    p.add_argument("--mult", type=int, required=True)
    p.add_argument("--cap", type=int, default=2_000_000)

    p = sub.add_parser("pairing")
    psub = p.add_subparsers(dest="sub", required=True)
    q = psub.add_parser("check")
    q.add_argument("target")
    q.add_argument("--profile", required=True)
    q = psub.add_parser("search")
    q.add_argument("target")
    q.add_argument("--support", type=int, required=True)
    q.add_argument("--mult", type=int, required=True)
    q = psub.add_parser("double")
    q.add_argument("target")
    q.add_argument("--cap", type=int, default=1 << 20)
    q = psub.add_parser("local")
    q.add_argument("target")
    q.add_argument("--vertex", type=int, required=True)
    q.add_argument("--variant", choices=("double", "single"), default="double")
    q.add_argument("--support", type=int, default=None)
    q.add_argument("--mult", type=int, default=None)
    q.add_argument("--cap", type=int, default=1 << 20)

    p = sub.add_parser("construct")
    csub = p.add_subparsers(dest="what", required=True)
    for name in ("bn", "bhat"):
        q = csub.add_parser(name)
        q.add_argument("--n", type=int, required=True)
        q.add_argument("--out")
    q = csub.add_parser("incidence")
    q.add_argument("hypergraph")
    q.add_argument("--out")
    q = csub.add_parser("counterexample")
    q.add_argument("--kind", choices=("pairing", "double"), required=True)
    q.add_argument("--out")

    p = sub.add_parser("consensus")
    csub = p.add_subparsers(dest="sub", required=True)
    q = csub.add_parser("tabulate-med")
    q.add_argument("target")
    q.add_argument("--max-len", type=int, required=True)
    q.add_argument("--out")
    q = csub.add_parser("check")
    q.add_argument("target")
    q.add_argument("--axiom", required=True, choices=cs.AXIOMS)
    q.add_argument("--max-len", type=int, required=True)
    q.add_argument("--function", default="med", help="med, l6, or a table file")
    q.add_argument("--k", type=int, default=None, help="size parameter for Ek")
    q = csub.add_parser("l6")
    q.add_argument("--profile", required=True)
    q = csub.add_parser("verify-l6")
    q.add_argument("--max-len", type=int, default=6)
    q = csub.add_parser("compare")
    q.add_argument("target")
    q.add_argument("--max-len", type=int, required=True)
    q.add_argument("--left", required=True)
    q.add_argument("--right", required=True)

    p = sub.add_parser("benzenoid")
    bsub = p.add_subparsers(dest="sub", required=True)
    for name in ("build", "embed"):
        q = bsub.add_parser(name)
        q.add_argument("cells")
    q = bsub.add_parser("verify")
    q.add_argument("cells")
    q.add_argument("--support", type=int, required=True)
    q.add_argument("--mult", type=int, required=True)
    q.add_argument("--cap", type=int, default=500_000)

    p = sub.add_parser("corpus")
    p.add_argument("manifest")

    return parser


def run(argv):
    """Dispatch one command line; returns (report body, exit code)."""
    args = build_parser().parse_args(argv)
    key = args.verb if not getattr(args, "sub", None) else f"{args.verb}.{args.sub}"
    if args.verb == "construct":
        key = "construct"
    handler = HANDLERS[key]
    body, code = handler(args)
    return body, code


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    started = time.monotonic()
    try:
        body, code = run(argv)
    except (InputError, FormatError, BudgetError, OSError, json.JSONDecodeError) as exc:
        print(json.dumps({"schema": 1, "command": argv, "error": str(exc)}))
        print(f"error: {exc}", file=sys.stderr)
        return 2
    report = {"schema": 1, "command": argv, **body}
    print(json.dumps(report, sort_keys=True))
    elapsed = time.monotonic() - started
    print(
        f"{' '.join(argv)}: exit {code} ({elapsed:.2f}s)",
        file=sys.stderr,
    )
    return code


if __name__ == "__main__":
    sys.exit(main())
