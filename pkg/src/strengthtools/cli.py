"""Command-line front door.

Four subcommands: ``compute`` (invariants and strength of one graph),
``audit`` (claim evaluation over a corpus), ``gen`` (family generators), and
``convert`` (edge list <-> graph6).  Results go to standard output as JSON
(one object per line); prose summaries and diagnostics go to standard error.

Exit codes: 0 success (including violations found under --allow-violations),
1 usage or input error, 2 an audit found violations without
--allow-violations.
"""

from __future__ import annotations

import argparse
import json
import sys

from .corpus import CorpusSpec, INFINITY, audit_corpus
from .claims import CLAIM_IDS
from .graphs import Graph, fk_graph, generate, graph_from_edges, min_degree
from .graph6 import emit_graph6, parse_graph6
from .invariants import compute_bundle
from .strength import strength_exact, strength_via_fk

SCHEMA_VERSION = 1
CROSSCHECK_CAP = 10


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would sys.exit(2); remap to exit 1
        raise _UsageError(message)


def _dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _parse_edge_list(text: str) -> list[tuple[int, int]]:
    """Edges written as ``u-v`` tokens separated by commas or whitespace."""
    edges = []
    for chunk in text.replace(",", " ").split():
        left, sep, right = chunk.partition("-")
        if not sep:
            raise _UsageError(f"bad edge token {chunk!r}; expected u-v")
        try:
            edges.append((int(left), int(right)))
        except ValueError:
            raise _UsageError(f"bad edge token {chunk!r}; expected integers") from None
    return edges


def _input_graph(args) -> tuple[Graph, str]:
    if args.graph6 is not None:
        g = parse_graph6(args.graph6)
    else:
        n_text, edge_text = args.edges
        try:
            n = int(n_text)
        except ValueError:
            raise _UsageError(f"bad vertex count {n_text!r}") from None
        g = graph_from_edges(n, _parse_edge_list(edge_text))
    return g, emit_graph6(g)


def _cmd_compute(args) -> int:
    g, token = _input_graph(args)
    bundle = compute_bundle(g)
    doc = {
        "schema_version": SCHEMA_VERSION,
        "graph6": token,
        "n": g.order,
        "edge_count": g.edge_count,
        "delta": bundle.delta,
        "gamma": bundle.gamma,
        "alpha": bundle.alpha,
        "alpha1": bundle.alpha1,
        "beta": bundle.beta,
        "beta1": bundle.beta1,
    }
    witnesses = {
        "gamma": list(bundle.gamma_witness),
        "alpha": list(bundle.alpha_witness),
        "beta": list(bundle.beta_witness),
        "beta1": [list(e) for e in bundle.beta1_witness],
        "alpha1": [list(e) for e in bundle.alpha1_witness] if bundle.alpha1_witness is not None else None,
    }
    if g.edge_count == 0:
        doc.update({"str": INFINITY, "str_method": "none", "str_crosscheck": None, "k_max": None})
        witnesses.update({"numbering": None, "fk_embedding": None})
    elif bundle.delta >= 1:
        cert = strength_via_fk(g)
        crosscheck = None
        if not args.no_crosscheck and g.order <= CROSSCHECK_CAP:
            crosscheck = strength_exact(g).value
            if crosscheck != cert.value:  # pragma: no cover - would be a solver bug
                raise AssertionError(
                    f"method mismatch: fk gives {cert.value}, exact gives {crosscheck}")
        doc.update({"str": cert.value, "str_method": "fk", "str_crosscheck": crosscheck,
                    "k_max": cert.k_max})
        witnesses.update({"numbering": list(cert.numbering),
                          "fk_embedding": list(cert.fk_witness) if cert.fk_witness else None})
    else:
        cert = strength_exact(g)
        doc.update({"str": cert.value, "str_method": "exact", "str_crosscheck": None,
                    "k_max": cert.k_max})
        witnesses.update({"numbering": list(cert.numbering),
                          "fk_embedding": list(cert.fk_witness) if cert.fk_witness else None})
    doc["witnesses"] = witnesses
    print(_dumps(doc))
    return 0


def _cmd_audit(args) -> int:
    if (args.n is None) == (args.file is None):
        raise _UsageError("audit needs exactly one of --n or --file")
    filt = {"all": "all", "min-degree-one": "min-degree-one", "edges": "at-least-one-edge"}[args.filter]
    if args.n is not None:
        spec = CorpusSpec.exhaustive(args.n, filter=filt)
    else:
        spec = CorpusSpec.from_file(args.file, filter=filt)
    claim_ids = tuple(args.claims.split(",")) if args.claims else None
    if claim_ids is not None:
        bad = [c for c in claim_ids if c not in CLAIM_IDS]
        if bad:
            raise _UsageError(f"unknown claim ids: {', '.join(bad)}")
    report = audit_corpus(spec, claim_ids=claim_ids, workers=args.workers,
                          counterexample_path=args.counterexamples)
    sys.stdout.write(report.json_lines(include_timing=not args.no_timing))
    s = report.summary
    print(f"audited {s['graphs']} graphs; {s['violations']} violation(s)", file=sys.stderr)
    for cid in s["claims"]:
        c = s["counts"][cid]
        print(f"  {cid}: holds {c['holds']}, violated {c['violated']}, "
              f"not-applicable {c['not_applicable']}", file=sys.stderr)
    if s["violations"] and not args.allow_violations:
        return 2
    return 0


def _cmd_gen(args) -> int:
    if args.family == "fk":
        if args.k is None:
            raise _UsageError("gen --family fk needs --k")
        g = fk_graph(args.k)
        doc = {"schema_version": SCHEMA_VERSION, "family": "fk", "k": args.k, "n": g.order}
    else:
        if args.n is None:
            raise _UsageError(f"gen --family {args.family} needs --n")
        g = generate(args.family, args.n)
        doc = {"schema_version": SCHEMA_VERSION, "family": args.family, "n": g.order}
    doc["edge_count"] = g.edge_count
    if args.emit == "graph6":
        doc["graph6"] = emit_graph6(g)
    else:
        doc["edges"] = [list(e) for e in g.edges()]
    print(_dumps(doc))
    return 0


def _cmd_convert(args) -> int:
    if (args.from_edges is None) == (args.to_edges is None):
        raise _UsageError("convert needs exactly one of --from-edges or --to-edges")
    if args.from_edges is not None:
        n_text, edge_text = args.from_edges
        try:
            n = int(n_text)
        except ValueError:
            raise _UsageError(f"bad vertex count {n_text!r}") from None
        g = graph_from_edges(n, _parse_edge_list(edge_text))
        print(_dumps({"schema_version": SCHEMA_VERSION, "n": g.order,
                      "graph6": emit_graph6(g)}))
    else:
        g = parse_graph6(args.to_edges)
        print(_dumps({"schema_version": SCHEMA_VERSION, "n": g.order,
                      "edges": [list(e) for e in g.edges()]}))
    return 0


def _build_parser() -> _Parser:
    parser = _Parser(prog="strengthtools", description=__doc__,
                     formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    p = sub.add_parser("compute", help="invariants and strength of one graph")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--graph6", help="graph6 token")
    src.add_argument("--edges", nargs=2, metavar=("N", "EDGES"),
                     help="vertex count and u-v edge list (comma or space separated)")
    p.add_argument("--no-crosscheck", action="store_true",
                   help="skip the exact-solver crosscheck of the fk method")
    p.set_defaults(func=_cmd_compute)

    p = sub.add_parser("audit", help="evaluate claims over a corpus")
    p.add_argument("--n", type=int, choices=range(3, 8), help="exhaustive corpus order")
    p.add_argument("--file", help="graph6 file, one token per line")
    p.add_argument("--claims", help="comma-separated claim ids (default: all)")
    p.add_argument("--filter", choices=("all", "min-degree-one", "edges"), default="all")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--counterexamples", help="append violations to this JSON-lines file")
    p.add_argument("--allow-violations", action="store_true",
                   help="exit 0 even when violations are found")
    p.add_argument("--no-timing", action="store_true",
                   help="omit timing fields so output is byte-reproducible")
    p.set_defaults(func=_cmd_audit)

    p = sub.add_parser("gen", help="generate a named family member")
    p.add_argument("--family", required=True, choices=("complete", "cycle", "path", "star", "fk"))
    p.add_argument("--n", type=int, help="vertex count (all families but fk)")
    p.add_argument("--k", type=int, help="pattern size (family fk)")
    p.add_argument("--emit", choices=("graph6", "edges"), default="graph6")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("convert", help="convert between edge lists and graph6")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--from-edges", nargs=2, metavar=("N", "EDGES"))
    src.add_argument("--to-edges", metavar="GRAPH6")
    p.set_defaults(func=_cmd_convert)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        if getattr(args, "func", None) is None:
            raise _UsageError("a subcommand is required (compute, audit, gen, convert)")
        return args.func(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
