"""Command line front end.

Graph sources for ``--graph``::

    cycle:9                          generator family with comma-separated params
    generate:clique_plus_isolates:3,2
    gnp:10,1/2,7                     n, edge probability, seed
    file:graph.txt | graph.txt       edge-list file (``.dimacs``/``.col``: DIMACS)

Families: path:n, cycle:n, complete:n, complete_bipartite:m,n, star:leaves,
empty:n, clique_plus_isolates:clique,isolates, gnp:n,p[,seed].
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import random
import sys
from fractions import Fraction

from . import __version__
from .bounds import THEOREMS, check_vertex_critical, family_graphs, sweep_graph
from .graph import (
    FAMILIES,
    Graph,
    GraphError,
    InvalidAlphaError,
    format_rational,
    generate,
    parse_alpha,
    parse_graph,
    serialize_graph,
)
from .reports import value_to_json
from .solver import ORACLE_MAX_N, brute_force_pd, domination_number, pd_alpha
from .spectrum import coverage_profile, spectrum

COMMANDS = ("solve", "gamma", "profile", "spectrum", "verify", "critical", "generate")


class UsageError(Exception):
    pass


def _param(token: str):
    token = token.strip()
    try:
        return int(token)
    except ValueError:
        pass
    try:
        return Fraction(token)
    except ValueError:
        raise UsageError(f"bad generator parameter {token!r}") from None


def load_graph(source: str, input_format: str = "auto") -> Graph:
    if source.startswith("generate:"):
        source = source[len("generate:"):]
    path = source[len("file:"):] if source.startswith("file:") else None
    if path is None and os.path.exists(source):
        path = source
    if path is not None:
        fmt = input_format
        if fmt == "auto":
            fmt = "dimacs" if path.endswith((".dimacs", ".col")) else "edgelist"
        with open(path) as fh:
            return parse_graph(fh.read(), fmt)
    family, _, params = source.partition(":")
    if family not in FAMILIES:
        raise UsageError(f"unknown graph source {source!r}")
    args = [_param(t) for t in params.split(",")] if params else []
    return generate(family, *args)


def _graph_json(g: Graph) -> dict:
    return {"n": g.n, "edges": [list(e) for e in g.edges]}


def _pd_json(res) -> dict:
    return {"value": res.value, "witness": list(res.witness), "covered": res.covered, "target": res.target}


def _oracle_check(g: Graph, res, max_n: int) -> dict:
    ref = brute_force_pd(g, res.target, max_n=max_n)
    return {"value": ref.value, "witness": list(ref.witness),
            "agrees": (ref.value, ref.witness) == (res.value, res.witness)}


def _verify_graphs(args) -> list[tuple[str, Graph]]:
    if args.graph:
        return [(args.graph, load_graph(args.graph, args.input_format))]
    if args.family in (None, "families"):
        return family_graphs(args.max_family_n)
    lo, hi = args.n
    if args.family == "gnp":
        rng = random.Random(args.seed)
        out = []
        for _ in range(args.samples):
            n = rng.randint(lo, hi)
            p = rng.choice(args.p)
            s = rng.randrange(2**32)
            out.append((f"gnp:{n},{format_rational(p)},{s}", generate("gnp", n, p, s)))
        return out
    builder_args = FAMILIES[args.family][1]
    if len(builder_args) != 1:
        raise UsageError(f"--family {args.family} needs --graph with explicit parameters")
    out = []
    for n in range(lo, hi + 1):
        try:
            out.append((f"{args.family}:{n}", generate(args.family, n)))
        except GraphError:
            continue
    return out


def _run(args) -> tuple[int, dict]:
    cmd = args.command
    if cmd == "verify":
        graphs = _verify_graphs(args)
        rows = []
        counts: dict[str, int] = {}
        violations = []
        evaluated = 0
        for name, g in graphs:
            for r in sweep_graph(g, exclude=args.exclude):
                rows.append((name, r))
                if r.hypothesis_met:
                    evaluated += 1
                if r.violated:
                    counts[r.theorem] = counts.get(r.theorem, 0) + 1
                    violations.append({"graph": name, **r.to_json()})
        result = {
            "graphs": len(graphs),
            "reports": len(rows),
            "evaluated": evaluated,
            "violations": len(violations),
            "violations_by_theorem": dict(sorted(counts.items())),
            "excluded": sorted(args.exclude),
            "violation_records": violations,
        }
        return (1 if violations else 0), {"command": cmd, "graph": None, "result": result, "_rows": rows}

    if not args.graph:
        raise UsageError(f"{cmd} needs --graph")
    g = load_graph(args.graph, args.input_format)
    doc = {"command": cmd, "graph": _graph_json(g)}
    status = 0
    if cmd == "generate":
        doc["result"] = {"text": serialize_graph(g, args.graph_format)}
    elif cmd in ("solve", "gamma"):
        if cmd == "solve":
            if args.alpha is None:
                raise UsageError("solve needs --alpha")
            res = pd_alpha(g, args.alpha)
            doc["result"] = {"alpha": format_rational(args.alpha), **_pd_json(res)}
        else:
            res = domination_number(g)
            doc["result"] = _pd_json(res)
        if args.oracle:
            check = _oracle_check(g, res, args.max_n)
            doc["result"]["oracle"] = check
            status = 0 if check["agrees"] else 1
    elif cmd == "profile":
        prof = coverage_profile(g)
        doc["result"] = {"g": list(prof.g), "witnesses": [list(w) for w in prof.witnesses]}
    elif cmd == "spectrum":
        sp = spectrum(g)
        doc["result"] = {
            "values": list(sp.values),
            "criticals": [format_rational(c) for c in sp.criticals],
            "certificates": [
                {"alpha": format_rational(c), "value": v, "witness": list(w), "covered": c.numerator * g.n // c.denominator}
                for c, v, w in zip(sp.criticals, sp.values, sp.certificates)
            ],
        }
    elif cmd == "critical":
        if args.alpha is None:
            raise UsageError("critical needs --alpha")
        rep = check_vertex_critical(g, args.alpha)
        doc["result"] = {
            "alpha": format_rational(args.alpha),
            "pd": rep.pd,
            "is_critical": rep.is_critical,
            "deleted_pd": {str(v): d for v, d in rep.deleted_pd.items()},
            "drops_by_one": rep.drops_by_one,
            "certificates": {str(v): (list(s) if s is not None else None) for v, s in rep.certificates.items()},
            "holds": rep.holds,
        }
        if rep.holds is False:
            status = 1
    return status, doc


def _render(doc: dict, fmt: str) -> str:
    rows = doc.pop("_rows", None)
    if fmt == "json":
        return json.dumps(value_to_json(doc), indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        if rows is not None:
            w.writerow(["graph", "theorem", "alpha", "hypothesis_met", "lhs", "relation", "rhs", "holds"])
            for name, r in rows:
                alpha = r.context.get("alpha", r.context.get("alphas", ""))
                w.writerow([name, r.theorem, _cell(alpha), r.hypothesis_met,
                            _cell(r.lhs), r.relation, _cell(r.rhs), _cell(r.holds)])
        else:
            w.writerow(["key", "value"])
            for k, v in doc["result"].items():
                w.writerow([k, json.dumps(value_to_json(v))])
        return buf.getvalue()
    if doc["command"] == "generate":
        # plain text so the output can be fed straight back in as --graph
        return doc["result"]["text"]
    lines = [f"command: {doc['command']}"]
    if doc.get("graph"):
        lines.append(f"graph: n={doc['graph']['n']} m={len(doc['graph']['edges'])}")
    for k, v in doc["result"].items():
        if k == "violation_records":
            for rec in v[:20]:
                lines.append(f"  VIOLATION {rec['graph']} {rec['theorem']}: "
                             f"{rec['lhs']} {rec['relation']} {rec['rhs']} {rec['context']}")
        elif isinstance(v, str):
            lines.append(f"{k}: {v}")
        else:
            lines.append(f"{k}: {json.dumps(value_to_json(v))}")
    return "\n".join(lines) + "\n"


def _cell(x) -> str:
    if x is None:
        return ""
    if isinstance(x, tuple):
        return " ".join(_cell(v) for v in x)
    if isinstance(x, Fraction):
        return format_rational(x)
    return str(x)


def _alpha_arg(text: str) -> Fraction:
    try:
        return parse_alpha(text)
    except InvalidAlphaError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _range_arg(text: str) -> tuple[int, int]:
    lo, _, hi = text.partition("-")
    try:
        a, b = int(lo), int(hi or lo)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected N or LO-HI, got {text!r}") from None
    if not 1 <= a <= b:
        raise argparse.ArgumentTypeError(f"bad range {text!r}")
    return a, b


def _p_list(text: str) -> list[Fraction]:
    try:
        ps = [Fraction(t) for t in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad probability list {text!r}") from None
    if not all(0 <= p <= 1 for p in ps):
        raise argparse.ArgumentTypeError("probabilities must lie in [0, 1]")
    return ps


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="partialdom",
        description="Exact partial domination numbers, spectra and bound checks.",
        epilog=__doc__,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("--graph", help="graph source (see below)")
    parser.add_argument("--input-format", choices=("auto", "edgelist", "dimacs"), default="auto")
    parser.add_argument("--graph-format", choices=("edgelist", "dimacs"), default="edgelist",
                        help="serialization used by 'generate'")
    parser.add_argument("--alpha", type=_alpha_arg, help="rational p/q in (0, 1]")
    parser.add_argument("--format", choices=("table", "json", "csv"), default="table")
    parser.add_argument("--out", help="write output here instead of stdout")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--oracle", action="store_true", help="cross-check against brute force")
    parser.add_argument("--max-n", type=int, default=ORACLE_MAX_N, help="brute-force size cap")
    sweep = parser.add_argument_group("verify sweep")
    sweep.add_argument("--family", choices=("families", *FAMILIES), default=None)
    sweep.add_argument("--n", type=_range_arg, default=(6, 12), help="N or LO-HI")
    sweep.add_argument("--p", type=_p_list, default=[Fraction(1, 5), Fraction(1, 2), Fraction(4, 5)])
    sweep.add_argument("--samples", type=int, default=100)
    sweep.add_argument("--max-family-n", type=int, default=10)
    sweep.add_argument("--exclude", action="append", default=[], choices=THEOREMS,
                       help="drop a statement from the sweep (repeatable)")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        status, doc = _run(args)
    except (ValueError, UsageError, OSError) as exc:
        print(f"partialdom: error: {exc}", file=sys.stderr)
        return 2
    text = _render(doc, args.format)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
