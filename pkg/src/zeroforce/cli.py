"""``zeroforce`` command-line interface.

Exit codes: 0 all checks passed, 1 a counterexample was found, 2 usage or
parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from contextlib import nullcontext

from . import harness
from .bounds import BoundError, delta_p
from .forcing import closure, zero_forcing_number
from .formats import encode_edge_list, encode_graph6
from .generators import FAMILIES, GeneratorError, generate
from .graph import Acyclic, GraphError, girth, members, min_degree
from .proof import HypothesisError, ProofClaimError, build_decomposition, run_battery

EXIT_OK, EXIT_COUNTEREXAMPLE, EXIT_USAGE = 0, 1, 2


def _dump(record: dict) -> str:
    return json.dumps(record, separators=(",", ":"))


def _open_out(path: str | None):
    return open(path, "w") if path else nullcontext(sys.stdout)


def _graphs(args):
    if args.input in (None, "-"):
        yield from harness.read_graphs(sys.stdin, args.format)
    else:
        with open(args.input) as fh:
            yield from harness.read_graphs(fh, args.format)


def _per_graph(args, fn) -> int:
    """Apply ``fn(G) -> dict`` to every input graph, one JSON line each."""
    status = EXIT_OK
    with _open_out(args.out) as out:
        for gid, item in _graphs(args):
            if isinstance(item, Exception):
                out.write(_dump({"graph_id": gid, "error": str(item)}) + "\n")
                status = max(status, EXIT_USAGE)
                continue
            try:
                record = {"graph_id": gid, **fn(item)}
            except (GraphError, BoundError, HypothesisError) as exc:
                record = {"graph_id": gid, "error": str(exc)}
                status = max(status, EXIT_USAGE)
            except ProofClaimError as exc:
                record = {"graph_id": gid, "status": "COUNTEREXAMPLE", "claim": exc.claim,
                          "detail": exc.detail, "graph6": encode_graph6(item)}
                status = EXIT_COUNTEREXAMPLE
            if record.get("status") == "COUNTEREXAMPLE":
                status = EXIT_COUNTEREXAMPLE
            out.write(_dump(record) + "\n")
    return status


def cmd_closure(args) -> int:
    initial = [int(t) for t in args.set.split(",") if t.strip()] if args.set else []

    def fn(G):
        S, sched = closure(G, initial)
        return {"closure": members(S), "complete": S == G.vertices,
                "forced": list(sched.forced), "forcers": list(sched.forcers)}

    return _per_graph(args, fn)


def cmd_zf(args) -> int:
    def fn(G):
        if G.n > args.cap:
            return {"n": G.n, "zf": None, "verdict": "skipped: size"}
        z, w = zero_forcing_number(G)
        return {"n": G.n, "zf": z, "witness": members(w)}

    return _per_graph(args, fn)


def cmd_deltap(args) -> int:
    def fn(G):
        ps = [args.p] if args.p else range(1, G.n + 1)
        values = {}
        for p in ps:
            v, X = delta_p(G, p)
            values[str(p)] = {"delta_p": v, "X": members(X)}
        return {"n": G.n, "delta_p": values}

    return _per_graph(args, fn)


def cmd_girth(args) -> int:
    def fn(G):
        g = girth(G)
        return {"n": G.n, "girth": "Acyclic" if g is Acyclic else g,
                "delta": min_degree(G) if G.n else None}

    return _per_graph(args, fn)


def cmd_proof(args) -> int:
    def fn(G):
        d = build_decomposition(G)
        results = run_battery(G, all_minimizers=args.all_minimizers)
        ok = all(results)
        return {
            "decomposition": d.summary(),
            "checks": [{"name": r.name, "ok": r.ok, **_jsonable(r.values)} for r in results],
            "status": "ok" if ok else "COUNTEREXAMPLE",
            **({} if ok else {"graph6": encode_graph6(G)}),
        }

    return _per_graph(args, fn)


def _jsonable(values: dict) -> dict:
    return json.loads(json.dumps(values, default=str))


def cmd_verify(args) -> int:
    opts = harness.VerifyOptions(
        exact=args.exact, proof=args.proof, cap=args.cap,
        deterministic=args.deterministic, all_minimizers=args.all_minimizers,
    )
    status = EXIT_OK
    parse_failed = False
    with _open_out(args.out) as out:
        for rep in harness.run_verify(_graphs(args), opts):
            out.write(rep.to_json() + "\n")
            if rep.counterexample:
                status = EXIT_COUNTEREXAMPLE
            elif rep.status == "parse-error":
                parse_failed = True
    if status == EXIT_OK and parse_failed:
        status = EXIT_USAGE
    return status


def cmd_lemma2(args) -> int:
    try:
        result = harness.run_lemma2(args.p_min, args.p_max)
    except BoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    with _open_out(args.out) as out:
        out.write(_dump(result) + "\n")
    print(
        f"{len(result['violations'])} violations / {result['pairs_checked']} pairs checked",
        file=sys.stderr,
    )
    bad = result["violations"] or result["growth_failures"]
    return EXIT_COUNTEREXAMPLE if bad else EXIT_OK


def cmd_gen(args) -> int:
    params = list(args.params)
    if args.seed is not None:
        params.insert(2 if args.family == "random_min_degree" else len(params), args.seed)
    try:
        stream = list(generate(args.family, *params))
    except GeneratorError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    encode = encode_graph6 if args.format == "graph6" else encode_edge_list
    with _open_out(args.out) as out:
        for _, G in stream:
            out.write(encode(G) + "\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="zeroforce", description="Zero forcing number tools.")
    sub = parser.add_subparsers(dest="command", required=True)

    def graph_cmd(name, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("input", nargs="?", help="file with one graph per line (default stdin)")
        p.add_argument("--format", choices=["graph6", "edges"], default="graph6")
        p.add_argument("--out", help="write JSONL here instead of stdout")
        return p

    p = graph_cmd("closure", "forcing closure of an initial set")
    p.add_argument("--set", default="", help="comma-separated initial vertices")
    p.set_defaults(func=cmd_closure)

    p = graph_cmd("zf", "exact zero forcing number")
    p.add_argument("--cap", type=int, default=harness.DEFAULT_CAP)
    p.set_defaults(func=cmd_zf)

    p = graph_cmd("deltap", "minimum open neighborhood over p-subsets")
    p.add_argument("-p", type=int, help="single p (default: every p in 1..n)")
    p.set_defaults(func=cmd_deltap)

    p = graph_cmd("girth", "girth and minimum degree")
    p.set_defaults(func=cmd_girth)

    p = graph_cmd("proof", "structural proof battery (girth >= 5, delta >= 2)")
    p.add_argument("--all-minimizers", action="store_true")
    p.set_defaults(func=cmd_proof)

    p = graph_cmd("verify", "bound verification campaign")
    p.add_argument("--exact", action="store_true", help="compute Z(G) exactly")
    p.add_argument("--proof", action="store_true", help="run the proof battery when girth >= 5")
    p.add_argument("--cap", type=int, default=harness.DEFAULT_CAP, help="largest n for exact work")
    p.add_argument("--deterministic", action="store_true", help="zero all timing fields")
    p.add_argument("--all-minimizers", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("lemma2", help="exact scan of the rational inequality")
    p.add_argument("p_min", type=int)
    p.add_argument("p_max", type=int)
    p.add_argument("--out")
    p.set_defaults(func=cmd_lemma2)

    p = sub.add_parser("gen", help="emit a graph family",
                       description="families: " + ", ".join(
                           f"{k} {' '.join(v[0])}".strip() for k, v in FAMILIES.items()))
    p.add_argument("family", choices=sorted(FAMILIES))
    p.add_argument("params", nargs="*", type=int)
    p.add_argument("--seed", type=int, help="seed for random_min_degree (n delta [count])")
    p.add_argument("--format", choices=["graph6", "edges"], default="graph6")
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
