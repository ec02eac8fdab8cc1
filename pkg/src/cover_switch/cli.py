"""Command-line front end.

Exit status: 0 on success, 1 when a verification reports pass=false, 2 on
usage or input errors. Error messages go to stderr prefixed with ``error:``.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path
from typing import Callable

from . import __version__, verify
from .core import Graph, Hypergraph, graph_to_hypergraph, hypergraph_to_graph, shadow
from .counting import count_cliques, count_independent_sets, triple_census
from .covering import associated_hypergraph, check_observation, edge_critical_reduction, is_kn_covered, make_cl, make_split
from .formats import ParseError, format_any, parse
from .iso import canonical_key
from .switching import default_ordering, edge_switch, partition_audit, stabilize


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(message)


def _read_object(path: str) -> Graph | Hypergraph:
    text = sys.stdin.read() if path == "-" else Path(path).read_text()
    try:
        return parse(text)
    except ParseError as exc:
        raise UsageError(f"{path}: {exc}") from None


def _as_hypergraph(x: Graph | Hypergraph) -> Hypergraph:
    return graph_to_hypergraph(x) if isinstance(x, Graph) else x


def _as_graph(x: Graph | Hypergraph) -> Graph:
    if isinstance(x, Graph):
        return x
    try:
        return hypergraph_to_graph(x)
    except ValueError:
        raise UsageError("this command needs a graph") from None


def _obj_json(x: Graph | Hypergraph) -> dict:
    kind = "graph" if isinstance(x, Graph) else "hypergraph"
    return {"kind": kind, "vertex_count": x.vertex_count, "edges": [list(e) for e in sorted(x.edges)]}


def _pivot(h: Hypergraph, args) -> tuple[int, ...]:
    if not 0 <= args.pivot < len(h.edges):
        raise UsageError(f"pivot index {args.pivot} out of range (hypergraph has {len(h.edges)} edges)")
    e = h.edges[args.pivot]
    if args.vertices:
        order = tuple(int(v) for v in args.vertices.split(","))
        if sorted(order) != list(e):
            raise UsageError(f"--vertices {args.vertices} is not an ordering of edge {e}")
        return order
    return e if args.order == "given" else default_ordering(h, e)


# Each handler returns (payload, text, ok). payload goes out as JSON, text as plain output.

def cmd_count(args):
    x = _read_object(args.input)
    if args.kind == "clique":
        val = count_cliques(_as_graph(x), args.t)
    else:
        val = count_independent_sets(x, args.t)
    return {"kind": args.kind, "t": args.t, "count": val}, str(val), True


def cmd_census(args):
    c = triple_census(_as_graph(_read_object(args.input)))
    return {"tau0": c.tau0, "tau1": c.tau1, "tau2": c.tau2, "tau3": c.tau3}, " ".join(map(str, c.as_tuple())), True


def cmd_covered_check(args):
    ok = is_kn_covered(_as_graph(_read_object(args.input)), args.n)
    return {"n": args.n, "covered": ok}, str(ok).lower(), True


def cmd_assoc(args):
    h = associated_hypergraph(_as_graph(_read_object(args.input)), args.n)
    return _obj_json(h), format_any(h), True


def cmd_shadow(args):
    s = shadow(_as_hypergraph(_read_object(args.input)), args.s)
    out = hypergraph_to_graph(s) if args.s == 2 else s
    return _obj_json(out), format_any(out), True


def cmd_critical(args):
    g = _as_graph(_read_object(args.input))
    if args.check:
        rep = check_observation(g, args.n, args.t)
        payload = {**rep.__dict__, "min_degree_ok": rep.min_degree_ok, "all_hold": rep.all_hold}
        return payload, "\n".join(f"{k}: {v}" for k, v in payload.items()), True
    if not is_kn_covered(g, args.n):
        raise UsageError(f"input is not K_{args.n}-covered")
    red = edge_critical_reduction(g, args.n)
    return _obj_json(red), format_any(red), True


def cmd_make(args):
    if args.kind == "split":
        if args.N is None or args.k is None:
            raise UsageError("make split needs --N and --k")
        g = make_split(args.N, args.k)
    else:
        if None in (args.n, args.q, args.r):
            raise UsageError("make cl needs --n, --q and --r")
        g = make_cl(args.n, args.q, args.r)
    return _obj_json(g), format_any(g), True


def cmd_switch(args):
    h = _as_hypergraph(_read_object(args.input))
    out = edge_switch(h, _pivot(h, args), with_i3=not args.no_i3)
    return out.to_json(), format_any(out.result), True


def cmd_stabilize(args):
    h = _as_hypergraph(_read_object(args.input))
    res = stabilize(h)
    payload = {"result": _obj_json(res.result), "steps": res.steps, "f_trace": res.f_trace,
               "pivots": [list(p) for p in res.pivots]}
    return payload, format_any(res.result), True


def cmd_audit_switch(args):
    h = _as_hypergraph(_read_object(args.input))
    audit = partition_audit(h, _pivot(h, args))
    text = f"T  {' '.join(map(str, audit.t_counts))}\nT' {' '.join(map(str, audit.t_prime_counts))}"
    return audit.to_json(), text, True


def cmd_canon(args):
    key = canonical_key(_read_object(args.input)).hex()
    return {"key": key}, key, True


def cmd_gen(args):
    classes = verify.enumerate_graphs(args.N, args.jobs)
    return [_obj_json(g) for g in classes], "".join(format_any(g) for g in classes), True


def cmd_deficit(args):
    try:
        d = verify.deficit(args.n, args.q, args.r)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return {"n": args.n, "q": args.q, "r": args.r, "deficit": str(d)}, str(d), True


def _report(rep: verify.VerifyReport):
    return rep.to_json(), rep.summary(), rep.passed


def _checked(fn: Callable, *a, **kw):
    try:
        return fn(*a, **kw)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_verify_main(args):
    return _report(_checked(verify.verify_main, args.n, args.t, args.N, bound_shift=args.bound_shift, jobs=args.jobs))


def cmd_verify_cl(args):
    return _report(_checked(verify.verify_cl, args.n, args.t, args.N, jobs=args.jobs))


def cmd_verify_switching(args):
    return _report(verify.verify_switching(args.samples, args.seed, args.max_vertices, args.max_edges))


def cmd_verify_partition(args):
    return _report(verify.verify_partition(args.samples, args.seed, args.max_vertices, args.max_edges))


def cmd_verify_stable(args):
    return _report(verify.verify_stable_lemma(args.samples, args.seed, args.max_vertices, args.max_edges))


def cmd_verify_base(args):
    return _report(verify.verify_base_recursion(args.N_max, jobs=args.jobs))


def cmd_verify_disconnected(args):
    return _report(verify.verify_disconnected_bound(args.n_max, args.q_max, args.N_max, jobs=args.jobs))


def cmd_verify_induction(args):
    return _report(_checked(verify.verify_induction_step, args.n, args.t, args.N_values, jobs=args.jobs))


BATCH_COMMANDS = {
    "verify-main", "verify-cl", "verify-switching", "verify-partition", "verify-stable",
    "verify-base", "verify-disconnected", "verify-induction", "deficit",
}


def cmd_batch(args):
    try:
        config = json.loads(Path(args.config).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read batch config: {exc}") from None
    runs = config.get("runs", []) if isinstance(config, dict) else config
    if not isinstance(runs, list):
        raise UsageError("batch config must be a list of runs or {\"runs\": [...]}")
    parser = build_parser()
    lines, all_ok = [], True
    for i, run in enumerate(runs):
        if not isinstance(run, dict) or run.get("command") not in BATCH_COMMANDS:
            raise UsageError(f"run {i}: unknown or missing command")
        argv = [run["command"]]
        for k, v in run.items():
            if k == "command":
                continue
            argv += [f"--{k.replace('_', '-')}", *map(str, v if isinstance(v, list) else [v])]
        sub = parser.parse_args(argv + ["--jobs", str(args.jobs)])
        payload, _, ok = sub.handler(sub)
        if sub.command == "deficit":
            ok = Fraction(payload["deficit"]) > 0
            payload = {"command": "deficit", "params": {k: payload[k] for k in "nqr"},
                       "achieved": payload["deficit"], "pass": ok}
        all_ok &= ok
        lines.append(json.dumps(payload, sort_keys=True))
    text = "".join(line + "\n" for line in lines)
    return None, text, all_ok


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="cover-switch", allow_abbrev=False, description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", parser_class=_Parser)

    def add(name: str, handler, inp: bool = False):
        sp = sub.add_parser(name, allow_abbrev=False)
        sp.set_defaults(handler=handler)
        sp.add_argument("--format", choices=("text", "json"), default="text")
        sp.add_argument("--out", help="write output here instead of stdout")
        sp.add_argument("--jobs", type=int, default=verify.default_jobs())
        if inp:
            sp.add_argument("input", help="input file in graph/hypergraph text format, or - for stdin")
        return sp

    sp = add("count", cmd_count, True)
    sp.add_argument("--t", type=int, required=True)
    sp.add_argument("--kind", choices=("independent", "clique"), default="independent")
    add("census", cmd_census, True)
    add("covered-check", cmd_covered_check, True).add_argument("--n", type=int, required=True)
    add("assoc", cmd_assoc, True).add_argument("--n", type=int, required=True)
    add("shadow", cmd_shadow, True).add_argument("--s", type=int, default=2)
    sp = add("critical", cmd_critical, True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--check", action="store_true", help="report the structural properties of edge-critical graphs instead")
    sp.add_argument("--t", type=int, default=3)
    sp = add("make", cmd_make)
    sp.add_argument("kind", choices=("split", "cl"))
    for flag in ("--N", "--k", "--n", "--q", "--r"):
        sp.add_argument(flag, type=int)
    for name, handler in (("switch", cmd_switch), ("audit-switch", cmd_audit_switch)):
        sp = add(name, handler, True)
        sp.add_argument("--pivot", type=int, required=True, help="index of the pivot edge in sorted edge order")
        sp.add_argument("--order", choices=("default", "given"), default="default")
        sp.add_argument("--vertices", help="explicit comma-separated pivot ordering")
        if name == "switch":
            sp.add_argument("--no-i3", action="store_true")
    add("stabilize", cmd_stabilize, True)
    add("canon", cmd_canon, True)
    add("gen", cmd_gen).add_argument("--N", type=int, required=True)

    sp = add("verify-main", cmd_verify_main)
    for flag in ("--n", "--t", "--N"):
        sp.add_argument(flag, type=int, required=True)
    sp.add_argument("--bound-shift", type=int, default=0, help="negative control: shift the bound")
    sp = add("verify-cl", cmd_verify_cl)
    for flag in ("--n", "--t", "--N"):
        sp.add_argument(flag, type=int, required=True)
    for name, handler, nv, ne in (("verify-switching", cmd_verify_switching, 9, 7),
                                  ("verify-partition", cmd_verify_partition, 9, 7),
                                  ("verify-stable", cmd_verify_stable, 8, 6)):
        sp = add(name, handler)
        sp.add_argument("--samples", type=int, required=True)
        sp.add_argument("--seed", type=int, required=True)
        sp.add_argument("--max-vertices", type=int, default=nv)
        sp.add_argument("--max-edges", type=int, default=ne)
    add("verify-base", cmd_verify_base).add_argument("--N-max", dest="N_max", type=int, default=7)
    sp = add("verify-disconnected", cmd_verify_disconnected)
    sp.add_argument("--n-max", type=int, default=50)
    sp.add_argument("--q-max", type=int, default=50)
    sp.add_argument("--N-max", dest="N_max", type=int, default=8)
    sp = add("verify-induction", cmd_verify_induction)
    sp.add_argument("--n", type=int, default=3)
    sp.add_argument("--t", type=int, default=4)
    sp.add_argument("--N-values", dest="N_values", type=int, nargs="+", default=[7, 8])
    sp = add("deficit", cmd_deficit)
    for flag in ("--n", "--q", "--r"):
        sp.add_argument(flag, type=int, required=True)
    add("batch", cmd_batch).add_argument("config", help="JSON file: {\"runs\": [{\"command\": ..., ...}]}")
    return p


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            raise UsageError("a subcommand is required")
        payload, text, ok = args.handler(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.format == "json" and payload is not None:
        out = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    else:
        out = text if text.endswith("\n") or not text else text + "\n"
    if args.out:
        Path(args.out).write_text(out)
    else:
        sys.stdout.write(out)
    return 0 if ok else 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
