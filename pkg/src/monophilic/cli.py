"""Command-line front end.

Exit codes: 0 success, 2 input error, 3 search budget exhausted.
Counts are always printed as decimal strings.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import gadgets, search
from .classify import classify_2_choosable, classify_2_monophilic
from .counting import ListAssignment, Pin, col, col_pinned
from .errors import BudgetExceeded, InputError
from .graph import (
    Graph,
    build_complete,
    build_complete_bipartite,
    build_cycle,
    build_path,
    build_theta,
    classify_core_shape,
    core,
    is_connected,
)

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3

H_ONE_MESSAGE = ("H_{n+1} is undefined for n = 1: x = col(K_{1,1}, L_1) = 2 and no p "
                 "satisfies 1^p > x, so the construction is rejected rather than guessed")


def _load_json(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON ({exc})") from None


def load_graph(path) -> Graph:
    return Graph.from_json(_load_json(path))


def load_lists(path) -> ListAssignment:
    return ListAssignment.from_json(_load_json(path))


def _write_json(path: Path, data):
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(data) + "\n")
    return str(path)


def _parse_pin(text):
    try:
        v, c = text.split("=")
        return Pin(int(v), int(c))
    except ValueError:
        raise argparse.ArgumentTypeError(f"pin must look like v=c, got {text!r}") from None


def _lists_out(L):
    return None if L is None else {str(v): sorted(s) for v, s in enumerate(L)}


# ------------------------------------------------------------------ commands

def cmd_count(args):
    g = load_graph(args.graph)
    if args.lists is not None:
        L = load_lists(args.lists)
    else:
        if args.uniform < 1:
            raise InputError("--uniform needs n >= 1")
        L = ListAssignment.uniform(g.vertex_count, args.uniform)
    count = col_pinned(g, L, args.pin) if args.pin else col(g, L)
    print(count)
    return EXIT_OK


def cmd_decide(args):
    g = load_graph(args.graph)
    if args.n < 1:
        raise InputError("--n must be at least 1")
    report = {"mode": args.mode, "n": args.n}
    try:
        if args.mode == "monophilic":
            v = search.is_monophilic(g, args.n, budget=args.budget, threads=args.threads)
            report.update(verdict=v.monophilic, uniform_count=str(v.uniform_count),
                          min_count=str(v.min_count), min_exact=v.min_exact, witness=v.witness,
                          vacuous=v.vacuous, nodes_visited=v.nodes_visited)
        elif args.mode == "choosable":
            r = search.is_choosable(g, args.n, budget=args.budget, threads=args.threads)
            uniform = col(g, ListAssignment.uniform(g.vertex_count, args.n))
            min_count = None if r.witness is None else str(col(g, r.witness))
            report.update(verdict=r.choosable, uniform_count=str(uniform), min_count=min_count,
                          witness=r.witness, vacuous=False, nodes_visited=r.nodes_visited)
        else:
            r = search.min_colorings(g, args.n, budget=args.budget, threads=args.threads)
            uniform = col(g, ListAssignment.uniform(g.vertex_count, args.n))
            # the verdict says whether the uniform assignment attains the minimum
            report.update(verdict=r.count == uniform, uniform_count=str(uniform),
                          min_count=str(r.count), witness=r.witness, vacuous=uniform == 0,
                          nodes_visited=r.nodes_visited)
    except BudgetExceeded as exc:
        report.update(verdict="unknown", uniform_count=None, min_count=None, witness=None,
                      vacuous=None, nodes_visited=exc.visited, error=str(exc))
        print(json.dumps(report))
        return EXIT_BUDGET
    witness = report["witness"]
    report["witness"] = _lists_out(witness)
    if args.figure and witness is not None:
        from .figures import draw_assignment

        draw_assignment(g, witness, args.figure, f"{args.mode}, n = {args.n}", col(g, witness))
        report["figure"] = str(args.figure)
    print(json.dumps(report))
    return EXIT_OK


def cmd_classify(args):
    g = load_graph(args.graph)
    if not is_connected(g):
        raise InputError("classification needs a connected graph")
    shape = classify_core_shape(core(g))
    print(json.dumps({"core": str(shape), "monophilic_2": classify_2_monophilic(g),
                      "choosable_2": classify_2_choosable(g)}))
    return EXIT_OK


def cmd_probe(args):
    g = load_graph(args.graph)
    try:
        res = search.monophilic_number_probe(g, args.n_max, budget=args.budget, threads=args.threads)
    except BudgetExceeded as exc:
        print(json.dumps({"error": str(exc), "nodes_visited": exc.visited}))
        return EXIT_BUDGET
    for row in res.rows:
        print(json.dumps({"n": row.n, "colorable": row.colorable, "monophilic": row.monophilic,
                          "vacuous": row.vacuous}))
    print(json.dumps({"first_definition": res.first_definition,
                      "second_definition_lower_bound": res.second_definition_lower_bound}))
    return EXIT_OK


def _int_params(values, count, kind):
    if len(values) != count:
        raise InputError(f"gadget {kind} takes {count} integer parameter(s), got {len(values)}")
    try:
        return [int(x) for x in values]
    except ValueError:
        raise InputError(f"gadget {kind}: parameters must be integers") from None


def cmd_gadget(args):
    kind, params = args.kind, args.params
    out = Path(args.out_dir)
    stem = "_".join([kind] + params)
    written = {}
    if kind == "h":
        (n,) = _int_params(params, 1, kind)
        if n == 1:
            raise InputError(H_ONE_MESSAGE)
        H, layout = gadgets.build_H(n)
        written["graph"] = _write_json(out / f"{stem}.graph.json", H.to_json())
        L = gadgets.build_trap_assignment(layout)
        written["lists"] = _write_json(out / f"{stem}.lists.json", L.to_json())
        written["layout"] = _write_json(out / f"{stem}.layout.json", layout.to_json())
        print(json.dumps({"kind": kind, "vertices": H.vertex_count, "edges": H.edge_count,
                          "x": str(layout.x), "p": layout.p, "files": written}))
        return EXIT_OK
    lists = None
    if kind == "path":
        (k,) = _int_params(params, 1, kind)
        g = build_path(k)
    elif kind == "cycle":
        (k,) = _int_params(params, 1, kind)
        g = build_cycle(k)
    elif kind == "complete":
        (k,) = _int_params(params, 1, kind)
        g = build_complete(k)
    elif kind == "bipartite":
        m, k = _int_params(params, 2, kind)
        g = build_complete_bipartite(m, k)
    elif kind == "theta":
        a, b, c = _int_params(params, 3, kind)
        g = build_theta(a, b, c)
    elif kind == "l0":
        (n,) = _int_params(params, 1, kind)
        g, lists = gadgets.build_L0(n)
    else:
        n, j = _int_params(params, 2, kind)
        g, _ = gadgets.build_L0(n)
        lists = gadgets.build_Lj(n, j)
    written["graph"] = _write_json(out / f"{stem}.graph.json", g.to_json())
    summary = {"kind": kind, "vertices": g.vertex_count, "edges": g.edge_count}
    if lists is not None:
        written["lists"] = _write_json(out / f"{stem}.lists.json", lists.to_json())
        summary["count"] = str(col(g, lists))
    summary["files"] = written
    print(json.dumps(summary))
    return EXIT_OK


def cmd_verify(args):
    from . import verify

    results = verify.run_suite(args.suite, threads=args.threads,
                               emit=lambda r: print(r.line(), flush=True))
    if args.figures:
        files = verify.render_figures(args.figures)
        print(json.dumps({"figures": files}))
    failed = [r.criterion for r in results if not r.passed]
    print(json.dumps({"suite": args.suite, "passed": len(results) - len(failed),
                      "failed": failed}))
    return EXIT_FAIL if failed else EXIT_OK


# ------------------------------------------------------------------ parser

def _positive(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="monophilic",
                                description="List-coloring counts and monophilic graph checks.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("count", help="count list colorings")
    c.add_argument("--graph", required=True)
    src = c.add_mutually_exclusive_group(required=True)
    src.add_argument("--lists")
    src.add_argument("--uniform", type=int, metavar="N")
    c.add_argument("--pin", type=_parse_pin, action="append", default=[], metavar="V=C")
    c.set_defaults(func=cmd_count)

    d = sub.add_parser("decide", help="monophilic / choosable / minimum count")
    d.add_argument("--graph", required=True)
    d.add_argument("--n", type=int, required=True)
    d.add_argument("--mode", choices=["monophilic", "choosable", "minimize"], default="monophilic")
    d.add_argument("--budget", type=_positive, default=None,
                   help=f"node budget (default ${search.BUDGET_ENV} or {search.DEFAULT_BUDGET})")
    d.add_argument("--threads", type=_positive, default=1)
    d.add_argument("--figure", default=None, help="also draw the witness to this PNG")
    d.set_defaults(func=cmd_decide)

    k = sub.add_parser("classify", help="structural answer for n = 2 (connected graphs)")
    k.add_argument("--graph", required=True)
    k.set_defaults(func=cmd_classify)

    pr = sub.add_parser("probe", help="monophilic for n = 1..N")
    pr.add_argument("--graph", required=True)
    pr.add_argument("--n-max", type=_positive, required=True)
    pr.add_argument("--budget", type=_positive, default=None)
    pr.add_argument("--threads", type=_positive, default=1)
    pr.set_defaults(func=cmd_probe)

    gd = sub.add_parser("gadget", help="write a named graph and its lists as JSON")
    gd.add_argument("kind", choices=["path", "cycle", "complete", "bipartite", "theta", "h", "l0", "lj"])
    gd.add_argument("params", nargs="*")
    gd.add_argument("--out-dir", default=".")
    gd.set_defaults(func=cmd_gadget)

    v = sub.add_parser("verify-paper", help="run the acceptance suite")
    v.add_argument("--suite", choices=["fast", "full"], default="fast")
    v.add_argument("--threads", type=_positive, default=1)
    v.add_argument("--figures", default=None, metavar="DIR")
    v.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
