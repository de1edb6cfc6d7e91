"""Batch command-line front end.

Three subcommands:

* ``transform`` builds a reduction gadget from a graph file and writes the
  gadget, its partition completion, and a DOT rendering;
* ``solve`` runs the exact (or greedy) fill-in / treewidth / total-states
  solvers on a graph file;
* ``verify`` runs a verification campaign and emits a JSON report.

Exit codes: 0 success, 1 verification mismatch, 2 parse error, 3 semantic
error, 4 resource cap exceeded.

Default size caps can be overridden with the environment variables
``MORALTRI_DP_CAP``, ``MORALTRI_STATES_CAP`` and ``MORALTRI_PEK_CAP``.
"""

from __future__ import annotations

import argparse
import inspect
import json
import os
import sys

from . import triangulation, verify
from .fileio import (
    ParseError,
    gadget_dot,
    parse_graph,
    write_gadget,
    write_graph,
)
from .graphs import Dag, GraphError, ResourceLimitError, UndirectedGraph
from .reductions import (
    build_eds_gadget,
    build_mcla_gadget,
    build_ola_gadget,
    partition_completion,
)
from .triangulation import (
    greedy_min_fill,
    min_fill_exact,
    total_states,
    total_states_exact,
    treewidth_exact,
    width_of_ordering,
)

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_PARSE = 2
EXIT_SEMANTIC = 3
EXIT_RESOURCE = 4

_BUILDERS = {
    "ola": build_ola_gadget,
    "mcla": build_mcla_gadget,
    "eds": build_eds_gadget,
}

# largest instance size each campaign is rated for
_CAMPAIGN_CAPS = {
    "1": 7, "2": 8, "3": 7, "4": 4, "5": 4, "9": 4, "10": 4,
    "eq2": 5, "eq3": 6,
}


def _env_cap(name, default):
    raw = os.environ.get(name)
    return int(raw) if raw else default


def _read_undirected(path):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise GraphError(str(exc)) from exc
    name, g = parse_graph(text)
    if isinstance(g, Dag):
        raise GraphError(f"{path}: expected an undirected graph")
    return name, g


def _fmt_edge(e):
    u, v = e
    return f"{u}{v}"


def _fmt_fill(fill):
    return "{" + ",".join(_fmt_edge(e) for e in sorted(fill)) + "}"


def cmd_transform(args):
    name, g = _read_undirected(args.input)
    builder = _BUILDERS[args.problem]
    b = builder(g, args.w)
    completed = partition_completion(b)
    prefix = args.out or f"{os.path.splitext(args.input)[0]}.{args.problem}"
    with open(prefix + ".gadget", "w", encoding="utf-8") as fh:
        fh.write(write_gadget(b))
    with open(prefix + ".completed.graph", "w", encoding="utf-8") as fh:
        fh.write(write_graph(f"{name}-{args.problem}-completed", completed))
    with open(prefix + ".dot", "w", encoding="utf-8") as fh:
        fh.write(gadget_dot(b, name=f"{name}_{args.problem}"))
    summary = f"|P|={len(b.p)} |Q|={len(b.q)}"
    if args.w is not None:
        summary += f" |S({args.w})|={len(b.saturation_edges)}"
    print(summary)
    return EXIT_OK


def _restriction(args):
    if args.fix_first is not None and args.fix_last is not None:
        raise GraphError("--fix-first and --fix-last are mutually exclusive")
    if args.fix_first is not None:
        return ("first", args.fix_first)
    if args.fix_last is not None:
        return ("last", args.fix_last)
    return None


def cmd_solve(args):
    _, g = _read_undirected(args.input)
    restriction = _restriction(args)
    dp_cap = _env_cap("MORALTRI_DP_CAP", triangulation.DEFAULT_DP_CAP)
    states_cap = _env_cap("MORALTRI_STATES_CAP", triangulation.DEFAULT_STATES_CAP)
    if args.greedy and restriction is not None:
        raise GraphError("restrictions are only supported with --exact")

    if args.objective == "fillin":
        if args.greedy:
            ordering, fill = greedy_min_fill(g)
            print(f"lambda<={len(fill)} ordering {','.join(ordering)} "
                  f"fill {_fmt_fill(fill)}")
        else:
            res = min_fill_exact(g, restriction, cap=dp_cap)
            print(f"lambda*={res.size} ordering {','.join(res.ordering)} "
                  f"fill {_fmt_fill(res.fill)}")
    elif args.objective == "treewidth":
        if args.greedy:
            ordering, _ = greedy_min_fill(g)
            print(f"tw<={width_of_ordering(g, ordering)} "
                  f"ordering {','.join(ordering)}")
        else:
            res = treewidth_exact(g, restriction, cap=dp_cap)
            print(f"tw={res.width} ordering {','.join(res.ordering)}")
    else:
        if args.greedy:
            ordering, fill = greedy_min_fill(g)
            value = total_states(g.with_edges(fill))
            print(f"states<={value} ordering {','.join(ordering)}")
        else:
            res = total_states_exact(g, restriction=restriction, cap=states_cap)
            print(f"states={res.states} ordering {','.join(res.ordering)}")
    return EXIT_OK


def cmd_verify(args):
    campaign = verify.CAMPAIGNS[args.claim]
    cap = _CAMPAIGN_CAPS.get(args.claim)
    if args.max_n is not None and cap is not None and args.max_n > cap:
        raise ResourceLimitError(
            f"--max-n {args.max_n} exceeds the campaign cap of {cap}")
    params = inspect.signature(campaign).parameters
    kwargs = {}
    for key, value in (("max_n", args.max_n), ("mode", args.mode),
                       ("seed", args.seed), ("samples", args.samples),
                       ("max_total", args.max_total)):
        if value is not None and key in params:
            kwargs[key] = value
    report = campaign(**kwargs)
    json.dump(report, sys.stdout, indent=2, default=_jsonable)
    print()
    return EXIT_OK if report["ok"] else EXIT_MISMATCH


def _jsonable(obj):
    if isinstance(obj, (set, frozenset)):
        return sorted(obj, key=repr)
    if isinstance(obj, UndirectedGraph):
        return obj.edges()
    return str(obj)


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="moraltri",
        description="Moral graph and triangulation toolkit.")
    sub = parser.add_subparsers(dest="command", required=True)

    t = sub.add_parser("transform", help="build a reduction gadget")
    t.add_argument("input", help="graph file")
    t.add_argument("--problem", required=True, choices=sorted(_BUILDERS))
    t.add_argument("--w", default=None,
                   help="vertex to saturate (omit for the unsaturated gadget)")
    t.add_argument("--out", default=None, help="output path prefix")
    t.set_defaults(func=cmd_transform)

    s = sub.add_parser("solve", help="run a solver on a graph file")
    s.add_argument("input", help="graph file")
    s.add_argument("--objective", required=True,
                   choices=("fillin", "treewidth", "states"))
    mode = s.add_mutually_exclusive_group()
    mode.add_argument("--exact", action="store_true", default=True)
    mode.add_argument("--greedy", action="store_true")
    s.add_argument("--fix-first", default=None, metavar="W",
                   help="restrict to orderings starting at W")
    s.add_argument("--fix-last", default=None, metavar="W",
                   help="restrict to orderings ending at W")
    s.set_defaults(func=cmd_solve)

    v = sub.add_parser("verify", help="run a verification campaign")
    v.add_argument("claim", choices=sorted(verify.CAMPAIGNS),
                   help="campaign id")
    v.add_argument("--max-n", type=int, default=None)
    v.add_argument("--mode", choices=("first", "last"), default=None)
    v.add_argument("--seed", type=int, default=None)
    v.add_argument("--samples", type=int, default=None)
    v.add_argument("--max-total", type=int, default=None)
    v.set_defaults(func=cmd_verify)
    return parser


def main(argv=None):
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ResourceLimitError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except GraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SEMANTIC


if __name__ == "__main__":
    sys.exit(main())
