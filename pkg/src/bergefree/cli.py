"""Command-line front end.

Exit codes: 0 found/ok, 1 free/negative, 2 usage or input error, 3 budget
or cap exhausted. Every flag can also be set through an environment
variable ``BERGEFREE_<FLAG>`` (e.g. ``BERGEFREE_BUDGET_NODES``,
``BERGEFREE_CAP``); explicit flags win.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import __version__
from .berge import brute_force_contains_berge, contains_berge
from .catalog import resolve_pattern
from .classify import (
    blue_counting_bound,
    blue_density_report,
    classify_edges,
    verify_blue_in_every_copy,
    verify_nonblue_within_edge_f_free,
)
from .constructions import greedy_maximal, kr_construction, kr_predicted_size_sum, single_edge
from .hypergraph import ExceedsCap, HypergraphError
from .io import format_hypergraph, hypergraph_to_json, load_hypergraph, store_hypergraph
from .orderly import Budget, BudgetExhausted
from .ramsey import RamseyExceedsCap, ramsey_number, threshold_table
from .search import max_f_free_edges, max_weight_berge_free, verify_lemma1_margin
from .sweep import SweepConfig, rows_to_csv, run_sweep
from .weights import WeightFunction

EXIT_OK, EXIT_NEGATIVE, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3
ENV_PREFIX = "BERGEFREE_"

GLOBAL_DEFAULTS = {"threads": 1, "budget_nodes": 10**8, "seed": 0, "json": False}


class InputError(Exception):
    pass


def _global_options() -> argparse.ArgumentParser:
    # SUPPRESS lets the flags appear before or after the subcommand
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--threads", type=int, default=argparse.SUPPRESS, help="worker processes for sweeps")
    p.add_argument("--budget-nodes", type=int, default=argparse.SUPPRESS, help="search-node budget")
    p.add_argument("--seed", type=int, default=argparse.SUPPRESS, help="seed for randomized generators")
    p.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="machine-readable output")
    return p


def _env_value(name: str, default):
    raw = os.environ.get(ENV_PREFIX + name.upper())
    if raw is None:
        return default
    if isinstance(default, bool):
        return _env_bool(raw)
    try:
        return int(raw)
    except ValueError:
        raise InputError(f"{ENV_PREFIX}{name.upper()}={raw!r} is not an integer") from None


def _int_list(text: str) -> list[int]:
    out = []
    for part in text.split(","):
        part = part.strip()
        if ":" in part:
            lo, hi, *step = (int(x) for x in part.split(":"))
            out.extend(range(lo, hi + 1, step[0] if step else 1))
        elif part:
            out.append(int(part))
    return out


def _pattern(spec: str):
    try:
        return resolve_pattern(spec)
    except (OSError, ValueError) as exc:
        raise InputError(str(exc)) from None


def _load(path: str):
    try:
        return load_hypergraph(path)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror or exc}") from None
    except HypergraphError as exc:
        raise InputError(f"{path}: {exc}") from None


def _emit_json(obj) -> None:
    json.dump(obj, sys.stdout, sort_keys=True)
    sys.stdout.write("\n")


# -- subcommands -------------------------------------------------------------


def cmd_detect(args) -> int:
    H = _load(args.hypergraph)
    F = _pattern(args.pattern)
    witness = brute_force_contains_berge(H, F) if args.oracle else contains_berge(H, F)
    if args.witness_out and witness is not None:
        Path(args.witness_out).write_text(json.dumps(witness.to_json()) + "\n", encoding="utf-8")
    if args.json:
        _emit_json({"contains": witness is not None, "witness": witness.to_json() if witness else None})
    elif witness is None:
        print("Berge-F-free")
    else:
        print("contains Berge-F")
        print(json.dumps(witness.to_json()))
    return EXIT_OK if witness is not None else EXIT_NEGATIVE


def cmd_classify(args) -> int:
    H = _load(args.hypergraph)
    F = _pattern(args.pattern)
    if F.m < 1:
        raise InputError("classification needs a pattern with at least one edge")
    cls = classify_edges(H, F, set_semantics=args.set_semantics)
    text = cls.to_csv()
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8", newline="\n")
    else:
        sys.stdout.write(text)
    if args.density:
        try:
            rep = blue_density_report(H, F)
        except ValueError as exc:
            raise InputError(str(exc)) from None
        for row in rep.rows:
            print(f"# h={row.index} size={row.size} blue={row.blue} ratio={row.ratio:.6f}", file=sys.stderr)
        if rep.min_ratio is not None:
            print(f"# min_ratio={rep.min_ratio:.6f}", file=sys.stderr)
    return EXIT_OK


def cmd_verify(args) -> int:
    H = _load(args.hypergraph)
    F = _pattern(args.pattern)
    if F.m < 1:
        raise InputError("verification needs a pattern with at least one edge")
    results: list[dict] = []
    witness = contains_berge(H, F)
    if witness is not None:
        msg = "precondition violated: input contains a Berge-F, the checks only apply to Berge-F-free input"
        if args.json:
            _emit_json({"precondition": False, "message": msg, "witness": witness.to_json(), "checks": []})
        else:
            print(msg)
        return EXIT_NEGATIVE
    cls = classify_edges(H, F)
    copy_check = verify_blue_in_every_copy(H, F, max_copies=args.max_copies, classification=cls)
    results.append(
        {
            "check": "blue_edge_in_every_copy",
            "ok": copy_check.ok,
            "copies_checked": copy_check.copies_checked,
            "truncated": copy_check.truncated,
            "counterexample": list(copy_check.counterexample) if copy_check.counterexample else None,
        }
    )
    bad_edges = []
    checked = 0
    for i, size in enumerate(H.sizes):
        if size < F.n:
            continue
        checked += 1
        res = verify_nonblue_within_edge_f_free(H, F, i, classification=cls)
        if not res.ok:
            bad_edges.append({"hyperedge": i, "copy": list(res.counterexample)})
    results.append(
        {"check": "nonblue_inside_hyperedge_f_free", "ok": not bad_edges, "hyperedges_checked": checked, "violations": bad_edges}
    )
    bound = blue_counting_bound(H, F)
    results.append(
        {"check": "blue_counting_bound", "ok": bound.ok, "lhs": bound.blue_incidences, "rhs": bound.bound}
    )
    all_ok = all(r["ok"] for r in results)
    if args.json:
        _emit_json({"precondition": True, "checks": results, "ok": all_ok})
    else:
        for r in results:
            detail = ", ".join(f"{k}={v}" for k, v in r.items() if k not in {"check", "ok"})
            print(f"{'PASS' if r['ok'] else 'FAIL'} {r['check']}: {detail}")
    if not all_ok:
        return EXIT_NEGATIVE
    return EXIT_BUDGET if copy_check.truncated else EXIT_OK


def cmd_ramsey(args) -> int:
    F = _pattern(args.pattern)
    if args.vs:
        G = _pattern(args.vs)
        try:
            res = ramsey_number(F, G, args.cap, Budget(args.budget_nodes))
        except RamseyExceedsCap as exc:
            _report(args, {"value": None, "lower_bound": exc.lower_bound}, f"R > {args.cap}")
            return EXIT_BUDGET
        except BudgetExhausted:
            print("node budget exhausted", file=sys.stderr)
            return EXIT_BUDGET
        if args.witness_dir:
            Path(args.witness_dir).mkdir(parents=True, exist_ok=True)
            res.witness.save(Path(args.witness_dir) / "witness.txt")
        _report(args, {"value": res.value}, f"R = {res.value}")
        return EXIT_OK
    if F.m == 0:
        raise InputError("pattern has no edges to delete")
    edges = F.edges
    if args.edge:
        a, b = _int_list(args.edge)
        e = (min(a, b), max(a, b))
        if e not in F.edge_set:
            raise InputError(f"{e} is not an edge of the pattern")
        edges = (e,)
    try:
        rows = threshold_table(F, args.cap, edges, args.budget_nodes)
    except BudgetExhausted:
        print("node budget exhausted", file=sys.stderr)
        return EXIT_BUDGET
    if args.witness_dir:
        Path(args.witness_dir).mkdir(parents=True, exist_ok=True)
        for row in rows:
            if row.witness is not None:
                row.witness.save(Path(args.witness_dir) / f"witness_{row.edge[0]}_{row.edge[1]}.txt")
    values = [r.value for r in rows if r.value is not None]
    exceeded = any(r.value is None for r in rows)
    if args.json:
        _emit_json(
            {
                "rows": [{"edge": list(r.edge), "value": r.value, "lower_bound": r.lower_bound} for r in rows],
                "min": min(values) if values else None,
            }
        )
    else:
        print("edge,R(F,F-e)")
        for r in rows:
            print(f"{r.edge[0]}-{r.edge[1]},{r.value if r.value is not None else f'>{args.cap}'}")
        if values:
            print(f"min,{min(values)}")
        else:
            print(f"min,>{args.cap}")
    return EXIT_BUDGET if exceeded else EXIT_OK


def _report(args, payload: dict, text: str) -> None:
    if args.json:
        _emit_json(payload)
    else:
        print(text)


def cmd_construct(args) -> int:
    if args.kind == "kr":
        if args.r < 2 or args.n % args.r:
            raise InputError("kr needs r >= 2 dividing n")
        H = kr_construction(args.n, args.r)
        predicted = f"n^2/r = {kr_predicted_size_sum(args.n, args.r)}"
    elif args.kind == "single":
        if args.n < 1:
            raise InputError("n must be positive")
        H = single_edge(args.n)
        predicted = f"n = {args.n}"
    else:
        F = _pattern(args.pattern)
        s_max = args.s_max if args.s_max is not None else args.n
        if not 2 <= args.s_min <= s_max <= args.n:
            raise InputError("need 2 <= s_min <= s_max <= n")
        H = greedy_maximal(args.n, F, args.s_min, s_max, args.seed, args.budget_factor)
        predicted = "n/a"
    print(f"# sum|h|: predicted {predicted}; measured {sum(H.sizes)}", file=sys.stderr)
    if args.out:
        store_hypergraph(H, args.out)
    elif args.json:
        _emit_json(hypergraph_to_json(H))
    else:
        sys.stdout.write(format_hypergraph(H))
    return EXIT_OK


def cmd_search(args) -> int:
    F = _pattern(args.pattern)
    budget = args.budget_nodes
    try:
        if args.kind == "graph":
            rep = max_f_free_edges(args.n, F, budget)
        elif args.kind == "hypergraph":
            w = WeightFunction.parse(args.weight)
            s_max = args.s_max if args.s_max is not None else args.n
            rep = max_weight_berge_free(
                args.n, F, w, args.s_min, s_max, budget, args.set_semantics, args.multiplicity_cap
            )
        else:
            n_values = _int_list(args.n_range)
            rows = verify_lemma1_margin(F, n_values, budget)
            holds = all(r.holds for r in rows)
            exhaustive = all(r.exhaustive for r in rows)
            if args.json:
                _emit_json(
                    {
                        "rows": [
                            {"n": r.n, "ex": r.ex, "pairs": r.pairs, "ratio": r.ratio, "exhaustive": r.exhaustive}
                            for r in rows
                        ],
                        "holds": holds,
                    }
                )
            else:
                print("n,ex,pairs,ratio,exhaustive")
                for r in rows:
                    print(f"{r.n},{r.ex},{r.pairs},{r.ratio:.6f},{int(r.exhaustive)}")
            if not holds:
                return EXIT_NEGATIVE
            return EXIT_OK if exhaustive else EXIT_BUDGET
    except (ValueError, ExceedsCap) as exc:
        raise InputError(str(exc)) from None
    if args.json:
        _emit_json(rep.to_json())
    else:
        print(f"optimum {rep.optimum} ({rep.bound_kind}), nodes {rep.nodes_explored}, {rep.wall_time:.3f}s")
        if hasattr(rep.witness, "hyperedges"):
            sys.stdout.write(format_hypergraph(rep.witness))
        else:
            print(f"n={rep.witness.n}")
            for u, v in rep.witness.edges:
                print(u, v)
    return EXIT_OK if rep.exhaustive else EXIT_BUDGET


def cmd_sweep(args) -> int:
    try:
        if args.config:
            cfg = SweepConfig.from_file(args.config)
        else:
            if not args.generator or not args.n:
                raise InputError("sweep needs --config or both --generator and --n")
            cfg = SweepConfig(
                generator=args.generator,
                n_values=_int_list(args.n),
                pattern=args.pattern,
                weight=args.weight,
                seeds=_int_list(args.seeds) if args.seeds else [args.seed],
                r=args.r,
                s_min=args.s_min,
                s_max=args.s_max,
                budget_factor=args.budget_factor,
            )
    except (OSError, ValueError, TypeError) as exc:
        raise InputError(f"invalid sweep config: {exc}") from None
    text = rows_to_csv(run_sweep(cfg, args.threads))
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8", newline="\n")
    else:
        sys.stdout.write(text)
    return EXIT_OK


# -- parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = _global_options()
    parser = argparse.ArgumentParser(
        prog="bergefree",
        description="Berge-F-free hypergraph toolkit",
        parents=[common],
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("detect", parents=[common], help="decide Berge-F containment")
    p.add_argument("hypergraph")
    p.add_argument("pattern", help="catalog name (K_3, C_4, P_4) or graph file")
    p.add_argument("--oracle", action="store_true", help="use the brute-force reference oracle")
    p.add_argument("--witness-out", help="write the witness JSON here")
    p.set_defaults(func=cmd_detect)

    p = sub.add_parser("classify", parents=[common], help="blue/non-blue shadow edge table (CSV)")
    p.add_argument("hypergraph")
    p.add_argument("pattern")
    p.add_argument("--out")
    p.add_argument("--set-semantics", action="store_true", help="count repeated hyperedges once")
    p.add_argument("--density", action="store_true", help="also print per-hyperedge blue density")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("verify", parents=[common], help="run the blue-edge checks on a Berge-F-free input")
    p.add_argument("hypergraph")
    p.add_argument("pattern")
    p.add_argument("--max-copies", type=int, default=None, help="cap on pattern copies scanned")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("ramsey", parents=[common], help="R(F, F-e) thresholds, or R(F, G) with --vs")
    p.add_argument("pattern")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--edge", help="pattern edge 'a,b' (default: every edge)")
    group.add_argument("--all-edges", action="store_true")
    group.add_argument("--vs", help="second pattern G for a plain R(F, G)")
    p.add_argument("--cap", type=int, default=10)
    p.add_argument("--witness-dir", help="save extremal colourings here")
    p.set_defaults(func=cmd_ramsey)

    p = sub.add_parser("construct", parents=[common], help="emit a construction in the hypergraph file format")
    p.add_argument("kind", choices=["kr", "single", "greedy"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, default=3)
    p.add_argument("--pattern", default="K_3")
    p.add_argument("--s-min", type=int, default=2)
    p.add_argument("--s-max", type=int, default=None)
    p.add_argument("--budget-factor", type=int, default=10)
    p.add_argument("--out")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("search", parents=[common], help="exact extremal oracles")
    p.add_argument("kind", choices=["hypergraph", "graph", "margin"])
    p.add_argument("--pattern", default="K_3")
    p.add_argument("--n", type=int, default=5)
    p.add_argument("--n-range", default="3:7", help="for margin: 'lo:hi' or comma list")
    p.add_argument("--weight", default="size")
    p.add_argument("--s-min", type=int, default=2)
    p.add_argument("--s-max", type=int, default=None)
    p.add_argument("--set-semantics", action="store_true")
    p.add_argument("--multiplicity-cap", type=int, default=None)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("sweep", parents=[common], help="CSV growth curves over an n sweep")
    p.add_argument("--config", help="JSON file with SweepConfig fields")
    p.add_argument("--generator", choices=["kr", "single", "greedy"])
    p.add_argument("--n", help="e.g. '6,12,18' or '20:60:10'")
    p.add_argument("--pattern", default="K_3")
    p.add_argument("--weight", default="size")
    p.add_argument("--seeds", help="comma list; defaults to --seed")
    p.add_argument("--r", type=int, default=3)
    p.add_argument("--s-min", default="2")
    p.add_argument("--s-max", default="n")
    p.add_argument("--budget-factor", type=int, default=10)
    p.add_argument("--out")
    p.set_defaults(func=cmd_sweep)
    return parser


def _env_bool(raw: str) -> bool:
    return raw.strip().lower() in {"1", "true", "yes", "on"}


def _apply_env_defaults(parser: argparse.ArgumentParser) -> None:
    """Let ``BERGEFREE_<DEST>`` replace the default of every optional flag."""
    for action in parser._actions:
        if isinstance(action, argparse._SubParsersAction):
            for child in action.choices.values():
                _apply_env_defaults(child)
            continue
        if not action.option_strings or action.default is argparse.SUPPRESS:
            continue
        raw = os.environ.get(ENV_PREFIX + action.dest.upper())
        if raw is None:
            continue
        if isinstance(action, argparse._StoreTrueAction):
            action.default = _env_bool(raw)
        elif action.type is not None:
            action.default = action.type(raw)
        else:
            action.default = raw


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        _apply_env_defaults(parser)
    except ValueError as exc:
        print(f"error: bad environment override: {exc}", file=sys.stderr)
        return EXIT_INPUT
    args = parser.parse_args(argv)
    try:
        for name, default in GLOBAL_DEFAULTS.items():
            if not hasattr(args, name):
                setattr(args, name, _env_value(name, default))
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
