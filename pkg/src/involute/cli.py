"""Command-line front end.

Subcommands: ``analyze``, ``construct``, ``verify``, ``factor``, ``trace``.
Exit codes: 0 success, 1 verification failure, 2 input error, 3 budget
exceeded.
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from . import families
from .battery import check_names, run_battery
from .errors import AlgebraError, BudgetExceededError, InputFormatError
from .graphs import frucht_semigroup, load_graph, parse_edge_list
from .perms import Permutation, parse_cycles
from .permgroups import two_involution_factorization
from .report import analyze, report_to_json_dict, report_to_text
from .semigroups import FiniteSemigroup, load_table, to_json_dict
from .traces import TraceContext, delta_map, gamma_map, normal_form, trace_equal

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_INPUT_ERROR = 2
EXIT_BUDGET = 3


# --- construct: a tiny recursive grammar over the argv tail ----------------

_ARITIES = {
    "cyclic": 1, "zn": 1, "klein": 0, "sym": 1, "alt": 1,
    "transformation": 1, "tn": 1, "inverse": 1, "dual-inverse": 1,
    "partition": 1, "band": 2, "zero": 1, "dihedral": 1, "quaternion": 0,
    "z2^k": 1,
}


def _parse_construct(tokens: list[str]) -> tuple[FiniteSemigroup, list[str]]:
    if not tokens:
        raise InputFormatError("missing family name")
    head, rest = tokens[0], tokens[1:]
    if head == "doubled":
        inner, rest = _parse_construct(rest)
        return families.doubled_semigroup(inner), rest
    if head == "dual":
        inner, rest = _parse_construct(rest)
        return families.dual_table(inner), rest
    if head == "product":
        left, rest = _parse_construct(rest)
        right, rest = _parse_construct(rest)
        return families.direct_product_table(left, right), rest
    if head == "frucht":
        if not rest:
            raise InputFormatError("frucht needs a graph file or '<n> <edges>'")
        if rest[0].endswith(".json"):
            return frucht_semigroup(load_graph(rest[0])), rest[1:]
        if len(rest) < 2:
            raise InputFormatError("inline frucht needs '<n> <edges like 0-1,1-2>'")
        graph = parse_edge_list(rest[1], n=int(rest[0]))
        return frucht_semigroup(graph), rest[2:]
    if head == "file":
        if not rest:
            raise InputFormatError("file needs a path")
        return load_table(rest[0]), rest[1:]
    if head not in _ARITIES:
        raise InputFormatError(f"unknown family {head!r} (see --help)")
    arity = _ARITIES[head]
    if len(rest) < arity:
        raise InputFormatError(f"{head} needs {arity} integer argument(s)")
    try:
        args = [int(tok) for tok in rest[:arity]]
    except ValueError as exc:
        raise InputFormatError(f"{head} arguments must be integers") from exc
    rest = rest[arity:]
    builders = {
        "cyclic": families.cyclic_group,
        "zn": families.cyclic_group,
        "klein": families.klein_four,
        "sym": families.sym_group_table,
        "alt": families.alternating_group_table,
        "transformation": families.full_transformation_monoid,
        "tn": families.full_transformation_monoid,
        "inverse": families.symmetric_inverse_monoid,
        "dual-inverse": families.dual_symmetric_inverse_monoid,
        "partition": families.partition_monoid,
        "band": families.rectangular_band,
        "zero": families.zero_semigroup,
        "dihedral": families.dihedral_group,
        "quaternion": families.quaternion_group,
        "z2^k": families.elementary_abelian_two_group,
    }
    return builders[head](*args), rest


# --- trace helpers ---------------------------------------------------------

def _trace_context(args) -> TraceContext:
    words = [w for w in (getattr(args, "word", None), getattr(args, "word2", None)) if w]
    letters = set("".join(words))
    edge_pairs = []
    if args.edges:
        for pair in args.edges.split(","):
            pair = pair.strip()
            if len(pair) != 2:
                raise InputFormatError(f"edge {pair!r} must be two letters, like ab")
            edge_pairs.append(pair)
            letters.update(pair)
    if args.alphabet:
        alphabet = args.alphabet
        missing = letters - set(alphabet)
        if missing:
            raise InputFormatError(f"letters {sorted(missing)} outside --alphabet")
    else:
        alphabet = "".join(sorted(letters))
    if not alphabet:
        raise InputFormatError("empty alphabet")
    pos = {ch: i for i, ch in enumerate(alphabet)}
    edges = [(pos[a], pos[b]) for a, b in edge_pairs]
    return TraceContext.from_edges(len(alphabet), edges, letters=alphabet)


def _letter_permutation(text: str, ctx: TraceContext) -> Permutation:
    text = text.strip()
    if text in ("id", "()", ""):
        return Permutation.identity(ctx.m)
    body = re.sub(r"[()]", " ", text)
    cycles = []
    for chunk in body.split():
        try:
            cycles.append([ctx.letters.index(ch) for ch in chunk])
        except ValueError as exc:
            raise InputFormatError(f"letter in {chunk!r} outside alphabet {ctx.letters!r}") from exc
    try:
        return Permutation.from_cycles(cycles, ctx.m)
    except ValueError as exc:
        raise InputFormatError(str(exc)) from exc


# --- subcommand implementations ---------------------------------------------

def _cmd_analyze(args) -> int:
    s = load_table(args.file)
    rep = analyze(
        s,
        name=args.file,
        budget=args.budget_nodes,
        order_cap=args.budget_order,
        jobs=args.jobs,
    )
    if args.json:
        print(json.dumps(report_to_json_dict(rep), sort_keys=True, indent=2))
    else:
        print(report_to_text(rep), end="")
    return EXIT_OK


def _cmd_construct(args) -> int:
    s, rest = _parse_construct(list(args.spec))
    if rest:
        raise InputFormatError(f"unused construct arguments: {rest}")
    doc = json.dumps(to_json_dict(s), sort_keys=True)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(doc + "\n")
        print(f"wrote {s.n}x{s.n} table to {args.output}")
    else:
        print(doc)
    return EXIT_OK


def _cmd_verify(args) -> int:
    stretch = args.stretch or args.scale == "full"
    only = set(args.only.split(",")) if args.only else None
    if only:
        unknown = only - set(check_names())
        if unknown:
            raise InputFormatError(f"unknown check name(s): {sorted(unknown)}")
    def announce(r):
        flag = "PASS" if r.passed else "FAIL"
        print(f"[{flag}] {r.name} ({r.seconds:.2f}s): {r.detail}", flush=True)

    results = run_battery(
        stretch=stretch,
        only=only,
        budget=args.budget_nodes,
        order_cap=args.budget_order,
        jobs=args.jobs,
        on_result=None if args.json else announce,
    )
    if args.json:
        print(json.dumps(
            [
                {
                    "name": r.name,
                    "passed": r.passed,
                    "seconds": round(r.seconds, 3),
                    "detail": r.detail,
                }
                for r in results
            ],
            indent=2,
        ))
    else:
        failed = [r.name for r in results if not r.passed]
        print(f"{len(results) - len(failed)}/{len(results)} checks passed"
              + (f"; failed: {', '.join(failed)}" if failed else ""))
    return EXIT_OK if all(r.passed for r in results) else EXIT_CHECK_FAILED


def _cmd_factor(args) -> int:
    pi = parse_cycles(args.perm, degree=args.degree)
    sigma, tau = two_involution_factorization(pi)
    print(f"pi    = {pi.cycle_string()}")
    print(f"sigma = {sigma.cycle_string()}")
    print(f"tau   = {tau.cycle_string()}")
    ok = (sigma * tau) == pi and (sigma * sigma).is_identity() and (tau * tau).is_identity()
    print(f"check: sigma^2 = tau^2 = id and sigma∘tau = pi: {'OK' if ok else 'FAILED'}")
    return EXIT_OK if ok else EXIT_CHECK_FAILED


def _cmd_trace(args) -> int:
    ctx = _trace_context(args)
    if args.action == "nf":
        print(str(normal_form(ctx.parse(args.word), bound=args.bound)))
    elif args.action == "eq":
        u = ctx.parse(args.word)
        w = ctx.parse(args.word2)
        print("true" if trace_equal(u, w, bound=args.bound) else "false")
    else:  # map
        pi = _letter_permutation(args.perm, ctx)
        w = ctx.parse(args.word)
        out = gamma_map(pi, w) if args.kind == "gamma" else delta_map(pi, w)
        print(str(out))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="involute",
        description="Involutions and (anti-)automorphisms of finite semigroups.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--budget-nodes", type=int, default=None, metavar="N",
                       help="cap on morphism-search extension steps")
        p.add_argument("--budget-order", type=int, default=None, metavar="N",
                       help="cap on materialized group order")
        p.add_argument("--jobs", type=int, default=1,
                       help="parallel workers for the search's first branching level")

    p = sub.add_parser("analyze", help="full report for a Cayley-table JSON file")
    p.add_argument("file")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    common(p)
    p.set_defaults(fn=_cmd_analyze)

    p = sub.add_parser(
        "construct",
        help="emit a family table (cyclic N, klein, sym N, transformation N, "
             "inverse N, dual-inverse N, partition N, band P Q, zero K, "
             "dihedral K, quaternion, alt N, z2^k K, frucht ..., and the "
             "combinators doubled/dual/product/file)",
    )
    p.add_argument("spec", nargs="+", help="family name plus arguments")
    p.add_argument("-o", "--output", help="write JSON here instead of stdout")
    common(p)
    p.set_defaults(fn=_cmd_construct)

    p = sub.add_parser("verify", help="run the verification battery")
    p.add_argument("--scale", choices=("small", "full"), default="small",
                   help="'full' includes the stretch targets")
    p.add_argument("--stretch", action="store_true",
                   help="include Sym(6) and T_4 (same as --scale full)")
    p.add_argument("--only", help="comma-separated subset of check names")
    p.add_argument("--json", action="store_true")
    common(p)
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("factor", help="write a permutation as a product of two involutions")
    p.add_argument("perm", help="cycle notation, e.g. '(0 1 2)(3 4)'")
    p.add_argument("--degree", type=int, default=None)
    common(p)
    p.set_defaults(fn=_cmd_factor)

    p = sub.add_parser("trace", help="partially commutative word tools")
    tsub = p.add_subparsers(dest="action", required=True)
    for action in ("nf", "eq", "map"):
        tp = tsub.add_parser(action)
        if action == "map":
            tp.add_argument("kind", choices=("gamma", "delta"))
            tp.add_argument("perm", help="letter cycles like '(ab)' or 'id'")
        tp.add_argument("word")
        if action == "eq":
            tp.add_argument("word2")
        tp.add_argument("--edges", default="", help="commuting pairs, e.g. ab,bc")
        tp.add_argument("--alphabet", default=None)
        tp.add_argument("--bound", type=int, default=16, help="word length cap")
        common(tp)
        tp.set_defaults(fn=_cmd_trace)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except BudgetExceededError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except AlgebraError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
