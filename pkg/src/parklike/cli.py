"""Command-line interface.

Commands:
    enumerate    list (or count) all structures on {1..n}
    count        structure count by exhaustive generation
    biject       convert parking-like JSON <-> tree-like JSON
    series       structure counts by generating-series evaluation
    verify       run the built-in verification suites
    define-dump  print the active species definitions

Global flags: --define NAME:=EXPR (repeatable), --format json|jsonl|text,
--budget N (largest label count generation commands will attempt, default 8).

Exit codes: 0 success, 1 invalid input / failed check / exceeded budget,
2 syntax or unbound-name errors in expressions.
"""

from __future__ import annotations

import argparse
import json
import sys

from .dsl import parse_species
from .errors import (
    BudgetExceededError,
    ParseError,
    SpeciesError,
    UnboundNameError,
)
from .expr import SpeciesEnv, expr_to_text
from .generate import Generator
from .parking import ParkingLike, validate_parking
from .series import egf_of_species
from .structures import from_jsonable, serialize, to_jsonable, underlying
from .treelike import TreeLike, validate_tree


def _add_shared_flags(parser) -> None:
    # Registered on the main parser and on every subcommand, so they are
    # accepted on either side of the command word.  SUPPRESS keeps a
    # subcommand's unset flag from clobbering one given before it.
    parser.add_argument(
        "--define",
        action="append",
        default=argparse.SUPPRESS,
        metavar="NAME:=EXPR",
        help="bind a species name (repeatable; may be recursive)",
    )
    parser.add_argument(
        "--format", choices=["json", "jsonl", "text"], default=argparse.SUPPRESS
    )
    parser.add_argument(
        "--budget",
        type=int,
        default=argparse.SUPPRESS,
        help="largest label count generation will attempt (default 8)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="parklike",
        description="Exact enumeration of parking-like and tree-like structures.",
    )
    _add_shared_flags(parser)
    sub = parser.add_subparsers(dest="command", required=True)

    p_enum = sub.add_parser("enumerate", help="list all structures on {1..n}")
    p_enum.add_argument("--expr", required=True)
    p_enum.add_argument("--n", type=int, required=True)
    p_enum.add_argument("--count-only", action="store_true")

    p_count = sub.add_parser("count", help="count structures on {1..n}")
    p_count.add_argument("--expr", required=True)
    p_count.add_argument("--n", type=int, required=True)

    p_bij = sub.add_parser("biject", help="apply the parking/tree bijection")
    p_bij.add_argument("--expr", required=True, help="base species expression")
    p_bij.add_argument("--direction", required=True, choices=["p2t", "t2p"])
    p_bij.add_argument("--input", default="-", help="file with JSON input, - for stdin")

    p_ser = sub.add_parser("series", help="exact counts via generating series")
    p_ser.add_argument("--expr", required=True)
    p_ser.add_argument("--order", type=int, required=True)

    p_ver = sub.add_parser("verify", help="run the verification suites")
    p_ver.add_argument("--suite", default="all", choices=["paper", "properties", "all"])
    p_ver.add_argument("--max-n", type=int, default=None)
    p_ver.add_argument("--golden-dir", default=None)

    p_dump = sub.add_parser("define-dump", help="print the active species definitions")
    for cmd in (p_enum, p_count, p_bij, p_ser, p_ver, p_dump):
        _add_shared_flags(cmd)
    return parser


def _build_env(defines) -> SpeciesEnv:
    env = SpeciesEnv.standard()
    pairs = []
    for item in defines:
        name, sep, body = item.partition(":=")
        if not sep:
            raise ParseError(f"--define needs NAME:=EXPR, got {item!r}", 0)
        pairs.append((name.strip(), body.strip()))
    names = [name for name, _ in pairs]
    for name, body in pairs:
        env.bind(name, parse_species(body, env, extra_names=names))
    return env


def _check_budget(n: int, budget: int) -> None:
    if n > budget:
        raise BudgetExceededError(
            f"n = {n} exceeds the generation budget {budget} (raise with --budget)"
        )


def cmd_enumerate(args, env) -> int:
    expr = parse_species(args.expr, env)
    _check_budget(args.n, args.budget)
    gen = Generator(env)
    if getattr(args, "count_only", False):
        print(gen.count(expr, args.n))
        return 0
    structures = gen.generate(expr, range(1, args.n + 1))
    if args.format == "json":
        print(json.dumps([to_jsonable(s) for s in structures], sort_keys=True))
    else:
        for s in structures:
            print(serialize(s))
    return 0


def cmd_count(args, env) -> int:
    expr = parse_species(args.expr, env)
    _check_budget(args.n, args.budget)
    print(Generator(env).count(expr, args.n))
    return 0


def _read_documents(source: str):
    text = sys.stdin.read() if source == "-" else open(source).read()
    try:
        return [json.loads(text)]
    except json.JSONDecodeError:
        return [json.loads(line) for line in text.splitlines() if line.strip()]


def cmd_biject(args, env) -> int:
    from .bijection import park_to_tree, tree_to_park

    base = parse_species(args.expr, env)
    gen = Generator(env)
    for data in _read_documents(args.input):
        value = from_jsonable(data)
        _check_budget(len(underlying(value)), args.budget)
        if args.direction == "p2t":
            if not isinstance(value, ParkingLike):
                raise SpeciesError("p2t input must be a parking-like structure")
            validate_parking(value, base, gen)
            print(serialize(park_to_tree(value)))
        else:
            if not isinstance(value, TreeLike):
                raise SpeciesError("t2p input must be a tree-like structure")
            validate_tree(value, base, gen)
            print(serialize(tree_to_park(value)))
    return 0


def cmd_series(args, env) -> int:
    expr = parse_species(args.expr, env)
    series = egf_of_species(expr, env, args.order)
    print(
        json.dumps(
            {
                "expr": args.expr,
                "order": series.order,
                "counts": [str(a) for a in series.counts],
            }
        )
    )
    return 0


def cmd_verify(args, env) -> int:
    from .verify import run_suite

    report = run_suite(args.suite, max_n=args.max_n, golden_dir=args.golden_dir, env=env)
    print(json.dumps(report, indent=2, sort_keys=True))
    return 0 if report["ok"] else 1


def cmd_define_dump(args, env) -> int:
    entries = {name: expr_to_text(env.lookup(name)) for name in env.names()}
    if args.format == "json":
        print(json.dumps(entries, sort_keys=True))
    else:
        for name in sorted(entries):
            print(f"{name} := {entries[name]}")
    return 0


_COMMANDS = {
    "enumerate": cmd_enumerate,
    "count": cmd_count,
    "biject": cmd_biject,
    "series": cmd_series,
    "verify": cmd_verify,
    "define-dump": cmd_define_dump,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    for flag, default in (("define", []), ("format", "text"), ("budget", 8)):
        if not hasattr(args, flag):
            setattr(args, flag, default)
    try:
        env = _build_env(args.define)
        return _COMMANDS[args.command](args, env)
    except (ParseError, UnboundNameError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except SpeciesError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
