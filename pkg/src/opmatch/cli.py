"""Command line surface: gen, search, multisearch, bench.

Exit codes: 0 success, 2 I/O failure, 64 usage error, 65 malformed data.
All positions printed are 1-based.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from . import bench as bench_mod
from .core import InputError, SearchStats, naive_search, rep_table, validate_seq
from .forward_automaton import build_forward, build_forward_lazy, forward_search
from .mp_automaton import build_mp, mp_search
from .multi_ac import ac_search, build_ac, make_pattern_set
from .sublinear import DEFAULT_B_FACTOR, search_or_fallback

EX_OK = 0
EX_IOERR = 2
EX_USAGE = 64
EX_DATA = 65

SEARCH_ALGOS = ("naive", "mp", "forward", "forward-lazy", "sublinear")


def _read_tokens(path: str) -> list:
    """Whitespace-separated decimal integers; '#' starts a comment."""
    with open(path, "r", encoding="ascii") as fh:
        text = fh.read()
    tokens = []
    for line in text.splitlines():
        body = line.split("#", 1)[0]
        tokens.extend(body.split())
    try:
        return [int(tok) for tok in tokens]
    except ValueError as exc:
        raise InputError(f"{path}: {exc}") from None


def _read_pattern_lines(path: str) -> list:
    """One pattern per line; comment-only lines are skipped."""
    with open(path, "r", encoding="ascii") as fh:
        text = fh.read()
    patterns = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        body = line.split("#", 1)[0]
        if line.strip().startswith("#"):
            continue
        tokens = body.split()
        if not tokens:
            raise InputError(f"{path}:{lineno}: empty pattern line")
        try:
            patterns.append([int(tok) for tok in tokens])
        except ValueError as exc:
            raise InputError(f"{path}:{lineno}: {exc}") from None
    if not patterns:
        raise InputError(f"{path}: no patterns")
    return patterns


def _print_stats(stats: SearchStats, out) -> None:
    print(f"# stats: symbols_read={stats.symbols_read} "
          f"transitions_taken={stats.transitions_taken} "
          f"verifications={stats.verifications}", file=out)


def cmd_gen(args) -> int:
    seq = bench_mod.random_permutation(args.n, args.seed)
    body = "\n".join(str(v) for v in seq) + "\n"
    if args.out:
        with open(args.out, "w", encoding="ascii") as fh:
            fh.write(body)
    else:
        sys.stdout.write(body)
    return EX_OK


def cmd_search(args) -> int:
    pattern = rep_table(validate_seq(_read_tokens(args.pattern), require_nonempty=True))
    text = validate_seq(_read_tokens(args.text))
    algo = args.algo
    if algo == "naive":
        stats = SearchStats()
        occ = naive_search(pattern, text, stats)
    elif algo == "mp":
        occ, stats = mp_search(build_mp(pattern), text)
    elif algo == "forward":
        occ, stats = forward_search(build_forward(build_mp(pattern)), text)
    elif algo == "forward-lazy":
        occ, stats = forward_search(build_forward_lazy(build_mp(pattern)), text)
    else:
        occ, stats, fell_back = search_or_fallback(pattern, text, args.b_factor)
        if fell_back and not args.quiet:
            print("sublinear: pattern too short for backward-window search; "
                  "falling back to mp", file=sys.stderr)
    for o in occ:
        print(o.position)
    if args.stats:
        _print_stats(stats, sys.stdout)
    return EX_OK


def cmd_multisearch(args) -> int:
    patterns = make_pattern_set(_read_pattern_lines(args.patterns))
    text = validate_seq(_read_tokens(args.text))
    occ, stats = ac_search(build_ac(patterns), text)
    for o in occ:
        print(f"{o.position}\t{o.pattern_id + 1}")
    if args.stats:
        _print_stats(stats, sys.stdout)
    return EX_OK


def cmd_bench(args) -> int:
    pattern = None
    if args.pattern_file:
        pattern = tuple(validate_seq(_read_tokens(args.pattern_file),
                                     require_nonempty=True))
    try:
        cfg = bench_mod.BenchConfig(algo=args.algo, n=args.n, trials=args.trials,
                                    seed=args.seed, m=args.m, pattern=pattern)
    except ValueError as exc:
        print(f"opmatch bench: {exc}", file=sys.stderr)
        return EX_USAGE
    records = bench_mod.run_bench(cfg)
    if args.out:
        with open(args.out, "w", encoding="ascii") as fh:
            bench_mod.write_csv(records, fh)
    else:
        bench_mod.write_csv(records, sys.stdout)
    return EX_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="opmatch",
        description="Order-isomorphic (order-preserving) pattern matching. "
                    "Exit codes: 0 ok, 2 I/O error, 64 usage error, 65 bad data.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_gen = sub.add_parser("gen", help="write a random permutation of 1..n")
    p_gen.add_argument("--n", type=int, required=True)
    p_gen.add_argument("--seed", type=int, default=0)
    p_gen.add_argument("--out", default=None)
    p_gen.set_defaults(func=cmd_gen)

    p_search = sub.add_parser("search", help="search one pattern in a text")
    p_search.add_argument("--algo", choices=SEARCH_ALGOS, default="mp")
    p_search.add_argument("--stats", action="store_true",
                          help="append a '# stats:' line")
    p_search.add_argument("--quiet", action="store_true",
                          help="suppress the sublinear fallback notice")
    p_search.add_argument("--b-factor", type=float, default=DEFAULT_B_FACTOR,
                          help="backward read length scale for --algo sublinear")
    p_search.add_argument("pattern")
    p_search.add_argument("text")
    p_search.set_defaults(func=cmd_search)

    p_multi = sub.add_parser("multisearch",
                             help="search many patterns (one per line) at once")
    p_multi.add_argument("--stats", action="store_true")
    p_multi.add_argument("patterns")
    p_multi.add_argument("text")
    p_multi.set_defaults(func=cmd_multisearch)

    p_bench = sub.add_parser("bench", help="run timed trials, emit CSV")
    p_bench.add_argument("--algo", choices=bench_mod.ALGORITHMS, required=True)
    p_bench.add_argument("--m", type=int, default=None)
    p_bench.add_argument("--pattern-file", default=None)
    p_bench.add_argument("--n", type=int, required=True)
    p_bench.add_argument("--trials", type=int, default=1)
    p_bench.add_argument("--seed", type=int, default=0)
    p_bench.add_argument("--out", default=None)
    p_bench.set_defaults(func=cmd_bench)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse exits 0 for --help, 2 for usage
        return EX_OK if exc.code == 0 else EX_USAGE
    try:
        if getattr(args, "n", None) is not None and args.n < 1:
            print("opmatch: --n must be >= 1", file=sys.stderr)
            return EX_USAGE
        if getattr(args, "trials", None) is not None and args.trials < 1:
            print("opmatch: --trials must be >= 1", file=sys.stderr)
            return EX_USAGE
        return args.func(args)
    except InputError as exc:
        print(f"opmatch: {exc}", file=sys.stderr)
        return EX_DATA
    except OSError as exc:
        print(f"opmatch: {exc}", file=sys.stderr)
        return EX_IOERR


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
