"""Command-line front end.

Every operation is scriptable with stable output; --json switches any
subcommand to a canonical single-document JSON form.  Exit status: 0 ok,
1 domain error, 2 usage error, 3 verification found discrepancies,
4 time budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import sys

from .codes import (
    Code,
    dominant_codewords,
    find_ball_collision,
    is_t_deletion_correcting,
    vt_code,
)
from .dominance import (
    closed_form_generation,
    enumerate_dominant_pairs,
    is_dominant,
    verify_characterization,
)
from .search import (
    SearchBudgetExceeded,
    SearchConfig,
    enumerate_optimal_codes,
    max_code_size,
)
from .words import (
    Word,
    deletion_ball,
    deletion_distance,
    hamming_distance,
    levenshtein_indel,
)

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_USAGE = 2
EXIT_DISCREPANCY = 3
EXIT_BUDGET = 4


def _dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except SearchBudgetExceeded as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_BUDGET
    except (ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_DOMAIN


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="delcodes",
        description="deletion-correcting binary codes: balls, distances, "
        "dominant pairs, code checks, and exact search",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ball", help="list the deletion ball of a word")
    p.add_argument("word")
    p.add_argument("--t", type=int, required=True)
    _add_json(p)
    p.set_defaults(func=_cmd_ball)

    p = sub.add_parser("dist", help="distance between two words")
    p.add_argument("u")
    p.add_argument("v")
    p.add_argument(
        "--metric",
        choices=("deletion", "levenshtein", "hamming"),
        default="deletion",
    )
    _add_json(p)
    p.set_defaults(func=_cmd_dist)

    p = sub.add_parser("dominate", help="does u dominate v under t deletions?")
    p.add_argument("u")
    p.add_argument("v")
    p.add_argument("--t", type=int, required=True)
    _add_json(p)
    p.set_defaults(func=_cmd_dominate)

    p = sub.add_parser("enumerate", help="list dominant pairs of one length")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--method", choices=("brute", "closed"), default="brute")
    _add_json(p)
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser(
        "verify", help="check the closed-form tables against brute force"
    )
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    _add_json(p)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("check", help="predicates for a code file")
    p.add_argument("file")
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--perfect", action="store_true")
    p.add_argument("--basic", action="store_true")
    _add_json(p)
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("search", help="maximum code size by exact search")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--no-basic-prune", action="store_true")
    p.add_argument("--no-force-constants", action="store_true")
    p.add_argument("--enumerate", action="store_true")
    p.add_argument("--canonical", action="store_true")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument(
        "--budget",
        type=float,
        default=600.0,
        metavar="SECONDS",
        help="wall-clock limit; 0 means unlimited (default: 600)",
    )
    _add_json(p)
    p.set_defaults(func=_cmd_search)

    p = sub.add_parser("vt", help="emit a checksum-residue baseline code")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--a", type=int, required=True)
    _add_json(p)
    p.set_defaults(func=_cmd_vt)

    return parser


def _add_json(p: argparse.ArgumentParser) -> None:
    p.add_argument("--json", action="store_true")


def _cmd_ball(args) -> int:
    w = Word(args.word)
    ball = deletion_ball(w, args.t)
    if args.json:
        print(_dumps({"word": str(w), "t": args.t, "ball": ball.strings()}))
    else:
        for s in ball.strings():
            print(s)
    return EXIT_OK


def _cmd_dist(args) -> int:
    u, v = Word(args.u), Word(args.v)
    fn = {
        "deletion": deletion_distance,
        "levenshtein": levenshtein_indel,
        "hamming": hamming_distance,
    }[args.metric]
    d = fn(u, v)
    if args.json:
        print(_dumps({"u": str(u), "v": str(v), "metric": args.metric, "distance": d}))
    else:
        print(d)
    return EXIT_OK


def _cmd_dominate(args) -> int:
    u, v = Word(args.u), Word(args.v)
    dom = is_dominant(u, v, args.t)
    ball_u = len(deletion_ball(u, args.t))
    ball_v = len(deletion_ball(v, args.t))
    if args.json:
        print(
            _dumps(
                {
                    "u": str(u),
                    "v": str(v),
                    "t": args.t,
                    "dominant": dom,
                    "ball_u": ball_u,
                    "ball_v": ball_v,
                }
            )
        )
    elif dom:
        print(f"yes |D_{args.t}(v)|={ball_v} <= |D_{args.t}(u)|={ball_u}")
    else:
        print("no")
    return EXIT_OK


def _cmd_enumerate(args) -> int:
    if args.method == "closed":
        gen = closed_form_generation(args.n, args.t)
        rows = [(p.u, p.v, list(gen.provenance[p])) for p in gen.pairs]
    else:
        pairs = enumerate_dominant_pairs(args.n, args.t)
        rows = [(p.u, p.v, ["brute"]) for p in pairs]
    if args.json:
        print(
            _dumps(
                {
                    "n": args.n,
                    "t": args.t,
                    "method": args.method,
                    "pairs": [
                        {"u": str(u), "v": str(v), "sources": tags}
                        for u, v, tags in rows
                    ],
                }
            )
        )
    else:
        for u, v, tags in rows:
            print(f"{u} {v} {','.join(tags)}")
    return EXIT_OK


def _cmd_verify(args) -> int:
    report = verify_characterization(args.n, args.t)
    if args.json:
        print(_dumps(report.to_json_dict()))
    else:
        print(report.summary())
    return EXIT_OK if report.confirmed else EXIT_DISCREPANCY


def _cmd_check(args) -> int:
    code = Code.from_file(args.file)
    t = args.t
    collision = find_ball_collision(code, t)
    correcting = collision is None

    perfect: bool | None = None
    if args.perfect:
        if correcting:
            covered = sum(len(deletion_ball(w, t)) for w in code)
            perfect = covered == 1 << (code.length - t)
        else:
            perfect = None  # undefined without disjoint balls

    offenders: list[Word] | None = None
    if args.basic:
        offenders = dominant_codewords(code, t)

    if args.json:
        doc = {
            "words": len(code),
            "length": code.length,
            "t": t,
            "deletion_correcting": correcting,
            "collision": [str(collision[0]), str(collision[1])] if collision else None,
        }
        if args.perfect:
            doc["perfect"] = perfect
        if args.basic:
            doc["basic"] = not offenders
            doc["dominant_codewords"] = [str(w) for w in offenders]
        print(_dumps(doc))
    else:
        print(f"words: {len(code)} of length {code.length}")
        if correcting:
            print(f"deletion-correcting(t={t}): yes")
        else:
            print(
                f"deletion-correcting(t={t}): no"
                f" (balls of {collision[0]} and {collision[1]} intersect)"
            )
        if args.perfect:
            if perfect is None:
                print(f"perfect(t={t}): not applicable (balls are not disjoint)")
            else:
                print(f"perfect(t={t}): {'yes' if perfect else 'no'}")
        if args.basic:
            if offenders:
                listed = " ".join(str(w) for w in offenders)
                print(f"basic(t={t}): no (dominant codewords: {listed})")
            else:
                print(f"basic(t={t}): yes")
    return EXIT_OK


def _cmd_search(args) -> int:
    if args.enumerate and args.canonical:
        print("error: --enumerate and --canonical conflict", file=sys.stderr)
        return EXIT_USAGE
    config = SearchConfig(
        n=args.n,
        t=args.t,
        basic_only=not args.no_basic_prune,
        force_constants=not args.no_force_constants,
        enumerate_all=args.enumerate,
        canonical_witness=args.canonical,
        time_budget=args.budget,
        workers=args.threads,
    )
    if args.enumerate:
        codes = enumerate_optimal_codes(config)
        if args.json:
            print(
                _dumps(
                    {
                        "n": args.n,
                        "t": args.t,
                        "optimum": len(codes[0]) if codes else 0,
                        "classes": [[str(w) for w in c] for c in codes],
                    }
                )
            )
        else:
            for idx, c in enumerate(codes, 1):
                print(f"# class {idx}")
                sys.stdout.write(c.to_text())
        return EXIT_OK

    result = max_code_size(config)
    if args.json:
        print(_dumps(result.to_json_dict()))
    else:
        kind = "optimum" if result.exhausted else "lower-bound (budget exhausted)"
        print(
            f"{kind} {result.optimum}"
            f" nodes={result.node_count} time_ms={result.wall_time_ms}"
        )
        sys.stdout.write(result.witness.to_text())
    return EXIT_OK if result.exhausted else EXIT_BUDGET


def _cmd_vt(args) -> int:
    code = vt_code(args.n, args.a)
    if args.json:
        print(
            _dumps(
                {
                    "n": args.n,
                    "a": args.a,
                    "size": len(code),
                    "words": [str(w) for w in code],
                }
            )
        )
    else:
        print(f"# checksum residue {args.a} mod {args.n + 1}, {len(code)} words")
        sys.stdout.write(code.to_text())
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
