"""Command-line front end.

    chw nf --n 2 "x1^-1 x2^2 x1 x2^2"
    chw apply --n 3 --auto "a[1,2] d[3]" "x1 x3"
    chw induced --n 3 --auto "a[1,2]"
    chw verify --n 3 --suite all --seed 0 --json
    chw h1 --n 4
    chw h2 --n 3
    chw snf --file matrix.txt
    chw ball --n 3 --len 2 --box 1

Automorphism words compose like functions: the rightmost token acts first.
Exit status: 0 on success, 1 when a verification check fails, 2 on usage or
parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .automorphisms import apply, evaluate, induced_matrix, induced_w, translation_part
from .cohomology import format_abelian, h1_w, h2_w
from .group import ResourceLimitExceeded, enumerate_ball, format_element
from .lattice import cokernel_invariants, read_matrix, smith_normal_form
from .parsing import ParseError, parse_autoword, parse_element
from .verification import SUITES, reports_to_json, run_all, run_suite


class UsageError(Exception):
    pass


def _cmd_nf(args: argparse.Namespace) -> int:
    print(format_element(parse_element(args.word, args.n)))
    return 0


def _cmd_apply(args: argparse.Namespace) -> int:
    phi = evaluate(parse_autoword(args.auto, args.n))
    print(format_element(apply(phi, parse_element(args.word, args.n))))
    return 0


def _cmd_induced(args: argparse.Namespace) -> int:
    phi = evaluate(parse_autoword(args.auto, args.n))
    F = induced_w(phi)
    m = induced_matrix(phi)
    t = translation_part(phi)
    if args.json:
        print(json.dumps({
            "w_images": [list(w.letters) for w in F.images],
            "a_matrix": m.tolist(),
            "translation": t.tolist() if t is not None else None,
        }))
        return 0
    print("W images:")
    for i, w in enumerate(F.images, start=1):
        print(f"  x{i} -> {w}")
    print("A matrix (row i = image of x_i^2):")
    print(m)
    if t is not None:
        print("translation matrix:")
        print(t)
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    if args.suite == "all":
        reports = run_all(args.n, args.seed)
    else:
        if args.n < 3 and args.suite != "monoid":
            raise UsageError(f"suite {args.suite} requires n >= 3")
        reports = [run_suite(args.suite, args.n, args.seed)]
    if args.json:
        print(reports_to_json(reports))
    else:
        for r in reports:
            print(r.summary())
            for c in r.failures():
                print(f"    FAIL {c.name} {c.instance}: {c.detail}")
            for note in r.notes:
                print(f"    note: {note}")
    return 0 if all(r.ok for r in reports) else 1


def _cmd_h1(args: argparse.Namespace) -> int:
    free, torsion = h1_w(args.n)
    if args.json:
        print(json.dumps({"n": args.n, "free_rank": free, "torsion": torsion}))
    else:
        print(format_abelian(free, torsion))
    return 0


def _cmd_h2(args: argparse.Namespace) -> int:
    parts = h2_w(args.n)
    torsion = [d for p in parts for d in p]
    if args.json:
        print(json.dumps({"n": args.n, "summands": parts, "torsion": torsion}))
    else:
        print(format_abelian(0, torsion))
    return 0


def _cmd_snf(args: argparse.Namespace) -> int:
    m = read_matrix(args.file)
    snf = smith_normal_form(m)
    free, torsion = cokernel_invariants(m)
    factors = [d for d in snf.factors if d]
    if args.json:
        print(json.dumps({
            "invariant_factors": factors,
            "D": snf.D.tolist(),
            "U": snf.U.tolist(),
            "V": snf.V.tolist(),
            "cokernel": {"free_rank": free, "torsion": torsion},
        }))
    else:
        print("invariant factors: " + " ".join(map(str, factors)))
        print("cokernel: " + format_abelian(free, torsion))
    return 0


def _cmd_ball(args: argparse.Namespace) -> int:
    print(sum(1 for _ in enumerate_ball(args.n, args.len, args.box)))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="chw", description="Combinatorial Hantzsche-Wendt groups")
    sub = parser.add_subparsers(dest="command", required=True)

    def with_n(p: argparse.ArgumentParser) -> argparse.ArgumentParser:
        p.add_argument("--n", type=int, required=True, help="number of generators")
        return p

    p = with_n(sub.add_parser("nf", help="normal form of a word"))
    p.add_argument("word")
    p.set_defaults(func=_cmd_nf)

    p = with_n(sub.add_parser("apply", help="apply an automorphism word to a group word"))
    p.add_argument("--auto", required=True)
    p.add_argument("word")
    p.set_defaults(func=_cmd_apply)

    p = with_n(sub.add_parser("induced", help="maps induced on W and on A"))
    p.add_argument("--auto", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_induced)

    p = with_n(sub.add_parser("verify", help="run verification suites"))
    p.add_argument("--suite", choices=SUITES + ("all",), default="all")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_verify)

    for name, func in (("h1", _cmd_h1), ("h2", _cmd_h2)):
        p = with_n(sub.add_parser(name, help=f"{name.upper()}(W, A)"))
        p.add_argument("--json", action="store_true")
        p.set_defaults(func=func)

    p = sub.add_parser("snf", help="Smith normal form of a matrix file")
    p.add_argument("--file", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_snf)

    p = with_n(sub.add_parser("ball", help="count normal forms in a box"))
    p.add_argument("--len", type=int, required=True)
    p.add_argument("--box", type=int, required=True)
    p.set_defaults(func=_cmd_ball)
    return parser


def dispatch(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (ParseError, UsageError, ValueError, ResourceLimitExceeded, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(dispatch())


if __name__ == "__main__":
    main()
