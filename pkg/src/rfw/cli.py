"""Command-line front end.

Subcommands: table, entropy, verify, sample, factors, export.  Exit codes:
0 all good, 1 a verified property failed, 2 resource or configuration
errors (budget, item cap, capacity, bad flags).
"""

from __future__ import annotations

import argparse
import json
import math
import sys

from . import factors, inflation
from .inflation import BudgetError, PrngHandle
from .words import CapacityError, fib
from .wordset import WordSet

_EXIT_FAIL = 1
_EXIT_RESOURCE = 2


def _blank(x) -> str:
    return "" if x is None else str(x)


def _row_cells(r: factors.FactorReport) -> list[str]:
    return [str(r.n), str(r.f_n), str(r.a_count), _blank(r.f_count),
            _blank(r.fa_next_count), "" if r.c is None else factors.format_c(r.c)]


def cmd_table(args) -> int:
    if args.max_n > 9:
        print(f"table: max-n {args.max_n} not computable (|A_11| needs 89-symbol words)",
              file=sys.stderr)
        return _EXIT_RESOURCE
    try:
        rows = factors.table_rows(args.max_n, args.budget, args.item_cap)
    except (BudgetError, CapacityError) as exc:
        print(f"table: {exc}", file=sys.stderr)
        return _EXIT_RESOURCE
    out = _open_out(args.output)
    try:
        if args.format == "csv":
            out.write("n,f_n,A_n,F_n,F_A_next,c_n\n")
            for r in rows:
                out.write(",".join(_row_cells(r)) + "\n")
        elif args.format == "json":
            json.dump([r.to_json_dict() for r in rows], out, indent=2)
            out.write("\n")
        else:
            header = ["n", "f_n", "|A_n|", "|F_n|", "|F(A_n+1,f_n)|", "c_n"]
            widths = [max(len(h), *(len(_row_cells(r)[i]) for r in rows))
                      for i, h in enumerate(header)]
            out.write("  ".join(h.rjust(w) for h, w in zip(header, widths)) + "\n")
            for r in rows:
                out.write("  ".join(c.rjust(w) for c, w in zip(_row_cells(r), widths)) + "\n")
    finally:
        if out is not sys.stdout:
            out.close()
    return 0


def cmd_entropy(args) -> int:
    if not 1e-12 <= args.tol <= 1e-2:
        print(f"entropy: tolerance {args.tol} outside [1e-12, 1e-2]", file=sys.stderr)
        return _EXIT_RESOURCE
    limit = inflation.entropy_limit(args.tol)
    print(f"entropy limit      : {limit:.6f}")
    print(f"growth rate exp(h) : {math.exp(limit):.6f}")
    print("log-growth sequence:")
    for n in range(3, max(args.max_n, 3) + 1):
        print(f"  n = {n:2d}  log|A_n|/f_n = {inflation.log_growth(n):.6f}")
    print("factor-vs-word gap :")
    try:
        for n in range(3, min(args.max_n, 9) + 1):
            a = len(inflation.enumerate_A(n, args.budget))
            f = len(factors.factor_set_Fn(n, args.budget, args.item_cap))
            gap = (math.log(f) - math.log(a)) / fib(n)
            print(f"  n = {n:2d}  gap = {gap:.6f}")
    except (BudgetError, CapacityError) as exc:
        print(f"entropy: {exc}", file=sys.stderr)
        return _EXIT_RESOURCE
    return 0


def _verify_checks(max_n: int, budget: int, item_cap: int):
    """Yield (property, label, thunk) for every check in scope."""
    top = min(max_n + 1, 9)  # largest generation enumerated by the suite
    for n in range(1, top + 1):
        yield "reversal", f"n={n}", lambda n=n: inflation.verify_palindromic(n, budget)
    for n in range(3, top):
        for k in range(1, top - n + 1):
            yield "prefix-stability", f"n={n},k={k}", \
                lambda n=n, k=k: factors.verify_prefix_stability(n, k, budget)
    for n in range(4, min(top, 8) + 1):
        yield "superset", f"n={n}", lambda n=n: factors.verify_superset(n, budget)
        yield "superset-reversed", f"n={n}", \
            lambda n=n: factors.verify_superset(n, budget, reversed_form=True)
    for n in range(4, top - 1):
        for k in range(2, top - n + 1):
            yield "factor-stability", f"n={n},k={k}", \
                lambda n=n, k=k: factors.verify_factor_stability(n, k, budget)
    yield "factor-instability-n3", "n=3,k=2 (expected failure)", \
        lambda: inflation.VerifyResult(
            not factors.verify_factor_stability(3, 2, budget).ok,
            "F(A_4,f_3) = F(A_5,f_3) although the paper-documented 00 factor should break it")
    for n in range(4, min(top, 8) + 1):
        yield "overlap", f"n={n}", lambda n=n: inflation.verify_overlap(n, budget)
    for n in range(3, top + 1):
        yield "cut-bound", f"n={n}", lambda n=n: factors.verify_slice_bound(n, budget)
    for n in range(3, max_n + 1):
        yield "factor-bound", f"n={n}", \
            lambda n=n: factors.verify_Fn_bound(n, budget, item_cap)


def cmd_verify(args) -> int:
    wanted = None if args.prop == "all" else set(args.prop.split(","))
    failures = 0
    ran = 0
    try:
        for prop, label, thunk in _verify_checks(args.max_n, args.budget, args.item_cap):
            if wanted is not None and prop not in wanted:
                continue
            ran += 1
            res = thunk()
            if res.ok:
                print(f"PASS  {prop:22s} {label}")
            else:
                failures += 1
                print(f"FAIL  {prop:22s} {label}  [{res.witness}]")
    except (BudgetError, CapacityError) as exc:
        print(f"verify: {exc}", file=sys.stderr)
        return _EXIT_RESOURCE
    print(f"{ran - failures}/{ran} checks passed")
    return _EXIT_FAIL if failures else 0


def cmd_sample(args) -> int:
    rng = PrngHandle(args.seed)
    try:
        members = inflation.enumerate_A(args.n, args.budget) if args.check else None
        for _ in range(args.count):
            w = inflation.sample_chain(args.n, args.p, rng)
            if members is not None and w not in members:
                print(f"sample: {w} not in A_{args.n}", file=sys.stderr)
                return _EXIT_FAIL
            print(w)
    except (BudgetError, CapacityError) as exc:
        print(f"sample: {exc}", file=sys.stderr)
        return _EXIT_RESOURCE
    return 0


def _write_set(ws: WordSet, args) -> int:
    if args.binary:
        if args.output is None:
            print("a binary export needs -o FILE", file=sys.stderr)
            return _EXIT_RESOURCE
        with open(args.output, "wb") as fh:
            ws.write_binary(fh)
    else:
        out = _open_out(args.output)
        try:
            ws.write_text(out)
        finally:
            if out is not sys.stdout:
                out.close()
    return 0


def cmd_factors(args) -> int:
    try:
        ws = factors.factor_set_Fn(args.n, args.budget, args.item_cap)
    except (BudgetError, CapacityError) as exc:
        print(f"factors: {exc}", file=sys.stderr)
        return _EXIT_RESOURCE
    return _write_set(ws, args)


def cmd_export(args) -> int:
    try:
        ws = inflation.enumerate_A(args.n, args.budget)
    except (BudgetError, CapacityError) as exc:
        print(f"export: {exc}", file=sys.stderr)
        return _EXIT_RESOURCE
    return _write_set(ws, args)


def _open_out(path):
    return sys.stdout if path is None else open(path, "w")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rfw",
        description="Inflated random Fibonacci words: enumeration, factor sets, "
                    "entropy, and brute-force verification.")
    parser.add_argument("--budget", type=int, default=inflation.DEFAULT_BUDGET,
                        help="max set size any enumeration may reach (default 1e8)")
    parser.add_argument("--item-cap", type=int, default=inflation.DEFAULT_ITEM_CAP,
                        help="max candidate items a factor construction may project "
                             "(default 2^26; raise for n = 9)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("table", help="reproduce the numerics table")
    p.add_argument("--max-n", type=int, default=8)
    p.add_argument("--format", choices=("text", "csv", "json"), default="text")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("entropy", help="entropy limit and gap sequences")
    p.add_argument("--tol", type=float, default=1e-8)
    p.add_argument("--max-n", type=int, default=8)
    p.set_defaults(func=cmd_entropy)

    p = sub.add_parser("verify", help="brute-force the proved propositions")
    p.add_argument("--prop", default="all",
                   help="comma-separated property names, or 'all'")
    p.add_argument("--max-n", type=int, default=8)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sample", help="sample random inflation chains")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-p", type=float, default=0.5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--check", action="store_true",
                   help="assert each sample is a member of the enumerated set")
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("factors", help="write the factor set F_n")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-o", "--output", default=None)
    p.add_argument("--binary", action="store_true")
    p.set_defaults(func=cmd_factors)

    p = sub.add_parser("export", help="write the inflated-word set A_n")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-o", "--output", default=None)
    p.add_argument("--binary", action="store_true")
    p.set_defaults(func=cmd_export)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
