"""Command-line interface.

Exit codes: 0 pass, 1 property failed (or I/O failure), 2 usage or parse
error, 3 domination unchecked, 4 solver timed out.
"""

from __future__ import annotations

import argparse
import sys

from . import construct as cs
from .core import MAX_DIMENSION, SetFormatError, read_set, write_set
from .solve import MAX_SOLVE_DIMENSION, Status, min_ids
from .verify import DEFAULT_MAX_DENSE_N, certify

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_UNCHECKED, EXIT_TIMEOUT = 0, 1, 2, 3, 4

# alpha_1..alpha_6 as reported in the literature
KNOWN_SMALL = {1: 1, 2: 2, 3: 2, 4: 4, 5: 8, 6: 12}


def known_alpha(n: int) -> int | None:
    if n in KNOWN_SMALL:
        return KNOWN_SMALL[n]
    k = cs.classify(n).k
    if n == (1 << k) - 1 or n == 1 << k:
        return 1 << (n - k)
    return None


def _dimension(lo: int, hi: int):
    def parse(text: str) -> int:
        try:
            value = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
        if not lo <= value <= hi:
            raise argparse.ArgumentTypeError(f"{value} outside {lo}..{hi}")
        return value
    return parse


# -- table rendering ---------------------------------------------------------

def _pow2(e: int) -> str:
    return {0: "1", 1: "2"}.get(e, f"2^{e}")


def table_rows(lo: int, hi: int) -> list[dict]:
    rows = []
    for n in range(lo, hi + 1):
        c = cs.classify(n)
        bound = cs.upper_bound(n)
        rows.append({
            "n": n,
            "k": c.k,
            "case": c.case.value,
            "lower": cs.lower_bound(n),
            "prior": cs.prior_bound(n),
            "this_work": bound.value,
            "form": bound.form,
            "known": known_alpha(n),
        })
    return rows


def _markdown_cells(row: dict) -> list[str]:
    n, k = row["n"], row["k"]
    if row["known"] is None:
        known = ""
    elif n in KNOWN_SMALL:
        known = str(row["known"])
    else:
        known = _pow2(n - k)
    if n == (1 << k) - 1:
        prior = ""
    elif n == 1 << k:
        prior = _pow2(n - k)
    else:
        prior = "≤ " + _pow2(n - k)
    if row["form"] is cs.BoundForm.EXACT:
        this = _pow2(n - k)
    elif row["form"] is cs.BoundForm.THREE_POW:
        this = "≤ 3×" + _pow2(n - k - 2)
    else:
        this = "≤ " + _pow2(n - k)
    return [str(n), str(k), row["case"], str(row["lower"]), known, prior, this]


def render_table(lo: int, hi: int, fmt: str) -> str:
    rows = table_rows(lo, hi)
    if fmt == "tsv":
        head = ["n", "k", "case", "lower", "prior", "this_work", "known"]
        lines = ["\t".join(head)]
        for r in rows:
            known = "" if r["known"] is None else str(r["known"])
            lines.append("\t".join(
                [str(r["n"]), str(r["k"]), r["case"], str(r["lower"]),
                 str(r["prior"]), str(r["this_work"]), known]
            ))
    else:
        head = ["n", "k", "case", "lower", "known α_n", "prior", "this work"]
        lines = ["| " + " | ".join(head) + " |",
                 "|" + "|".join("---" for _ in head) + "|"]
        lines += ["| " + " | ".join(_markdown_cells(r)) + " |" for r in rows]
    return "\n".join(lines) + "\n"


# -- subcommands -------------------------------------------------------------

def cmd_gen(args) -> int:
    recipe = cs.plan(args.n)
    s = cs.build(recipe)
    if args.out is None or args.out == "-":
        out = sys.stdout.buffer
        if args.show_plan:
            out.write(f"# {recipe}\n".encode())
        write_set(s, out)
        out.flush()
        return EXIT_OK
    if args.show_plan:
        print(recipe)
    try:
        with open(args.out, "wb") as fh:
            write_set(s, fh)
    except OSError as exc:
        print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        if args.input == "-":
            s = read_set(sys.stdin.buffer)
        else:
            with open(args.input, "rb") as fh:
                s = read_set(fh)
    except SetFormatError as exc:
        print(f"error: {args.input}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: cannot read {args.input}: {exc}", file=sys.stderr)
        return EXIT_FAIL
    if s.dimension != args.n:
        print(f"error: --n {args.n} but file declares n={s.dimension}", file=sys.stderr)
        return EXIT_USAGE
    try:
        report = certify(s, max_dense_n=args.max_dense_n)
    except MemoryError:
        print(f"error: no memory for a 2^{s.dimension}-bit coverage map; "
              f"lower --max-dense-n", file=sys.stderr)
        return EXIT_FAIL
    print("\n".join(report.lines()))
    if not report.independent or report.dominating is False:
        return EXIT_FAIL
    if report.dominating is None:
        return EXIT_UNCHECKED
    return EXIT_OK


def cmd_bounds(args) -> int:
    n = args.n
    c = cs.classify(n)
    bound = cs.upper_bound(n)
    known = known_alpha(n)
    print(f"n={n}")
    print(f"k={c.k}")
    print(f"case={c.case.value}")
    print(f"lower_bound={cs.lower_bound(n)}")
    print(f"prior_bound={cs.prior_bound(n)}")
    print(f"upper_bound={bound.value}")
    print(f"form={bound.form.value}")
    print(f"known={'none' if known is None else known}")
    print(f"plan={cs.plan(n)}")
    return EXIT_OK


def cmd_table(args) -> int:
    if args.lo > args.hi:
        print(f"error: --from {args.lo} exceeds --to {args.hi}", file=sys.stderr)
        return EXIT_USAGE
    sys.stdout.write(render_table(args.lo, args.hi, args.format))
    return EXIT_OK


def cmd_solve(args) -> int:
    if args.timeout_secs <= 0:
        print("error: --timeout-secs must be positive", file=sys.stderr)
        return EXIT_USAGE
    result = min_ids(args.n, float(args.timeout_secs))
    print("\n".join(result.lines()))
    return EXIT_OK if result.status is Status.OPTIMAL else EXIT_TIMEOUT


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hypercube-ids",
        description="Independent dominating sets of hypercubes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    dim = _dimension(1, MAX_DIMENSION)

    p = sub.add_parser("gen", help="construct a set for Q_n")
    p.add_argument("--n", type=dim, required=True)
    p.add_argument("--out", help="output path (default: stdout)")
    p.add_argument("--show-plan", action="store_true")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("verify", help="certify a set file")
    p.add_argument("--n", type=dim, required=True)
    p.add_argument("--in", dest="input", required=True, help="set file, or - for stdin")
    p.add_argument("--max-dense-n", type=int, default=DEFAULT_MAX_DENSE_N)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bounds", help="bounds for one dimension")
    p.add_argument("--n", type=dim, required=True)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("table", help="bounds table for a range of dimensions")
    p.add_argument("--from", dest="lo", type=dim, required=True)
    p.add_argument("--to", dest="hi", type=dim, required=True)
    p.add_argument("--format", choices=["tsv", "markdown"], default="tsv")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("solve", help="exact alpha_n by branch and bound")
    p.add_argument("--n", type=_dimension(1, MAX_SOLVE_DIMENSION), required=True)
    p.add_argument("--timeout-secs", type=int, default=600)
    p.set_defaults(func=cmd_solve)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
