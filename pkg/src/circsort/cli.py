"""Command-line front end.

Exit codes: 0 success, 1 usage or input error, 2 a mathematical check failed.
"""

from __future__ import annotations

import argparse
import csv
import io
import itertools
import json
import random
import sys
from decimal import ROUND_HALF_EVEN, Decimal
from fractions import Fraction

from .displacement import lower_bound, net_swap_matrix
from .oracle import (
    DEFAULT_CAP,
    OracleCapError,
    bfs_distance,
    diameter,
    distance_histogram,
    distance_table,
    feng_worst_case,
)
from .perm_core import Permutation, PermutationError, inversions, parse_permutation
from .reduction import verify_appendix, verify_induction_step, verify_lemma_prop
from .sorter import (
    bubble_sort,
    diameter_bound,
    optimal_sort,
    sequence_net_counts,
    sequence_to_json,
)

VERIFY_CAP = 7
EXIT_OK, EXIT_USAGE, EXIT_FAILED = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        raise UsageError(f"{self.prog}: error: {message}")


def random_permutation(n: int, rng: random.Random) -> Permutation:
    line = list(range(1, n + 1))
    rng.shuffle(line)
    return Permutation(line)


def certify(perm: Permutation, distance: int) -> list[str]:
    """Every check the exhaustive driver runs on one permutation; returns failure messages."""
    problems = []
    seq = optimal_sort(perm)
    n = perm.n
    if not seq.final.is_identity():
        problems.append(f"sort ended at ({seq.final})")
    if len(seq) != distance:
        problems.append(f"length {len(seq)} != BFS distance {distance}")
    if len(seq) > diameter_bound(n):
        problems.append(f"length {len(seq)} > floor(n^2/4) = {diameter_bound(n)}")
    c, d = sequence_net_counts(seq)
    if c != net_swap_matrix(perm, d):
        problems.append("tallied net counts differ from the closed form")
    reports = (
        verify_lemma_prop(perm, seq),
        verify_induction_step(perm, seq, recursive=True),
        verify_appendix(perm, d),
    )
    for r in reports:
        if not r.overall:
            detail = r.rejected or "; ".join(f"{c.name}: {c.evidence}" for c in r.failures())
            problems.append(f"{r.subject}: {detail}")
    return problems


def _read_perm(args: argparse.Namespace) -> Permutation:
    text = " ".join(args.perm) if args.perm else sys.stdin.read()
    return parse_permutation(text)


def _emit_csv(rows, header) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _decimal(x: Fraction) -> str:
    exact = Decimal(x.numerator) / Decimal(x.denominator)
    return str(exact.quantize(Decimal("0.001"), rounding=ROUND_HALF_EVEN))


def _sequence_output(seq, fmt: str, extra: dict | None = None) -> str:
    if fmt == "csv":
        rows = [(k, s.i, s.j, p) for k, (s, p) in enumerate(zip(seq.swaps, seq.transpositions), 1)]
        return _emit_csv(rows, ("step", "i", "j", "position"))
    doc = sequence_to_json(seq)
    if extra:
        doc.update(extra)
    return json.dumps(doc) + "\n"


def cmd_sort(args) -> int:
    perm = _read_perm(args)
    sys.stdout.write(_sequence_output(optimal_sort(perm), args.format))
    return EXIT_OK


def cmd_bubble(args) -> int:
    perm = _read_perm(args)
    seq = bubble_sort(perm)
    sys.stdout.write(_sequence_output(seq, args.format, {"inversions": inversions(perm)}))
    return EXIT_OK


def cmd_distance(args) -> int:
    perm = _read_perm(args)
    dist = bfs_distance(perm, cap=args.cap or DEFAULT_CAP)
    if args.format == "json":
        print(json.dumps({"pi_inv": list(perm.one_line), "distance": dist}))
    elif args.format == "csv":
        sys.stdout.write(_emit_csv([(str(perm), dist)], ("pi_inv", "distance")))
    else:
        print(dist)
    return EXIT_OK


def cmd_diameter(args) -> int:
    n = args.n
    diam, witnesses = diameter(n, cap=args.cap or DEFAULT_CAP)
    witness = " ".join(map(str, witnesses[0]))
    if args.format == "json":
        print(json.dumps({"n": n, "diameter": diam, "bound": diameter_bound(n),
                          "witness": list(witnesses[0]), "witness_count": len(witnesses)}))
    elif args.format == "csv":
        sys.stdout.write(_emit_csv([(n, diam, witness)], ("n", "diameter", "witness")))
    else:
        print(diam)
        print(f"witness: {witness}")
    return EXIT_OK if diam == diameter_bound(n) else EXIT_FAILED


def cmd_histogram(args) -> int:
    hist = distance_histogram(args.n, cap=args.cap or DEFAULT_CAP)
    if args.format == "json":
        print(json.dumps({"n": args.n, "histogram": {str(k): v for k, v in hist.items()}}))
    else:
        sys.stdout.write(_emit_csv(hist.items(), ("distance", "count")))
    return EXIT_OK


def cmd_worstcase(args) -> int:
    perm = feng_worst_case(args.n)
    seq = optimal_sort(perm)
    if args.format == "json":
        print(json.dumps(sequence_to_json(seq)))
    elif args.format == "csv":
        sys.stdout.write(_sequence_output(seq, "csv"))
    else:
        print(perm)
        print(f"length {len(seq)}")
        for s, p in zip(seq.swaps, seq.transpositions):
            print(f"swap ({s.i},{s.j}) at position {p}")
    return EXIT_OK if len(seq) == args.n * args.n // 4 else EXIT_FAILED


def cmd_verify(args) -> int:
    n = args.n
    guard = args.cap or VERIFY_CAP
    if not 2 <= n <= guard:
        raise UsageError(f"verify needs 2 <= n <= {guard} (raise with --cap)")
    table = distance_table(n, cap=max(guard, DEFAULT_CAP))
    total = checked = longest = 0
    for line in itertools.permutations(range(1, n + 1)):
        perm = Permutation(line)
        total += 1
        problems = certify(perm, table.distance(perm))
        if problems:
            print(f"counterexample ({perm}):")
            for msg in problems:
                print(f"  {msg}")
            return EXIT_FAILED
        checked += 1
        # certify() has already pinned the sort length to the BFS distance
        longest = max(longest, table.distance(perm))
    if longest != diameter_bound(n):
        print(f"diameter {longest} != floor(n^2/4) = {diameter_bound(n)}")
        return EXIT_FAILED
    print(f"{checked}/{total} verified, diameter {longest}")
    return EXIT_OK


def run_bench(n: int, samples: int, seed: int) -> tuple[list[dict], dict]:
    rng = random.Random(seed)
    rows = []
    for k in range(samples):
        perm = random_permutation(n, rng)
        seq = optimal_sort(perm)
        _, d = sequence_net_counts(seq)
        rows.append({
            "sample": k, "n": n, "seed": seed, "length": len(seq),
            "bubble_length": len(bubble_sort(perm)), "lower_bound": lower_bound(d),
            "bound": diameter_bound(n),
        })
    mean = Fraction(sum(r["length"] for r in rows), samples)
    mean_bubble = Fraction(sum(r["bubble_length"] for r in rows), samples)
    summary = {
        "n": n, "sample_count": samples, "seed": seed,
        "mean_length": str(mean), "mean_length_decimal": _decimal(mean),
        "max_length": max(r["length"] for r in rows),
        "mean_bubble_length": str(mean_bubble), "mean_bubble_length_decimal": _decimal(mean_bubble),
        "bound": diameter_bound(n),
    }
    return rows, summary


def cmd_bench(args) -> int:
    if args.n < 2 or args.samples < 1 or args.seed < 0:
        raise UsageError("bench needs n >= 2, --samples >= 1 and a non-negative --seed")
    rows, summary = run_bench(args.n, args.samples, args.seed)
    if args.format == "json":
        print(json.dumps({"samples": rows, "summary": summary}))
    else:
        sys.stdout.write(_emit_csv([r.values() for r in rows], rows[0].keys()))
        sys.stdout.write("\n")
        sys.stdout.write(_emit_csv([summary.values()], summary.keys()))
    ok = summary["max_length"] <= summary["bound"] and Fraction(summary["mean_length"]) <= Fraction(
        summary["mean_bubble_length"]
    )
    return EXIT_OK if ok else EXIT_FAILED


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    fmt = common.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="format", action="store_const", const="json")
    fmt.add_argument("--csv", dest="format", action="store_const", const="csv")
    common.add_argument("--cap", type=int, default=None, help="largest n the oracle/verifier may touch")

    parser = _Parser(prog="circsort", description="Sort permutations with cyclically adjacent transpositions.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    for name, func, help_ in (
        ("sort", cmd_sort, "shortest sort (JSON)"),
        ("bubble", cmd_bubble, "adjacent-only bubble sort (JSON)"),
        ("distance", cmd_distance, "exact distance by breadth-first search"),
    ):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.add_argument("perm", nargs="*", help='one-line permutation, e.g. "3 2 1 4"; stdin if omitted')
        p.set_defaults(func=func)

    for name, func, help_ in (
        ("diameter", cmd_diameter, "Cayley graph diameter and one witness"),
        ("histogram", cmd_histogram, "distance histogram as CSV"),
        ("worstcase", cmd_worstcase, "half-rotation worst case and its sort"),
        ("verify", cmd_verify, "exhaustive check over all permutations of size n"),
    ):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.add_argument("n", type=int)
        p.set_defaults(func=func)

    p = sub.add_parser("bench", parents=[common], help="random-permutation benchmark (CSV)")
    p.add_argument("n", type=int)
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except (PermutationError, OracleCapError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
