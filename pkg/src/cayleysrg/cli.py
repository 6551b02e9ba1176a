"""Command line front end.

Three subcommands:

    cayleysrg analyze N [--oracle]
        Build the graph for modulus N, certify regularity, build the
        claimed automorphism group and its origin stabiliser, classify
        transitivity, optionally cross-check against the brute-force
        enumeration (N <= 7), and print one JSON report to stdout.

    cayleysrg export N --format {graph6,dot}
        Print the graph in the requested format.

    cayleysrg verify LO..HI [--oracle-upto M]
        Run the analyze checks for every modulus in the range, print a
        JSON summary to stdout and a table to stderr.

JSON always goes to stdout, everything human-oriented to stderr.  Exit 0
means every predicted value matched, 1 means some check failed, 2 means
the invocation itself was bad.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from .core import units
from .graph import GRAPH_MAX_MODULUS, build_graph
from .regularity import IntersectionArray, check_strongly_regular, intersection_array
from .search import BRUTE_FORCE_MAX_MODULUS, enumerate_automorphisms
from .symmetries import claimed_aut_group
from .transitivity import TransitivityReport, classify_action
from .formats import to_dot, to_graph6

__all__ = ["main", "run", "analyze_report", "verify_range", "predicted_values"]

GRAPH6_MAX_MODULUS = 110


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def predicted_values(n: int) -> dict:
    """What the theory says analyze must find for modulus n."""
    phi = units(n).totient
    prime = _is_prime(n)
    return {
        "srg_params": {"v": n * n, "k": 3 * n - 3, "lambda": n, "mu": 6},
        "intersection_array": {"b": [3 * n - 3, 2 * n - 4], "c": [1, 6], "diameter": 2},
        "claimed_group_order": 6 * n * n * phi,
        "stabilizer_order": 6 * phi,
        "transitivity": {
            "vertex_transitive": True,
            "edge_transitive": prime,
            "arc_transitive": prime,
            "distance_transitive": n == 5,
            "two_arc_transitive": False,
        },
    }


def _witness_json(w):
    if w is None:
        return None
    return [list(part) for part in w]


def _transitivity_json(rep: TransitivityReport) -> dict:
    return {
        "vertex_transitive": rep.vertex_transitive,
        "edge_transitive": rep.edge_transitive,
        "arc_transitive": rep.arc_transitive,
        "distance_transitive": rep.distance_transitive,
        "two_arc_transitive": rep.two_arc_transitive,
        "witnesses": {
            key: _witness_json(rep.witnesses[key])
            for key in ("vertex", "edge", "arc", "distance", "two_arc")
        },
        "orbit_counts": {
            key: list(rep.orbit_counts[key])
            for key in ("edges", "arcs", "distance2_pairs", "two_arcs")
        },
    }


def analyze_report(n: int, with_oracle: bool = False) -> tuple[dict, list[str]]:
    """Run the full analysis for one modulus.

    Returns the JSON-ready report and the list of failed checks (empty when
    everything matched the predictions).
    """
    expected = predicted_values(n)
    timings: dict[str, float] = {}

    t = time.perf_counter()
    g = build_graph(n)
    timings["build_graph"] = round(time.perf_counter() - t, 6)

    t = time.perf_counter()
    srg = check_strongly_regular(g)
    arr = intersection_array(g)
    timings["regularity"] = round(time.perf_counter() - t, 6)

    t = time.perf_counter()
    grp = claimed_aut_group(n)
    group_order = grp.order()
    timings["group"] = round(time.perf_counter() - t, 6)

    t = time.perf_counter()
    stab_order = grp.point_stabilizer(0).order()
    timings["stabilizer"] = round(time.perf_counter() - t, 6)

    t = time.perf_counter()
    trans = classify_action(grp, g)
    timings["transitivity"] = round(time.perf_counter() - t, 6)

    oracle = None
    if with_oracle:
        t = time.perf_counter()
        found = enumerate_automorphisms(g)
        agreement = len(found) == group_order and all(
            grp.contains(p) for p in found.elements
        )
        oracle = {"brute_order": len(found), "agreement": agreement}
        timings["oracle"] = round(time.perf_counter() - t, 6)

    report = {
        "n": n,
        "srg_params": {"v": srg.v, "k": srg.k, "lambda": srg.lam, "mu": srg.mu},
        "intersection_array": {
            "b": list(arr.b), "c": list(arr.c), "diameter": arr.diameter,
        },
        "claimed_group_order": group_order,
        "stabilizer_order": stab_order,
        "transitivity": _transitivity_json(trans),
        "oracle": oracle,
        "timings": timings,
    }

    failures = []
    if report["srg_params"] != expected["srg_params"]:
        failures.append("srg_params")
    if report["intersection_array"] != expected["intersection_array"]:
        failures.append("intersection_array")
    if group_order != expected["claimed_group_order"]:
        failures.append("claimed_group_order")
    if stab_order != expected["stabilizer_order"]:
        failures.append("stabilizer_order")
    if group_order != n * n * stab_order:
        failures.append("orbit_stabilizer_identity")
    got_trans = {
        key: report["transitivity"][key] for key in expected["transitivity"]
    }
    if got_trans != expected["transitivity"]:
        failures.append("transitivity")
    if oracle is not None and not oracle["agreement"]:
        failures.append("oracle")
    return report, failures


def verify_range(lo: int, hi: int, oracle_upto: int | None = None) -> dict:
    """Analyze every modulus in [lo, hi] and collect pass/fail rows."""
    results = []
    for n in range(lo, hi + 1):
        with_oracle = oracle_upto is not None and n <= oracle_upto
        report, failures = analyze_report(n, with_oracle=with_oracle)
        results.append({
            "n": n,
            "claimed_group_order": report["claimed_group_order"],
            "transitivity": {
                key: report["transitivity"][key]
                for key in (
                    "vertex_transitive", "edge_transitive", "arc_transitive",
                    "distance_transitive", "two_arc_transitive",
                )
            },
            "oracle": report["oracle"],
            "failed_checks": failures,
            "passed": not failures,
        })
    return {
        "lo": lo,
        "hi": hi,
        "oracle_upto": oracle_upto,
        "results": results,
        "all_passed": all(row["passed"] for row in results),
    }


def _print_verify_table(summary: dict) -> None:
    head = f"{'n':>4}  {'order':>10}  {'edge':>5}  {'arc':>5}  {'dist':>5}  {'2arc':>5}  {'oracle':>7}  result"
    print(head, file=sys.stderr)
    for row in summary["results"]:
        tr = row["transitivity"]
        oracle = row["oracle"]
        otext = "-" if oracle is None else f"{oracle['brute_order']}"
        status = "ok" if row["passed"] else "FAIL(" + ",".join(row["failed_checks"]) + ")"
        print(
            f"{row['n']:>4}  {row['claimed_group_order']:>10}  "
            f"{str(tr['edge_transitive']):>5}  {str(tr['arc_transitive']):>5}  "
            f"{str(tr['distance_transitive']):>5}  {str(tr['two_arc_transitive']):>5}  "
            f"{otext:>7}  {status}",
            file=sys.stderr,
        )


def _parse_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    if not sep or not lo.isdigit() or not hi.isdigit():
        raise ValueError(f"range must look like 4..10, got {text!r}")
    return int(lo), int(hi)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cayleysrg",
        description="Strongly regular Cayley graphs on Z_n x Z_n and their symmetries.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_an = sub.add_parser("analyze", help="full analysis of one modulus as JSON")
    p_an.add_argument("n", type=int)
    p_an.add_argument("--oracle", action="store_true",
                      help=f"cross-check by brute force (n <= {BRUTE_FORCE_MAX_MODULUS})")

    p_ex = sub.add_parser("export", help="write the graph to stdout")
    p_ex.add_argument("n", type=int)
    p_ex.add_argument("--format", required=True, choices=("graph6", "dot"))

    p_ve = sub.add_parser("verify", help="check a whole range of moduli")
    p_ve.add_argument("range", help="inclusive modulus range, e.g. 4..10")
    p_ve.add_argument("--oracle-upto", type=int, default=None,
                      help="also brute-force moduli up to this bound")
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)

    if args.command == "analyze":
        if not 4 <= args.n <= GRAPH_MAX_MODULUS:
            parser.error(f"n must be between 4 and {GRAPH_MAX_MODULUS}")
        if args.oracle and args.n > BRUTE_FORCE_MAX_MODULUS:
            parser.error(f"--oracle needs n <= {BRUTE_FORCE_MAX_MODULUS}")
        report, failures = analyze_report(args.n, with_oracle=args.oracle)
        print(json.dumps(report, indent=2))
        if failures:
            print(f"MISMATCH for n={args.n}: {', '.join(failures)}", file=sys.stderr)
            return 1
        print(f"n={args.n}: all predicted values matched", file=sys.stderr)
        return 0

    if args.command == "export":
        if not 4 <= args.n <= GRAPH_MAX_MODULUS:
            parser.error(f"n must be between 4 and {GRAPH_MAX_MODULUS}")
        if args.format == "graph6" and args.n > GRAPH6_MAX_MODULUS:
            parser.error(f"graph6 export supports n <= {GRAPH6_MAX_MODULUS}")
        g = build_graph(args.n)
        if args.format == "graph6":
            print(to_graph6(g))
        else:
            sys.stdout.write(to_dot(g))
        return 0

    if args.command == "verify":
        try:
            lo, hi = _parse_range(args.range)
        except ValueError as exc:
            parser.error(str(exc))
        if not 4 <= lo <= hi <= GRAPH_MAX_MODULUS:
            parser.error(f"range must satisfy 4 <= lo <= hi <= {GRAPH_MAX_MODULUS}")
        if args.oracle_upto is not None and args.oracle_upto > BRUTE_FORCE_MAX_MODULUS:
            parser.error(f"--oracle-upto must be <= {BRUTE_FORCE_MAX_MODULUS}")
        summary = verify_range(lo, hi, oracle_upto=args.oracle_upto)
        print(json.dumps(summary, indent=2))
        _print_verify_table(summary)
        return 0 if summary["all_passed"] else 1

    parser.error(f"unknown command {args.command!r}")
    return 2


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
