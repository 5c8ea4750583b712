"""Command-line front end.

Exit codes: 0 success, 1 mathematical/input domain error, 2 usage or
grammar error, 3 search budget exceeded.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import engine, graphs, powers
from .errors import BudgetExceededError, ParseError, VnumError
from .monomials import (
    is_m_primary,
    regularity_zero_dim,
)
from .parsing import (
    ParsedIdeal,
    build_graph,
    parse_graph,
    parse_graph_ast,
    parse_ideal,
    parse_prime,
)

SCHEMA_VERSION = 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="vnum",
        description="v-numbers of monomial ideals and graph edge ideals",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON output")
    common.add_argument(
        "--budget",
        type=int,
        default=engine.DEFAULT_BUDGET,
        help="grid-point budget for brute-force searches",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("v", parents=[common], help="v-number of a monomial ideal")
    p.add_argument("target", help="ideal expression, e.g. 'x^2, y^3'")
    p.add_argument(
        "--verify-oracle",
        action="store_true",
        help="cross-check the matrix formula against the grid oracle",
    )
    p.add_argument(
        "--witness-all",
        action="store_true",
        help="list every minimum-degree witness",
    )

    p = sub.add_parser("ass", parents=[common], help="associated primes")
    p.add_argument("target")

    p = sub.add_parser(
        "v-at-prime", parents=[common], help="v-number localized at a prime"
    )
    p.add_argument("target")
    p.add_argument("--prime", required=True, help="variable list, e.g. 'x,y'")

    p = sub.add_parser(
        "v-primary", parents=[common], help="matrix formula for m-primary ideals"
    )
    p.add_argument("target")

    p = sub.add_parser(
        "v-graph", parents=[common], help="combinatorial v-number of a graph"
    )
    p.add_argument("target", help="graph expression, e.g. 'cycle(5)'")
    p.add_argument(
        "--witness-all",
        action="store_true",
        help="list every minimum stable witness",
    )

    p = sub.add_parser(
        "closed-form", parents=[common], help="closed-form graph v-numbers"
    )
    p.add_argument("target")

    p = sub.add_parser(
        "powers", parents=[common], help="v-numbers of ideal powers with bounds"
    )
    p.add_argument("target")
    p.add_argument("--max-n", type=int, default=3)
    p.add_argument(
        "--report-dir",
        help="write powers.csv and powers.png into this directory",
    )

    p = sub.add_parser(
        "reg", parents=[common], help="zero-dimensional regularity vs v-number"
    )
    p.add_argument("target")

    p = sub.add_parser("check", parents=[common], help="named property suites")
    p.add_argument(
        "suite",
        choices=["alpha-class", "pure-power-class", "edge-power-bounds", "reg-gap"],
    )
    p.add_argument("target", nargs="?", help="ideal or graph expression")
    p.add_argument("--max-n", type=int, default=2)
    p.add_argument("--t", type=int, help="reg-gap: variable count")
    p.add_argument("--a", help="reg-gap: pure-power exponents, e.g. '5,5'")
    p.add_argument("--u", type=int, help="reg-gap: first offset")
    p.add_argument("--n", type=int, help="reg-gap: target gap")
    return parser


def _witness_payload(parsed: ParsedIdeal, w) -> dict:
    return {
        "witness": parsed.format_monomial(w.witness),
        "prime": [parsed.names[i - 1] for i in sorted(w.prime.support)],
    }


def _run_v(args) -> tuple[dict, list[str]]:
    parsed = parse_ideal(args.target)
    ideal = parsed.ideal
    lower, upper = engine.v_bounds(ideal)
    if is_m_primary(ideal):
        w = engine.v_primary_matrix(ideal)
        method = "matrix"
    else:
        w = engine.v_oracle(ideal, args.budget)
        method = "oracle"
    payload = {
        "schema": SCHEMA_VERSION,
        "value": w.value,
        "method": method,
        "bounds": {"lower": lower, "upper": upper},
        **_witness_payload(parsed, w),
    }
    lines = [
        f"v = {w.value}",
        f"witness = {parsed.format_monomial(w.witness)}",
        f"prime = <{parsed.format_prime(w.prime)}>",
        f"method = {method}",
        f"bounds = [{lower}, {upper if upper is not None else 'none'}]",
    ]
    if method == "matrix" and getattr(args, "verify_oracle", False):
        oracle = engine.v_oracle(ideal, args.budget)
        if oracle.value != w.value:
            raise VnumError(
                f"internal error: matrix value {w.value} disagrees with "
                f"oracle value {oracle.value}"
            )
        payload["oracle_confirmed"] = True
        lines.append("oracle confirmed = yes")
    if getattr(args, "witness_all", False):
        all_w = engine.minimum_witnesses(ideal, args.budget)
        payload["witnesses"] = [_witness_payload(parsed, x) for x in all_w]
        lines.append(
            "witnesses = "
            + ", ".join(parsed.format_monomial(x.witness) for x in all_w)
        )
    return payload, lines


def _run_ass(args) -> tuple[dict, list[str]]:
    parsed = parse_ideal(args.target)
    primes = sorted(
        engine.associated_primes(parsed.ideal, args.budget),
        key=lambda p: (len(p.support), sorted(p.support)),
    )
    rendered = [[parsed.names[i - 1] for i in sorted(p.support)] for p in primes]
    payload = {"schema": SCHEMA_VERSION, "primes": rendered}
    lines = [f"associated primes ({len(primes)}):"] + [
        "  <" + ", ".join(names) + ">" for names in rendered
    ]
    return payload, lines


def _run_v_at_prime(args) -> tuple[dict, list[str]]:
    parsed = parse_ideal(args.target)
    prime = parse_prime(args.prime, parsed)
    value = engine.v_at_prime(parsed.ideal, prime, args.budget)
    payload = {
        "schema": SCHEMA_VERSION,
        "value": value,
        "prime": [parsed.names[i - 1] for i in sorted(prime.support)],
        "method": "oracle",
    }
    return payload, [f"v_P = {value} at <{parsed.format_prime(prime)}>"]


def _run_v_primary(args) -> tuple[dict, list[str]]:
    parsed = parse_ideal(args.target)
    w = engine.v_primary_matrix(parsed.ideal)
    lower, upper = engine.v_bounds(parsed.ideal)
    payload = {
        "schema": SCHEMA_VERSION,
        "value": w.value,
        "method": "matrix",
        "bounds": {"lower": lower, "upper": upper},
        **_witness_payload(parsed, w),
    }
    lines = [
        f"v = {w.value}",
        f"witness = {parsed.format_monomial(w.witness)}",
        "method = matrix",
    ]
    return payload, lines


def _vertex_names(g: graphs.Graph, vs) -> list[str]:
    return [f"x{v}" for v in sorted(vs)]


def _run_v_graph(args) -> tuple[dict, list[str]]:
    g = parse_graph(args.target)
    w = graphs.v_graph(g)
    payload = {
        "schema": SCHEMA_VERSION,
        "value": w.value,
        "stable_set": _vertex_names(g, w.stable_set),
        "method": "stable-set",
    }
    lines = [
        f"v = {w.value}",
        "stable set = {" + ", ".join(_vertex_names(g, w.stable_set)) + "}",
    ]
    if getattr(args, "witness_all", False):
        all_w = graphs.minimum_stable_witnesses(g)
        payload["witnesses"] = [_vertex_names(g, x.stable_set) for x in all_w]
        lines.append(
            "witnesses = "
            + "; ".join(
                "{" + ", ".join(_vertex_names(g, x.stable_set)) + "}" for x in all_w
            )
        )
    return payload, lines


def _run_closed_form(args) -> tuple[dict, list[str]]:
    node = parse_graph_ast(args.target)
    kind = node[0]
    if kind == "path":
        value = graphs.v_path_closed(node[1])
    elif kind == "cycle":
        value = graphs.v_cycle_closed(node[1])
    elif kind == "join":
        value = graphs.v_join_closed(build_graph(node[1]), build_graph(node[2]))
    elif kind == "cliquesum":
        kinds = (node[1][0], node[2][0])
        if kinds == ("cycle", "path"):
            lower, upper, exact = graphs.clique_sum_analysis(
                "cycle+path", node[1][1], node[2][1]
            )
        elif kinds == ("cycle", "cycle"):
            lower, upper, exact = graphs.clique_sum_analysis(
                "cycle+cycle", node[1][1], node[2][1]
            )
        else:
            raise VnumError(
                "closed forms cover cliquesum(cycle,path) and "
                "cliquesum(cycle,cycle) only"
            )
        payload = {
            "schema": SCHEMA_VERSION,
            "bounds": {"lower": lower, "upper": upper},
            "exact": exact,
            "method": "closed-form",
        }
        lines = [f"bounds = [{lower}, {upper}]", f"exact = {exact}"]
        return payload, lines
    else:
        raise VnumError("no closed form for explicit edge lists")
    payload = {"schema": SCHEMA_VERSION, "value": value, "method": "closed-form"}
    return payload, [f"v = {value}"]


def _run_powers(args) -> tuple[dict, list[str]]:
    from .report import power_rows, write_power_report

    parsed = parse_ideal(args.target)
    seq = powers.power_sequence(parsed.ideal, args.max_n, args.budget)
    rows = power_rows(seq)
    payload = {
        "schema": SCHEMA_VERSION,
        "alpha": seq.alpha,
        "values": [
            {
                "n": r["n"],
                "value": r["v"],
                "lower": r["lower"],
                "upper": r["upper"],
                "witness": parsed.format_monomial(r["witness"]),
            }
            for r in rows
        ],
        "truncated_at": seq.truncated_at,
    }
    lines = [f"alpha = {seq.alpha}", "n  v  lower  upper  witness"]
    for r in rows:
        upper = "-" if r["upper"] is None else r["upper"]
        lines.append(
            f"{r['n']}  {r['v']}  {r['lower']}  {upper}  "
            + parsed.format_monomial(r["witness"])
        )
    if seq.truncated_at is not None:
        lines.append(f"truncated: budget exceeded at n = {seq.truncated_at}")
    if args.report_dir:
        csv_path, png_path = write_power_report(seq, args.report_dir)
        payload["report"] = {"csv": str(csv_path), "png": str(png_path)}
        lines.append(f"report written: {csv_path}, {png_path}")
    return payload, lines


def _run_reg(args) -> tuple[dict, list[str]]:
    parsed = parse_ideal(args.target)
    reg = regularity_zero_dim(parsed.ideal)
    value = engine.v_primary_matrix(parsed.ideal).value
    holds = powers.check_v_le_reg(parsed.ideal)
    payload = {
        "schema": SCHEMA_VERSION,
        "regularity": reg,
        "value": value,
        "v_le_reg": holds,
    }
    return payload, [f"reg(S/I) = {reg}", f"v = {value}", f"v <= reg: {holds}"]


def _run_check(args) -> tuple[dict, list[str]]:
    suite = args.suite
    if suite == "reg-gap":
        if None in (args.t, args.a, args.u, args.n):
            raise VnumError("reg-gap needs --t, --a, --u and --n")
        exponents = tuple(int(x) for x in args.a.split(","))
        result = powers.reg_gap_family(args.t, exponents, args.u, args.n)
        payload = {
            "schema": SCHEMA_VERSION,
            "suite": suite,
            "passed": result.gap == args.n,
            "value": result.v,
            "regularity": result.reg,
            "gap": result.gap,
        }
        lines = [
            f"v = {result.v}, reg = {result.reg}, gap = {result.gap}",
            f"passed: {payload['passed']}",
        ]
        return payload, lines
    if args.target is None:
        raise VnumError(f"suite {suite!r} needs a target expression")
    if suite == "edge-power-bounds":
        g = parse_graph(args.target)
        report = powers.check_edge_power_bounds(g, args.max_n, args.budget)
        payload = {
            "schema": SCHEMA_VERSION,
            "suite": suite,
            "passed": all(r.in_bracket for r in report.rows),
            "base_v": report.base_v,
            "rows": [
                {"n": r.n, "value": r.value, "lower": r.lower, "upper": r.upper}
                for r in report.rows
            ],
            "exact_linear": report.exact_linear,
            "truncated_at": report.truncated_at,
        }
        lines = [f"v(I) = {report.base_v}", "n  v(I^(n+1))  bracket"]
        lines += [
            f"{r.n}  {r.value}  [{r.lower}, {r.upper}]" for r in report.rows
        ]
        lines.append(f"passed: {payload['passed']}")
        return payload, lines
    parsed = parse_ideal(args.target)
    if suite == "alpha-class":
        passed = powers.check_alpha_equality_class(
            parsed.ideal, args.max_n, args.budget
        )
    else:
        passed = powers.check_pure_power_class(parsed.ideal, args.max_n, args.budget)
    payload = {"schema": SCHEMA_VERSION, "suite": suite, "passed": passed}
    return payload, [f"passed: {passed}"]


_DISPATCH = {
    "v": _run_v,
    "ass": _run_ass,
    "v-at-prime": _run_v_at_prime,
    "v-primary": _run_v_primary,
    "v-graph": _run_v_graph,
    "closed-form": _run_closed_form,
    "powers": _run_powers,
    "reg": _run_reg,
    "check": _run_check,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        payload, lines = _DISPATCH[args.verb](args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (VnumError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print("\n".join(lines))
    return 0


if __name__ == "__main__":
    sys.exit(main())
