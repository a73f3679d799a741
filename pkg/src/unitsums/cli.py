"""Command-line front end.

Exit codes: 0 success, 1 identity or demo mismatch, 2 usage or parse error,
3 precondition violation. Positions in CLI output are 1-based.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass, field
from typing import Any

from unitsums.bench import BenchConfig, run_bench
from unitsums.demos import DEMOS, run_demo
from unitsums.errors import PreconditionError
from unitsums.group import parse_subgroup
from unitsums.nicety import is_a_nice
from unitsums.polyparse import ParseError, eval_sum, format_polynomial, parse
from unitsums.ring import make_ring
from unitsums.symsum import (
    brute_force_p,
    brute_force_p_sharp,
    check_inclusion_exclusion,
    check_n_p_sharp,
    chi,
    evaluate,
    partition_weight,
    valid_partitions,
)

GRAMMAR_HELP = """\
polynomial grammar (whitespace ignored):
  polynomial := ['-'] term (('+' | '-') term)*
  term       := integer ['*' factor ('*' factor)*] | factor ('*' factor)*
  factor     := 'x' index ['^' ['-'] integer]
example: "x1^2*x2^5 + 3*x1*x2" with --arity 2
"""


class UsageError(Exception):
    pass


class CheckFailed(Exception):
    pass


@dataclass
class RunResult:
    command: str
    fields: dict[str, Any] = field(default_factory=dict)
    timing_ms: float = 0.0
    lines: list[str] = field(default_factory=list)

    def to_dict(self) -> dict[str, Any]:
        return {"command": self.command, **self.fields, "timing_ms": round(self.timing_ms, 3)}

    def render(self, as_json: bool) -> str:
        if as_json:
            return json.dumps(self.to_dict(), sort_keys=False)
        out = [f"{k}: {_human(v)}" for k, v in self.fields.items() if v is not None and not _nested(v)]
        out.extend(self.lines)
        return "\n".join(out)


def _nested(v: Any) -> bool:
    # nested records only go to JSON; the text form lists them line by line
    return isinstance(v, list) and bool(v) and isinstance(v[0], (dict, list))


def _human(v: Any) -> str:
    if isinstance(v, bool):
        return str(v).lower()
    if isinstance(v, list):
        return ",".join(str(x) for x in v)
    return str(v)


def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None


def _group(args):
    if args.modulus is None:
        raise UsageError("--modulus is required")
    ring = make_ring(args.modulus)
    try:
        return parse_subgroup(ring, args.subgroup)
    except PreconditionError:
        raise
    except ValueError as e:
        raise UsageError(str(e)) from None


def _niceness_fields(report) -> dict[str, Any]:
    d = {"nice": report.nice, "threshold": report.threshold}
    if report.worst_subset is not None:
        d["worst_subset"] = [i + 1 for i in report.worst_subset]
        d["worst_value"] = report.worst_value
    return d


def cmd_eval(args) -> RunResult:
    if (args.exponents is None) == (args.poly is None):
        raise UsageError("give exactly one of --exponents or --poly")
    G = _group(args)
    base = {"modulus": args.modulus, "subgroup": args.subgroup}
    if args.exponents is not None:
        A = _int_list(args.exponents)
        ev = evaluate(G, A, force_closed_form=args.force_closed_form)
        fields = {
            **base,
            "exponents": [str(a) for a in A],
            "value": str(ev.value.value),
            "method": ev.method.value,
            **_niceness_fields(ev.report),
        }
        fields["nice"] = ev.nice
        return RunResult("eval", fields)
    if args.arity is None:
        raise UsageError("--poly needs --arity")
    try:
        f = parse(args.poly, args.arity)
    except ParseError as e:
        raise UsageError(str(e)) from None
    total, per_term = eval_sum(G, f)
    methods = sorted({ev.method.value for ev in per_term})
    fields = {
        **base,
        "poly": format_polynomial(f),
        "value": str(total.value),
        "method": "+".join(methods) if methods else "closed_form",
        "nice": all(ev.nice for ev in per_term),
    }
    lines = [
        f"  term {j + 1}: coeff {t.coefficient} exps {list(t.exponents)} -> {ev.value.value} ({ev.method.value})"
        for j, (t, ev) in enumerate(zip(f.terms, per_term))
    ]
    return RunResult("eval", fields, lines=lines)


def cmd_nice(args) -> RunResult:
    G = _group(args)
    A = _int_list(args.exponents)
    report = is_a_nice(G, A)
    fields = {
        "modulus": args.modulus,
        "subgroup": args.subgroup,
        "exponents": [str(a) for a in A],
        **_niceness_fields(report),
        "family_size": report.family_size,
        "vacuous": report.vacuous,
        "field": report.field,
    }
    if report.witness is not None:
        s = sum(A)
        w = report.witness
        fields["witness"] = str(w)
        fields["witness_regular"] = G.ring(G.power(w, s) - 1).is_regular()
    return RunResult("nice", fields)


def cmd_partitions(args) -> RunResult:
    A = _int_list(args.exponents)
    G = None
    if args.modulus is not None:
        G = _group(args)
    lam = args.lam if args.lam is not None else (G.exponent if G else None)
    if lam is None:
        raise UsageError("give --lambda or --modulus/--subgroup")
    n = args.order if args.order is not None else (G.order if G else lam)
    parts = valid_partitions(A, lam)
    total = sum(partition_weight(P, n) for P in parts)
    lines = []
    for P in parts:
        blocks = " ".join(
            "{" + ",".join(str(i + 1) for i in b) + f"}}[s={sum(A[i] for i in b)},chi={chi(len(b), n)}]"
            for b in P
        )
        lines.append(f"  {blocks}  weight {partition_weight(P, n)}")
    fields = {
        "exponents": [str(a) for a in A],
        "lambda": lam,
        "order": n,
        "count": len(parts),
        "total": str(total),
        "partitions": [[[i + 1 for i in b] for b in P] for P in parts],
    }
    if args.modulus is not None:
        fields["modulus"] = args.modulus
        fields["value"] = str(total % args.modulus)
    return RunResult("partitions", fields, lines=lines)


def cmd_oracle(args) -> RunResult:
    G = _group(args)
    A = _int_list(args.exponents)
    fields: dict[str, Any] = {
        "modulus": args.modulus,
        "subgroup": args.subgroup,
        "exponents": [str(a) for a in A],
        "check": args.check,
    }
    lines = []
    if args.check == "p":
        fields["value"] = str(brute_force_p(G, A).value)
    elif args.check == "psharp":
        fields["value"] = str(brute_force_p_sharp(G, A).value)
    elif args.check == "eq4":
        ok, lhs, rhs = check_inclusion_exclusion(G, A)
        fields.update(passed=ok, lhs=str(lhs.value), rhs=str(rhs.value))
    elif args.check == "npsharp":
        rows = check_n_p_sharp(G, A)
        ok = all(full == rhs for _, full, rhs in rows)
        fields.update(passed=ok, value=str(rows[0][1].value))
        lines = [f"  drop position {i + 1}: p={full.value} n*psharp={rhs.value}" for i, full, rhs in rows]
    res = RunResult("oracle", fields, lines=lines)
    if fields.get("passed") is False:
        raise CheckFailed(res)
    return res


def cmd_demo(args) -> RunResult:
    demos = DEMOS if not args.name else [d for d in DEMOS if d.name in args.name]
    if args.name and len(demos) != len(args.name):
        known = ", ".join(d.name for d in DEMOS)
        raise UsageError(f"unknown demo name; known: {known}")
    results = [run_demo(d) for d in demos]
    lines = [
        f"  {r.demo.name:<14} mod {r.demo.modulus:<4} expected {r.expected:<4} "
        f"computed {r.computed:<4} oracle {r.oracle:<4} {'ok' if r.ok else 'MISMATCH'}  ({r.demo.note})"
        for r in results
    ]
    fields = {
        "demos": [
            {"name": r.demo.name, "modulus": r.demo.modulus, "expected": str(r.expected),
             "computed": str(r.computed), "oracle": str(r.oracle), "ok": r.ok}
            for r in results
        ],
        "passed": all(r.ok for r in results),
    }
    res = RunResult("demo", fields, lines=lines)
    if not fields["passed"]:
        raise CheckFailed(res)
    return res


def cmd_bench(args) -> RunResult:
    G = _group(args)
    if G.exponent < 2:
        raise PreconditionError("benchmark needs a subgroup with exponent >= 2")
    rows = run_bench(G, BenchConfig(kmax=args.kmax, seed=args.seed))
    lines = [f"  {'k':>2} {'exponents':<24} {'nice':<5} {'oracle ms':>10} {'dp ms':>8} agree"]
    for r in rows:
        lines.append(
            f"  {r.k:>2} {str(list(r.exponents)):<24} {str(r.nice).lower():<5} "
            f"{r.oracle_ms:>10.2f} {r.dp_ms:>8.3f} {'yes' if r.agree else 'NO'}"
        )
    fields = {
        "modulus": args.modulus,
        "subgroup": args.subgroup,
        "rows": [
            {"k": r.k, "exponents": [str(a) for a in r.exponents], "nice": r.nice,
             "oracle": str(r.oracle_value), "dp": str(r.dp_value), "agree": r.agree,
             "oracle_ms": round(r.oracle_ms, 3), "dp_ms": round(r.dp_ms, 3)}
            for r in rows
        ],
    }
    return RunResult("bench", fields, lines=lines)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="unitsums",
        description="Symmetric sums of monomials over distinct elements of unit subgroups of Z/mZ.",
        epilog=GRAMMAR_HELP,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def ring_flags(p, required=True):
        p.add_argument("--modulus", type=int, required=required)
        p.add_argument("--subgroup", default="units", help="units | nth:<n> | gen:<g1,g2,...>")
        p.add_argument("--json", action="store_true")

    p = sub.add_parser("eval", help="evaluate a symmetric sum", epilog=GRAMMAR_HELP,
                       formatter_class=argparse.RawDescriptionHelpFormatter)
    ring_flags(p)
    p.add_argument("--exponents")
    p.add_argument("--poly")
    p.add_argument("--arity", type=int)
    p.add_argument("--force-closed-form", action="store_true")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("nice", help="run the minimax niceness test")
    ring_flags(p)
    p.add_argument("--exponents", required=True)
    p.set_defaults(func=cmd_nice)

    p = sub.add_parser("partitions", help="list block-divisible set partitions")
    ring_flags(p, required=False)
    p.add_argument("--exponents", required=True)
    p.add_argument("--lambda", dest="lam", type=int)
    p.add_argument("--order", type=int, help="group order n used in the block weights (default: lambda)")
    p.set_defaults(func=cmd_partitions)

    p = sub.add_parser("oracle", help="brute-force sums and identity checks")
    ring_flags(p)
    p.add_argument("--exponents", required=True)
    p.add_argument("--check", choices=["p", "psharp", "eq4", "npsharp"], required=True)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("demo", help="reproduce the bundled congruences")
    p.add_argument("name", nargs="*")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_demo)

    p = sub.add_parser("bench", help="time the oracle against the closed-form DP")
    ring_flags(p)
    p.add_argument("--kmax", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_bench)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    t0 = time.perf_counter()
    try:
        res = args.func(args)
    except CheckFailed as e:
        res = e.args[0]
        res.timing_ms = (time.perf_counter() - t0) * 1e3
        print(res.render(args.json))
        return 1
    except PreconditionError as e:
        print(f"error: {e}", file=sys.stderr)
        return 3
    except (UsageError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    res.timing_ms = (time.perf_counter() - t0) * 1e3
    print(res.render(args.json))
    return 0


if __name__ == "__main__":
    sys.exit(main())
