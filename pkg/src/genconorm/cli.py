"""Command line front end: ``genconorm {check,eval,table,verify,decompose} SPEC ...``.

Exit codes: 0 analysis done, 1 input error, 2 internal error,
3 the structural verdict and the brute-force oracle disagree.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from .conditions import (
    ConsistencyError,
    DecompositionError,
    decompose_triples,
    theorem_verdict,
)
from .genop import generated_eval
from .instance import SpecError, parse_spec
from .numeric import RangeViolation, fmt, parse_rational
from .oracle import INCONSISTENT, NEEDS_REVIEW, verify

EXIT_OK, EXIT_INPUT, EXIT_INTERNAL, EXIT_INCONSISTENT = 0, 1, 2, 3


class UsageError(ValueError):
    pass


def _rational_arg(text: str, name: str) -> Fraction:
    try:
        return parse_rational(text)
    except (ValueError, RangeViolation) as exc:
        raise UsageError(f"{name}: {exc}") from None


def _decimal(v: Fraction, places: int = 12) -> str:
    return f"{float(v):.{places}g}"


def _emit(out, text: str) -> None:
    out = out or sys.stdout
    out.write(text if text.endswith("\n") else text + "\n")


def cmd_check(spec, fmt_: str = "text", out=None) -> int:
    G = spec.op()
    verdict = theorem_verdict(G)
    report = verdict.to_json()
    if fmt_ == "json":
        _emit(out, json.dumps(report, indent=2, ensure_ascii=False))
        return EXIT_OK
    lines = [f"instance: {spec.name or '(unnamed)'}", f"conclusion: {verdict.conclusion}"]
    if verdict.branch:
        lines.append(f"branch: {verdict.branch}")
    for group in ("hypotheses", "conditions"):
        for r in report.get(group, []):
            status = "holds" if r["holds"] else "FAILS"
            line = f"  {r['condition']:<15} {status}"
            if r.get("witness") is not None:
                line += f"  witness {_witness_text(r['witness'])}"
            if r.get("notes"):
                line += f"  ({r['notes']})"
            lines.append(line)
    if verdict.triples is not None:
        lines.append("triples: " + ", ".join(str(t) for t in verdict.triples))
    _emit(out, "\n".join(lines))
    return EXIT_OK


def _witness_text(w) -> str:
    if isinstance(w, list) and w and isinstance(w[0], dict) and "lo_kind" in w[0]:
        return " ∪ ".join(
            ("[" if p["lo_kind"] == "closed" else "(")
            + (p["lo"] if p["lo"] == p["hi"] else f"{p['lo']},{p['hi']}")
            + ("]" if p["hi_kind"] == "closed" else ")")
            for p in w
        )
    if isinstance(w, dict):
        return "(" + ",".join(str(v) for v in w.values()) + ")"
    if isinstance(w, list):
        return "{" + ", ".join(str(v) for v in w) + "}"
    return str(w)


def cmd_eval(spec, x: Fraction, y: Fraction, fmt_: str = "text", out=None) -> int:
    v = generated_eval(spec.op(), x, y)
    if fmt_ == "json":
        _emit(out, json.dumps({"x": fmt(x), "y": fmt(y), "value": fmt(v), "decimal": _decimal(v)}))
    else:
        _emit(out, f"{fmt(v)}  ≈ {_decimal(v)}")
    return EXIT_OK


def table_rows(spec, step: Fraction) -> list:
    if step <= 0:
        raise UsageError("step must be positive")
    pts, k = [], 0
    while k * step <= 1:
        pts.append(k * step)
        k += 1
    if pts[-1] != 1:
        pts.append(Fraction(1))
    G = spec.op()
    rows = [[""] + [fmt(p) for p in pts]]
    for x in pts:
        rows.append([fmt(x)] + [fmt(generated_eval(G, x, y)) for y in pts])
    return rows


def cmd_table(spec, step: Fraction, out_path=None, out=None) -> int:
    rows = table_rows(spec, step)
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\r\n").writerows(rows)
    if out_path:
        with open(out_path, "w", encoding="utf-8", newline="") as fh:
            fh.write(buf.getvalue())
    else:
        (out or sys.stdout).write(buf.getvalue())
    return EXIT_OK


def cmd_verify(spec, denominator: int = 12, witness_budget: int = 100_000, fmt_="text",
               out=None) -> int:
    if denominator < 2:
        raise UsageError("denominator must be at least 2")
    if witness_budget < 0:
        raise UsageError("witness budget must be non-negative")
    G = spec.op()
    res = verify(G, denominator, witness_budget)
    if fmt_ == "json":
        report = res.verdict.to_json()
        report["oracle"] = res.to_json()
        _emit(out, json.dumps(report, indent=2, ensure_ascii=False))
    else:
        probes = res.oracle.probes
        lines = [
            f"conclusion: {res.verdict.conclusion}",
            f"probes: {len(probes)} points (grid 1/{probes.denominator})",
        ]
        for name, chk in res.oracle.axioms.items():
            word = "not falsified" if name == "T2" and chk.passed else (
                "passed" if chk.passed else "FAILED"
            )
            lines.append(f"  {name:<18} {word}")
        bc = res.oracle.border_continuity
        lines.append(f"  {'border continuity':<18} {'passed' if bc.passed else 'FAILED'}  ({bc.notes})")
        if bc.witness:
            lines.append(f"    witness {json.dumps(res.oracle.to_json()['border_continuity']['witness'])}")
        c = res.oracle.counterexample
        if c is not None:
            lines.append(
                f"counterexample: T(T({fmt(c.x)},{fmt(c.y)}),{fmt(c.z)}) = {fmt(c.lhs)}"
                f" but T({fmt(c.x)},T({fmt(c.y)},{fmt(c.z)})) = {fmt(c.rhs)}"
            )
        if res.search is not None:
            s = res.search
            lines.append(
                f"witness search: ({fmt(s.x)} ⊗ {fmt(s.y)}) ⊗ {fmt(s.z)} = {fmt(s.lhs)}"
                f" but {fmt(s.x)} ⊗ ({fmt(s.y)} ⊗ {fmt(s.z)}) = {fmt(s.rhs)}"
            )
        lines.append(f"status: {res.status}")
        lines += [f"  problem: {p}" for p in res.problems]
        _emit(out, "\n".join(lines))
    if res.status == INCONSISTENT:
        return EXIT_INCONSISTENT
    if res.status == NEEDS_REVIEW:
        print("warning: no counterexample found within budget; flagged for review", file=sys.stderr)
    return EXIT_OK


def cmd_decompose(spec, fmt_: str = "text", out=None) -> int:
    G = spec.op()
    try:
        seq = decompose_triples(G)
    except DecompositionError as exc:
        if fmt_ == "json":
            _emit(out, json.dumps({"ok": False, "reason": exc.reason, "detail": exc.detail}))
        else:
            _emit(out, f"no decomposition: {exc.detail} [{exc.reason}]")
        return EXIT_OK
    if fmt_ == "json":
        _emit(out, json.dumps({"ok": True, "triples": seq.to_json()}))
    else:
        _emit(out, "{" + ",".join(str(t) for t in seq) + "}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="genconorm",
        description="Exact analysis of generated t-conorms f^(-1)(S(f(x),f(y))).",
    )
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("spec", help="instance JSON file")
        sp.add_argument("--format", choices=("text", "json"), default="text")
        return sp

    add("check", "decide whether T is a border continuous t-conorm")
    sp = add("eval", "evaluate T(x,y) exactly")
    sp.add_argument("x")
    sp.add_argument("y")
    sp = add("table", "write T on a grid as CSV")
    sp.add_argument("--step", default="1/10")
    sp.add_argument("--out", default=None, metavar="PATH")
    sp = add("verify", "cross-check the verdict with brute-force axiom checks")
    sp.add_argument("--denominator", type=int, default=12)
    sp.add_argument("--witness-budget", type=int, default=100_000)
    add("decompose", "print the triple decomposition of the range")
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        spec = parse_spec(args.spec)
        if args.command == "check":
            return cmd_check(spec, args.format)
        if args.command == "eval":
            x, y = _rational_arg(args.x, "x"), _rational_arg(args.y, "y")
            return cmd_eval(spec, x, y, args.format)
        if args.command == "table":
            return cmd_table(spec, _rational_arg(args.step, "step"), args.out)
        if args.command == "verify":
            return cmd_verify(spec, args.denominator, args.witness_budget, args.format)
        return cmd_decompose(spec, args.format)
    except (SpecError, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ConsistencyError as exc:
        print(f"inconsistency: {exc}", file=sys.stderr)
        return EXIT_INCONSISTENT
    except Exception as exc:  # noqa: BLE001 - reported as an internal failure
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
