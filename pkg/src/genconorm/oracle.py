"""Brute-force checks of the t-conorm axioms that do not use the structural theory.

Associativity sweeps over finite probe sets can only falsify: a passing
sweep means "not falsified", never "proved".
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional

from .conditions import (
    BORDER_CONTINUOUS,
    HYPOTHESES_NOT_MET,
    NOT_TCONORM,
    ConditionReport,
    Verdict,
    theorem_verdict,
)
from .conorm import Summand, is_idempotent
from .generator import pseudo_inverse
from .genop import GeneratedOp, generated_eval, joint_limit_T, one_sided_limit_T, otimes
from .numeric import ONE, ZERO, fmt
from .rangeset import RangeSet, member


@dataclass(frozen=True)
class ProbeSet:
    points: tuple
    denominator: int
    critical: tuple

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def meta(self) -> dict:
        return {
            "denominator": self.denominator,
            "size": len(self.points),
            "critical": [fmt(x) for x in self.critical],
        }


@dataclass
class Check:
    """Outcome of one brute-force check; ``witness`` holds exact values on failure."""

    name: str
    passed: bool
    witness: Optional[dict] = None
    notes: str = ""

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "passed": self.passed,
            "witness": _json(self.witness),
            "notes": self.notes,
        }


@dataclass
class Counterexample:
    x: Fraction
    y: Fraction
    z: Fraction
    lhs: Fraction
    rhs: Fraction
    space: str = "T"

    def to_json(self) -> dict:
        return {
            "x": fmt(self.x),
            "y": fmt(self.y),
            "z": fmt(self.z),
            "lhs": fmt(self.lhs),
            "rhs": fmt(self.rhs),
            "space": self.space,
        }


@dataclass
class OracleReport:
    axioms: dict
    border_continuity: Optional[Check] = None
    counterexample: Optional[Counterexample] = None
    probes: Optional[ProbeSet] = None

    @property
    def axioms_passed(self) -> bool:
        return all(c.passed for c in self.axioms.values())

    def to_json(self) -> dict:
        return {
            "axioms": {k: v.to_json() for k, v in self.axioms.items()},
            "border_continuity": self.border_continuity.to_json()
            if self.border_continuity
            else None,
            "counterexample": self.counterexample.to_json() if self.counterexample else None,
            "probes": self.probes.meta() if self.probes else None,
        }


def _json(w):
    if w is None:
        return None
    if isinstance(w, Fraction):
        return fmt(w)
    if isinstance(w, dict):
        return {k: _json(v) for k, v in w.items()}
    if isinstance(w, (list, tuple)):
        return [_json(v) for v in w]
    return w


def build_probes(G: GeneratedOp, denominator: int = 12) -> ProbeSet:
    if denominator < 2:
        raise ValueError("denominator must be at least 2")
    crit = set(G.f.boundaries())
    values = set()
    for g in G.pair.gaps:
        values.update((g.b, g.c, g.d))
    for s in G.S.summands:
        values.update((s.lo, s.hi))
    values.update((G.f0, G.f0plus))
    crit |= values
    crit |= {pseudo_inverse(G.f, v) for v in values}
    grid = {Fraction(i, denominator) for i in range(denominator + 1)}
    return ProbeSet(tuple(sorted(grid | crit)), denominator, tuple(sorted(crit)))


class _Memo:
    def __init__(self, op: Callable):
        self.op = op
        self.cache: dict = {}

    def __call__(self, x, y):
        key = (x, y)
        v = self.cache.get(key)
        if v is None:
            v = self.op(x, y)
            self.cache[key] = v
        return v


def axiom_check(G: GeneratedOp, probes: ProbeSet) -> OracleReport:
    """Exhaustive exact check of commutativity, monotonicity, neutral 0 and associativity."""
    T = _Memo(lambda x, y: generated_eval(G, x, y))
    pts = list(probes)
    axioms = {}

    bad = next(((x, y) for x, y in itertools.combinations(pts, 2) if T(x, y) != T(y, x)), None)
    axioms["T1"] = (
        Check("T1", True)
        if bad is None
        else Check("T1", False, {"x": bad[0], "y": bad[1], "xy": T(*bad), "yx": T(bad[1], bad[0])})
    )

    axioms["T3"] = Check("T3", True)
    for x in pts:
        for y, z in zip(pts, pts[1:]):
            if T(x, y) > T(x, z):
                axioms["T3"] = Check(
                    "T3", False, {"x": x, "y": y, "z": z, "T(x,y)": T(x, y), "T(x,z)": T(x, z)}
                )
                break
        if not axioms["T3"].passed:
            break

    bad = next((x for x in pts if T(x, ZERO) != x), None)
    axioms["S4"] = (
        Check("S4", True)
        if bad is None
        else Check("S4", False, {"x": bad, "T(x,0)": T(bad, ZERO)}, f"T({fmt(bad)},0)≠{fmt(bad)}")
    )

    cex = None
    for x, y, z in itertools.product(pts, repeat=3):
        lhs, rhs = T(T(x, y), z), T(x, T(y, z))
        if lhs != rhs:
            cex = Counterexample(x, y, z, lhs, rhs, "T")
            break
    if cex is None:
        axioms["T2"] = Check("T2", True, notes=f"not falsified on {len(pts) ** 3} triples")
    else:
        axioms["T2"] = Check("T2", False, _cex_dict(cex))
    return OracleReport(axioms, counterexample=cex, probes=probes)


def _cex_dict(c: Counterexample) -> dict:
    return {"x": c.x, "y": c.y, "z": c.z, "lhs": c.lhs, "rhs": c.rhs}


def border_continuity_check(G: GeneratedOp, probes: ProbeSet) -> Check:
    """Border continuity together with the boundary condition T(x,0) = x.

    At each boundary probe the value is compared with the four axis limits
    and both quadrant limits; the outcome is then compared with idempotency
    of f(0+), which must agree with it.
    """
    witness = None
    for t in probes:
        for x, y in ((t, ZERO), (ZERO, t), (t, ONE), (ONE, t)):
            value = generated_eval(G, x, y)
            if y == 0 and value != x:
                witness = {"x": x, "y": y, "value": value, "required": x, "kind": "S4"}
                break
            limits = []
            for d in ("x-left", "x-right", "y-left", "y-right"):
                moving = x if d[0] == "x" else y
                if (d.endswith("left") and moving == 0) or (d.endswith("right") and moving == 1):
                    continue
                limits.append((d, one_sided_limit_T(G, x, y, d)))
            limits += [(f"quadrant-{s}", joint_limit_T(G, x, y, s)) for s in ("left", "right")]
            for d, lim in limits:
                if lim != value:
                    witness = {"x": x, "y": y, "value": value, "limit": lim, "direction": d}
                    break
            if witness:
                break
        if witness:
            break
    passed = witness is None
    idem = is_idempotent(G.S, G.f0plus)
    notes = f"f(0+)={fmt(G.f0plus)} {'is' if idem else 'is not'} idempotent"
    if passed != idem:
        notes += "; DISAGREES with the idempotency criterion"
    return Check("border_continuity", passed, witness, notes)


def boundary_predicates(G: GeneratedOp, probes: ProbeSet) -> dict:
    """Three independently computed predicates that must coincide."""
    corner = generated_eval(G, ZERO, ZERO)
    corner_ok = (
        corner == 0
        and joint_limit_T(G, ZERO, ZERO, "right") == 0
        and one_sided_limit_T(G, ZERO, ZERO, "x-right") == 0
        and one_sided_limit_T(G, ZERO, ZERO, "y-right") == 0
    )
    return {
        "corner_continuous": corner_ok,
        "f0plus_idempotent": is_idempotent(G.S, G.f0plus),
        "border_and_s4": border_continuity_check(G, probes).passed,
    }


def cancellation_check(
    op, probes, summand: Optional[Summand] = None, top: Optional[Fraction] = None
) -> Check:
    """Conditional cancellation: ``op(x,y) = op(x,z) < top`` forces ``y = z``.

    With ``summand`` the probes are restricted to its carrier and ``top``
    defaults to the carrier's upper end.
    """
    pts = sorted(set(probes))
    if summand is not None:
        pts = [p for p in pts if summand.lo <= p <= summand.hi]
        top = summand.hi if top is None else top
    top = ONE if top is None else top
    for x in pts:
        seen = {}
        for y in pts:
            v = op(x, y)
            if v < top and v in seen:
                return Check(
                    "cancellation",
                    False,
                    {"x": x, "y": seen[v], "z": y, "value": v},
                    f"S(x,y)=S(x,z)={fmt(v)} with y≠z",
                )
            seen.setdefault(v, y)
    return Check("cancellation", True, notes=f"{len(pts)} probes")


def _search_points(G: GeneratedOp, failed: Optional[ConditionReport], triples) -> list:
    M = G.M
    anchors = set(G.C) | {G.f0, G.f0plus}
    for g in G.pair.gaps:
        anchors.update((g.b, g.d))
    if failed is not None:
        w = failed.witness
        if isinstance(w, RangeSet):
            for p in w.parts:
                anchors.update((p.lo, p.hi, (p.lo + p.hi) / 2))
        elif isinstance(w, dict) and triples is not None and {"i", "j", "k"} <= set(w):
            for key in ("i", "j", "k"):
                t = triples[w[key] - 1]
                anchors.update((t.a, t.b, t.c))
    pts = {a for a in anchors if member(M, a)}
    for p in M.parts:
        if p.is_point:
            pts.add(p.lo)
            continue
        width = p.hi - p.lo
        near = [a for a in anchors if p.lo <= a <= p.hi] + [p.lo, p.hi]
        for a in near:
            for j in range(1, 6):
                for cand in (a + width / 2**j, a - width / 2**j):
                    if cand in p:
                        pts.add(cand)
    return sorted(pts)


def _random_point(rng: random.Random, M: RangeSet) -> Fraction:
    while True:
        p = rng.choice(M.parts)
        if p.is_point:
            return p.lo
        t = Fraction(rng.randint(1, 999), 1000)
        cand = p.lo + (p.hi - p.lo) * t
        if cand in p:
            return cand


def witness_search(
    G: GeneratedOp,
    failed: Optional[ConditionReport] = None,
    budget: int = 100_000,
    triples=None,
    seed: int = 0,
) -> Optional[Counterexample]:
    """Look for an exact ⊗-associativity violation, spending at most ``budget`` triples.

    Candidates come from the range's structural points and dyadic offsets
    next to them, enumerated lexicographically; leftover budget goes to
    seeded random sampling of the range.  The first violation found is
    returned, so results are deterministic.
    """
    if budget <= 0:
        return None
    op = _Memo(lambda x, y: otimes(G, x, y))
    spent = 0
    pts = _search_points(G, failed, triples)
    for x, y, z in itertools.product(pts, repeat=3):
        if spent >= budget:
            return None
        spent += 1
        lhs, rhs = op(op(x, y), z), op(x, op(y, z))
        if lhs != rhs:
            return Counterexample(x, y, z, lhs, rhs, "otimes")
    rng = random.Random(seed)
    while spent < budget:
        spent += 1
        x, y, z = (_random_point(rng, G.M) for _ in range(3))
        lhs, rhs = op(op(x, y), z), op(x, op(y, z))
        if lhs != rhs:
            return Counterexample(x, y, z, lhs, rhs, "otimes")
    return None


def to_T_space(G: GeneratedOp, c: Counterexample) -> Counterexample:
    """Pull a ⊗ counterexample back to the domain of T."""
    if c.space == "T":
        return c
    x, y, z = (pseudo_inverse(G.f, v) for v in (c.x, c.y, c.z))
    T = lambda u, v: generated_eval(G, u, v)  # noqa: E731
    return Counterexample(x, y, z, T(T(x, y), z), T(x, T(y, z)), "T")


CONSISTENT = "consistent"
NEEDS_REVIEW = "needs_review"
INCONSISTENT = "inconsistent"


@dataclass
class VerifyResult:
    verdict: Verdict
    oracle: OracleReport
    status: str
    problems: list = field(default_factory=list)
    search: Optional[Counterexample] = None

    def to_json(self) -> dict:
        out = self.oracle.to_json()
        out["status"] = self.status
        out["problems"] = list(self.problems)
        out["witness_search"] = self.search.to_json() if self.search else None
        return out


def verify(G: GeneratedOp, denominator: int = 12, witness_budget: int = 100_000) -> VerifyResult:
    """Run the oracle and compare its evidence with the structural verdict."""
    verdict = theorem_verdict(G)
    probes = build_probes(G, denominator)
    report = axiom_check(G, probes)
    report.border_continuity = border_continuity_check(G, probes)
    problems = []

    for name in ("T1", "T3"):
        if not report.axioms[name].passed:
            problems.append(f"{name} fails, but generated operations always satisfy it")
    if report.border_continuity.passed != is_idempotent(G.S, G.f0plus):
        problems.append("border continuity with S4 disagrees with idempotency of f(0+)")

    search = None
    status = CONSISTENT
    if verdict.conclusion == BORDER_CONTINUOUS:
        for name, chk in report.axioms.items():
            if not chk.passed:
                problems.append(f"verdict is a t-conorm but {name} fails")
        if not report.border_continuity.passed:
            problems.append("verdict is border continuous but a boundary discontinuity was found")
    elif verdict.conclusion == NOT_TCONORM:
        if report.counterexample is None:
            failed = next((r for r in verdict.conditions if not r.holds), None)
            search = witness_search(G, failed, witness_budget, verdict.triples)
            if search is None:
                status = NEEDS_REVIEW
    elif verdict.conclusion != HYPOTHESES_NOT_MET:
        problems.append(f"unknown conclusion {verdict.conclusion}")

    if problems:
        status = INCONSISTENT
    return VerifyResult(verdict, report, status, problems, search)
