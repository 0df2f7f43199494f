"""Exact deciders for the structural conditions on a generated operation.

Every check returns a :class:`ConditionReport`; a failing report always
carries a witness (a range set, an index triple or a list of points).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, NamedTuple, Optional

from .conorm import OrdinalSumConorm, conorm_eval, is_idempotent, set_image
from .genop import GeneratedOp, otimes, otimes_via_T
from .numeric import ONE, fmt
from .rangeset import RangeSet, closed, interval, open_, point


class ConsistencyError(AssertionError):
    """Two routes that must agree gave different answers."""


class DecompositionError(ValueError):
    def __init__(self, reason: str, detail: str):
        super().__init__(detail)
        self.reason = reason
        self.detail = detail


@dataclass
class ConditionReport:
    condition: str
    holds: bool
    witness: Any = None
    notes: str = ""

    def __post_init__(self):
        if not self.holds and not self.witness:
            raise ValueError(f"{self.condition} failed without a witness")

    def to_json(self) -> dict:
        return {
            "condition": self.condition,
            "holds": self.holds,
            "witness": _witness_json(self.witness),
            "notes": self.notes,
        }


def _witness_json(w):
    if w is None:
        return None
    if isinstance(w, RangeSet):
        return w.to_json()
    if isinstance(w, Fraction):
        return fmt(w)
    if isinstance(w, dict):
        return {k: _witness_json(v) for k, v in w.items()}
    if isinstance(w, (list, tuple)):
        return [_witness_json(v) for v in w]
    return w


class Triple(NamedTuple):
    a: Fraction
    b: Fraction
    c: Fraction

    def __str__(self) -> str:
        return f"({fmt(self.a)},{fmt(self.b)},{fmt(self.c)})"


@dataclass(frozen=True)
class TripleSequence:
    triples: tuple
    f0: Fraction
    f0plus: Fraction

    def __len__(self) -> int:
        return len(self.triples)

    def __getitem__(self, i):
        return self.triples[i]

    def __iter__(self):
        return iter(self.triples)

    def d(self, i: int) -> Fraction:
        """``a_{i+1}`` when that index exists, else 1 (1-based ``i``)."""
        return self.triples[i].a if i < len(self.triples) else ONE

    def validate(self) -> None:
        """Raise :class:`DecompositionError` on the first violated ordering constraint."""
        ts = self.triples
        if not ts:
            raise DecompositionError("empty", "no triples")
        if ts[0].a != self.f0plus:
            raise DecompositionError(
                "a1_mismatch", f"a_1={fmt(ts[0].a)} differs from f(0+)={fmt(self.f0plus)}"
            )
        for i, t in enumerate(ts, start=1):
            if not t.a < t.b:
                raise DecompositionError("order", f"a_{i}<b_{i} violated")
            if not t.b <= t.c:
                raise DecompositionError("order", f"b_{i}<=c_{i} violated")
        for i, (s, t) in enumerate(zip(ts, ts[1:]), start=1):
            if not s.b < t.a:
                raise DecompositionError("order", f"b_{i}<a_{i + 1} violated")
            if not s.c <= t.a:
                raise DecompositionError("order", f"c_{i}<=a_{i + 1} violated")
            if not (s.a < t.a and s.b < t.b and s.c < t.c):
                raise DecompositionError("order", f"sequences not strictly increasing at {i}")
        n = len(ts)
        if n >= 2 and not ts[-1].b < 1:
            raise DecompositionError("b_n_not_below_1", f"b_n<1 violated at n={n}")

    def reconstruct(self) -> RangeSet:
        parts = [point(self.f0)]
        for t in self.triples:
            parts += [open_(t.a, t.b), point(t.c)]
        return RangeSet(parts)

    def to_json(self) -> list:
        return [{"a": fmt(t.a), "b": fmt(t.b), "c": fmt(t.c)} for t in self.triples]


@dataclass
class Verdict:
    hypothesis_ok: bool
    conditions: list
    conclusion: str
    branch: str
    triples: Optional[TripleSequence] = None
    hypotheses: list = field(default_factory=list)

    def report(self, name: str) -> ConditionReport:
        for r in self.hypotheses + self.conditions:
            if r.condition == name:
                return r
        raise KeyError(name)

    def to_json(self) -> dict:
        return {
            "hypotheses": [r.to_json() for r in self.hypotheses],
            "conditions": [r.to_json() for r in self.conditions],
            "conclusion": self.conclusion,
            "branch": self.branch,
            "triples": self.triples.to_json() if self.triples is not None else None,
        }


BORDER_CONTINUOUS = "border_continuous_tconorm"
NOT_TCONORM = "not_tconorm"
HYPOTHESES_NOT_MET = "hypotheses_not_met"


# Hypotheses


def check_hypotheses(G: GeneratedOp) -> list:
    a = G.f0plus
    reports = []
    if is_idempotent(G.S, a):
        reports.append(ConditionReport("HYP_IDEMPOTENT", True, notes=f"f(0+)={fmt(a)}"))
    else:
        reports.append(
            ConditionReport(
                "HYP_IDEMPOTENT",
                False,
                [a],
                f"f(0+)={fmt(a)} lies inside a summand carrier",
            )
        )

    hi = G.f1minus
    hosts = [s for s in G.S.summands if s.lo <= a and hi <= s.hi]
    if hosts:
        s = hosts[0]
        reports.append(
            ConditionReport("HYP_SUMMAND", True, notes=f"(m1,n1)=({fmt(s.lo)},{fmt(s.hi)})")
        )
    else:
        reports.append(
            ConditionReport(
                "HYP_SUMMAND",
                False,
                RangeSet([interval(a, hi, False, False) or point(a)]),
                f"f((0,1)) spans [{fmt(a)},{fmt(hi)}] and no single summand carrier holds it",
            )
        )

    if in_A0(G):
        reports.append(ConditionReport("HYP_A0", True))
    else:
        reports.append(
            ConditionReport("HYP_A0", False, [a], "no interval (f(0+), eps] lies in the range")
        )
    return reports


def in_A0(G: GeneratedOp) -> bool:
    a = G.f0plus
    return any(p.lo <= a < p.hi for p in G.M.parts if not p.is_point)


# Necessary conditions D0-D5


class _Sets(NamedTuple):
    M: RangeSet
    C: RangeSet
    M_minus_C: RangeSet
    M_minus_1: RangeSet
    B: RangeSet
    nonzero: list


def _sets(G: GeneratedOp) -> _Sets:
    M = G.M
    C = RangeSet.points(G.C)
    nonzero = G.pair.nonzero_gaps
    B = RangeSet(closed(g.b, g.c) for g in nonzero)
    return _Sets(M, C, M - C, M - RangeSet([point(1)]), B, nonzero)


def _emptiness(name: str, inter: RangeSet, notes: str = "") -> ConditionReport:
    if inter:
        return ConditionReport(name, False, inter, notes)
    return ConditionReport(name, True, notes=notes)


def check_D(G: GeneratedOp, which: str) -> ConditionReport:
    s = _sets(G)
    S = G.S
    if which == "D0":
        for k, g in enumerate(s.nonzero, start=1):
            if g.d < 1 and not g.c < g.d:
                return ConditionReport(
                    "D0",
                    False,
                    {"k": k, "b": g.b, "c": g.c, "d": g.d},
                    f"c_{k}=d_{k}={fmt(g.d)}<1",
                )
        return ConditionReport("D0", True)
    if which == "D1":
        C_wo_f0 = s.C - RangeSet([point(G.f0)])
        return _emptiness("D1", set_image(S, s.M_minus_1, C_wo_f0) & s.M_minus_C)
    if which == "D2":
        return _emptiness("D2", set_image(S, s.M_minus_1, s.B) & s.M_minus_C)
    if which == "D3":
        ds = RangeSet.points(g.d for g in s.nonzero if g.d < 1)
        return _emptiness("D3", set_image(S, s.M, s.M_minus_C) & ds)
    if which == "D4":
        return _semigroup("D4", G, G.C)
    if which == "D5":
        return _emptiness("D5", set_image(S, s.M_minus_1 | s.B, s.B) & s.M_minus_C)
    raise ValueError(f"unknown condition {which!r}")


def _semigroup(name: str, G: GeneratedOp, elems, op=otimes) -> ConditionReport:
    """Closure and associativity of ⊗ on a finite subset of the range, exhaustively."""
    elems = sorted(set(elems))
    members = set(elems)
    table = {}
    for x, y in itertools.product(elems, repeat=2):
        v = op(G, x, y)
        if v not in members:
            return ConditionReport(
                name, False, {"x": x, "y": y, "product": v}, "not closed under ⊗"
            )
        table[x, y] = v
    for x, y, z in itertools.product(elems, repeat=3):
        lhs, rhs = table[table[x, y], z], table[x, table[y, z]]
        if lhs != rhs:
            return ConditionReport(
                name,
                False,
                {"x": x, "y": y, "z": z, "lhs": lhs, "rhs": rhs},
                "⊗ is not associative",
            )
    return ConditionReport(name, True, notes=f"{len(elems)} elements")


# Decomposition into triples


def _atoms(M: RangeSet) -> list:
    """Split every part into its open interior and its closed end points."""
    out = []
    for p in M.parts:
        if p.is_point:
            out.append(("point", p.lo))
            continue
        if p.lo_closed:
            out.append(("point", p.lo))
        out.append(("open", p.lo, p.hi))
        if p.hi_closed:
            out.append(("point", p.hi))
    return out


def decompose_triples(G: GeneratedOp) -> TripleSequence:
    """The unique triple sequence determining the range, or :class:`DecompositionError`."""
    if not in_A0(G):
        raise DecompositionError("not_in_A0", "f(0+) is a right accumulation point of M^c")
    atoms = _atoms(G.M)
    if not atoms or atoms[0] != ("point", G.f0):
        raise DecompositionError("pattern", "range does not start with the point f(0)")
    rest = atoms[1:]
    triples = []
    i = 0
    while i < len(rest):
        head = rest[i]
        if head[0] != "open":
            raise DecompositionError(
                "pattern", f"expected an interval (a_i,b_i) at {fmt(head[1])}"
            )
        if i + 1 >= len(rest) or rest[i + 1][0] != "point":
            raise DecompositionError(
                "pattern", f"interval ({fmt(head[1])},{fmt(head[2])}) has no point c_i after it"
            )
        triples.append(Triple(head[1], head[2], rest[i + 1][1]))
        i += 2
    seq = TripleSequence(tuple(triples), G.f0, G.f0plus)
    seq.validate()
    if seq.reconstruct() != G.M:
        raise DecompositionError("pattern", "triples do not reproduce the range")
    return seq


# D6-D8 and the index-level conditions


def _t(S, x, y):
    return conorm_eval(S, x, y)


def _d7_disjunction(ts, S):
    n = len(ts)
    for i, j, k in itertools.product(range(n), repeat=3):
        ti, tj, tk = ts[i], ts[j], ts[k]
        first = tk.a <= _t(S, ti.a, tj.a) and tk.b <= min(_t(S, ti.a, tj.b), _t(S, tj.a, ti.b))
        if not (first or _t(S, ti.c, tj.c) <= tk.a):
            return (i + 1, j + 1, k + 1)
    return None


def _eq45_violation(ts, S):
    n = len(ts)
    for i, j, k in itertools.product(range(n), repeat=3):
        ti, tj, tk = ts[i], ts[j], ts[k]
        m = min(_t(S, ti.a, tj.b), _t(S, tj.a, ti.b))
        top = _t(S, ti.c, tj.c)
        if max(m, tk.a) < min(top, tk.b):
            return (i + 1, j + 1, k + 1)
    return None


def _eq46_violation(ts, S):
    n = len(ts)
    for i, j, k in itertools.product(range(n), repeat=3):
        ti, tj, tk = ts[i], ts[j], ts[k]
        if _t(S, ti.a, tj.a) < tk.a < _t(S, ti.b, tj.b):
            return (i + 1, j + 1, k + 1)
    return None


def _index_report(name, hit, notes=""):
    if hit is None:
        return ConditionReport(name, True, notes=notes)
    i, j, k = hit
    return ConditionReport(name, False, {"i": i, "j": j, "k": k}, notes)


def check_eq45(triples: TripleSequence, S: OrdinalSumConorm) -> ConditionReport:
    return _index_report("EQ45", _eq45_violation(triples, S))


def check_eq46(triples: TripleSequence, S: OrdinalSumConorm) -> ConditionReport:
    return _index_report("EQ46", _eq46_violation(triples, S))


def check_D7(triples: TripleSequence, S: OrdinalSumConorm, mode: str = "disjunction") -> ConditionReport:
    """Evaluate D7 per index triple (i, j, k); both modes are computed and compared."""
    by_disjunction = _d7_disjunction(triples, S)
    by_intervals = _eq45_violation(triples, S) or _eq46_violation(triples, S)
    if (by_disjunction is None) != (by_intervals is None):
        raise ConsistencyError(
            f"D7 disjunction ({by_disjunction}) and interval form ({by_intervals}) disagree"
        )
    if mode == "disjunction":
        return _index_report("D7", by_disjunction, "disjunction form")
    if mode == "eq45_46":
        return _index_report("D7", by_intervals, "interval-avoidance form")
    raise ValueError(f"unknown mode {mode!r}")


def check_D8(G: GeneratedOp, triples: TripleSequence, include_c0: bool) -> ConditionReport:
    elems = [t.c for t in triples]
    if include_c0:
        elems.append(G.f0)
    return _semigroup("D8" if include_c0 else "D8PRIME", G, elems)


def corollary_check(G: GeneratedOp, triples: TripleSequence) -> list:
    """Items (i)-(iii) as explicit set computations, cross-checked against D7 and D8."""
    S = G.S
    ts = list(triples)
    pairs = list(itertools.product(ts, repeat=2))
    spans = RangeSet(
        interval(min(_t(S, ti.a, tj.b), _t(S, tj.a, ti.b)), _t(S, ti.c, tj.c), False, False)
        for ti, tj in pairs
    )
    holes = RangeSet(open_(t.a, t.b) for t in ts)
    r1 = _emptiness("COR_I", spans & holes)

    lows = RangeSet(interval(_t(S, ti.a, tj.a), _t(S, ti.b, tj.b), False, False) for ti, tj in pairs)
    r2 = _emptiness("COR_II", lows & RangeSet.points(t.a for t in ts))

    # Item (iii) restates D8; here the products go through T itself.
    include_c0 = G.f0plus > 0
    elems = [t.c for t in ts] + ([G.f0] if include_c0 else [])
    r3 = _semigroup("COR_III", G, elems, otimes_via_T)
    if r3.holds != check_D8(G, triples, include_c0).holds:
        raise ConsistencyError("corollary item (iii) disagrees with D8")

    d7 = check_D7(triples, S)
    if (r1.holds and r2.holds) != d7.holds:
        raise ConsistencyError("corollary items (i),(ii) disagree with D7")
    return [r1, r2, r3]


def theorem_verdict(G: GeneratedOp) -> Verdict:
    hyps = check_hypotheses(G)
    hyp_ok = all(r.holds for r in hyps)
    branch = "f0plus_positive" if G.f0plus > 0 else "f0plus_zero"
    conds = [check_D(G, w) for w in ("D0", "D1", "D2", "D3", "D4", "D5")]

    triples = None
    try:
        triples = decompose_triples(G)
        conds.append(ConditionReport("D6", True, notes=f"{len(triples)} triples"))
    except DecompositionError as exc:
        conds.append(ConditionReport("D6", False, [exc.reason], exc.detail))

    if triples is not None:
        conds.append(check_D7(triples, G.S))
        conds.append(check_eq45(triples, G.S))
        conds.append(check_eq46(triples, G.S))
        conds.append(check_D8(G, triples, include_c0=G.f0plus > 0))
        conds.extend(corollary_check(G, triples))

    if not hyp_ok:
        conclusion = HYPOTHESES_NOT_MET
    else:
        needed = {"D6", "D7", "D8" if G.f0plus > 0 else "D8PRIME"}
        ok = all(r.holds for r in conds if r.condition in needed) and triples is not None
        conclusion = BORDER_CONTINUOUS if ok else NOT_TCONORM
    return Verdict(hyp_ok, conds, conclusion, branch, triples, hyps)
