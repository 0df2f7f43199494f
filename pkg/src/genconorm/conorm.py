"""Continuous t-conorms given as ordinal sums of Archimedean summands."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

from .numeric import ONE, ZERO, fmt, parse_rational
from .rangeset import GenInterval, RangeSet, complement, interval, open_, point


class ConstructionError(ValueError):
    pass


class ArchKind:
    """A continuous Archimedean t-conorm on the unit square.

    Subclasses provide ``eval`` and ``breakpoints``: the latter lists the
    values of ``u`` in (0, 1) at which ``u -> eval(u, c)`` switches between
    strictly increasing and constant behaviour.
    """

    name = ""
    strict = False

    def eval(self, u: Fraction, v: Fraction) -> Fraction:
        raise NotImplementedError

    def breakpoints(self, c: Fraction) -> list:
        return []

    def diagonal_breakpoints(self, u: Fraction, v: Fraction) -> list:
        """Signed offsets t where (u + t, v + t) changes regime."""
        return []

    def __repr__(self) -> str:
        return f"<{self.name}>"


class ProbabilisticSum(ArchKind):
    name = "probabilistic_sum"
    strict = True

    def eval(self, u, v):
        return u + v - u * v


class Lukasiewicz(ArchKind):
    name = "lukasiewicz"
    strict = False

    def eval(self, u, v):
        return min(u + v, ONE)

    def breakpoints(self, c):
        return [ONE - c] if 0 < c < 1 else []

    def diagonal_breakpoints(self, u, v):
        t = (ONE - u - v) / 2
        return [t] if t != 0 else []


KINDS = {k.name: k for k in (ProbabilisticSum(), Lukasiewicz())}
S_P = KINDS["probabilistic_sum"]
S_L = KINDS["lukasiewicz"]


def kind(name: str) -> ArchKind:
    try:
        return KINDS[name]
    except KeyError:
        raise ConstructionError(f"unknown summand kind {name!r}") from None


@dataclass(frozen=True)
class Summand:
    lo: Fraction
    hi: Fraction
    kind: ArchKind

    def __post_init__(self):
        object.__setattr__(self, "lo", Fraction(self.lo))
        object.__setattr__(self, "hi", Fraction(self.hi))
        if not (0 <= self.lo < self.hi <= 1):
            raise ConstructionError(f"bad carrier [{fmt(self.lo)},{fmt(self.hi)}]")

    def covers(self, x, y) -> bool:
        return self.lo <= x <= self.hi and self.lo <= y <= self.hi

    def eval(self, x, y) -> Fraction:
        w = self.hi - self.lo
        return self.lo + w * self.kind.eval((x - self.lo) / w, (y - self.lo) / w)


class OrdinalSumConorm:
    """Ordinal sum ``(<lo, hi, kind>, ...)``; ``max`` outside every summand square.

    Instances are callable: ``S(x, y)``.
    """

    def __init__(self, summands: Iterable[Summand] = ()):
        ordered = sorted(summands, key=lambda s: s.lo)
        for a, b in zip(ordered, ordered[1:]):
            if b.lo < a.hi:
                raise ConstructionError(
                    f"carriers ({fmt(a.lo)},{fmt(a.hi)}) and ({fmt(b.lo)},{fmt(b.hi)}) overlap"
                )
        self.summands = tuple(ordered)

    def __repr__(self) -> str:
        inner = ", ".join(f"<{fmt(s.lo)},{fmt(s.hi)},{s.kind.name}>" for s in self.summands)
        return f"OrdinalSumConorm({inner})"

    def __eq__(self, other) -> bool:
        return isinstance(other, OrdinalSumConorm) and self.summands == other.summands

    def __hash__(self) -> int:
        return hash(self.summands)

    def __call__(self, x, y) -> Fraction:
        return conorm_eval(self, x, y)

    def summand_at(self, x) -> Optional[Summand]:
        """The summand whose open carrier contains ``x``."""
        for s in self.summands:
            if s.lo < x < s.hi:
                return s
        return None

    def critical_values(self) -> list:
        vals = {ZERO, ONE}
        for s in self.summands:
            vals.update((s.lo, s.hi))
        return sorted(vals)

    def to_json(self) -> dict:
        return {
            "summands": [
                {"lo": fmt(s.lo), "hi": fmt(s.hi), "kind": s.kind.name} for s in self.summands
            ]
        }

    @classmethod
    def from_json(cls, data: dict) -> "OrdinalSumConorm":
        return build_ordinal_sum(
            Summand(parse_rational(s["lo"]), parse_rational(s["hi"]), kind(s["kind"]))
            for s in data.get("summands", [])
        )


def build_ordinal_sum(summands: Iterable[Summand]) -> OrdinalSumConorm:
    return OrdinalSumConorm(summands)


def conorm_eval(S: OrdinalSumConorm, x, y) -> Fraction:
    x, y = Fraction(x), Fraction(y)
    for s in S.summands:
        if s.covers(x, y):
            return s.eval(x, y)
    return max(x, y)


def idempotents(S: OrdinalSumConorm) -> RangeSet:
    return complement(RangeSet(open_(s.lo, s.hi) for s in S.summands))


def is_idempotent(S: OrdinalSumConorm, a) -> bool:
    return S.summand_at(a) is None


def conorm_power(S: OrdinalSumConorm, x, n: int) -> Fraction:
    if n < 1:
        raise ValueError("power must be at least 1")
    acc = Fraction(x)
    for _ in range(n - 1):
        acc = conorm_eval(S, acc, x)
    return acc


def nilpotency_index(S: OrdinalSumConorm, x, limit: int = 1000) -> Optional[int]:
    """Smallest ``n <= limit`` with ``x^(n) = 1`` for ``x`` in (0, 1), else None."""
    if not 0 < x < 1:
        return None
    acc = Fraction(x)
    for n in range(1, limit + 1):
        if acc == 1:
            return n
        nxt = conorm_eval(S, acc, x)
        if nxt == acc:
            return None
        acc = nxt
    return None


def is_nilpotent_element(S: OrdinalSumConorm, x) -> bool:
    """Decided from the summand structure, without iterating powers."""
    if not 0 < x < 1:
        return False
    s = S.summand_at(x)
    return s is not None and s.hi == 1 and not s.kind.strict


# Images of sets under the conorm.


def _section_breakpoints(S: OrdinalSumConorm, c) -> list:
    pts = set(S.critical_values())
    pts.add(Fraction(c))
    for s in S.summands:
        if s.lo <= c <= s.hi:
            w = s.hi - s.lo
            for u in s.kind.breakpoints((c - s.lo) / w):
                pts.add(s.lo + w * u)
    return sorted(pts)


def section_image(S: OrdinalSumConorm, I: GenInterval, c) -> RangeSet:
    """Exact image ``{S(u, c) : u in I}``.

    ``I`` is cut at every value where the section changes regime; on each open
    piece the section is either constant (a closed point) or strictly
    increasing (an open interval), and cut points map to closed points.
    """
    c = Fraction(c)
    g = lambda u: conorm_eval(S, u, c)  # noqa: E731
    if I.is_point:
        return RangeSet([point(g(I.lo))])
    cuts = [I.lo] + [p for p in _section_breakpoints(S, c) if I.lo < p < I.hi] + [I.hi]
    parts = []
    if I.lo_closed:
        parts.append(point(g(I.lo)))
    if I.hi_closed:
        parts.append(point(g(I.hi)))
    for p in cuts[1:-1]:
        parts.append(point(g(p)))
    for p, q in zip(cuts, cuts[1:]):
        gp, gq = g(p), g(q)
        if gp == gq:
            parts.append(point(gp))
        else:
            parts.append(interval(gp, gq, False, False))
    return RangeSet(parts)


def _half_gap(x: Fraction, values: Iterable[Fraction], sign: int) -> Fraction:
    """Half the distance from ``x`` to the nearest of ``values`` in direction ``sign``."""
    return min(sign * (v - x) for v in values if sign * (v - x) > 0) / 2


def _diagonal_breakpoints(S: OrdinalSumConorm, x0, y0) -> list:
    """Offsets t at which (x0 + t, y0 + t) crosses a regime boundary of a summand."""
    out = []
    for s in S.summands:
        if s.covers(x0, y0):
            w = s.hi - s.lo
            for t in s.kind.diagonal_breakpoints((x0 - s.lo) / w, (y0 - s.lo) / w):
                out.append(t * w)
    return out


def _corner_attained(S, I: GenInterval, J: GenInterval, low: bool) -> bool:
    """Whether the extreme value of S on I x J at one corner is attained.

    Probes sit strictly inside the cell next to the corner, so they share the
    regime (constant or strictly increasing) of every point near the corner.
    """
    sign = 1 if low else -1
    if low:
        x0, xc, y0, yc = I.lo, I.lo_closed, J.lo, J.lo_closed
    else:
        x0, xc, y0, yc = I.hi, I.hi_closed, J.hi, J.hi_closed
    if xc and yc:
        return True
    target = conorm_eval(S, x0, y0)
    xs = [x0] if xc else []
    ys = [y0] if yc else []
    dx = dy = None
    if not I.is_point:
        dx = _half_gap(x0, _section_breakpoints(S, y0) + [I.lo, I.hi], sign)
        xs.append(x0 + sign * dx)
    if not J.is_point:
        dy = _half_gap(y0, _section_breakpoints(S, x0) + [J.lo, J.hi], sign)
        ys.append(y0 + sign * dy)
    if dx is not None and dy is not None:
        cands = [dx, dy] + [
            abs(t) / 2 for t in _diagonal_breakpoints(S, x0, y0) if sign * t > 0
        ]
        d = min(cands)
        xs[-1], ys[-1] = x0 + sign * d, y0 + sign * d
    return any(conorm_eval(S, x, y) == target for x in xs for y in ys)


def _box_image(S: OrdinalSumConorm, I: GenInterval, J: GenInterval) -> Optional[GenInterval]:
    lo = conorm_eval(S, I.lo, J.lo)
    hi = conorm_eval(S, I.hi, J.hi)
    return interval(lo, hi, _corner_attained(S, I, J, True), _corner_attained(S, I, J, False))


def set_image(S: OrdinalSumConorm, A: RangeSet, B: RangeSet) -> RangeSet:
    """Exact image ``{S(x, y) : x in A, y in B}`` (empty if either set is)."""
    return RangeSet(_box_image(S, I, J) for I in A.parts for J in B.parts)
