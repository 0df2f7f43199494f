"""Finite unions of intervals and points of [0, 1] in canonical form."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Optional, Sequence

from .numeric import ONE, ZERO, fmt, parse_rational


class StructureError(ValueError):
    """Inconsistent combination of a range set and its gap structure."""


@dataclass(frozen=True, order=True)
class GenInterval:
    """An interval of [0, 1] with open or closed ends; ``lo == hi`` is a point."""

    lo: Fraction
    hi: Fraction
    lo_closed: bool = True
    hi_closed: bool = True

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError(f"empty interval: {self.lo} > {self.hi}")
        if self.lo == self.hi and not (self.lo_closed and self.hi_closed):
            raise ValueError(f"degenerate interval at {self.lo} must be closed")
        if self.lo < 0 or self.hi > 1:
            raise ValueError("interval leaves [0,1]")

    @property
    def is_point(self) -> bool:
        return self.lo == self.hi

    def __contains__(self, x) -> bool:
        if x < self.lo or x > self.hi:
            return False
        if x == self.lo and not self.lo_closed:
            return False
        if x == self.hi and not self.hi_closed:
            return False
        return True

    def __str__(self) -> str:
        if self.is_point:
            return "{" + fmt(self.lo) + "}"
        left = "[" if self.lo_closed else "("
        right = "]" if self.hi_closed else ")"
        return f"{left}{fmt(self.lo)},{fmt(self.hi)}{right}"


def interval(lo, hi, lo_closed=True, hi_closed=True) -> Optional[GenInterval]:
    """Build an interval, returning None when the bounds describe the empty set."""
    lo, hi = Fraction(lo), Fraction(hi)
    if lo > hi or (lo == hi and not (lo_closed and hi_closed)):
        return None
    return GenInterval(lo, hi, lo_closed, hi_closed)


def point(x) -> GenInterval:
    x = Fraction(x)
    return GenInterval(x, x, True, True)


def closed(lo, hi) -> GenInterval:
    return GenInterval(Fraction(lo), Fraction(hi), True, True)


def open_(lo, hi) -> GenInterval:
    return GenInterval(Fraction(lo), Fraction(hi), False, False)


def _intersect(a: GenInterval, b: GenInterval) -> Optional[GenInterval]:
    if a.lo > b.lo:
        lo, lo_closed = a.lo, a.lo_closed
    elif b.lo > a.lo:
        lo, lo_closed = b.lo, b.lo_closed
    else:
        lo, lo_closed = a.lo, a.lo_closed and b.lo_closed
    if a.hi < b.hi:
        hi, hi_closed = a.hi, a.hi_closed
    elif b.hi < a.hi:
        hi, hi_closed = b.hi, b.hi_closed
    else:
        hi, hi_closed = a.hi, a.hi_closed and b.hi_closed
    return interval(lo, hi, lo_closed, hi_closed)


class RangeSet:
    """Canonical finite union of disjoint, non-mergeable intervals.

    Instances are immutable and compare equal exactly when they denote the
    same point set.
    """

    __slots__ = ("parts",)

    def __init__(self, parts: Iterable[Optional[GenInterval]] = ()):
        object.__setattr__(self, "parts", _normalize(p for p in parts if p is not None))

    def __setattr__(self, name, value):
        raise AttributeError("RangeSet is immutable")

    @classmethod
    def points(cls, xs: Iterable) -> "RangeSet":
        return cls(point(x) for x in xs)

    @classmethod
    def unit(cls) -> "RangeSet":
        return cls([closed(0, 1)])

    def __eq__(self, other) -> bool:
        return isinstance(other, RangeSet) and self.parts == other.parts

    def __hash__(self) -> int:
        return hash(self.parts)

    def __bool__(self) -> bool:
        return bool(self.parts)

    def __iter__(self) -> Iterator[GenInterval]:
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __contains__(self, x) -> bool:
        return member(self, x)

    def __repr__(self) -> str:
        return f"RangeSet({str(self)!r})"

    def __str__(self) -> str:
        if not self.parts:
            return "{}"
        return " U ".join(str(p) for p in self.parts)

    def __or__(self, other: "RangeSet") -> "RangeSet":
        return RangeSet(self.parts + other.parts)

    def __and__(self, other: "RangeSet") -> "RangeSet":
        out = []
        for a in self.parts:
            for b in other.parts:
                if b.lo > a.hi:
                    break
                out.append(_intersect(a, b))
        return RangeSet(out)

    def __sub__(self, other: "RangeSet") -> "RangeSet":
        return self & complement(other)

    def is_empty(self) -> bool:
        return not self.parts

    @property
    def inf(self) -> Fraction:
        return self.parts[0].lo

    @property
    def sup(self) -> Fraction:
        return self.parts[-1].hi

    def is_finite(self) -> bool:
        return all(p.is_point for p in self.parts)

    def point_values(self) -> list:
        if not self.is_finite():
            raise ValueError("range set is not a finite point set")
        return [p.lo for p in self.parts]

    def to_json(self) -> list:
        return [
            {
                "lo": fmt(p.lo),
                "lo_kind": "closed" if p.lo_closed else "open",
                "hi": fmt(p.hi),
                "hi_kind": "closed" if p.hi_closed else "open",
            }
            for p in self.parts
        ]

    @classmethod
    def from_json(cls, data: Sequence[dict]) -> "RangeSet":
        parts = []
        for item in data:
            parts.append(
                GenInterval(
                    parse_rational(item["lo"]),
                    parse_rational(item["hi"]),
                    item["lo_kind"] == "closed",
                    item["hi_kind"] == "closed",
                )
            )
        return cls(parts)


def _normalize(parts: Iterable[GenInterval]) -> tuple:
    ordered = sorted(parts, key=lambda p: (p.lo, not p.lo_closed))
    out: list = []
    for p in ordered:
        if out:
            cur = out[-1]
            touching = p.lo < cur.hi or (p.lo == cur.hi and (cur.hi_closed or p.lo_closed))
            if touching:
                if p.hi > cur.hi:
                    hi, hi_closed = p.hi, p.hi_closed
                elif p.hi < cur.hi:
                    hi, hi_closed = cur.hi, cur.hi_closed
                else:
                    hi, hi_closed = cur.hi, cur.hi_closed or p.hi_closed
                lo_closed = cur.lo_closed or (p.lo == cur.lo and p.lo_closed)
                out[-1] = GenInterval(cur.lo, hi, lo_closed, hi_closed)
                continue
        out.append(p)
    return tuple(out)


def normalize(raw: Iterable[GenInterval]) -> RangeSet:
    return RangeSet(raw)


def member(M: RangeSet, x) -> bool:
    for p in M.parts:
        if x < p.lo:
            return False
        if x in p:
            return True
    return False


def complement(M: RangeSet) -> RangeSet:
    """[0, 1] minus ``M``."""
    out = []
    cur, cur_closed = ZERO, True
    for p in M.parts:
        out.append(interval(cur, p.lo, cur_closed, not p.lo_closed))
        cur, cur_closed = p.hi, not p.hi_closed
    out.append(interval(cur, ONE, cur_closed, True))
    return RangeSet(out)


def acc_set(M: RangeSet, side: str) -> RangeSet:
    """Accumulation points of ``M`` from the left, the right, or both sides."""
    if side == "left":
        return RangeSet(interval(p.lo, p.hi, False, True) for p in M.parts if not p.is_point)
    if side == "right":
        return RangeSet(interval(p.lo, p.hi, True, False) for p in M.parts if not p.is_point)
    if side == "both":
        return acc_set(M, "left") & acc_set(M, "right")
    raise ValueError(f"side must be left, right or both, not {side!r}")


def approach_sequence(M: RangeSet, x, side: str, n: int = 8) -> list:
    """Strictly monotone points of ``M`` converging to ``x`` (test helper).

    ``side="left"`` gives an increasing sequence, ``"right"`` a decreasing one.
    Raises ValueError when ``x`` is not an accumulation point from that side.
    """
    x = Fraction(x)
    if not member(acc_set(M, side), x):
        raise ValueError(f"{fmt(x)} is not in Acc_{side}")
    for p in M.parts:
        if p.is_point:
            continue
        if side == "left" and p.lo < x <= p.hi:
            width = x - p.lo
            return [x - width / 2 ** (k + 1) for k in range(n)]
        if side == "right" and p.lo <= x < p.hi:
            width = p.hi - x
            return [x + width / 2 ** (k + 1) for k in range(n)]
    raise AssertionError("unreachable")


def sup_below(M: RangeSet, x) -> Fraction:
    """sup([0, x] ∩ M), with sup of the empty set taken as 0."""
    cut = M & RangeSet([closed(0, x)])
    return cut.sup if cut else ZERO


def inf_above(M: RangeSet, x) -> Fraction:
    """inf([x, 1] ∩ M), with inf of the empty set taken as 1."""
    cut = M & RangeSet([closed(x, 1)])
    return cut.inf if cut else ONE


@dataclass(frozen=True)
class Gap:
    """One interval ``[b, d]`` of an associated pair with representative ``c``."""

    b: Fraction
    c: Fraction
    d: Fraction
    zero: bool = False

    @property
    def degenerate(self) -> bool:
        return self.b == self.d

    def __contains__(self, x) -> bool:
        return self.b <= x <= self.d


@dataclass(frozen=True)
class AssociatedPair:
    """Gap intervals ``[b_k, d_k]`` meeting the range in exactly ``{c_k}``.

    ``gaps`` is sorted by ``b``.  The entry flagged ``zero`` is the bottom gap
    ``[0, f(0+)]`` kept only when ``f(0+) > 0``.  For a full range ``[0, 1]``
    the pair is the single degenerate gap ``[1, 1]`` with ``c = 1``.
    """

    gaps: tuple = field(default_factory=tuple)

    @property
    def has_zero_gap(self) -> bool:
        return any(g.zero for g in self.gaps)

    @property
    def representatives(self) -> list:
        return [g.c for g in self.gaps]

    @property
    def nonzero_gaps(self) -> list:
        return [g for g in self.gaps if not g.zero]

    def find(self, x) -> Optional[Gap]:
        for g in self.gaps:
            if x in g:
                return g
        return None

    def check(self, M: RangeSet) -> None:
        """Raise :class:`StructureError` unless the pair is consistent with ``M``."""
        prev = None
        for g in self.gaps:
            if not (g.b <= g.c <= g.d):
                raise StructureError(f"gap [{fmt(g.b)},{fmt(g.d)}] does not contain c={fmt(g.c)}")
            if prev is not None and prev.d >= g.b:
                raise StructureError("gaps overlap")
            if M & RangeSet([closed(g.b, g.d)]) != RangeSet([point(g.c)]):
                raise StructureError(
                    f"gap [{fmt(g.b)},{fmt(g.d)}] meets the range outside {{{fmt(g.c)}}}"
                )
            prev = g
        covered = RangeSet(closed(g.b, g.d) for g in self.gaps)
        if complement(M) - covered:
            raise StructureError("complement of the range is not covered by the gaps")


def f_cap(M: RangeSet, pair: AssociatedPair, x) -> Fraction:
    """Range-collapse map: ``x`` on ``M``, the gap representative elsewhere."""
    if member(M, x):
        return Fraction(x)
    g = pair.find(x)
    if g is None:
        raise StructureError(f"{fmt(x)} lies neither in the range nor in any gap")
    return g.c


def f_cap_supinf(M: RangeSet, x) -> Fraction:
    """Range-collapse map computed from the sup/inf characterisation.

    Independent of the gap structure; used to cross-check :func:`f_cap`.
    """
    lo, hi = sup_below(M, x), inf_above(M, x)
    hit = M & RangeSet([closed(lo, hi)])
    if len(hit) != 1 or not hit.parts[0].is_point:
        raise StructureError(f"M ∩ [{fmt(lo)},{fmt(hi)}] is not a single point: {hit}")
    return hit.parts[0].lo
