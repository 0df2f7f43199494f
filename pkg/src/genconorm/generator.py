"""Strictly increasing piecewise-affine generators on [0, 1]."""

from __future__ import annotations

import bisect
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, NamedTuple, Optional

from .numeric import ONE, ZERO, fmt, parse_fraction, parse_rational, q01
from .rangeset import AssociatedPair, Gap, GenInterval, RangeSet, interval, point


class GeneratorError(ValueError):
    pass


@dataclass(frozen=True)
class AffinePiece:
    domain: GenInterval
    slope: Fraction
    intercept: Fraction

    def __post_init__(self):
        if self.slope <= 0:
            raise GeneratorError(f"slope {fmt(self.slope)} on {self.domain} is not positive")
        if self.domain.is_point:
            raise GeneratorError("pieces need a domain of positive length; use an override")
        lo_val, hi_val = self.at(self.domain.lo), self.at(self.domain.hi)
        if lo_val < 0 or hi_val > 1:
            raise GeneratorError(
                f"piece on {self.domain} maps outside [0,1] ({fmt(lo_val)}..{fmt(hi_val)})"
            )

    def at(self, x) -> Fraction:
        return self.slope * x + self.intercept

    def image(self) -> GenInterval:
        d = self.domain
        return GenInterval(self.at(d.lo), self.at(d.hi), d.lo_closed, d.hi_closed)


class Jump(NamedTuple):
    x: Fraction
    left: Fraction
    value: Fraction
    right: Fraction


class _Cell(NamedTuple):
    """One element of the domain partition: a piece or an override point."""

    domain: GenInterval
    piece: Optional[AffinePiece]
    value: Optional[Fraction]

    def at(self, x) -> Fraction:
        return self.piece.at(x) if self.piece is not None else self.value

    @property
    def lo_value(self) -> Fraction:
        return self.at(self.domain.lo)

    @property
    def hi_value(self) -> Fraction:
        return self.at(self.domain.hi)


class PiecewiseMonotone:
    """Strictly increasing ``f: [0,1] -> [0,1]`` made of affine pieces and point overrides.

    The pieces' domains together with the override points partition [0, 1].
    Instances are callable: ``f(x)``.
    """

    def __init__(self, pieces: Iterable[AffinePiece], overrides: Optional[Mapping] = None):
        self.pieces = tuple(sorted(pieces, key=lambda p: (p.domain.lo, not p.domain.lo_closed)))
        self.overrides = {
            q01(Fraction(k)): q01(Fraction(v)) for k, v in (overrides or {}).items()
        }
        cells = [_Cell(p.domain, p, None) for p in self.pieces]
        cells += [_Cell(point(x), None, v) for x, v in self.overrides.items()]
        cells.sort(key=lambda c: (c.domain.lo, not c.domain.lo_closed))
        self._cells = tuple(cells)
        self._validate()
        self._los = [c.domain.lo for c in self._cells]

    def _validate(self) -> None:
        cur, need_closed = ZERO, True
        prev = None
        for c in self._cells:
            d = c.domain
            if d.lo != cur or d.lo_closed != need_closed:
                if d.lo < cur or (d.lo == cur and d.lo_closed and not need_closed):
                    raise GeneratorError(f"overlapping domains at {fmt(d.lo)}")
                raise GeneratorError(f"domains leave a gap at {fmt(cur)}")
            if prev is not None:
                both = prev.domain.hi_closed and d.lo_closed
                left, right = prev.hi_value, c.lo_value
                if left > right or (both and left == right):
                    raise GeneratorError(
                        f"not strictly increasing at {fmt(d.lo)}: {fmt(left)} then {fmt(right)}"
                    )
            cur, need_closed = d.hi, not d.hi_closed
            prev = c
        if cur != ONE or need_closed:
            raise GeneratorError(f"domains do not reach 1 (stop at {fmt(cur)})")

    def __call__(self, x) -> Fraction:
        return gen_eval(self, x)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, PiecewiseMonotone)
            and self.pieces == other.pieces
            and self.overrides == other.overrides
        )

    def __repr__(self) -> str:
        return f"PiecewiseMonotone({len(self.pieces)} pieces, overrides={self.overrides})"

    def cell_at(self, x) -> _Cell:
        i = bisect.bisect_right(self._los, x) - 1
        while i >= 0:
            c = self._cells[i]
            if x in c.domain:
                return c
            i -= 1
        raise GeneratorError(f"{fmt(x)} outside the domain")

    @property
    def cells(self) -> tuple:
        return self._cells

    def boundaries(self) -> list:
        pts = set()
        for c in self._cells:
            pts.update((c.domain.lo, c.domain.hi))
        return sorted(pts)

    def to_json(self) -> dict:
        return {
            "pieces": [
                {
                    "lo": fmt(p.domain.lo),
                    "hi": fmt(p.domain.hi),
                    "lo_closed": p.domain.lo_closed,
                    "hi_closed": p.domain.hi_closed,
                    "slope": fmt(p.slope),
                    "intercept": fmt(p.intercept),
                }
                for p in self.pieces
            ],
            "overrides": {fmt(k): fmt(v) for k, v in sorted(self.overrides.items())},
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "PiecewiseMonotone":
        pieces = []
        for raw in data.get("pieces", []):
            dom = interval(
                parse_rational(raw["lo"]),
                parse_rational(raw["hi"]),
                bool(raw.get("lo_closed", True)),
                bool(raw.get("hi_closed", True)),
            )
            if dom is None:
                raise GeneratorError(f"empty piece domain {raw['lo']}..{raw['hi']}")
            pieces.append(
                AffinePiece(
                    dom,
                    parse_fraction(raw["slope"], signed=True),
                    parse_fraction(raw["intercept"], signed=True),
                )
            )
        overrides = {
            parse_rational(k): parse_rational(v) for k, v in data.get("overrides", {}).items()
        }
        return cls(pieces, overrides)


def build_piecewise(pieces, overrides=None) -> PiecewiseMonotone:
    return PiecewiseMonotone(pieces, overrides)


def affine(lo, hi, slope, intercept, lo_closed=True, hi_closed=True) -> AffinePiece:
    """Shorthand for an affine piece on ``lo..hi``."""
    return AffinePiece(
        GenInterval(Fraction(lo), Fraction(hi), lo_closed, hi_closed),
        Fraction(slope),
        Fraction(intercept),
    )


def gen_eval(f: PiecewiseMonotone, x) -> Fraction:
    return f.cell_at(x).at(x)


def one_sided_limit(f: PiecewiseMonotone, x, side: str) -> Fraction:
    """``f(x-)`` or ``f(x+)``, with ``f(0-) = 0`` and ``f(1+) = 1``."""
    if side == "left":
        if x == 0:
            return ZERO
        for c in f.cells:
            if c.domain.lo < x <= c.domain.hi:
                return c.at(x)
    elif side == "right":
        if x == 1:
            return ONE
        for c in f.cells:
            if c.domain.lo <= x < c.domain.hi:
                return c.at(x)
    else:
        raise ValueError(f"side must be left or right, not {side!r}")
    raise GeneratorError(f"no piece reaches {fmt(x)} from the {side}")


def range_of(f: PiecewiseMonotone) -> RangeSet:
    return RangeSet(
        [p.image() for p in f.pieces] + [point(v) for v in f.overrides.values()]
    )


def pseudo_inverse(f: PiecewiseMonotone, y) -> Fraction:
    """``sup{x : f(x) < y}`` with ``sup {} = 0``."""
    best = ZERO
    for c in f.cells:
        if c.lo_value >= y:
            break
        if c.piece is None:
            best = c.domain.lo
        else:
            best = min(c.domain.hi, (y - c.piece.intercept) / c.piece.slope)
    return best


def jumps(f: PiecewiseMonotone) -> list:
    """Points ``x`` in (0, 1] with ``f(x-) < f(x+)``."""
    out = []
    for x in f.boundaries():
        if x == 0:
            continue
        left, right = one_sided_limit(f, x, "left"), one_sided_limit(f, x, "right")
        if left < right:
            out.append(Jump(x, left, gen_eval(f, x), right))
    return out


def associated_pair(f: PiecewiseMonotone) -> AssociatedPair:
    gaps = []
    f0plus = one_sided_limit(f, ZERO, "right")
    if f0plus > 0:
        gaps.append(Gap(ZERO, gen_eval(f, ZERO), f0plus, zero=True))
    gaps += [Gap(j.left, j.value, j.right) for j in jumps(f)]
    if not gaps:
        gaps = [Gap(ONE, ONE, ONE)]
    return AssociatedPair(tuple(gaps))
