"""Seeded random instances for property tests and consistency sweeps."""

from __future__ import annotations

import random
from fractions import Fraction

from .conditions import DecompositionError, Triple, TripleSequence
from .conorm import KINDS, OrdinalSumConorm, Summand
from .generator import PiecewiseMonotone, affine
from .genop import GeneratedOp

_KINDS = sorted(KINDS.values(), key=lambda k: k.name)


def _grid(rng: random.Random, den: int, k: int, lo=0, hi=None) -> list:
    """``k`` sorted distinct multiples of ``1/den`` in ``[lo, hi]``."""
    hi = den if hi is None else hi
    return [Fraction(v, den) for v in sorted(rng.sample(range(lo, hi + 1), k))]


def random_conorm(rng: random.Random, den: int = 12, max_summands: int = 3) -> OrdinalSumConorm:
    n = rng.randint(0, max_summands)
    ends = _grid(rng, den, 2 * n)
    summands = []
    for lo, hi in zip(ends[::2], ends[1::2]):
        summands.append(Summand(lo, hi, rng.choice(_KINDS)))
    return OrdinalSumConorm(summands)


def random_generator(rng: random.Random, den: int = 12, max_pieces: int = 3) -> PiecewiseMonotone:
    """A strictly increasing piecewise-affine map with random jumps and overrides."""
    k = rng.randint(1, max_pieces)
    cuts = [Fraction(0)] + _grid(rng, den, k - 1, 1, den - 1) + [Fraction(1)]
    vals = _grid(rng, 2 * den, 2 * k)
    # Closing some jumps makes f continuous there.
    for i in range(1, k):
        if rng.random() < 0.3:
            vals[2 * i] = vals[2 * i - 1]
    # At each cut: 0 = left piece owns it, 1 = right piece owns it, 2 = override.
    owner = [rng.choice((0, 1, 2)) for _ in range(k + 1)]
    owner[0] = rng.choice((1, 2)) if vals[0] > 0 else 1
    owner[k] = rng.choice((0, 2)) if vals[-1] < 1 else 0
    pieces, overrides = [], {}
    for i in range(k):
        lo, hi = cuts[i], cuts[i + 1]
        u, w = vals[2 * i], vals[2 * i + 1]
        slope = (w - u) / (hi - lo)
        pieces.append(affine(lo, hi, slope, u - slope * lo, owner[i] == 1, owner[i + 1] == 0))
    for i, x in enumerate(cuts):
        if owner[i] != 2:
            continue
        below = vals[2 * i - 1] if i > 0 else Fraction(0)
        above = vals[2 * i] if i < k else Fraction(1)
        if below == above and 0 < i < k:
            # A continuous joint cannot take an override; the right piece owns it.
            pieces[i] = affine(
                x, pieces[i].domain.hi, pieces[i].slope, pieces[i].intercept,
                True, pieces[i].domain.hi_closed,
            )
            continue
        overrides[x] = below + (above - below) * rng.choice((0, Fraction(1, 2), 1))
    return PiecewiseMonotone(pieces, overrides)


def random_instance(rng: random.Random, den: int = 12) -> GeneratedOp:
    return GeneratedOp(random_generator(rng, den), random_conorm(rng, den))


def random_triples(rng: random.Random, m: Fraction, top: Fraction, den: int, n: int) -> tuple:
    """A valid triple sequence with ``a_1 = m`` and ``b_n <= top``."""
    while True:
        vals = [m] + [Fraction(rng.randint(0, den), den) for _ in range(3 * n - 1)]
        vals = [m] + sorted(v for v in vals[1:])
        ts = tuple(Triple(*vals[3 * i : 3 * i + 3]) for i in range(n))
        if ts[-1].b > top:
            continue
        try:
            TripleSequence(ts, m, m).validate()
        except DecompositionError:
            continue
        return ts


def generator_for_triples(f0: Fraction, triples, rng: random.Random) -> PiecewiseMonotone:
    """A generator whose range is ``{f0} ∪ ⋃ ((a_i, b_i) ∪ {c_i})``.

    Segment ``i`` of the domain maps affinely onto ``(a_i, b_i)`` and its
    right end point takes the value ``c_i``.
    """
    n = len(triples)
    den = 4 * n
    inner = sorted(rng.sample(range(1, den), n - 1))
    qs = [Fraction(0)] + [Fraction(v, den) for v in inner] + [Fraction(1)]
    pieces, overrides = [], {}
    for i, t in enumerate(triples):
        lo, hi = qs[i], qs[i + 1]
        slope = (t.b - t.a) / (hi - lo)
        lo_closed = i == 0 and f0 == t.a
        hi_closed = t.c == t.b
        pieces.append(affine(lo, hi, slope, t.a - slope * lo, lo_closed, hi_closed))
        if not hi_closed:
            overrides[hi] = t.c
    if f0 != triples[0].a:
        overrides[Fraction(0)] = f0
    return PiecewiseMonotone(pieces, overrides)


def random_hypothesis_instance(rng: random.Random, den: int = 24) -> GeneratedOp:
    """An instance meeting every hypothesis of the classification theorem.

    One summand ``<m, n>`` holds ``f((0,1))`` and ``f(0+) = m``; other summands
    may sit outside ``[m, n]``.
    """
    while True:
        m, n = sorted(rng.sample(range(0, den + 1), 2))
        if n - m >= 3:
            break
    m, n = Fraction(m, den), Fraction(n, den)
    summands = [Summand(m, n, rng.choice(_KINDS))]
    if m >= Fraction(1, 4) and rng.random() < 0.5:
        summands.append(Summand(Fraction(0), m / 2, rng.choice(_KINDS)))
    if n <= Fraction(3, 4) and rng.random() < 0.5:
        summands.append(Summand((n + 1) / 2, Fraction(1), rng.choice(_KINDS)))
    count = rng.randint(1, 3)
    while (n - m) * den < 3 * count:
        count -= 1
    triples = random_triples(rng, m, n, den, max(count, 1))
    f0 = m if m == 0 or rng.random() < 0.5 else m * rng.choice((0, Fraction(1, 2)))
    return GeneratedOp(generator_for_triples(f0, triples, rng), OrdinalSumConorm(summands))
