"""The generated operation ``T(x, y) = f^(-1)(S(f(x), f(y)))`` and its range-level form."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple

from .conorm import OrdinalSumConorm, conorm_eval
from .generator import (
    PiecewiseMonotone,
    associated_pair,
    gen_eval,
    one_sided_limit,
    pseudo_inverse,
    range_of,
)
from .numeric import ONE, ZERO, fmt
from .rangeset import AssociatedPair, RangeSet, f_cap, member


class DomainError(ValueError):
    pass


@dataclass(frozen=True)
class GeneratedOp:
    f: PiecewiseMonotone
    S: OrdinalSumConorm
    M: RangeSet = field(init=False, repr=False, compare=False)
    pair: AssociatedPair = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "M", range_of(self.f))
        object.__setattr__(self, "pair", associated_pair(self.f))

    def __call__(self, x, y) -> Fraction:
        return generated_eval(self, x, y)

    @property
    def f0(self) -> Fraction:
        return gen_eval(self.f, ZERO)

    @property
    def f0plus(self) -> Fraction:
        return one_sided_limit(self.f, ZERO, "right")

    @property
    def f1minus(self) -> Fraction:
        return one_sided_limit(self.f, ONE, "left")

    @property
    def C(self) -> list:
        """Gap representatives, sorted."""
        return sorted(set(self.pair.representatives))

    def collapse(self, x) -> Fraction:
        return f_cap(self.M, self.pair, x)


def generated_eval(G: GeneratedOp, x, y) -> Fraction:
    return pseudo_inverse(G.f, conorm_eval(G.S, gen_eval(G.f, x), gen_eval(G.f, y)))


def otimes(G: GeneratedOp, x, y) -> Fraction:
    """``x ⊗ y = F_M(S(x, y))`` for ``x, y`` in the range of ``f``."""
    for v in (x, y):
        if not member(G.M, v):
            raise DomainError(f"{fmt(v)} is not in the range {G.M}")
    return G.collapse(conorm_eval(G.S, x, y))


def otimes_via_T(G: GeneratedOp, x, y) -> Fraction:
    """``f(T(f^-1(x), f^-1(y)))``; the definition route, kept as a cross-check."""
    for v in (x, y):
        if not member(G.M, v):
            raise DomainError(f"{fmt(v)} is not in the range {G.M}")
    xi, yi = pseudo_inverse(G.f, x), pseudo_inverse(G.f, y)
    return gen_eval(G.f, generated_eval(G, xi, yi))


class OplusResult(NamedTuple):
    index: int
    m: Fraction


def m_ij(triples, S: OrdinalSumConorm, i: int, j: int) -> Fraction:
    """``min{S(a_i, b_j), S(a_j, b_i)}`` with 1-based indices."""
    ti, tj = triples[i - 1], triples[j - 1]
    return min(conorm_eval(S, ti.a, tj.b), conorm_eval(S, tj.a, ti.b))


def oplus(triples, S: OrdinalSumConorm, i: int, j: int) -> OplusResult:
    """``i ⊕ j = max{k : a_k <= S(a_i, a_j)}`` over 1-based triple indices."""
    n = len(triples)
    if not (1 <= i <= n and 1 <= j <= n):
        raise IndexError(f"indices ({i},{j}) outside 1..{n}")
    t = conorm_eval(S, triples[i - 1].a, triples[j - 1].a)
    ks = [k for k in range(1, n + 1) if triples[k - 1].a <= t]
    if not ks:
        raise DomainError(f"no a_k below {fmt(t)}")
    return OplusResult(max(ks), m_ij(triples, S, i, j))


_DIRECTIONS = {
    "x-left": (0, "left"),
    "x-right": (0, "right"),
    "y-left": (1, "left"),
    "y-right": (1, "right"),
}


def one_sided_limit_T(G: GeneratedOp, x, y, direction: str) -> Fraction:
    """Limit of ``T`` as one coordinate approaches its value from one side.

    Relies on continuity of the conorm and of the pseudo-inverse, so only the
    generator's one-sided limit enters.
    """
    try:
        axis, side = _DIRECTIONS[direction]
    except KeyError:
        raise ValueError(f"unknown direction {direction!r}") from None
    moving = x if axis == 0 else y
    if (side == "left" and moving == 0) or (side == "right" and moving == 1):
        raise DomainError(f"cannot approach {fmt(moving)} from the {side} inside [0,1]")
    fx = one_sided_limit(G.f, x, side) if axis == 0 else gen_eval(G.f, x)
    fy = one_sided_limit(G.f, y, side) if axis == 1 else gen_eval(G.f, y)
    return pseudo_inverse(G.f, conorm_eval(G.S, fx, fy))


def _inner(G: GeneratedOp, x, side: str) -> Fraction:
    """f approached from inside [0,1]: the one-sided limit, or f itself at the edge."""
    if (side == "left" and x == 0) or (side == "right" and x == 1):
        return gen_eval(G.f, x)
    return one_sided_limit(G.f, x, side)


def joint_limit_T(G: GeneratedOp, x, y, side: str) -> Fraction:
    """Limit of ``T`` from the lower-left (``side="left"``) or upper-right quadrant.

    ``T`` is non-decreasing in both arguments, so it is continuous at ``(x, y)``
    exactly when both quadrant limits equal ``T(x, y)``.
    """
    fx, fy = _inner(G, x, side), _inner(G, y, side)
    return pseudo_inverse(G.f, conorm_eval(G.S, fx, fy))
