"""Exact analysis of t-conorms ``T(x,y) = f^(-1)(S(f(x), f(y)))``.

``f`` is a strictly increasing piecewise-affine map on [0, 1] and ``S`` an
ordinal sum of probabilistic-sum and Lukasiewicz summands.  All arithmetic
is done with :class:`fractions.Fraction`.
"""

from .conditions import (
    BORDER_CONTINUOUS,
    HYPOTHESES_NOT_MET,
    NOT_TCONORM,
    ConditionReport,
    TripleSequence,
    Verdict,
    check_D,
    check_D7,
    check_D8,
    check_hypotheses,
    corollary_check,
    decompose_triples,
    theorem_verdict,
)
from .conorm import S_L, S_P, OrdinalSumConorm, Summand, build_ordinal_sum, conorm_eval
from .generator import PiecewiseMonotone, affine, build_piecewise, gen_eval, pseudo_inverse
from .genop import GeneratedOp, generated_eval, otimes
from .instance import InstanceSpec, load_fixture, parse_spec, serialize
from .oracle import axiom_check, border_continuity_check, build_probes, verify, witness_search
from .rangeset import GenInterval, RangeSet

__all__ = [
    "BORDER_CONTINUOUS",
    "HYPOTHESES_NOT_MET",
    "NOT_TCONORM",
    "ConditionReport",
    "GenInterval",
    "GeneratedOp",
    "InstanceSpec",
    "OrdinalSumConorm",
    "PiecewiseMonotone",
    "RangeSet",
    "S_L",
    "S_P",
    "Summand",
    "TripleSequence",
    "Verdict",
    "affine",
    "axiom_check",
    "border_continuity_check",
    "build_ordinal_sum",
    "build_piecewise",
    "build_probes",
    "check_D",
    "check_D7",
    "check_D8",
    "check_hypotheses",
    "conorm_eval",
    "corollary_check",
    "decompose_triples",
    "gen_eval",
    "generated_eval",
    "load_fixture",
    "otimes",
    "parse_spec",
    "pseudo_inverse",
    "serialize",
    "theorem_verdict",
    "verify",
    "witness_search",
]
