from fractions import Fraction as Q

import pytest

from genconorm.conditions import Triple
from genconorm.conorm import S_L, OrdinalSumConorm, Summand
from genconorm.genop import (
    DomainError,
    generated_eval,
    joint_limit_T,
    m_ij,
    one_sided_limit_T,
    oplus,
    otimes,
    otimes_via_T,
)
from genconorm.rangeset import member

NO_TRIPLES = [Triple(0, Q(1, 10), Q(1, 5)), Triple(Q(3, 10), Q(7, 20), Q(7, 20))]
SL = OrdinalSumConorm([Summand(0, 1, S_L)])


def test_eval_examples(fixture_op):
    assert generated_eval(fixture_op("example_4_2_1"), Q(1, 2), Q(1, 2)) == Q(11, 12)
    assert generated_eval(fixture_op("example_4_2_2"), Q(3, 4), Q(1, 2)) == 1


def test_zero_is_neutral_when_f0plus_idempotent(fixture_op):
    for name in ("example_3_1", "example_4_2_1", "example_4_2_2", "no_instance"):
        G = fixture_op(name)
        for k in range(13):
            assert generated_eval(G, 0, Q(k, 12)) == Q(k, 12)


def test_otimes(fixture_op):
    assert otimes(fixture_op("example_4_2_1"), Q(1, 2), Q(1, 2)) == Q(1, 2)
    G = fixture_op("example_3_1")
    assert otimes(G, Q(2, 5), Q(2, 5)) == Q(2, 5)
    with pytest.raises(DomainError):
        otimes(G, Q(1, 2), Q(2, 5))


def test_otimes_matches_definition(fixture_op):
    for name in ("example_3_1", "example_4_2_1", "no_instance", "def_4_1_ex1"):
        G = fixture_op(name)
        pts = [Q(k, 24) for k in range(25) if member(G.M, Q(k, 24))] + G.C
        for x in pts:
            if G.f0 == G.f0plus:
                assert otimes(G, x, G.f0) == x
            for y in pts:
                assert otimes(G, x, y) == otimes_via_T(G, x, y)


def test_oplus_indices():
    assert oplus(NO_TRIPLES, SL, 1, 2).index == 2
    assert oplus(NO_TRIPLES, SL, 1, 1).index == 1
    assert m_ij(NO_TRIPLES, SL, 1, 1) == Q(1, 10)
    single = [Triple(Q(1, 2), Q(2, 3), 1)]
    S = OrdinalSumConorm([Summand(Q(1, 2), 1, S_L)])
    assert oplus(single, S, 1, 1).index == 1
    with pytest.raises(IndexError):
        oplus(single, S, 1, 2)


def test_axis_limits(fixture_op):
    G = fixture_op("example_4_2_1")
    assert one_sided_limit_T(G, 1, 0, "x-left") == 1 == generated_eval(G, 1, 0)
    H = fixture_op("non_idempotent")
    assert one_sided_limit_T(H, 0, 0, "x-right") == 1
    assert generated_eval(H, 0, 0) == 1
    with pytest.raises(DomainError):
        one_sided_limit_T(G, 0, Q(1, 2), "x-left")


def test_quadrant_limits_detect_interior_jump(fixture_op):
    G = fixture_op("example_3_1")
    # Both coordinates rising through 1/2 jump past the gap (2/5, 2/3).
    assert joint_limit_T(G, Q(1, 2), Q(1, 2), "right") != generated_eval(G, Q(1, 2), Q(1, 2))
    assert joint_limit_T(G, 0, 0, "right") == 0
