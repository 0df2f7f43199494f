from fractions import Fraction as Q

import pytest

from genconorm.conorm import (
    S_L,
    S_P,
    ConstructionError,
    OrdinalSumConorm,
    Summand,
    conorm_eval,
    conorm_power,
    idempotents,
    is_idempotent,
    is_nilpotent_element,
    nilpotency_index,
    section_image,
    set_image,
)
from genconorm.rangeset import RangeSet, closed, interval, open_, point

S31 = OrdinalSumConorm([Summand(0, Q(1, 2), S_P), Summand(Q(1, 2), 1, S_P)])
S421 = OrdinalSumConorm([Summand(Q(1, 2), 1, S_P)])
MAX = OrdinalSumConorm()
GRID = [Q(i, 12) for i in range(13)]


def test_overlapping_carriers_rejected():
    with pytest.raises(ConstructionError):
        OrdinalSumConorm([Summand(0, Q(2, 3), S_L), Summand(Q(1, 2), 1, S_P)])


def test_values():
    assert conorm_eval(S31, Q(2, 5), Q(2, 5)) == Q(12, 25)
    assert conorm_eval(S421, Q(1, 2), Q(2, 3)) == Q(2, 3)
    assert conorm_eval(S421, Q(1, 4), Q(1, 3)) == Q(1, 3)


@pytest.mark.parametrize("S", [S31, S421, MAX, OrdinalSumConorm([Summand(0, 1, S_L)])])
def test_conorm_laws_on_grid(S):
    for x in GRID:
        assert S(x, 0) == x
        for y in GRID:
            assert S(x, y) == S(y, x)
            for z in GRID[::3]:
                assert S(S(x, y), z) == S(x, S(y, z))


def test_idempotents():
    assert idempotents(S31) == RangeSet.points([0, Q(1, 2), 1])
    assert idempotents(S421) == RangeSet([closed(0, Q(1, 2)), point(1)])
    assert idempotents(MAX) == RangeSet.unit()
    assert is_idempotent(S421, Q(1, 2)) and not is_idempotent(S421, Q(3, 4))


def test_powers_and_nilpotency():
    SL = OrdinalSumConorm([Summand(0, 1, S_L)])
    SP = OrdinalSumConorm([Summand(0, 1, S_P)])
    assert conorm_power(SL, Q(1, 2), 2) == 1
    assert conorm_power(SP, Q(1, 2), 2) == Q(3, 4)
    assert conorm_power(SP, 0, 5) == 0
    assert nilpotency_index(SL, Q(1, 3)) == 3
    assert nilpotency_index(SP, Q(1, 2), limit=50) is None
    assert is_nilpotent_element(SL, Q(1, 3)) and not is_nilpotent_element(SP, Q(1, 3))


def test_section_images():
    assert section_image(S31, closed(0, Q(2, 5)), Q(2, 5)) == RangeSet([closed(Q(2, 5), Q(12, 25))])
    assert section_image(S31, open_(Q(2, 3), 1), Q(2, 5)) == RangeSet([open_(Q(2, 3), 1)])
    assert section_image(MAX, open_(0, Q(1, 10)), Q(1, 2)) == RangeSet([point(Q(1, 2))])


def test_set_image_example():
    M = RangeSet([closed(0, Q(2, 5)), interval(Q(2, 3), 1, False, True)])
    A = M - RangeSet([point(1)])
    expected = RangeSet([closed(Q(2, 5), Q(12, 25)), open_(Q(2, 3), 1)])
    assert set_image(S31, A, RangeSet.points([Q(2, 5)])) == expected
    assert not set_image(S31, RangeSet(), RangeSet.unit())


def test_set_image_lukasiewicz_cap():
    SL = OrdinalSumConorm([Summand(0, 1, S_L)])
    img = set_image(SL, RangeSet([open_(Q(1, 4), Q(3, 4))]), RangeSet([open_(Q(1, 4), Q(3, 4))]))
    assert img == RangeSet([interval(Q(1, 2), 1, False, True)])
    img = set_image(SL, RangeSet([open_(0, Q(1, 4))]), RangeSet([open_(0, Q(1, 4))]))
    assert img == RangeSet([open_(0, Q(1, 2))])


def test_json_round_trip():
    assert OrdinalSumConorm.from_json(S31.to_json()) == S31
