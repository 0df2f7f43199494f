from fractions import Fraction as Q

import pytest

from genconorm.conditions import (
    BORDER_CONTINUOUS,
    HYPOTHESES_NOT_MET,
    NOT_TCONORM,
    ConditionReport,
    DecompositionError,
    Triple,
    TripleSequence,
    check_D,
    check_D7,
    check_D8,
    check_hypotheses,
    corollary_check,
    decompose_triples,
    theorem_verdict,
)
from genconorm.conorm import OrdinalSumConorm, S_L, S_P, Summand
from genconorm.generator import PiecewiseMonotone, affine
from genconorm.genop import GeneratedOp
from genconorm.rangeset import RangeSet, open_

GAP = RangeSet([open_(Q(2, 3), 1)])


def _hyps(G):
    return {r.condition: r.holds for r in check_hypotheses(G)}


def test_hypotheses(fixture_op):
    assert _hyps(fixture_op("example_3_1")) == {"HYP_IDEMPOTENT": True, "HYP_SUMMAND": False, "HYP_A0": True}
    assert all(_hyps(fixture_op("example_4_2_1")).values())
    assert not _hyps(fixture_op("non_idempotent"))["HYP_IDEMPOTENT"]


@pytest.mark.parametrize("name", ["D1", "D2", "D5"])
def test_example_3_1_failures_have_exact_witness(fixture_op, name):
    r = check_D(fixture_op("example_3_1"), name)
    assert not r.holds
    assert r.witness == GAP


@pytest.mark.parametrize("name", ["D0", "D1", "D2", "D3", "D4", "D5"])
def test_lukasiewicz_example_meets_all_range_conditions(fixture_op, name):
    assert check_D(fixture_op("example_4_2_2"), name).holds


def test_decompositions(fixture_op):
    assert list(decompose_triples(fixture_op("def_4_1_ex1"))) == [
        Triple(Q(1, 4), Q(1, 2), Q(1, 2)),
        Triple(Q(2, 3), Q(5, 6), Q(5, 6)),
        Triple(Q(7, 8), Q(8, 9), Q(8, 9)),
    ]
    assert list(decompose_triples(fixture_op("example_4_2_1"))) == [Triple(Q(1, 2), Q(2, 3), 1)]
    assert list(decompose_triples(fixture_op("example_4_2_2"))) == [Triple(0, Q(1, 2), Q(1, 2))]


def test_decomposition_failure_names_constraint(fixture_op):
    with pytest.raises(DecompositionError) as err:
        decompose_triples(fixture_op("def_4_1_ex3"))
    assert err.value.reason == "b_n_not_below_1"
    assert "b_n<1 violated at n=2" in str(err.value)


def test_decomposition_with_isolated_f0():
    f = PiecewiseMonotone([affine(0, 1, Q(3, 4), Q(1, 4), lo_closed=False)], {0: 0})
    G = GeneratedOp(f, OrdinalSumConorm([Summand(Q(1, 4), 1, S_P)]))
    seq = decompose_triples(G)
    assert list(seq) == [Triple(Q(1, 4), 1, 1)]
    assert seq.reconstruct() == G.M


def test_permuted_triples_fail_validation():
    good = (Triple(0, Q(1, 10), Q(1, 5)), Triple(Q(3, 10), Q(7, 20), Q(7, 20)))
    TripleSequence(good, 0, 0).validate()
    with pytest.raises(DecompositionError):
        TripleSequence(good[::-1], 0, 0).validate()


def test_D7_examples(fixture_op):
    G = fixture_op("example_4_2_1")
    assert check_D7(decompose_triples(G), G.S).holds
    no = TripleSequence((Triple(0, Q(1, 10), Q(1, 5)), Triple(Q(3, 10), Q(7, 20), Q(7, 20))), 0, 0)
    SL = OrdinalSumConorm([Summand(0, 1, S_L)])
    for mode in ("disjunction", "eq45_46"):
        r = check_D7(no, SL, mode)
        assert not r.holds
    assert check_D7(no, SL).witness == {"i": 1, "j": 1, "k": 2}
    single = TripleSequence((Triple(0, Q(1, 2), Q(1, 2)),), 0, 0)
    assert check_D7(single, OrdinalSumConorm([Summand(0, Q(1, 2), S_L)])).holds


def test_D8_variants(fixture_op):
    G = fixture_op("example_4_2_1")
    assert check_D8(G, decompose_triples(G), include_c0=True).holds
    G = fixture_op("example_4_2_2")
    assert check_D8(G, decompose_triples(G), include_c0=False).holds
    G = fixture_op("no_instance")
    r = check_D8(G, decompose_triples(G), include_c0=False)
    assert r.condition == "D8PRIME" and r.holds


def test_corollary(fixture_op):
    G = fixture_op("example_4_2_1")
    assert all(r.holds for r in corollary_check(G, decompose_triples(G)))
    G = fixture_op("no_instance")
    i, ii, iii = corollary_check(G, decompose_triples(G))
    assert not i.holds and ii.holds and iii.holds
    assert i.witness == RangeSet([open_(Q(3, 10), Q(7, 20))])


def test_corollary_with_pure_max():
    f = PiecewiseMonotone([affine(0, 1, Q(1, 2), Q(1, 4))])
    G = GeneratedOp(f, OrdinalSumConorm())
    assert all(r.holds for r in corollary_check(G, decompose_triples(G)))


@pytest.mark.parametrize(
    "name,conclusion",
    [
        ("example_3_1", HYPOTHESES_NOT_MET),
        ("example_4_2_1", BORDER_CONTINUOUS),
        ("example_4_2_2", BORDER_CONTINUOUS),
        ("no_instance", NOT_TCONORM),
        ("non_idempotent", HYPOTHESES_NOT_MET),
    ],
)
def test_verdicts(fixture_op, name, conclusion):
    assert theorem_verdict(fixture_op(name)).conclusion == conclusion


def test_no_instance_reports_D7_witness(fixture_op):
    v = theorem_verdict(fixture_op("no_instance"))
    assert v.report("D7").witness == {"i": 1, "j": 1, "k": 2}


def test_failed_report_requires_witness():
    with pytest.raises(ValueError):
        ConditionReport("D1", False)


def test_range_conditions_run_without_hypotheses():
    f = PiecewiseMonotone([affine(0, 1, 1, 0)])
    G = GeneratedOp(f, OrdinalSumConorm([Summand(0, 1, S_P)]))
    v = theorem_verdict(G)
    assert v.conclusion == BORDER_CONTINUOUS
    assert [r.condition for r in v.conditions][:6] == ["D0", "D1", "D2", "D3", "D4", "D5"]
