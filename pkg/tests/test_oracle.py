from fractions import Fraction as Q

from genconorm.conditions import theorem_verdict
from genconorm.conorm import S_L, S_P, OrdinalSumConorm, Summand
from genconorm.genop import generated_eval, otimes
from genconorm.oracle import (
    CONSISTENT,
    ProbeSet,
    axiom_check,
    border_continuity_check,
    build_probes,
    cancellation_check,
    boundary_predicates,
    to_T_space,
    verify,
    witness_search,
)


def test_probe_sets(fixture_op):
    p = build_probes(fixture_op("example_4_2_2"), 10)
    assert {Q(k, 10) for k in range(11)} | {Q(1, 2)} <= set(p.points)
    p = build_probes(fixture_op("example_3_1"), 20)
    assert {Q(2, 5), Q(2, 3), Q(1, 2)} <= set(p.critical)
    p = build_probes(fixture_op("no_instance"), 2)
    assert {0, Q(1, 2), 1} <= set(p.points)
    assert list(p.points) == sorted(p.points)
    assert p.meta()["size"] == len(p)


def test_axioms_pass_for_tconorm(fixture_op):
    rep = axiom_check(fixture_op("example_4_2_1"), build_probes(fixture_op("example_4_2_1"), 12))
    assert rep.axioms_passed
    assert rep.counterexample is None
    assert "not falsified" in rep.axioms["T2"].notes


def test_no_instance_chain_values(fixture_op):
    G = fixture_op("no_instance")
    T = lambda x, y: generated_eval(G, x, y)  # noqa: E731
    x, y, z = Q(1, 2), Q(9, 20), Q(1, 10)
    assert T(T(x, y), z) == Q(1, 2)
    assert T(x, T(y, z)) == 1


def test_no_instance_T2_fails_on_probes(fixture_op):
    G = fixture_op("no_instance")
    probes = ProbeSet((Q(1, 10), Q(9, 20), Q(1, 2)), 0, ())
    rep = axiom_check(G, probes)
    assert not rep.axioms["T2"].passed
    c = rep.counterexample
    T = lambda a, b: generated_eval(G, a, b)  # noqa: E731
    assert T(T(c.x, c.y), c.z) == c.lhs != c.rhs == T(c.x, T(c.y, c.z))


def test_S4_failure(fixture_op):
    G = fixture_op("non_idempotent")
    rep = axiom_check(G, build_probes(G, 4))
    assert not rep.axioms["S4"].passed
    assert rep.axioms["S4"].witness == {"x": 0, "T(x,0)": 1}


def test_border_continuity(fixture_op):
    for name in ("example_4_2_1", "example_3_1"):
        G = fixture_op(name)
        assert border_continuity_check(G, build_probes(G, 12)).passed
    G = fixture_op("non_idempotent")
    chk = border_continuity_check(G, build_probes(G, 12))
    assert not chk.passed
    assert (chk.witness["x"], chk.witness["y"], chk.witness["value"], chk.witness["required"]) == (0, 0, 1, 0)
    assert "DISAGREES" not in chk.notes


def test_boundary_predicates(fixture_op):
    for name, expected in (("example_3_1", True), ("non_idempotent", False)):
        G = fixture_op(name)
        assert set(boundary_predicates(G, build_probes(G, 6)).values()) == {expected}


def test_cancellation():
    grid = [Q(k, 12) for k in range(13)]
    SP = OrdinalSumConorm([Summand(0, 1, S_P)])
    assert cancellation_check(SP, grid).passed
    chk = cancellation_check(OrdinalSumConorm(), [Q(1, 4), Q(1, 2)])
    assert not chk.passed
    assert chk.witness == {"x": Q(1, 2), "y": Q(1, 4), "z": Q(1, 2), "value": Q(1, 2)}
    SL = OrdinalSumConorm([Summand(0, 1, S_L)])
    assert cancellation_check(SL, grid).passed
    mixed = OrdinalSumConorm([Summand(Q(1, 4), Q(3, 4), S_P)])
    assert cancellation_check(mixed, grid, summand=mixed.summands[0]).passed
    assert not cancellation_check(mixed, grid).passed


def test_witness_search_no_instance(fixture_op):
    G = fixture_op("no_instance")
    v = theorem_verdict(G)
    c = witness_search(G, v.report("D7"), 20_000, v.triples)
    assert c is not None and c.space == "otimes"
    o = lambda a, b: otimes(G, a, b)  # noqa: E731
    assert o(o(c.x, c.y), c.z) == c.lhs != c.rhs == o(c.x, o(c.y, c.z))
    t = to_T_space(G, c)
    assert t.lhs != t.rhs
    x, y, z = Q(1, 5), Q(9, 100), Q(1, 50)
    assert o(o(x, y), z) == Q(1, 5)
    assert o(x, o(y, z)) == Q(7, 20)


def test_witness_search_is_deterministic(fixture_op):
    G = fixture_op("no_instance")
    v = theorem_verdict(G)
    assert witness_search(G, v.report("D7"), 5000, v.triples) == witness_search(
        G, v.report("D7"), 5000, v.triples
    )


def test_witness_search_respects_budget(fixture_op):
    G = fixture_op("example_3_1")
    assert witness_search(G, theorem_verdict(G).report("D1"), 3000) is None
    assert witness_search(fixture_op("no_instance"), None, 0) is None


def test_verify_statuses(fixture_op):
    for name in ("example_3_1", "example_4_2_1", "no_instance", "non_idempotent"):
        res = verify(fixture_op(name), 12, 2000)
        assert res.status == CONSISTENT, (name, res.problems)


def test_random_hypothesis_instances_meet_hypotheses():
    import random

    from genconorm.conditions import check_hypotheses, decompose_triples
    from genconorm.randomgen import random_hypothesis_instance

    rng = random.Random(3)
    for _ in range(40):
        G = random_hypothesis_instance(rng)
        assert all(r.holds for r in check_hypotheses(G))
        decompose_triples(G)
