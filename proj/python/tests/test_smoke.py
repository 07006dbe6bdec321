import pytest

import tsl

SIERPINSKI = {"n": 2, "opens": [[], [1], [0, 1]], "meet": [[0, 0], [0, 1]]}


def test_closure_modes_on_w3():
    w3 = tsl.FiniteSpace(3, [[], [0], [2], [0, 2], [0, 1, 2]])
    assert tsl.closure(w3, [0]) == [0, 1]
    assert tsl.closure(w3, [0], "theta") == [0, 1]
    assert tsl.closure(w3, [0], "bigtheta") == [0, 1, 2]
    assert tsl.closure(w3, [0, 1], "theta") == [0, 1, 2]
    assert tsl.interior(w3, [0, 1]) == [0]


def test_invalid_topology_is_rejected():
    with pytest.raises(ValueError):
        tsl.FiniteSpace(2, [[], [1]])


def test_enumeration_counts():
    assert [len(tsl.enumerate_topologies(n)) for n in (1, 2, 3)] == [1, 4, 29]
    assert [tsl.count_topologies_by_families(n) for n in (1, 2, 3)] == [1, 4, 29]
    assert [len(tsl.enumerate_meet_tables(n)) for n in (1, 2, 3)] == [1, 2, 9]


def test_finite_models_are_complete():
    for model in tsl.enumerate_models(2):
        for mode in ("plain", "delta", "theta", "bigtheta"):
            assert tsl.is_complete(model, mode)


def test_sierpinski_semitopological_but_not_updown_closed():
    assert tsl.is_semitopological(SIERPINSKI)
    assert not tsl.is_updown_closed(SIERPINSKI)
    assert tsl.find_witness("semitop_not_updown_closed", 2)["counterexample"] == SIERPINSKI


def test_eval_op():
    assert tsl.eval_op(SIERPINSKI, "theta-closure", set="0") == [0, 1]
    assert tsl.eval_op(SIERPINSKI, "closure", set="") == []
    assert tsl.eval_op(SIERPINSKI, "is-complete", mode="plain") is True
    with pytest.raises(ValueError):
        tsl.eval_op(SIERPINSKI, "bogus")


def test_claim_suite_reports():
    reports = tsl.run_claim_suite("operators", 3)
    assert reports
    assert all(r["status"] == "pass" and r["checked_count"] > 0 for r in reports)
    assert set(reports[0]) == {"claim", "anchor", "universe", "status", "counterexample", "checked_count"}


def test_ledgers():
    assert all(e["status"] == "pass" for e in tsl.run_ledger(71))
    statuses = {e["claim"]: e["status"] for e in tsl.run_ledger(72)}
    assert "indeterminate" not in statuses.values()
    assert statuses["basic_nbhd_is_regular_open a=1/3 eps=1/6"] == "fail"
