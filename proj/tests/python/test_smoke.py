import pytest

import tsplit


def test_build_and_degrees():
    t2 = tsplit.build_T(2)
    assert t2.n == 9
    assert tsplit.is_tournament(t2)
    assert all(t2.out_degree(v) == 4 for v in range(9))
    assert t2.has_arc(0, 1) == tsplit.trit_arc(0, 1, 2)

    d2 = tsplit.build_D(2)
    assert d2.n == 8
    assert tsplit.min_out_degree(d2) == 3
    assert tsplit.min_out_degree(t2, [0, 1, 2]) == 1


def test_text_round_trip():
    t1 = tsplit.build_T(1)
    assert t1.to_text() == "3\n010\n001\n100\n"
    assert tsplit.Digraph.from_text(t1.to_text()) == t1
    with pytest.raises(tsplit.ParseError):
        tsplit.Digraph.from_text("2\n01\n01\n")


def test_level_params_and_gap():
    p = tsplit.level_params(3)
    assert (p["n"], p["s"], p["bound"]) == (13, 12, 5)
    rows = tsplit.gap_table(3)
    assert [r["gap"] for r in rows] == [(0, 1), (1, 2), (1, 1)]


def test_certificate():
    cert = tsplit.certify_bound(2, [0, 1, 2])
    assert cert["kind"] == "EmptyPart"
    assert cert["claimed_bound"] == 1
    assert cert["replays"]
    assert cert["text"].startswith("EmptyPart k=2")
    holds, direct, via_parts = tsplit.min_identity_check(2, [0, 3, 6])
    assert holds and direct == via_parts
    with pytest.raises(tsplit.PreconditionError):
        tsplit.certify_bound(2, [0, 1, 2, 3, 4])
    with pytest.raises(tsplit.DomainError):
        tsplit.certify_bound(2, [9])


def test_search():
    t2 = tsplit.build_T(2)
    e = tsplit.enumerate_max(t2, 4, 4)
    b = tsplit.branch_bound_max(t2, 4, threads=2)
    assert e["best_value"] == b["best_value"] == 1
    assert e["best_set"] == b["best_set"] == [0, 1, 2, 6]

    r = tsplit.verify_theorem2(2)
    assert r["passed"] is True
    assert r["best_set"] == [0, 1, 2]

    assert tsplit.verify_theorem2(4)["passed"] is None
    with pytest.raises(tsplit.BudgetExceeded):
        tsplit.enumerate_max(t2, 0, 4, budget=10)


def test_split():
    d2 = tsplit.build_D(2)
    half, one, two = tsplit.random_balanced_split(d2, 1)
    assert len(half) == 4
    assert max(one, two) <= 1
    s = tsplit.split_experiment(d2, 50, 7)
    assert len(s["trials"]) == 50
    assert s["max_of_max"] <= 1
    assert tsplit.split_experiment(d2, 50, 7, threads=3) == s
