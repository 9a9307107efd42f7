import json
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from mirror_quadric.cohomology import SchubertClass
from mirror_quadric.dmodule import (
    _class,
    NoSolution,
    all_classes,
    b_side_report,
    chart_independence,
    chart_W_matches_lusztig,
    dmodule_report_json,
    even_chart,
    express_W_in_chart,
    odd_chart,
    odd_intertwiner_check,
    odd_intertwiner_report,
    printed_chart_W,
    printed_coefficients,
    relation_target,
    solve_vector_field_coefficients,
    solved_b_side,
    target_is_homogeneous,
    verify_b_side_identity,
)
from mirror_quadric.exact import LaurentPolynomial as LP, RationalFunction as RF, rf_equal

V = lambda n: RF(LP.var(n))
q = V("q")


def test_chart_variables():
    assert even_chart(4, "C1").variables == ["p1", "p2", "delta1", "p3", "p3'", "delta0"]
    assert set(even_chart(4, "C2").variables) == {"p5", "p4", "delta1", "p3", "p3'", "delta0"}
    with pytest.raises(ValueError):
        even_chart(4, "C3")


@pytest.mark.parametrize("m", [3, 4, 5])
@pytest.mark.parametrize("name", ["C1", "C2"])
def test_chart_rewrites_equal_lusztig_w(m, name):
    assert chart_W_matches_lusztig(even_chart(m, name))


@pytest.mark.parametrize("m", [4, 5, 6])
@pytest.mark.parametrize("name", ["C1", "C2"])
def test_displayed_chart_expansions(m, name):
    assert rf_equal(express_W_in_chart(m, name), printed_chart_W(m, name))


def test_displayed_expansions_need_m4():
    with pytest.raises(ValueError):
        printed_chart_W(3, "C1")


@pytest.mark.parametrize("m", [3, 4, 5])
def test_printed_identities(m):
    failing = [w for w in all_classes(m) if not verify_b_side_identity(m, w)]
    assert failing == [m - 1, "mid"]


@pytest.mark.parametrize("m", [3, 4, 5])
@pytest.mark.parametrize("which", ["m-1", "mid"])
def test_sign_corrected_c2_identities(m, which):
    w = m - 1 if which == "m-1" else "mid"
    flipped = {k: -v for k, v in printed_coefficients(m, w).items()}
    assert b_side_report(m, w, flipped).status
    assert solved_b_side(m, w) == flipped


def test_last_relation_is_trivial():
    for m in (3, 4, 5):
        assert printed_coefficients(m, 2 * m - 2) == {}
        assert verify_b_side_identity(m, 2 * m - 2)


@pytest.mark.parametrize("m", [3, 4, 5])
def test_solver_recovers_printed_sets(m):
    for w in all_classes(m):
        co = solved_b_side(m, w)
        assert all(v.denominator == 1 and -2 <= v <= 2 for v in co.values())
        if w not in (m - 1, "mid"):
            assert co == printed_coefficients(m, w)


def test_solver_examples_m4():
    ch = even_chart(4, "C1")
    target = ch.W.diff("q") * q * V("p1") - V("p2")
    co = solve_vector_field_coefficients(ch, "p1", target)
    assert co == printed_coefficients(4, 1)
    assert set(co.values()) <= {Fraction(-1), Fraction(-2)}
    assert solve_vector_field_coefficients(ch, "p1", RF(0)) == {}
    with pytest.raises(NoSolution):
        solve_vector_field_coefficients(ch, "p1", V("p1"))


@settings(max_examples=10)
@given(st.integers(0, 10**6))
def test_solver_is_seed_independent(seed):
    ch = even_chart(4, "C2")
    t = relation_target(ch, SchubertClass(4))
    assert solve_vector_field_coefficients(ch, "p4", t, seed=seed) == printed_coefficients(4, 4)


@pytest.mark.parametrize("m", [3, 4, 5])
def test_homogeneity_and_chart_independence(m):
    for name in ("C1", "C2"):
        ch = even_chart(m, name)
        for w in all_classes(m):
            assert target_is_homogeneous(ch, _class(ch.N, w))
    assert chart_independence(m)


@pytest.mark.parametrize("m", [2, 3, 4])
def test_odd_intertwiner(m):
    assert odd_intertwiner_check(m)


def test_odd_examples_m2():
    reps = odd_intertwiner_report(2)
    assert [r.status for r in reps] == [True] * 4
    assert reps[3].coefficients == {}
    ch = odd_chart(2)
    assert rf_equal(relation_target(ch, SchubertClass(3)), RF(0))


def test_report_json():
    data = json.loads(dmodule_report_json(3))
    assert data["seed"] == 20240607
    statuses = {d["identity"]: d["status"] for d in data["identities"]}
    assert statuses["sigma1*s0"] == "pass" and statuses["sigma1*s2"] == "fail"
