import json
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from mirror_quadric.exact import LaurentPolynomial as LP, RationalFunction as RF, rf_equal
from mirror_quadric.lg_models import (
    PullbackFailure,
    build_model,
    canonical_superpotential,
    coordinate_map,
    delta,
    log_jacobian_det,
    lusztig_model,
    map_kinds_for,
    p,
    p_prime,
    pluecker_in_lusztig,
    printed_prz_to_can_even,
    quadric_relation,
    verify_pullback,
    verify_pullback_report,
)

q = LP.var("q")


def test_lusztig_superpotentials():
    W = lusztig_model(4).superpotential
    a1, c, d, b1 = (LP.var(v) for v in ("a1", "c", "d", "b1"))
    expected = a1 + b1 + c + d + q * (a1 * c * d) ** -1 + q * (b1 * c * d) ** -1
    assert rf_equal(W, expected)


def test_givental_constraints():
    M = build_model("givental", 3)
    assert M.variables == ["nu1", "nu2", "nu3", "nu4", "nu5"]
    assert [str(c) for c in M.constraints] == ["nu1*nu2*nu3*nu4*nu5 - q", "nu4 + nu5 - 1"]


def test_model_json_shape():
    data = json.loads(build_model("canonical", 4).to_json())
    assert data["name"] == "canonical" and data["N"] == 4
    assert data["vars"] == ["p1", "p2", "p2'", "p3", "p4"]
    assert set(data) == {"name", "N", "vars", "W", "constraints"}
    assert len(data["constraints"]) == 1


def test_unknown_model():
    with pytest.raises(ValueError):
        build_model("mirror", 4)


def test_delta_and_quadric():
    assert delta(5, 1) == p(1) * p(4) - p(0) * p(5)
    assert quadric_relation(4) == p(2) * p_prime(4) - p(1) * p(3) + p(0) * p(4)
    with pytest.raises(ValueError):
        delta(4, 2)
    with pytest.raises(ValueError):
        quadric_relation(5)


def test_map_kinds_depend_on_parity():
    assert "can_to_prz_odd" in map_kinds_for(5) and "can_to_prz_even" not in map_kinds_for(5)
    assert "prz_to_can_even" in map_kinds_for(6)
    with pytest.raises(ValueError):
        coordinate_map("can_to_prz_odd", 4)


@pytest.mark.parametrize("N", range(3, 9))
def test_all_pullbacks(N):
    for kind in map_kinds_for(N):
        verify_pullback_report(kind, N)


@pytest.mark.parametrize("N", [3, 4, 5])
def test_log_jacobian_is_unimodular(N):
    det = log_jacobian_det(coordinate_map("prz_to_giv", N))
    assert rf_equal(det, RF(1)) or rf_equal(det, RF(-1))


@pytest.mark.parametrize("N", [4, 6])
def test_printed_even_inverse_misses_the_quadric(N):
    # the displayed prz -> canonical table is a formal right inverse of
    # can -> prz, but it leaves the quadric and so does not match W
    forward = coordinate_map("can_to_prz_even", N).images
    printed = printed_prz_to_can_even(N)
    assert all(rf_equal(v.substitute(printed), LP.var(k)) for k, v in forward.items())
    assert not RF(quadric_relation(N, p0=False)).substitute(printed).is_zero()
    W = build_model("canonical", N).superpotential.substitute(printed)
    assert not rf_equal(W, build_model("prz", N).superpotential)
    derived = coordinate_map("prz_to_can_even", N).images
    assert RF(quadric_relation(N, p0=False)).substitute(derived).is_zero()


def test_pullback_failure_is_reported():
    cmap = coordinate_map("prz_to_giv", 3)
    bad = {k: v * 2 for k, v in cmap.images.items()}
    assert not rf_equal(cmap.target.superpotential.substitute(bad), cmap.source.superpotential)
    assert verify_pullback("prz_to_giv", 3)
    assert issubclass(PullbackFailure, AssertionError)


lusztig_values = st.sampled_from([Fraction(2), Fraction(3), Fraction(5, 2), Fraction(-7, 3), Fraction(11)])


@given(st.integers(3, 9), st.data())
def test_numeric_pullback_to_lusztig(N, data):
    """Evaluate the Pluecker images numerically, then the canonical W at
    those numbers; this avoids symbolic substitution altogether."""
    M = lusztig_model(N)
    pt = {v: data.draw(lusztig_values) for v in M.variables}
    pt["q"] = data.draw(lusztig_values)
    pl = {k: v.evaluate(pt) for k, v in pluecker_in_lusztig(N).items()}
    pl["q"] = pt["q"]
    W = canonical_superpotential(N)
    try:
        lhs = W.evaluate(pl)
    except ZeroDivisionError:
        return
    assert lhs == M.superpotential.evaluate(pt)
    if N % 2 == 0:
        pl["p0"] = Fraction(1)
        assert quadric_relation(N).evaluate(pl) == 0
