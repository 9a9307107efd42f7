from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from mirror_quadric.critical import (
    SQRT_Q,
    _check_point,
    canonical_superpotential,
    chart_membership,
    closed_form_critical_points,
    critical_report,
    critical_values,
    deltas_at_main_family,
    membership_claims_hold,
    on_quadric,
    printed_even_extra_points,
    restricted_superpotential,
    root_algebra,
    sqrt_algebra,
    verify_criticality,
)
from mirror_quadric.exact import LaurentPolynomial as LP

q = LP.var("q")


def specialize(elem, gen_value, q_value):
    """Numeric value of an algebra element once the generator and q are
    given rational values compatible with the defining relation."""
    return sum(
        (c.evaluate({"q": q_value}) * gen_value**k for k, c in enumerate(elem.coefs)),
        Fraction(0),
    )


def numeric_point(pt, gen_value, q_value):
    return {k: specialize(v, gen_value, q_value) for k, v in pt.coords.items()}


def gradient_at(N, values, q_value):
    W = restricted_superpotential(N)
    vals = dict(values, q=q_value)
    return {v: W.diff(v).evaluate(vals) for v in W.variables() if v.startswith("p") and not v.endswith("'")}


@pytest.mark.parametrize("N", range(3, 9))
def test_numeric_oracle_main_family(N):
    # zeta = t rational forces q = t^N / 4
    for t in (Fraction(2), Fraction(-3), Fraction(5, 2)):
        qv = t**N / 4
        pt = closed_form_critical_points(N).main_family
        vals = numeric_point(pt, t, qv)
        assert all(g == 0 for g in gradient_at(N, vals, qv).values())
        assert canonical_superpotential(N).evaluate(dict(vals, q=qv)) == N * t


@pytest.mark.parametrize("N", [4, 5, 6, 7, 8])
def test_numeric_oracle_extra_points(N):
    for pt in closed_form_critical_points(N).extra_points:
        s = Fraction(3)
        qv = s * s * pt.algebra.relation.evaluate({"q": Fraction(1)})
        vals = numeric_point(pt, s, qv)
        assert all(g == 0 for g in gradient_at(N, vals, qv).values())
        assert canonical_superpotential(N).evaluate(dict(vals, q=qv)) == 0


@pytest.mark.parametrize("N", range(3, 9))
def test_closed_forms_are_critical(N):
    assert verify_criticality(N)
    pts = closed_form_critical_points(N)
    assert pts.count() == (N + 1 if N % 2 else N + 2)
    vals = critical_values(N)
    z = root_algebra(N).generator()
    assert vals[0] == z * N
    assert all(v.is_zero() for v in vals[1:])
    assert membership_claims_hold(N)


def test_sqrt_algebra_sign():
    assert sqrt_algebra(4).relation == -q
    assert sqrt_algebra(6) == SQRT_Q
    assert sqrt_algebra(8).relation == -q


@pytest.mark.parametrize("N,holds", [(4, False), (6, True), (8, False)])
def test_printed_extra_points(N, holds):
    W = restricted_superpotential(N)
    results = [_check_point(N, pt, W) is None for pt in printed_even_extra_points(N)]
    assert all(results) == holds
    assert all(on_quadric(N, pt) for pt in printed_even_extra_points(N)) == holds


def test_main_family_coordinates_n3():
    pt = closed_form_critical_points(3).main_family.coords
    z = root_algebra(3).generator()
    assert pt["p1"] == z
    assert pt["p2"] == z**2 * Fraction(1, 2)
    assert pt["p3"] == root_algebra(3).scalar(q)


@pytest.mark.parametrize("N", [3, 5, 4, 6])
def test_deltas_equal_q(N):
    assert all(v == root_algebra(N).scalar(q) for v in deltas_at_main_family(N).values())


def test_membership_report():
    pts = closed_form_critical_points(4)
    assert chart_membership(4, pts.main_family.coords) == {"giv": True, "lus": True, "prz": True}
    assert not any(chart_membership(4, pts.extra_points[0].coords).values())


def test_report_shape():
    rep = critical_report(5)
    assert rep["count"] == 6 and rep["values"] == ["(5)*zeta", "0"]


@given(st.integers(3, 9), st.data())
def test_quotient_algebra_laws(N, data):
    A = root_algebra(N)
    coefs = st.lists(st.sampled_from([LP.const(0), LP.const(1), q, -2 * q, LP.const(Fraction(1, 3))]), min_size=N, max_size=N)
    a, b, c = (A.scalar(0) + type(A.one())(A, data.draw(coefs)) for _ in range(3))
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    z = A.generator()
    assert z**N == A.scalar(4 * q)
    assert z * z**-1 == A.one()


def test_only_monomials_invert():
    z = root_algebra(3).generator()
    with pytest.raises(ZeroDivisionError):
        (z + 1).inverse()
    with pytest.raises(TypeError):
        z + SQRT_Q.generator()
