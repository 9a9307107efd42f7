import pytest

from mirror_quadric.exact import LaurentPolynomial as LP, rf_equal
from mirror_quadric.lg_models import lusztig_model
from mirror_quadric.quiver import (
    Arrow,
    InconsistentLabeling,
    Quiver,
    chain_labels,
    delta_monomial_formula,
    exchange_relation,
    failing_exchange_relations,
    gr24_bridge,
    initial_seed,
    last_exchange_is_quadric,
    quadric_quiver,
    quadric_vanishes_on_torus,
    superpotential_from_quiver,
    verify_delta_monomials,
    weighted_degrees,
)


def test_chain_labels():
    assert chain_labels(4) == ["d", "c"]
    assert chain_labels(5) == ["a2", "c", "b2"]
    assert chain_labels(6) == ["a2", "d", "c", "b2"]


@pytest.mark.parametrize("N", range(3, 13))
def test_quiver_reading_reproduces_lusztig(N):
    qv = quadric_quiver(N)
    assert len([a for a in qv.arrows if a.label is None]) == 2
    assert rf_equal(superpotential_from_quiver(qv), lusztig_model(N).superpotential)


def test_gr24_bridge_and_perturbation():
    assert gr24_bridge()
    assert not gr24_bridge(perturb=True)


def test_inconsistent_labels_raise():
    qv = Quiver(
        [("1", "source"), ("a", "internal"), ("q", "sink")],
        [Arrow("1", "a"), Arrow("a", "q"), Arrow("1", "q", "x")],
    )
    with pytest.raises(InconsistentLabeling):
        superpotential_from_quiver(qv)


def test_dot_output():
    dot = quadric_quiver(4).to_dot()
    assert dot.startswith("digraph Q {") and '"v2" -> "L" [label="b1"];' in dot


def test_superpotential_is_homogeneous():
    # deg q = N, every Lusztig variable has degree 1
    W = lusztig_model(6).superpotential
    assert weighted_degrees(W, {"q": 6}) == {1}


def test_seed_shape():
    s = initial_seed(5)
    assert s.mutable_vars == ["p1", "p2", "p3"]
    assert "delta1" in s.frozen_vars and "p8" in s.frozen_vars
    assert s.is_type_A1_power()


def test_exchange_relation_forms():
    lhs, rhs = exchange_relation(4, 2)
    assert str(lhs) == "p2*p4"
    with pytest.raises(ValueError):
        exchange_relation(4, 3)


@pytest.mark.parametrize("m", range(3, 7))
def test_torus_identities(m):
    assert failing_exchange_relations(m) == []
    assert verify_delta_monomials(m)
    assert quadric_vanishes_on_torus(2 * m - 2)
    assert last_exchange_is_quadric(m)


def test_delta_monomial_example():
    a1, a2, c, d, b2 = (LP.var(v) for v in ("a1", "a2", "c", "d", "b2"))
    assert delta_monomial_formula(4, 1) == a1**2 * a2 * c * d * b2
