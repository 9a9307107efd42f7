from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, strategies as st

from mirror_quadric.cohomology import HBAR, SchubertClass, dual_dubrovin_apply, j_function, sigma
from mirror_quadric.exact import LaurentPolynomial as LP
from mirror_quadric.flat_sections import (
    HbarExponentViolation,
    RecursionInconsistency,
    as_class,
    assemble_section,
    beta_recursion,
    closed_form_coefficient,
    coefficient_rows,
    constant_term_by_expansion,
    constant_term_coefficient,
    constant_term_enumeration,
    flat_residual,
    flat_section,
    gw_invariant,
    hbar_exponent,
    hypergeometric_series,
    lusztig_weight,
    route_disagreements,
    rows_to_csv,
    threads,
    verify_flat,
)
from mirror_quadric.lg_models import lusztig_model

h = lambda e: LP.var(HBAR, e)


def test_hypergeometric_values():
    assert hypergeometric_series(3, 3) == [1, 2, Fraction(3, 4), Fraction(5, 54)]
    for N in (3, 4, 5, 6):
        a = hypergeometric_series(N, 2)
        assert a[1] == 2 and a[2] == Fraction(6, 2**N)
    assert gw_invariant(5, 2) == Fraction(3, 16)
    with pytest.raises(ValueError):
        gw_invariant(3, 0)


@given(st.integers(3, 10), st.integers(0, 6))
def test_hypergeometric_against_factorials(N, k):
    assert hypergeometric_series(N, k)[k] == Fraction(factorial(2 * k), factorial(k) ** (N + 2))


def test_hypergeometric_against_j_function():
    J = j_function(5, 3)
    assert [J[k][sigma(0)] for k in range(4)] == [
        LP.monomial({HBAR: -5 * k}, a) for k, a in enumerate(hypergeometric_series(5, 3))
    ]


def test_class_parsing():
    assert as_class(4, "mid") == SchubertClass(2, True)
    assert as_class(4, "s2'") == SchubertClass(2, True)
    assert as_class(4, "3") == SchubertClass(3)
    with pytest.raises(ValueError):
        as_class(5, "mid")
    with pytest.raises(ValueError):
        as_class(3, 4)
    assert hbar_exponent(4, "mid", 2) == 6


def test_closed_form_values():
    assert closed_form_coefficient(3, 1, 1) == 2
    assert closed_form_coefficient(3, 2, 1) == 1
    assert closed_form_coefficient(3, 3, 1) == 0
    assert closed_form_coefficient(3, 3, 2) == 1
    assert closed_form_coefficient(4, "mid", 1) == 1
    assert closed_form_coefficient(4, 0, 0) == 1 and closed_form_coefficient(4, 1, 0) == 0


@pytest.mark.parametrize("N,k,ell", [(3, 1, 0), (3, 1, 1), (3, 2, 0), (3, 2, 2), (4, 1, 0), (4, 1, "mid"), (4, 1, 3), (5, 1, 2)])
def test_enumeration_against_brute_force(N, k, ell):
    W = lusztig_model(N).superpotential.to_laurent()
    n = hbar_exponent(N, ell, k)
    weight = lusztig_weight(N, ell)
    assert constant_term_enumeration(W, weight, k, n) == constant_term_by_expansion(W, weight, k, n)


def test_hbar_exponent_law_is_enforced():
    W = lusztig_model(3).superpotential.to_laurent()
    with pytest.raises(HbarExponentViolation):
        constant_term_enumeration(W, LP.const(1), 1, 4)


@pytest.mark.parametrize("N,kmax", [(3, 5), (4, 5), (5, 3), (6, 3)])
def test_three_routes_agree(N, kmax):
    assert route_disagreements(N, kmax) == []


@pytest.mark.parametrize("N", [3, 4, 5, 6])
def test_beta_unit_row_is_gw(N):
    table = beta_recursion(N, 4)
    for k in range(1, 5):
        assert table[(SchubertClass(0), k)] == gw_invariant(N, k)


def test_recursion_consistency_error_type():
    assert issubclass(RecursionInconsistency, AssertionError)


def test_assembled_section_frozen_values():
    S = assemble_section(3, 1)
    assert S[0][sigma(3)] == LP.const(1)
    assert S[1][sigma(1)] == h(-1) and S[1][sigma(2)] == 2 * h(-2) and S[1][sigma(3)] == 2 * h(-3)
    T = assemble_section(4, 1)[1]
    assert T[sigma(1)] == h(-1)
    assert T[sigma(2)] == h(-2) and T[SchubertClass(2, True)] == h(-2)
    assert T[sigma(3)] == 2 * h(-3) and T[sigma(4)] == 2 * h(-4)


@pytest.mark.parametrize("N,order", [(3, 5), (4, 5), (5, 3), (6, 3)])
def test_flat_section(N, order):
    assert verify_flat(N, order)


def test_unnormalized_section_only_solves_q_equation():
    S = assemble_section(3, 3)
    assert dual_dubrovin_apply(3, "q", S).is_zero()
    assert not dual_dubrovin_apply(3, "hbar", S).is_zero()
    assert flat_residual(3, 3, S)[0] == "hbar"
    assert flat_residual(3, 3) is None
    assert flat_section(3, 1)[0][sigma(3)] == h(-3)


def test_csv_rows():
    text = rows_to_csv(coefficient_rows(3, 2, [0]))
    lines = text.splitlines()
    assert lines[0] == "N,class,k,route,value,hbar_exponent"
    assert "3,s0,2,constant-term,3/4,6" in lines
    assert len(lines) == 1 + 3 * 3


def test_threads_env(monkeypatch):
    monkeypatch.setenv("MIRROR_QUADRIC_THREADS", "3")
    assert threads() == 3
    monkeypatch.setenv("MIRROR_QUADRIC_THREADS", "x")
    with pytest.raises(ValueError):
        threads()


def test_row_order_independent_of_threads(monkeypatch):
    monkeypatch.setenv("MIRROR_QUADRIC_THREADS", "1")
    serial = rows_to_csv(coefficient_rows(4, 2))
    monkeypatch.setenv("MIRROR_QUADRIC_THREADS", "4")
    assert rows_to_csv(coefficient_rows(4, 2)) == serial


def test_constant_term_rejects_bad_k():
    with pytest.raises(ValueError):
        constant_term_coefficient(3, 0, 0)
