from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, strategies as st

from mirror_quadric.cohomology import (
    HBAR,
    CohVector,
    QSeries,
    classical_powers,
    connection_flatness_certificate,
    dual_dubrovin_apply,
    first_chern_times,
    grading,
    j_function,
    mid_prime,
    poincare_dual,
    quantum_chevalley,
    schubert_basis,
    sigma,
)
from mirror_quadric.exact import LaurentPolynomial as LP

q = LP.var("q")
dims = st.integers(3, 12)


def test_basis_sizes():
    assert [str(c) for c in schubert_basis(3)] == ["s0", "s1", "s2", "s3"]
    assert [str(c) for c in schubert_basis(4)] == ["s0", "s1", "s2", "s2'", "s3", "s4"]
    with pytest.raises(ValueError):
        schubert_basis(2)
    with pytest.raises(ValueError):
        mid_prime(5)


def test_chevalley_examples():
    assert quantum_chevalley(3, sigma(1)) == CohVector(3, {sigma(2): 2})
    assert quantum_chevalley(4, sigma(4)) == CohVector(4, {sigma(1): q})
    assert quantum_chevalley(4, sigma(0)) == CohVector(4, {sigma(1): 1})
    assert quantum_chevalley(4, sigma(1)) == CohVector(4, {sigma(2): 1, mid_prime(4): 1})
    assert quantum_chevalley(4, mid_prime(4)) == CohVector(4, {sigma(3): 1})
    assert quantum_chevalley(4, sigma(3)) == CohVector(4, {sigma(4): 1, sigma(0): q})


def test_first_chern_class():
    assert first_chern_times(3, CohVector.basis_vector(3, sigma(0))) == CohVector(3, {sigma(1): 3})
    assert first_chern_times(4, CohVector.basis_vector(4, sigma(4))) == CohVector(4, {sigma(1): 4 * q})
    assert first_chern_times(5, CohVector(5)).is_zero()


def _chevalley_power(N, k):
    v = CohVector.basis_vector(N, sigma(0))
    for _ in range(k):
        out = CohVector(N)
        for c, coef in v.items():
            out = out + quantum_chevalley(N, c).scale(coef)
        v = out
    return v


@given(dims)
def test_quantum_hyperplane_relation(N):
    # the hyperplane class satisfies h^{N+1} = 4 q h in QH(Q_N)
    assert _chevalley_power(N, N + 1) == CohVector(N, {sigma(1): 4 * q})


@given(dims)
def test_degree_of_quadric(N):
    # classically h^N = deg(Q_N) [pt] = 2 sigma_N
    assert classical_powers(N)[N] == CohVector(N, {sigma(N): 2})


@given(dims, st.data())
def test_poincare_duality_is_a_grading_reversing_involution(N, data):
    c = data.draw(st.sampled_from(schubert_basis(N)))
    d = poincare_dual(N, c)
    assert poincare_dual(N, d) == c
    assert grading(c) + grading(d) == N


def test_middle_classes_pair_crosswise():
    assert poincare_dual(4, sigma(2)) == mid_prime(4)
    assert poincare_dual(4, sigma(1)) == sigma(3)
    assert poincare_dual(6, mid_prime(6)) == sigma(3)
    assert poincare_dual(5, sigma(2)) == sigma(3)


@pytest.mark.parametrize("N", [3, 4, 5, 6])
def test_connection_is_flat(N):
    assert connection_flatness_certificate(N, 4)


def test_dual_connection_on_constant():
    S = QSeries(3, 1, [CohVector.basis_vector(3, sigma(3))])
    r = dual_dubrovin_apply(3, "q", S)
    # q d/dq sigma_3 = 0, sigma_1 * sigma_3 = q sigma_1
    assert r[1] == CohVector(3, {sigma(1): -LP.var(HBAR, -1)})
    with pytest.raises(ValueError):
        dual_dubrovin_apply(3, "x", S)


@pytest.mark.parametrize("N", [3, 4, 5, 6])
def test_j_function_unit_component_is_hypergeometric(N):
    J = j_function(N, 3)
    for k in range(4):
        expected = Fraction(factorial(2 * k), factorial(k) ** (N + 2))
        assert J[k][sigma(0)] == LP.monomial({HBAR: -k * N}, expected)


def test_j_function_with_exponent_n_is_not_hypergeometric():
    J = j_function(3, 2, exponent=3)
    assert J[2][sigma(0)] != LP.monomial({HBAR: -6}, Fraction(3, 4))


def test_qseries_csv():
    S = QSeries(3, 1, [CohVector.basis_vector(3, sigma(0)), CohVector(3, {sigma(1): 2})])
    rows = S.to_csv().splitlines()
    assert rows[0] == "class,q^0,q^1"
    assert rows[1] == "s0,1,0"
    assert rows[2] == "s1,0,2"


@given(dims)
def test_classical_chevalley_is_nilpotent(N):
    # at q = 0 the operator sigma_1 kills sigma_0 after exactly N+1 steps
    v = _chevalley_power(N, N).map_coefficients(lambda c: c.coefficient({"q": 0}))
    assert not v.is_zero()
    w = _chevalley_power(N, N + 1).map_coefficients(lambda c: c.coefficient({"q": 0}))
    assert w.is_zero()
