"""B-side intertwining identities as rational-function statements.

For a class sigma_l with sigma_1 * sigma_l = sum c q^d sigma_j, the
relation to check in a cluster chart C is

    q dW/dq * p_l - sum c q^d p_j  =  p_l * sum_{c in C, c != p_l} m_c c dW/dc

with constant m_c.  Both parities use two clusters C1 and C2 with p0 = 1
and delta0 = p_N: C1 holds p_i for small i, C2 the complementary p_{N-i}.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Union

from .cohomology import SchubertClass, quantum_chevalley_terms
from .exact import LaurentPolynomial, RationalFunction, rf_equal
from .lg_models import delta, lusztig_model, p_name, pluecker_in_lusztig, prime_name
from .quiver import weighted_degrees

LP = LaurentPolynomial
RF = RationalFunction
Q = LP.var("q")
DEFAULT_SEED = 20240607
PRIMES = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97]


def dname(l: int) -> str:
    return f"delta{l}"


@dataclass
class ClusterChart:
    name: str
    m: int
    N: int
    variables: List[str]
    pluecker: Dict[str, RF]  # every Pluecker coordinate (p0 = 1) in chart variables
    W: RF

    def weights(self) -> Dict[str, int]:
        w = {"q": self.N}
        for v in self.variables:
            if v.startswith("delta"):
                w[v] = self.N
            elif v.endswith("'"):
                w[v] = self.m - 1
            else:
                w[v] = int(v[1:])
        return w

    def to_dict(self):
        return {"name": self.name, "m": self.m, "variables": self.variables, "W": self.W.to_dict()}


def _v(name: str) -> RF:
    return RF(LP.var(name))


def _symbolic_W(N: int, m: int, P: Dict[str, RF], odd: bool) -> RF:
    """W_q with the delta denominators kept as the chart symbols."""
    pp = lambda i: P[p_name(i)]
    W = pp(1) + RF(Q) * pp(1) / _v(dname(0))
    if odd:
        for l in range(1, m):
            W = W + pp(l + 1) * pp(N - l) / _v(dname(l))
    else:
        for l in range(1, m - 2):
            W = W + pp(l + 1) * pp(N - l) / _v(dname(l))
        W = W + pp(m) / pp(m - 1) + pp(m) / P[prime_name(N)]
    return W


def even_chart(m: int, chart: str) -> ClusterChart:
    """C1 = {p1..p_{m-2}, delta1..delta_{m-3}, p_{m-1}, p'_{m-1}, delta0};
    C2 = {p_{2m-3}..p_m, delta1..delta_{m-3}, p_{m-1}, p'_{m-1}, delta0}."""
    if m < 3:
        raise ValueError("even charts need m >= 3")
    N = 2 * m - 2
    D = lambda l: _v(dname(l))
    frozen = [dname(l) for l in range(1, m - 2)] + [p_name(m - 1), prime_name(N), dname(0)]
    P: Dict[str, RF] = {p_name(m - 1): _v(p_name(m - 1)), prime_name(N): _v(prime_name(N)), p_name(N): D(0)}
    mid = _v(p_name(m - 1)) * _v(prime_name(N))
    if chart == "C1":
        mutable = [p_name(i) for i in range(1, m - 1)]
        for i in range(1, m - 1):
            P[p_name(i)] = _v(p_name(i))
        for i in range(1, m - 2):
            P[p_name(N - i)] = (D(i - 1) + D(i)) / P[p_name(i)]
        P[p_name(m)] = (D(m - 3) + mid) / P[p_name(m - 2)]
    elif chart == "C2":
        mutable = [p_name(i) for i in range(2 * m - 3, m - 1, -1)]
        for i in range(m, 2 * m - 2):
            P[p_name(i)] = _v(p_name(i))
        for i in range(1, m - 2):
            P[p_name(i)] = (D(i - 1) + D(i)) / P[p_name(N - i)]
        P[p_name(m - 2)] = (D(m - 3) + mid) / P[p_name(m)]
    else:
        raise ValueError(f"unknown chart {chart!r}")
    return ClusterChart(chart, m, N, mutable + frozen, P, _symbolic_W(N, m, P, odd=False))


def odd_chart(m: int, chart: str = "C1") -> ClusterChart:
    """C1 = {p1..p_{m-1}, delta1..delta_{m-1}, delta0}; C2 swaps every
    p_i (i < m) for p_{N-i}, the odd analogue of the second even cluster."""
    if m < 2:
        raise ValueError("odd charts need m >= 2")
    N = 2 * m - 1
    D = lambda l: _v(dname(l))
    P: Dict[str, RF] = {p_name(N): D(0)}
    if chart == "C1":
        mutable = [p_name(i) for i in range(1, m)]
        for i in range(1, m):
            P[p_name(i)] = _v(p_name(i))
            P[p_name(N - i)] = (D(i - 1) + D(i)) / P[p_name(i)]
    elif chart == "C2":
        mutable = [p_name(N - i) for i in range(1, m)]
        for i in range(1, m):
            P[p_name(N - i)] = _v(p_name(N - i))
            P[p_name(i)] = (D(i - 1) + D(i)) / P[p_name(N - i)]
    else:
        raise ValueError(f"unknown chart {chart!r}")
    variables = mutable + [dname(l) for l in range(1, m)] + [dname(0)]
    return ClusterChart(chart, m, N, variables, P, _symbolic_W(N, m, P, odd=True))


def express_W_in_chart(m: int, chart: str) -> RF:
    return even_chart(m, chart).W


def printed_chart_W(m: int, chart: str) -> RF:
    """The displayed expansions of W_q in C1 and C2 (m >= 4)."""
    if m < 4:
        raise ValueError("the displayed expansions need m >= 4")
    N = 2 * m - 2
    p_ = lambda i: _v(p_name(i))
    D = lambda l: _v(dname(l))
    pr = _v(prime_name(N))
    q = RF(Q)
    if chart == "C1":
        W = p_(1)
        for l in range(1, m - 2):
            W = W + p_(l + 1) * D(l - 1) / (p_(l) * D(l)) + p_(l + 1) / p_(l)
        W = W + D(m - 3) / (p_(m - 2) * p_(m - 1)) + D(m - 3) / (p_(m - 2) * pr)
        return W + p_(m - 1) / p_(m - 2) + pr / p_(m - 2) + q * p_(1) / D(0)
    if chart == "C2":
        W = D(0) / p_(2 * m - 3) + D(1) / p_(2 * m - 3)
        for l in range(1, m - 3):
            a, b = p_(2 * m - 2 - l), p_(2 * m - 3 - l)
            W = W + a / b + a * D(l + 1) / (b * D(l))
        W = W + p_(m) / p_(m - 1) + p_(m) / pr + p_(m + 1) / p_(m)
        W = W + p_(m - 1) * pr * p_(m + 1) / (p_(m) * D(m - 3))
        return W + q / p_(2 * m - 3) + q * D(1) / (p_(2 * m - 3) * D(0))
    raise ValueError(f"unknown chart {chart!r}")


def chart_to_lusztig(ch: ClusterChart) -> Dict[str, RF]:
    """Chart variables as functions on the Lusztig torus."""
    img = pluecker_in_lusztig(ch.N)
    out = {}
    for v in ch.variables:
        if v == dname(0):
            out[v] = img[p_name(ch.N)]
        elif v.startswith("delta"):
            out[v] = RF(delta(ch.N, int(v[5:]))).substitute({**img, p_name(0): RF(1)})
        else:
            out[v] = img[v]
    return out


def chart_W_matches_lusztig(ch: ClusterChart) -> bool:
    return rf_equal(ch.W.substitute(chart_to_lusztig(ch)), lusztig_model(ch.N).superpotential)


# ---------------------------------------------------------------------------
# targets and printed coefficient sets


ClassKey = Union[int, str]


def _class(N: int, which: ClassKey) -> SchubertClass:
    m = (N + 2) // 2
    if which in ("mid", "mid_prime", "'"):
        return SchubertClass(m - 1, True)
    return SchubertClass(int(which))


def _p_of_class(ch: ClusterChart, c: SchubertClass) -> RF:
    if c.prime:
        return ch.pluecker[prime_name(ch.N)]
    if c.index == 0:
        return RF(1)
    return ch.pluecker[p_name(c.index)]


def chevalley_image(ch: ClusterChart, c: SchubertClass) -> RF:
    """sigma_1 * c written in Pluecker coordinates of the chart."""
    out = RF(0)
    for coef, d, cls in quantum_chevalley_terms(ch.N, c):
        out = out + RF(Q**d * coef) * _p_of_class(ch, cls)
    return out


def relation_target(ch: ClusterChart, c: SchubertClass) -> RF:
    return ch.W.diff("q") * RF(Q) * _p_of_class(ch, c) - chevalley_image(ch, c)


def pivot_name(ch: ClusterChart, c: SchubertClass) -> Optional[str]:
    if c.prime:
        return prime_name(ch.N)
    if c.index == ch.N:
        return dname(0)
    name = p_name(c.index)
    return name if name in ch.variables else None


def combination(ch: ClusterChart, pivot: RF, coefs: Dict[str, Fraction]) -> RF:
    out = RF(0)
    for v, mc in coefs.items():
        if mc:
            out = out + ch.W.diff(v) * _v(v) * RF(mc)
    return pivot * out


def chart_for(m: int, which: ClassKey) -> str:
    c = _class(2 * m - 2, which)
    return "C1" if (not c.prime and c.index <= m - 2) else "C2"


def printed_coefficients(m: int, which: ClassKey) -> Dict[str, Fraction]:
    """The coefficient sets m_c displayed in the proof."""
    N = 2 * m - 2
    c = _class(N, which)
    co: Dict[str, Fraction] = {}

    def add(name, val):
        co[name] = co.get(name, Fraction(0)) + val

    i = c.index
    if not c.prime and i <= m - 3:
        for j in range(i + 1, m):
            add(p_name(j), -1)
        add(prime_name(N), -1)
        for j in range(0, m - 2):
            add(dname(j), -1)
        for j in range(i, m - 2):
            add(dname(j), -1)
    elif not c.prime and i == m - 2:
        add(p_name(m - 1), -1)
        add(prime_name(N), -1)
        for j in range(0, m - 2):
            add(dname(j), -1)
    elif c.prime or i == m - 1:
        add(p_name(m - 1) if c.prime else prime_name(N), 1)
        for j in range(m, 2 * m - 2):
            add(p_name(j), 1)
        for j in range(0, m - 2):
            add(dname(j), 1)
    elif i <= 2 * m - 4:
        for j in range(i + 1, 2 * m - 2):
            add(p_name(j), -1)
        for j in range(0, 2 * m - 2 - i):
            add(dname(j), -1)
    elif i == 2 * m - 3:
        add(dname(0), -1)
    return {k: v for k, v in co.items() if v}


def all_classes(m: int) -> List[ClassKey]:
    return list(range(0, 2 * m - 1)) + ["mid"]


@dataclass
class IdentityReport:
    identity: str
    chart: str
    coefficients: Dict[str, Fraction]
    status: bool
    residual: Optional[RF] = None

    def to_dict(self):
        return {
            "identity": self.identity,
            "chart": self.chart,
            "coefficients": {k: str(v) for k, v in sorted(self.coefficients.items())},
            "status": "pass" if self.status else "fail",
            "residual": None if self.residual is None else str(self.residual),
        }


def b_side_report(m: int, which: ClassKey, coefficients: Optional[Dict[str, Fraction]] = None) -> IdentityReport:
    ch = even_chart(m, chart_for(m, which))
    c = _class(ch.N, which)
    coefs = printed_coefficients(m, which) if coefficients is None else coefficients
    residual = relation_target(ch, c) - combination(ch, _p_of_class(ch, c), coefs)
    ok = residual.is_zero() or rf_equal(residual, RF(0))
    return IdentityReport(f"sigma1*{c}", ch.name, coefs, ok, None if ok else residual)


def verify_b_side_identity(m: int, which: ClassKey) -> bool:
    return b_side_report(m, which).status


def target_is_homogeneous(ch: ClusterChart, c: SchubertClass) -> bool:
    """deg q dW/dq p_l - (image) = l + 1 with deg p_i = i, deg delta = deg q = N."""
    t = relation_target(ch, c)
    if t.is_zero():
        return True
    return weighted_degrees(t, ch.weights()) == {c.index + 1}


def chart_independence(m: int) -> bool:
    """The l = m-1 target from C2, moved to the Lusztig torus, equals the
    target computed there directly."""
    ch = even_chart(m, "C2")
    c = SchubertClass(m - 1)
    moved = relation_target(ch, c).substitute(chart_to_lusztig(ch))
    img = pluecker_in_lusztig(ch.N)
    W = lusztig_model(ch.N).superpotential
    direct = W.diff("q") * RF(Q) * img[p_name(m - 1)] - img[p_name(m)]
    return rf_equal(moved, direct)


# ---------------------------------------------------------------------------
# solver


class SingularSample(RuntimeError):
    pass


class NoSolution(ValueError):
    pass


def _sample_point(rng: random.Random, names: List[str]) -> Dict[str, Fraction]:
    primes = rng.sample(PRIMES, len(names))
    return {v: Fraction(pr) for v, pr in zip(names, primes)}


def _value(f: RF, point) -> Optional[Fraction]:
    n, d = f.evaluate_pair(point)
    if d == 0:
        return None
    return n / d


def _solve(rows: List[List[Fraction]], rhs: List[Fraction], n: int) -> Optional[List[Fraction]]:
    """Exact Gaussian elimination; free unknowns are set to 0.  None when
    the system is inconsistent."""
    A = [r[:] + [b] for r, b in zip(rows, rhs)]
    piv_cols = []
    r = 0
    for col in range(n):
        pr = next((i for i in range(r, len(A)) if A[i][col] != 0), None)
        if pr is None:
            continue
        A[r], A[pr] = A[pr], A[r]
        inv = 1 / A[r][col]
        A[r] = [x * inv for x in A[r]]
        for i in range(len(A)):
            if i != r and A[i][col] != 0:
                f = A[i][col]
                A[i] = [x - f * y for x, y in zip(A[i], A[r])]
        piv_cols.append(col)
        r += 1
    for i in range(r, len(A)):
        if A[i][n] != 0:
            return None
    sol = [Fraction(0)] * n
    for i, col in enumerate(piv_cols):
        sol[col] = A[i][n]
    return sol


def solve_vector_field_coefficients(
    ch: ClusterChart,
    pivot: Union[str, RF],
    target: RF,
    seed: int = DEFAULT_SEED,
    retries: int = 200,
) -> Dict[str, Fraction]:
    """Constants m_c with target = pivot * sum m_c c dW/dc (c != pivot),
    from random prime sample points, certified exactly."""
    target = RF.coerce(target)
    if isinstance(pivot, str):
        pivot_var, pivot_rf = pivot, _v(pivot)
    else:
        pivot_var, pivot_rf = None, RF.coerce(pivot)
    unknowns = [v for v in ch.variables if v != pivot_var]
    cols = [pivot_rf * ch.W.diff(v) * _v(v) for v in unknowns]
    names = ch.variables + ["q"]
    rng = random.Random(seed)
    rows, rhs = [], []
    need = len(unknowns) + 4
    failures = 0
    while len(rows) < need:
        pt = _sample_point(rng, names)
        vals = [_value(f, pt) for f in cols]
        t = _value(target, pt)
        if t is None or any(x is None for x in vals):
            failures += 1
            if failures > retries:
                raise SingularSample("retry budget exhausted while sampling")
            continue
        rows.append(vals)
        rhs.append(t)
    sol = _solve(rows, rhs, len(unknowns))
    if sol is None:
        raise NoSolution("sampled system is inconsistent")
    coefs = {v: c for v, c in zip(unknowns, sol) if c}
    if not rf_equal(target, combination(ch, pivot_rf, coefs)):
        raise NoSolution("candidate coefficients fail the exact check")
    return coefs


def solved_b_side(m: int, which: ClassKey, seed: int = DEFAULT_SEED) -> Dict[str, Fraction]:
    ch = even_chart(m, chart_for(m, which))
    c = _class(ch.N, which)
    piv = pivot_name(ch, c)
    return solve_vector_field_coefficients(ch, piv if piv else _p_of_class(ch, c), relation_target(ch, c), seed)


def odd_intertwiner_report(m: int, seed: int = DEFAULT_SEED) -> List[IdentityReport]:
    """Solve for every class of Q_{2m-1}: C1 when p_i is a C1 variable (or
    i = 0, N), C2 for m <= i <= N-1."""
    charts = {"C1": odd_chart(m, "C1"), "C2": odd_chart(m, "C2")}
    N = 2 * m - 1
    out = []
    for i in range(N + 1):
        ch = charts["C2" if m <= i <= N - 1 else "C1"]
        c = SchubertClass(i)
        piv = pivot_name(ch, c)
        pivot = piv if piv else _p_of_class(ch, c)
        target = relation_target(ch, c)
        try:
            co = solve_vector_field_coefficients(ch, pivot, target, seed)
            out.append(IdentityReport(f"sigma1*{c}", ch.name, co, True))
        except (NoSolution, SingularSample):
            out.append(IdentityReport(f"sigma1*{c}", ch.name, {}, False, target))
    return out


def odd_intertwiner_check(m: int, seed: int = DEFAULT_SEED) -> bool:
    return all(r.status for r in odd_intertwiner_report(m, seed))


def dmodule_report_json(m: int, seed: int = DEFAULT_SEED) -> str:
    reps = [b_side_report(m, w).to_dict() for w in all_classes(m)]
    return json.dumps({"m": m, "seed": seed, "identities": reps}, sort_keys=True, indent=2)
