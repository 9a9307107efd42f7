"""Coefficients of the hypergeometric flat section S_N, by three routes.

* closed form:  the k^l C(2k,k)/(k!)^N family of formulas;
* recursion:    the divisor-axiom relations among the two-point
                descendants beta_{l,k};
* constant term: the coefficient of q^k in the constant term of
                p_l W^n / n! on the Lusztig torus, n = kN - l, counted by
                multinomial enumeration instead of expanding W^n.

Components are addressed by Schubert class; for even N the second middle
class uses p'_{m-1}.  The coefficient of <S_N, sigma_l> at q^k sits at
hbar^{-(kN - l)}.
"""

from __future__ import annotations

import csv
import io
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from .cohomology import (
    HBAR,
    CohVector,
    QSeries,
    SchubertClass,
    check_dimension,
    dual_dubrovin_apply,
    half_index,
    poincare_dual,
    schubert_basis,
    validate_class,
)
from .exact import LaurentPolynomial
from .lg_models import lusztig_model, p_name, pluecker_in_lusztig, prime_name

LP = LaurentPolynomial
ClassLike = Union[SchubertClass, int, str]
ROUTES = ("closed", "recursion", "constant-term")


def as_class(N: int, ell: ClassLike) -> SchubertClass:
    """Accept a SchubertClass, an index, "mid" (the primed middle class) or
    a name such as "s2'"."""
    if isinstance(ell, SchubertClass):
        c = ell
    elif isinstance(ell, int):
        c = SchubertClass(ell)
    elif ell in ("mid", "mid_prime"):
        if N % 2:
            raise ValueError("odd quadrics have no primed middle class")
        c = SchubertClass(half_index(N) - 1, True)
    elif isinstance(ell, str) and ell.lstrip("-").isdigit():
        c = SchubertClass(int(ell))
    else:
        c = SchubertClass.parse(ell)
    validate_class(N, c)
    return c


def hbar_exponent(N: int, ell: ClassLike, k: int) -> int:
    """e with the q^k coefficient of <S_N, sigma_l> at hbar^{-e}."""
    c = as_class(N, ell)
    return k * N - c.index


def threads() -> int:
    """Worker cap from MIRROR_QUADRIC_THREADS (default: CPU count)."""
    raw = os.environ.get("MIRROR_QUADRIC_THREADS")
    if raw:
        try:
            return max(1, int(raw))
        except ValueError:
            raise ValueError(f"MIRROR_QUADRIC_THREADS must be an integer, got {raw!r}") from None
    return os.cpu_count() or 1


def _parallel_map(fn, items: Sequence):
    items = list(items)
    n = min(threads(), len(items))
    if n <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=n) as pool:
        return list(pool.map(fn, items))


# ---------------------------------------------------------------------------
# closed form


def closed_form_coefficient(N: int, ell: ClassLike, k: int) -> Fraction:
    check_dimension(N)
    if k < 0:
        raise ValueError("k must be >= 0")
    c = as_class(N, ell)
    l = c.index
    if l == N:
        if k == 0:
            return Fraction(0)
        j = k - 1
        return Fraction(j, k) * Fraction(comb(2 * j, j), factorial(j) ** N)
    base = Fraction(k**l * comb(2 * k, k), factorial(k) ** N)
    if c.prime or l >= (N + 1) // 2:
        return base / 2
    return base


def hypergeometric_series(N: int, kmax: int) -> List[Fraction]:
    """[a_0, ..., a_kmax] of A_N = 1 + sum C(2k,k)/(k!)^N q^k."""
    check_dimension(N)
    if kmax < 0:
        raise ValueError("kmax must be >= 0")
    return [Fraction(comb(2 * k, k), factorial(k) ** N) for k in range(kmax + 1)]


def gw_invariant(N: int, k: int) -> Fraction:
    """I_k(sigma_N psi^{Nk-2})."""
    check_dimension(N)
    if k < 1:
        raise ValueError("k must be >= 1")
    return Fraction(comb(2 * k, k), factorial(k) ** N)


# ---------------------------------------------------------------------------
# recursion


class RecursionInconsistency(AssertionError):
    pass


@dataclass
class BetaTable:
    N: int
    kmax: int
    entries: Dict[Tuple[SchubertClass, int], Fraction] = field(default_factory=dict)

    def __getitem__(self, key: Tuple[ClassLike, int]) -> Fraction:
        ell, k = key
        return self.entries[(as_class(self.N, ell), k)]

    def get(self, ell: ClassLike, k: int) -> Fraction:
        return self[(ell, k)]


def _relations(N: int, k: int, beta) -> List[Tuple[str, Fraction, Fraction]]:
    """(name, lhs, rhs) of the divisor relations at degree k."""
    m = half_index(N)
    b = lambda l, j: beta[(SchubertClass(l), j)]
    out = []
    for l in range(N + 1):
        lhs = k * b(l, k)
        if l == N:
            rhs = b(1, k - 1)
        elif l == N - 1:
            rhs = b(N, k) + b(0, k - 1)
        elif N % 2 and l == m - 1:
            rhs = 2 * b(m, k)
        elif N % 2 == 0 and l == m - 2:
            rhs = b(m - 1, k) + beta[(SchubertClass(m - 1, True), k)]
        else:
            rhs = b(l + 1, k)
        out.append((f"l={l}", lhs, rhs))
    if N % 2 == 0:
        out.append(("l=mid'", k * beta[(SchubertClass(m - 1, True), k)], b(m, k)))
    return out


def beta_recursion(N: int, kmax: int) -> BetaTable:
    """Fill beta_{l,k} for k <= kmax degree by degree.

    Degree 0 is the convention beta_{0,0} = 1, all others 0.  At each
    degree k the relations are solved from l = N downwards; afterwards
    every relation is re-checked, as are the seed beta_{1,1} = 2, the
    empty slot beta_{N,1} = 0 (no psi^{-1}) and, for even N, the symmetry
    beta_{m-1,k} = beta'_{m-1,k}.
    """
    check_dimension(N)
    if kmax < 1:
        raise ValueError("kmax must be >= 1")
    m = half_index(N)
    basis = schubert_basis(N)
    beta: Dict[Tuple[SchubertClass, int], Fraction] = {}
    for c in basis:
        beta[(c, 0)] = Fraction(1 if c == SchubertClass(0) else 0)
    for k in range(1, kmax + 1):
        B = lambda l: beta[(SchubertClass(l), k)]
        beta[(SchubertClass(N), k)] = beta[(SchubertClass(1), k - 1)] / k
        beta[(SchubertClass(N - 1), k)] = (B(N) + beta[(SchubertClass(0), k - 1)]) / k
        for l in range(N - 2, -1, -1):
            if N % 2 and l == m - 1:
                val = 2 * B(m) / k
            elif N % 2 == 0 and l == m - 2:
                prime = SchubertClass(m - 1, True)
                beta[(prime, k)] = B(m) / k
                val = (B(m - 1) + beta[(prime, k)]) / k
            else:
                val = B(l + 1) / k
            beta[(SchubertClass(l), k)] = val
        for name, lhs, rhs in _relations(N, k, beta):
            if lhs != rhs:
                raise RecursionInconsistency(f"N={N}, k={k}, relation {name}: {lhs} != {rhs}")
        if N % 2 == 0 and B(m - 1) != beta[(SchubertClass(m - 1, True), k)]:
            raise RecursionInconsistency(f"N={N}, k={k}: middle classes disagree")
    if beta[(SchubertClass(1), 1)] != 2:
        raise RecursionInconsistency(f"seed beta_(1,1) = {beta[(SchubertClass(1), 1)]}, expected 2")
    if beta[(SchubertClass(N), 1)] != 0:
        raise RecursionInconsistency("beta_(N,1) must vanish")
    return BetaTable(N, kmax, beta)


# ---------------------------------------------------------------------------
# constant term


class HbarExponentViolation(AssertionError):
    """A selection producing q^k uses a number of factors other than kN - l."""


def _split_superpotential(W: LP):
    """Linear part (variable -> coefficient) and q-terms
    (coefficient, exponent map without q)."""
    linear: Dict[str, Fraction] = {}
    qterms: List[Tuple[Fraction, Dict[str, int]]] = []
    for mono, coef in W.items():
        exps = dict(mono)
        qd = exps.pop("q", 0)
        if qd == 0:
            if len(exps) != 1 or next(iter(exps.values())) != 1:
                raise ValueError("q-free terms must be single variables")
            linear[next(iter(exps))] = coef
        elif qd == 1:
            qterms.append((coef, exps))
        else:
            raise ValueError("q-terms must be linear in q")
    return linear, qterms


def _compositions(k: int, parts: int) -> Iterable[Tuple[int, ...]]:
    if parts == 1:
        yield (k,)
        return
    for i in range(k + 1):
        for rest in _compositions(k - i, parts - 1):
            yield (i,) + rest


def constant_term_enumeration(W: LP, weight: LP, k: int, n: int) -> Fraction:
    """Coefficient of q^k in the constant term of weight * W^n / n!.

    Choosing i_j copies of each q-term fixes how often every linear
    variable must be picked; the number of orderings is the multinomial
    n! / (prod n_v! prod i_j!).  Selections that balance but use a total
    other than n are reported, since they would sit at another hbar power.
    """
    linear, qterms = _split_superpotential(W)
    total = Fraction(0)
    for wmono, wcoef in weight.items():
        wexp = dict(wmono)
        if "q" in wexp:
            raise ValueError("weight must not involve q")
        for comp in _compositions(k, len(qterms)):
            need: Dict[str, int] = {}
            for v, e in wexp.items():
                need[v] = need.get(v, 0) - e
            coef = Fraction(wcoef)
            for i, (qc, qe) in zip(comp, qterms):
                coef *= Fraction(qc) ** i
                for v, e in qe.items():
                    need[v] = need.get(v, 0) - i * e
            ok = True
            denom = 1
            count = 0
            for v, cnt in need.items():
                if cnt == 0:
                    continue
                if cnt < 0 or v not in linear:
                    ok = False
                    break
                coef *= Fraction(linear[v]) ** cnt
                denom *= factorial(cnt)
                count += cnt
            if not ok:
                continue
            for i in comp:
                denom *= factorial(i)
            if count + k != n:
                raise HbarExponentViolation(
                    f"balanced selection with {count + k} factors, expected {n}"
                )
            total += coef / denom
    return total


def constant_term_by_expansion(W: LP, weight: LP, k: int, n: int) -> Fraction:
    """Same quantity by brute-force expansion (small cases only)."""
    acc = weight
    for _ in range(n):
        acc = (acc * W).truncate("q", k)
    ct = acc.constant_term([v for v in acc.variables() if v != "q"])
    return ct.coefficient({"q": k}).constant_value() / factorial(n) if not ct.is_zero() else Fraction(0)


def lusztig_weight(N: int, ell: ClassLike) -> LP:
    """p_l (or p'_{m-1}) on the Lusztig torus."""
    c = as_class(N, ell)
    if c.index == 0:
        return LP.const(1)
    name = prime_name(N) if c.prime else p_name(c.index)
    return pluecker_in_lusztig(N)[name].to_laurent()


def constant_term_coefficient(N: int, ell: ClassLike, k: int) -> Fraction:
    check_dimension(N)
    if k < 1:
        raise ValueError("k must be >= 1")
    n = hbar_exponent(N, ell, k)
    if n < 0:
        raise ValueError("kN - l must be >= 0")
    W = lusztig_model(N).superpotential.to_laurent()
    return constant_term_enumeration(W, lusztig_weight(N, ell), k, n)


# ---------------------------------------------------------------------------
# comparison tables


@dataclass(frozen=True)
class CoefficientRow:
    N: int
    ell: SchubertClass
    k: int
    route: str
    value: Fraction
    hbar_exponent: int


def coefficient_rows(
    N: int,
    kmax: int,
    components: Optional[Sequence[ClassLike]] = None,
    routes: Sequence[str] = ROUTES,
) -> List[CoefficientRow]:
    """Rows (N, l, k, route, value, hbar exponent) for 1 <= k <= kmax, in a
    fixed order; constant-term entries are computed concurrently."""
    check_dimension(N)
    for r in routes:
        if r not in ROUTES:
            raise ValueError(f"unknown route {r!r}")
    comps = [as_class(N, c) for c in (components or schubert_basis(N))]
    table = beta_recursion(N, kmax) if "recursion" in routes and kmax >= 1 else None
    keys = [(c, k) for c in comps for k in range(0, kmax + 1)]
    ct_keys = [(c, k) for c, k in keys if k >= 1 and hbar_exponent(N, c, k) >= 0]
    ct_vals = {}
    if "constant-term" in routes:
        vals = _parallel_map(lambda ck: constant_term_coefficient(N, ck[0], ck[1]), ct_keys)
        ct_vals = dict(zip(ct_keys, vals))
    rows = []
    for c, k in keys:
        e = hbar_exponent(N, c, k)
        for r in routes:
            if r == "closed":
                v = closed_form_coefficient(N, c, k)
            elif r == "recursion":
                if table is None:
                    v = closed_form_coefficient(N, c, 0) if k == 0 else None
                else:
                    v = table[(c, k)]
            else:
                if k == 0:
                    # constant term of p_l at q^0: 1 for l = 0, else 0
                    v = Fraction(1 if c == SchubertClass(0) else 0)
                else:
                    v = ct_vals.get((c, k), Fraction(0))
            rows.append(CoefficientRow(N, c, k, r, v, e))
    return rows


def route_disagreements(N: int, kmax: int, components=None) -> List[Tuple[SchubertClass, int, dict]]:
    rows = coefficient_rows(N, kmax, components)
    by: Dict[Tuple[SchubertClass, int], Dict[str, Fraction]] = {}
    for r in rows:
        by.setdefault((r.ell, r.k), {})[r.route] = r.value
    return [(c, k, vals) for (c, k), vals in by.items() if len(set(vals.values())) != 1]


def rows_to_csv(rows: Iterable[CoefficientRow]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["N", "class", "k", "route", "value", "hbar_exponent"])
    for r in rows:
        w.writerow([r.N, str(r.ell), r.k, r.route, str(r.value), r.hbar_exponent])
    return buf.getvalue()


# ---------------------------------------------------------------------------
# the section itself


def assemble_section(N: int, order: int) -> QSeries:
    """sum' <S_N, sigma_l> sigma_{PD(l)} through q^order, without prefactor.
    For even N the two middle classes pair crosswise."""
    check_dimension(N)
    if order < 0:
        raise ValueError("order must be >= 0")
    terms = []
    for k in range(order + 1):
        coefs = {}
        for c in schubert_basis(N):
            v = closed_form_coefficient(N, c, k)
            if v:
                coefs[poincare_dual(N, c)] = LP.monomial({HBAR: -hbar_exponent(N, c, k)}, v)
        terms.append(CohVector(N, coefs))
    return QSeries(N, order, terms)


def flat_section(N: int, order: int) -> QSeries:
    """hbar^{-N} * assemble_section: the hbar part of the (2 pi i hbar)^{-N}
    prefactor is needed by the hbar-equation; the 2 pi i part is not."""
    return assemble_section(N, order).scale(LP.var(HBAR, -N))


def flat_residual(N: int, order: int, section: Optional[QSeries] = None):
    """First nonzero term (direction, q-degree, vector) of the dual
    connection applied to the section, or None when flat."""
    S = section if section is not None else flat_section(N, order)
    for direction in ("q", "hbar"):
        first = dual_dubrovin_apply(N, direction, S).first_nonzero()
        if first is not None:
            return (direction,) + tuple(first)
    return None


def verify_flat(N: int, order: int) -> bool:
    if order < 1:
        raise ValueError("order must be >= 1")
    return flat_residual(N, order) is None
