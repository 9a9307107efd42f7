"""A-model side: Schubert classes of Q_N, the quantum Chevalley operator,
the dual Dubrovin connection and the J-function.

Coefficients are Laurent polynomials in ``hbar`` and the formal log symbol
``L`` (standing for log q, with q d/dq L = 1).  Powers of q are kept
outside the coefficients: a :class:`QSeries` is a list of
:class:`CohVector` indexed by the q-degree.  The (2 pi i hbar)^N type
prefactors are dropped throughout.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Dict, Iterable, List, Mapping, Tuple

from .exact import LaurentPolynomial

HBAR = "hbar"
LOG_Q = "L"


def check_dimension(N: int) -> None:
    if not isinstance(N, int) or N < 3:
        raise ValueError(f"quadric dimension must be an integer >= 3, got {N!r}")


def half_index(N: int) -> int:
    """The m with N = 2m-1 (odd) or N = 2m-2 (even)."""
    return (N + 1) // 2 if N % 2 else (N + 2) // 2


@dataclass(frozen=True, order=True)
class SchubertClass:
    """sigma_index, or the second middle class sigma'_{m-1} when ``prime``."""

    index: int
    prime: bool = False

    def __str__(self):
        return f"s{self.index}'" if self.prime else f"s{self.index}"

    @classmethod
    def parse(cls, text: str) -> "SchubertClass":
        text = text.strip()
        if not text.startswith("s"):
            raise ValueError(f"bad class name {text!r}")
        prime = text.endswith("'")
        return cls(int(text[1:-1] if prime else text[1:]), prime)


def sigma(i: int) -> SchubertClass:
    return SchubertClass(i)


def mid_prime(N: int) -> SchubertClass:
    if N % 2:
        raise ValueError("only even quadrics have a second middle class")
    return SchubertClass(half_index(N) - 1, True)


def schubert_basis(N: int) -> List[SchubertClass]:
    check_dimension(N)
    basis = [SchubertClass(i) for i in range(N + 1)]
    if N % 2 == 0:
        m = half_index(N)
        basis.insert(m, SchubertClass(m - 1, True))
    return basis


def validate_class(N: int, c: SchubertClass) -> None:
    if c not in schubert_basis(N):
        raise ValueError(f"{c} is not a Schubert class of Q_{N}")


def grading(c: SchubertClass) -> int:
    """Complex degree: sigma_i lives in H^{2i}."""
    return c.index


def poincare_dual(N: int, c: SchubertClass) -> SchubertClass:
    validate_class(N, c)
    if N % 2 == 0:
        m = half_index(N)
        if c == SchubertClass(m - 1, True):
            return SchubertClass(m - 1)
        if c == SchubertClass(m - 1):
            return SchubertClass(m - 1, True)
    return SchubertClass(N - c.index)


class CohVector:
    """Finite combination of Schubert classes with Laurent coefficients."""

    __slots__ = ("N", "_coefs")

    def __init__(self, N: int, coefs: Mapping[SchubertClass, object] | None = None):
        self.N = N
        clean = {}
        for c, v in (coefs or {}).items():
            v = LaurentPolynomial.coerce(v)
            if not v.is_zero():
                clean[c] = v
        self._coefs = clean

    @classmethod
    def basis_vector(cls, N: int, c: SchubertClass, coef=1) -> "CohVector":
        return cls(N, {c: coef})

    def __getitem__(self, c: SchubertClass) -> LaurentPolynomial:
        return self._coefs.get(c, LaurentPolynomial.const(0))

    def items(self):
        order = {c: i for i, c in enumerate(schubert_basis(self.N))}
        return sorted(self._coefs.items(), key=lambda kv: order[kv[0]])

    def is_zero(self) -> bool:
        return not self._coefs

    def __add__(self, other: "CohVector") -> "CohVector":
        out = dict(self._coefs)
        for c, v in other._coefs.items():
            out[c] = out[c] + v if c in out else v
        return CohVector(self.N, out)

    def __neg__(self):
        return CohVector(self.N, {c: -v for c, v in self._coefs.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, s) -> "CohVector":
        s = LaurentPolynomial.coerce(s)
        return CohVector(self.N, {c: v * s for c, v in self._coefs.items()})

    def map_coefficients(self, fn) -> "CohVector":
        return CohVector(self.N, {c: fn(v) for c, v in self._coefs.items()})

    def __eq__(self, other):
        if not isinstance(other, CohVector):
            return NotImplemented
        return self.N == other.N and self._coefs == other._coefs

    def to_dict(self):
        return {str(c): v.to_dict() for c, v in self.items()}

    def __repr__(self):
        if not self._coefs:
            return "0"
        return " + ".join(f"({v})*{c}" for c, v in self.items())


def quantum_chevalley_terms(N: int, c: SchubertClass) -> List[Tuple[Fraction, int, SchubertClass]]:
    """sigma_1 * c as a list of (coefficient, q-power, class)."""
    validate_class(N, c)
    i = c.index
    if N % 2:
        m = half_index(N)
        if i == N:
            return [(Fraction(1), 1, sigma(1))]
        if i == N - 1:
            return [(Fraction(1), 0, sigma(N)), (Fraction(1), 1, sigma(0))]
        if i == m - 1:
            return [(Fraction(2), 0, sigma(m))]
        return [(Fraction(1), 0, sigma(i + 1))]
    m = half_index(N)
    if c.prime:
        return [(Fraction(1), 0, sigma(m))]
    if i == N:
        return [(Fraction(1), 1, sigma(1))]
    if i == N - 1:
        return [(Fraction(1), 0, sigma(N)), (Fraction(1), 1, sigma(0))]
    if i == m - 2:
        return [(Fraction(1), 0, sigma(m - 1)), (Fraction(1), 0, mid_prime(N))]
    return [(Fraction(1), 0, sigma(i + 1))]


def quantum_chevalley(N: int, c: SchubertClass) -> CohVector:
    """sigma_1 *_q c, with q appearing inside the coefficients."""
    out: Dict[SchubertClass, LaurentPolynomial] = {}
    for coef, d, cls in quantum_chevalley_terms(N, c):
        term = LaurentPolynomial.monomial({"q": d}, coef)
        out[cls] = out[cls] + term if cls in out else term
    return CohVector(N, out)


def first_chern_times(N: int, v: CohVector) -> CohVector:
    """c_1(TQ_N) * v = N sigma_1 * v."""
    out = CohVector(N)
    for c, coef in v.items():
        out = out + quantum_chevalley(N, c).scale(coef * N)
    return out


class QSeries:
    """Truncated power series sum_{k<=order} q^k S_k with CohVector S_k."""

    __slots__ = ("N", "order", "terms")

    def __init__(self, N: int, order: int, terms: Iterable[CohVector] | None = None):
        self.N = N
        self.order = order
        terms = list(terms or [])
        terms = terms[: order + 1]
        terms += [CohVector(N) for _ in range(order + 1 - len(terms))]
        self.terms = terms

    def __getitem__(self, k: int) -> CohVector:
        return self.terms[k]

    def __add__(self, other: "QSeries") -> "QSeries":
        order = min(self.order, other.order)
        return QSeries(self.N, order, [self.terms[k] + other.terms[k] for k in range(order + 1)])

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, s) -> "QSeries":
        return QSeries(self.N, self.order, [t.scale(s) for t in self.terms])

    def is_zero(self) -> bool:
        return all(t.is_zero() for t in self.terms)

    def first_nonzero(self):
        for k, t in enumerate(self.terms):
            if not t.is_zero():
                return k, t
        return None

    def component(self, c: SchubertClass) -> List[LaurentPolynomial]:
        return [t[c] for t in self.terms]

    def __eq__(self, other):
        if not isinstance(other, QSeries):
            return NotImplemented
        return self.N == other.N and self.order == other.order and self.terms == other.terms

    def to_dict(self):
        rows = []
        for k, t in enumerate(self.terms):
            for c, v in t.items():
                rows.append({"class": str(c), "q": k, "coef": v.to_dict()})
        return {"N": self.N, "order": self.order, "terms": rows}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    def to_csv(self) -> str:
        """Rows are classes, columns are q-powers."""
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["class"] + [f"q^{k}" for k in range(self.order + 1)])
        for c in schubert_basis(self.N):
            w.writerow([str(c)] + [str(t[c]) for t in self.terms])
        return buf.getvalue()

    def __repr__(self):
        return f"QSeries(N={self.N}, order={self.order}, {self.terms})"


def chevalley_on_series(S: QSeries) -> QSeries:
    """sigma_1 * S; quantum terms raise the q-degree and are truncated."""
    out = [CohVector(S.N) for _ in range(S.order + 1)]
    for k, vec in enumerate(S.terms):
        for c, coef in vec.items():
            for a, d, cls in quantum_chevalley_terms(S.N, c):
                if k + d <= S.order:
                    out[k + d] = out[k + d] + CohVector.basis_vector(S.N, cls, coef * a)
    return QSeries(S.N, S.order, out)


def _q_euler(k: int, coef: LaurentPolynomial) -> LaurentPolynomial:
    # q d/dq (q^k f(L)) = q^k (k f + df/dL)
    return coef * k + coef.diff(LOG_Q)


def _hbar_euler(coef: LaurentPolynomial) -> LaurentPolynomial:
    return coef.diff(HBAR) * LaurentPolynomial.var(HBAR)


def grading_operator(S: QSeries) -> QSeries:
    return QSeries(
        S.N,
        S.order,
        [CohVector(S.N, {c: v * grading(c) for c, v in t.items()}) for t in S.terms],
    )


def dual_dubrovin_apply(N: int, direction: str, S: QSeries) -> QSeries:
    """Apply one component of the dual Dubrovin connection to S.

    q:     q d/dq S - (1/hbar) sigma_1 * S
    hbar:  hbar d/dhbar S + (1/hbar) c_1 * S + Gr(S)
    """
    if S.N != N:
        raise ValueError("series belongs to a different quadric")
    inv_hbar = LaurentPolynomial.var(HBAR, -1)
    chev = chevalley_on_series(S)
    if direction == "q":
        deriv = QSeries(
            N, S.order, [t.map_coefficients(lambda v, k=k: _q_euler(k, v)) for k, t in enumerate(S.terms)]
        )
        return deriv - chev.scale(inv_hbar)
    if direction == "hbar":
        deriv = QSeries(N, S.order, [t.map_coefficients(_hbar_euler) for t in S.terms])
        return deriv + chev.scale(inv_hbar * N) + grading_operator(S)
    raise ValueError(f"unknown direction {direction!r}")


def connection_flatness_certificate(N: int, order: int) -> bool:
    """Check that the two dual-connection operators commute on every basis
    class, exactly through q^order."""
    if order < 1:
        raise ValueError("order must be >= 1")
    for c in schubert_basis(N):
        S = QSeries(N, order, [CohVector.basis_vector(N, c)])
        a = dual_dubrovin_apply(N, "q", dual_dubrovin_apply(N, "hbar", S))
        b = dual_dubrovin_apply(N, "hbar", dual_dubrovin_apply(N, "q", S))
        if not (a - b).is_zero():
            return False
    return True


# ---------------------------------------------------------------------------
# J-function in the classical cup ring, where sigma_1^k * sigma_0 is computed
# with the q = 0 Chevalley rule and sigma_1^{N+1} = 0.


def _trunc_mul(a: List[LaurentPolynomial], b: List[LaurentPolynomial], n: int):
    out = [LaurentPolynomial.const(0)] * n
    for i, x in enumerate(a):
        if x.is_zero():
            continue
        for j, y in enumerate(b[: n - i]):
            out[i + j] = out[i + j] + x * y
    return out


def _inverse_linear(shift: LaurentPolynomial, n: int) -> List[LaurentPolynomial]:
    """(x + shift)^{-1} truncated at x^n, for a monomial shift."""
    inv = shift.mono_inverse()
    return [inv**(i + 1) * (-1) ** i for i in range(n)]


def classical_powers(N: int) -> List[CohVector]:
    """sigma_1^k (cup product) for k = 0..N."""
    out = [CohVector.basis_vector(N, sigma(0))]
    for _ in range(N):
        v = CohVector(N)
        for c, coef in out[-1].items():
            for a, d, cls in quantum_chevalley_terms(N, c):
                if d == 0:
                    v = v + CohVector.basis_vector(N, cls, coef * a)
        out.append(v)
    return out


def j_function(N: int, order: int, exponent: int | None = None) -> QSeries:
    """Givental's J-function of Q_N through q^order.

    ``exponent`` is the power of prod (sigma_1 + j hbar) in the denominator;
    the default N+2 is the one compatible with the hypergeometric series.
    """
    check_dimension(N)
    if order < 0:
        raise ValueError("order must be >= 0")
    E = N + 2 if exponent is None else exponent
    n = N + 1
    hbar = LaurentPolynomial.var(HBAR)
    # exp(L x / hbar)
    expo = [
        LaurentPolynomial.monomial({LOG_Q: i, HBAR: -i}, Fraction(1, factorial(i))) for i in range(n)
    ]
    powers = classical_powers(N)
    terms = []
    for d in range(order + 1):
        series = [LaurentPolynomial.const(1)] + [LaurentPolynomial.const(0)] * (n - 1)
        for j in range(1, 2 * d + 1):
            # 2x + j hbar
            series = _trunc_mul(series, [hbar * j, LaurentPolynomial.const(2)], n)
        for j in range(1, d + 1):
            inv = _inverse_linear(hbar * j, n)
            for _ in range(E):
                series = _trunc_mul(series, inv, n)
        series = _trunc_mul(series, expo, n)
        vec = CohVector(N)
        for k, coef in enumerate(series):
            if not coef.is_zero():
                vec = vec + powers[k].scale(coef)
        terms.append(vec)
    return QSeries(N, order, terms)
