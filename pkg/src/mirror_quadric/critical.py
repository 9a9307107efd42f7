"""Closed-form critical points of the canonical superpotential W_q.

The main family lives over Q(q)[zeta]/(zeta^N - 4q) and the exceptional
points over Q(q)[s]/(s^2 - q).  Both moduli are irreducible over Q(q)
(Eisenstein at q), so a nonzero element is invertible and criticality
reduces to checking that a numerator vanishes while its denominator does
not.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence

from .cohomology import check_dimension, half_index
from .exact import LaurentPolynomial, RationalFunction
from .lg_models import (
    canonical_superpotential,
    coordinate_map,
    delta,
    p,
    p_name,
    pluecker_in_lusztig,
    prime_name,
    quadric_relation,
)

LP = LaurentPolynomial
RF = RationalFunction
Q = LP.var("q")


class QuotientElement:
    """Element of Q(q)[x]/(x^n - c) with c a monomial in q.

    Coefficients are Laurent polynomials in q; this is enough for every
    point we build, and keeps equality canonical.
    """

    __slots__ = ("alg", "coefs")

    def __init__(self, alg: "QuotientAlgebra", coefs: Sequence):
        self.alg = alg
        coefs = [LP.coerce(c) for c in coefs]
        if len(coefs) > alg.n:
            coefs = alg._reduce(coefs)
        self.coefs = tuple(coefs) + (LP.const(0),) * (alg.n - len(coefs))

    def _lift(self, other) -> "QuotientElement":
        if isinstance(other, QuotientElement):
            if other.alg != self.alg:
                raise TypeError("elements of different algebras")
            return other
        return self.alg.scalar(other)

    def __add__(self, other):
        o = self._lift(other)
        return QuotientElement(self.alg, [a + b for a, b in zip(self.coefs, o.coefs)])

    __radd__ = __add__

    def __neg__(self):
        return QuotientElement(self.alg, [-a for a in self.coefs])

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        o = self._lift(other)
        n = self.alg.n
        prod = [LP.const(0)] * (2 * n - 1)
        for i, a in enumerate(self.coefs):
            if a.is_zero():
                continue
            for j, b in enumerate(o.coefs):
                if not b.is_zero():
                    prod[i + j] = prod[i + j] + a * b
        return QuotientElement(self.alg, self.alg._reduce(prod))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        out, base = self.alg.one(), self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coefs)

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        try:
            o = self._lift(other)
        except TypeError:
            return NotImplemented
        return self.coefs == o.coefs

    def __hash__(self):
        return hash((self.alg.gen, self.coefs))

    def inverse(self) -> "QuotientElement":
        """Inverse of a monomial element a(q) x^k with a a monomial."""
        nz = [(k, c) for k, c in enumerate(self.coefs) if not c.is_zero()]
        if len(nz) != 1 or not nz[0][1].is_monomial():
            raise ZeroDivisionError(f"only monomial elements are inverted here, got {self}")
        k, c = nz[0]
        alg = self.alg
        if k == 0:
            return alg.scalar(c.mono_inverse())
        coefs = [LP.const(0)] * alg.n
        coefs[alg.n - k] = c.mono_inverse() * alg.relation.mono_inverse()
        return QuotientElement(alg, coefs)

    def to_dict(self):
        return {f"{self.alg.gen}^{k}": c.to_dict() for k, c in enumerate(self.coefs) if not c.is_zero()}

    def __str__(self):
        parts = []
        for k, c in enumerate(self.coefs):
            if c.is_zero():
                continue
            g = "" if k == 0 else (self.alg.gen if k == 1 else f"{self.alg.gen}^{k}")
            cs = str(c)
            if not g:
                parts.append(cs)
            elif cs == "1":
                parts.append(g)
            else:
                parts.append(f"({cs})*{g}")
        return " + ".join(parts) if parts else "0"

    __repr__ = __str__


@dataclass(frozen=True)
class QuotientAlgebra:
    gen: str
    n: int
    relation: LP  # gen^n = relation

    def _reduce(self, coefs: List[LP]) -> List[LP]:
        coefs = list(coefs)
        for i in range(len(coefs) - 1, self.n - 1, -1):
            c = coefs[i]
            if not c.is_zero():
                coefs[i - self.n] = coefs[i - self.n] + c * self.relation
            coefs[i] = LP.const(0)
        return coefs[: self.n]

    def scalar(self, c) -> QuotientElement:
        return QuotientElement(self, [LP.coerce(c)])

    def one(self) -> QuotientElement:
        return self.scalar(1)

    def generator(self) -> QuotientElement:
        return QuotientElement(self, [0, 1])

    def __hash__(self):
        return hash((self.gen, self.n))

    def __eq__(self, other):
        return isinstance(other, QuotientAlgebra) and (self.gen, self.n, self.relation) == (
            other.gen,
            other.n,
            other.relation,
        )


def root_algebra(N: int) -> QuotientAlgebra:
    """Q(q)[zeta]/(zeta^N - 4q)."""
    check_dimension(N)
    return QuotientAlgebra("zeta", N, 4 * Q)


SQRT_Q = QuotientAlgebra("s", 2, Q)


def sqrt_algebra(N: int) -> QuotientAlgebra:
    """Algebra of the even exceptional points: s^2 = (-1)^m q.

    On the quadric p_{m-1} p'_{m-1} = (-1)^{m-1} q there, and criticality
    needs p'_{m-1} = -p_{m-1}, so p_{m-1}^2 = (-1)^m q.  For odd m this is
    a square root of -q rather than of q.
    """
    m = half_index(N)
    return SQRT_Q if m % 2 == 0 else QuotientAlgebra("s", 2, -Q)


def _invert(x):
    return x.inverse() if isinstance(x, QuotientElement) else 1 / x


def evaluate_at(f, point: Dict[str, QuotientElement]):
    """(numerator, denominator) of ``f`` at ``point`` inside the point's algebra.
    ``q`` is carried by the coefficients and must not be assigned."""
    f = RF.coerce(f)
    alg = next(iter(point.values())).alg
    values = dict(point)
    values["q"] = alg.scalar(Q)
    return f.evaluate_pair(values, one=alg.one(), invert=_invert)


@dataclass
class CriticalPoint:
    label: str
    coords: Dict[str, QuotientElement]
    multiplicity: int = 1

    @property
    def algebra(self) -> QuotientAlgebra:
        return next(iter(self.coords.values())).alg

    def to_dict(self):
        return {
            "label": self.label,
            "algebra": f"{self.algebra.gen}^{self.algebra.n} = {self.algebra.relation}",
            "multiplicity": self.multiplicity,
            "coords": {k: str(v) for k, v in self.coords.items()},
        }


@dataclass
class CriticalPointSet:
    N: int
    main_family: CriticalPoint
    extra_points: List[CriticalPoint] = field(default_factory=list)

    def points(self) -> List[CriticalPoint]:
        return [self.main_family] + self.extra_points

    def count(self) -> int:
        return sum(pt.multiplicity for pt in self.points())

    def to_dict(self):
        return {"N": self.N, "count": self.count(), "points": [pt.to_dict() for pt in self.points()]}


def _coordinate_names(N: int) -> List[str]:
    m = half_index(N)
    names = [p_name(j) for j in range(1, N + 1)]
    if N % 2 == 0:
        names.insert(m - 1, prime_name(N))
    return names


def closed_form_critical_points(N: int) -> CriticalPointSet:
    """Main family over the zeta-algebra plus the exceptional points.

    For even N the exceptional points have p_{m-1} = -p'_{m-1} = +-s over
    the algebra of ``sqrt_algebra``.
    """
    check_dimension(N)
    m = half_index(N)
    Z = root_algebra(N)
    z = Z.generator()
    half = Fraction(1, 2)
    main: Dict[str, QuotientElement] = {}
    if N % 2:
        for j in range(1, m):
            main[p_name(j)] = z**j
        for j in range(m, 2 * m - 1):
            main[p_name(j)] = (z**j) * half
        main[p_name(N)] = Z.scalar(Q)
        zero = SQRT_Q.scalar(0)
        extra = {p_name(j): zero for j in range(1, N)}
        extra[p_name(N)] = SQRT_Q.scalar(-Q)
        extras = [CriticalPoint("extra", extra)]
    else:
        for j in range(1, m - 1):
            main[p_name(j)] = z**j
        for j in range(m - 1, 2 * m - 2):
            main[p_name(j)] = (z**j) * half
        main[prime_name(N)] = (z ** (m - 1)) * half
        main[p_name(N)] = Z.scalar(Q)
        S = sqrt_algebra(N)
        s = S.generator()
        extras = []
        for sign, lab in ((1, "extra+"), (-1, "extra-")):
            pt = {name: S.scalar(0) for name in _coordinate_names(N)}
            pt[p_name(m - 1)] = s * sign
            pt[prime_name(N)] = s * (-sign)
            pt[p_name(N)] = S.scalar(-Q)
            extras.append(CriticalPoint(lab, pt))
    main = {k: main[k] for k in _coordinate_names(N)}
    return CriticalPointSet(N, CriticalPoint("main", main, multiplicity=N), extras)


def printed_even_extra_points(N: int) -> List[Dict[str, QuotientElement]]:
    """Exceptional even points read literally, with p_{m-1} = +-sqrt(q)
    (s^2 = q) for every m.  Off the quadric when m is odd."""
    m = half_index(N)
    s = SQRT_Q.generator()
    pts = []
    for sign in (1, -1):
        pt = {name: SQRT_Q.scalar(0) for name in _coordinate_names(N)}
        pt[p_name(m - 1)] = s * sign
        pt[prime_name(N)] = s * (-sign)
        pt[p_name(N)] = SQRT_Q.scalar(-Q)
        pts.append(pt)
    return pts


def on_quadric(N: int, point: Dict[str, QuotientElement]) -> bool:
    if N % 2:
        return True
    num, _ = evaluate_at(RF(quadric_relation(N, p0=False)), point)
    return num.is_zero()


def restricted_superpotential(N: int) -> RF:
    """W_q, with p'_{m-1} eliminated through the quadric for even N."""
    W = canonical_superpotential(N)
    if N % 2:
        return W
    m = half_index(N)
    rest = quadric_relation(N, p0=False) - p(m - 1) * LP.var(prime_name(N))
    return W.substitute({prime_name(N): RF(-rest, p(m - 1))})


def affine_coordinates(N: int) -> List[str]:
    return [p_name(j) for j in range(1, N + 1)]


class CriticalityFailure(AssertionError):
    pass


def gradient_report(N: int, point: Dict[str, QuotientElement]) -> Dict[str, str]:
    """Partial derivatives of the restricted W at ``point`` (as strings);
    raises if a denominator vanishes."""
    W = restricted_superpotential(N)
    out = {}
    for v in affine_coordinates(N):
        num, den = evaluate_at(W.diff(v), point)
        if den.is_zero():
            raise CriticalityFailure(f"dW/d{v} has a vanishing denominator at the point")
        out[v] = str(num)
    return out


def _check_point(N: int, point: Dict[str, QuotientElement], W: RF) -> Optional[str]:
    if not on_quadric(N, point):
        return "point is not on the quadric"
    for v in affine_coordinates(N):
        num, den = evaluate_at(W.diff(v), point)
        if den.is_zero():
            return f"dW/d{v}: denominator vanishes"
        if not num.is_zero():
            return f"dW/d{v} = ({num}) / ({den})"
    return None


def verify_criticality(N: int) -> bool:
    """True when the gradient vanishes at every closed-form point; raises
    CriticalityFailure naming the first nonvanishing partial."""
    W = restricted_superpotential(N)
    for pt in closed_form_critical_points(N).points():
        err = _check_point(N, pt.coords, W)
        if err:
            raise CriticalityFailure(f"N={N}, {pt.label}: {err}")
    return True


def critical_values(N: int) -> List[QuotientElement]:
    """W at each point: N*zeta for the main family, 0 at the extra points."""
    W = canonical_superpotential(N)
    out = []
    for pt in closed_form_critical_points(N).points():
        num, den = evaluate_at(W, pt.coords)
        if den.is_zero():
            raise CriticalityFailure(f"W has a pole at {pt.label}")
        # den is a nonzero element of a field; return num/den when den is a
        # monomial, else certify against the expected value
        alg = pt.algebra
        expected = (alg.generator() * N) if pt.label == "main" else alg.scalar(0)
        if num != expected * den:
            raise CriticalityFailure(f"critical value at {pt.label} differs from {expected}")
        out.append(expected)
    return out


def deltas_at_main_family(N: int) -> Dict[str, QuotientElement]:
    """delta_l at the main family as elements of the zeta-algebra (odd N)."""
    m = half_index(N)
    pt = closed_form_critical_points(N).main_family.coords
    hi = m if N % 2 else m - 2
    out = {}
    for l in range(1, hi):
        num, _ = evaluate_at(RF(delta(N, l, p0=False)), pt)
        out[f"delta{l}"] = num
    return out


# ---------------------------------------------------------------------------
# chart membership


def _lusztig_inverse(N: int) -> Dict[str, RF]:
    """Lusztig coordinates as rational functions of the Pluecker
    coordinates (p0 = 1), inverting the torus parametrization."""
    m = half_index(N)
    P = lambda i: RF(p(i)) if i else RF(1)
    out: Dict[str, RF] = {}
    A = RF(1)
    last_a = m - 1 if N % 2 else m - 2
    # b's from ratios of consecutive top coordinates
    if N % 2:
        for k in range(m + 1, N + 1):
            out[f"b{2 * m - k}"] = P(k) / P(k - 1)
    else:
        for k in range(m + 1, N + 1):
            out[f"b{2 * m - 1 - k}"] = P(k) / P(k - 1)
    for k in range(1, last_a + 1):
        out[f"a{k}"] = P(k) / A - out[f"b{k}"]
        A = A * out[f"a{k}"]
    if N % 2:
        out["c"] = P(m) / A
    else:
        out["c"] = P(m - 1) / A
        out["d"] = RF(LP.var(prime_name(N))) / A
    return out


def chart_requirements(N: int) -> Dict[str, Dict[str, RF]]:
    """For each torus chart, the chart coordinates as functions on the
    canonical domain.  A point lies in the chart when every one of them is
    defined and nonzero."""
    par = "odd" if N % 2 else "even"
    return {
        "prz": coordinate_map(f"can_to_prz_{par}", N).images,
        "giv": coordinate_map(f"can_to_giv_{par}", N).images,
        "lus": _lusztig_inverse(N),
    }


def chart_membership(N: int, point: Dict[str, QuotientElement]) -> Dict[str, bool]:
    """Membership of ``point`` in the Przyjalkowski, Givental and Lusztig
    tori.  For the Lusztig torus the recovered coordinates must also map
    back to the point."""
    report = {}
    for chart, funcs in chart_requirements(N).items():
        ok = True
        values = {}
        for name, f in funcs.items():
            try:
                num, den = evaluate_at(f, point)
            except ZeroDivisionError:
                ok = False
                break
            if den.is_zero() or num.is_zero():
                ok = False
                break
            values[name] = (num, den)
        if ok and chart == "lus":
            ok = _lusztig_reproduces(N, point, values)
        report[chart] = ok
    return report


def _lusztig_reproduces(N: int, point, values) -> bool:
    """Forward map check.  At the closed-form points every Lusztig
    coordinate has a monomial denominator, so it can be inverted here."""
    coords = {k: n * d.inverse() for k, (n, d) in values.items()}
    for name, img in pluecker_in_lusztig(N).items():
        num, den = evaluate_at(img, coords)
        if num != point[name] * den:
            return False
    return True


def membership_report(N: int) -> Dict[str, Dict[str, bool]]:
    pts = closed_form_critical_points(N)
    return {pt.label: chart_membership(N, pt.coords) for pt in pts.points()}


def membership_claims_hold(N: int) -> bool:
    """Main family in every chart; extra points in none."""
    rep = membership_report(N)
    for label, charts in rep.items():
        want = label == "main"
        if any(v != want for v in charts.values()):
            return False
    return True


def critical_report(N: int) -> dict:
    pts = closed_form_critical_points(N)
    verify_criticality(N)
    vals = critical_values(N)
    return {
        "N": N,
        "count": pts.count(),
        "points": [pt.to_dict() for pt in pts.points()],
        "values": [str(v) for v in vals],
        "chart_membership": membership_report(N),
    }


def critical_report_json(N: int) -> str:
    return json.dumps(critical_report(N), sort_keys=True, indent=2)
