"""The four Landau-Ginzburg presentations of the mirror of Q_N and the
changes of coordinates between them.

Variable names: Pluecker coordinates ``p0 .. pN`` (even N also has the
second middle coordinate ``p{m-1}'``), torus coordinates ``z1 .. zN``,
Givental coordinates ``nu1 .. nu{N+2}`` and Lusztig coordinates ``a_i``,
``b_i``, ``c`` and (even N) ``d``.  The canonical models are used in the
affine chart p0 = 1; ``p0`` survives only in :func:`delta` and
:func:`quadric_relation`.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence

from .cohomology import check_dimension, half_index
from .exact import LaurentPolynomial, RationalFunction, rf_equal

LP = LaurentPolynomial
RF = RationalFunction
Q = LP.var("q")


# ---------------------------------------------------------------------------
# symbols


def p_name(i: int) -> str:
    return f"p{i}"


def prime_name(N: int) -> str:
    return f"p{half_index(N) - 1}'"


def p(i: int) -> LP:
    return LP.var(p_name(i))


def p_prime(N: int) -> LP:
    return LP.var(prime_name(N))


def pluecker_names(N: int, with_p0: bool = False) -> List[str]:
    names = [p_name(i) for i in range(0 if with_p0 else 1, N + 1)]
    if N % 2 == 0:
        m = half_index(N)
        names.insert(names.index(p_name(m - 1)) + 1, prime_name(N))
    return names


def lusztig_names(N: int) -> List[str]:
    m = half_index(N)
    if N % 2:
        return [f"a{i}" for i in range(1, m)] + ["c"] + [f"b{i}" for i in range(m - 1, 0, -1)]
    return [f"a{i}" for i in range(1, m - 1)] + ["c", "d"] + [f"b{i}" for i in range(m - 2, 0, -1)]


def _prod(items) -> LP:
    out = LP.const(1)
    for x in items:
        out = out * x
    return out


# ---------------------------------------------------------------------------
# delta and the quadric


def delta(N: int, l: int, p0: bool = True) -> LP:
    """delta_l = sum_{k=0}^{l} (-1)^k p_{l-k} p_{N-l+k}.

    Allowed ranges: 1 <= l <= m-1 (odd); 1 <= l <= m-2 (even).  The even
    value l = m-2 is the alternating sum that equals p_{m-1} p'_{m-1} on
    the quadric.
    """
    check_dimension(N)
    m = half_index(N)
    hi = m - 1 if N % 2 else m - 2
    if not 1 <= l <= hi:
        raise ValueError(f"delta index {l} out of range 1..{hi} for N={N}")
    one = lambda i: LP.const(1) if (i == 0 and not p0) else p(i)
    return sum((one(l - k) * one(N - l + k) * (-1) ** k for k in range(l + 1)), LP.const(0))


def delta0(N: int, p0: bool = True) -> LP:
    """delta_0 = p0 pN, the convention used by the exchange relations."""
    return (p(0) if p0 else LP.const(1)) * p(N)


def quadric_relation(N: int, p0: bool = True) -> LP:
    """Equation of the mirror quadric (even N):
    p_{m-1}p'_{m-1} - p_{m-2}p_m + ... + (-1)^{m-1} p0 p_{2m-2}."""
    if N % 2:
        raise ValueError("the quadric relation exists only for even N")
    m = half_index(N)
    out = p(m - 1) * p_prime(N)
    for k in range(1, m):
        a = LP.const(1) if (m - 1 - k == 0 and not p0) else p(m - 1 - k)
        out = out + a * p(m - 1 + k) * (-1) ** k
    return out


# ---------------------------------------------------------------------------
# models


@dataclass
class TorusChart:
    """Coordinates on a torus chart of the model's domain.

    ``variables`` are the chart coordinates, ``eliminate`` expresses the
    remaining model variables in them, and ``density`` is rho with the
    volume form equal to rho * wedge dlog(variables).
    """

    variables: List[str]
    eliminate: Dict[str, RF] = field(default_factory=dict)
    density: RF = field(default_factory=lambda: RF(1))


@dataclass
class LGModel:
    name: str
    N: int
    variables: List[str]
    superpotential: RF
    constraints: List[LP] = field(default_factory=list)
    chart: Optional[TorusChart] = None

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "N": self.N,
            "vars": list(self.variables),
            "W": self.superpotential.to_dict(),
            "constraints": [c.to_dict() for c in self.constraints],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def canonical_superpotential(N: int) -> RF:
    """W_q in Pluecker coordinates with p0 = 1."""
    check_dimension(N)
    m = half_index(N)
    W = RF(p(1))
    if N % 2:
        for l in range(1, m):
            W = W + RF(p(l + 1) * p(N - l), delta(N, l, p0=False))
    else:
        for l in range(1, m - 2):
            W = W + RF(p(l + 1) * p(N - l), delta(N, l, p0=False))
        W = W + RF(p(m), p(m - 1)) + RF(p(m), p_prime(N))
    return W + RF(Q * p(1), p(N))


def canonical_model(N: int) -> LGModel:
    check_dimension(N)
    names = pluecker_names(N)
    cons = [] if N % 2 else [quadric_relation(N, p0=False)]
    return LGModel("canonical", N, names, canonical_superpotential(N), cons)


def givental_model(N: int) -> LGModel:
    check_dimension(N)
    nu = [LP.var(f"nu{i}") for i in range(1, N + 3)]
    W = RF(sum(nu[:N], LP.const(0)))
    cons = [_prod(nu) - Q, nu[N] + nu[N + 1] - 1]
    # chart nu2..nu_{N+1}; nu_{N+2} = 1 - nu_{N+1}, nu1 = q / prod(rest)
    last = 1 - RF(nu[N])
    rest = _prod(nu[1 : N + 1])
    chart = TorusChart(
        [f"nu{i}" for i in range(2, N + 2)],
        {f"nu{N + 2}": last, "nu1": RF(Q) / (RF(rest) * last)},
        last.inverse(),
    )
    return LGModel("givental", N, [f"nu{i}" for i in range(1, N + 3)], W, cons, chart)


def przyjalkowski_model(N: int) -> LGModel:
    check_dimension(N)
    z = [LP.var(f"z{i}") for i in range(1, N + 1)]
    W = RF(sum(z[: N - 1], LP.const(0))) + RF((z[N - 1] + Q) ** 2, _prod(z))
    names = [f"z{i}" for i in range(1, N + 1)]
    return LGModel("przyjalkowski", N, names, W, [], TorusChart(names))


def lusztig_model(N: int) -> LGModel:
    check_dimension(N)
    names = lusztig_names(N)
    lin = sum((LP.var(v) for v in names), LP.const(0))
    W = RF(lin) + RF(Q * (LP.var("a1") + LP.var("b1")), _prod(LP.var(v) for v in names))
    return LGModel("lusztig", N, names, W, [], TorusChart(list(names)))


MODEL_BUILDERS = {
    "canonical": canonical_model,
    "givental": givental_model,
    "prz": przyjalkowski_model,
    "przyjalkowski": przyjalkowski_model,
    "lusztig": lusztig_model,
}


def build_model(name: str, N: int) -> LGModel:
    try:
        return MODEL_BUILDERS[name](N)
    except KeyError:
        raise ValueError(f"unknown model {name!r}") from None


# ---------------------------------------------------------------------------
# cluster charts of the canonical model


def cluster_chart_canonical(N: int) -> TorusChart:
    """The initial cluster chart of the canonical model (p0 = 1).

    Odd N: p1..p_{m-1}, delta1..delta_{m-1}, pN.  Even N: p1..p_{m-2},
    delta1..delta_{m-3}, p_{m-1}, p'_{m-1}, pN.  The other Pluecker
    coordinates are recovered from the exchange relations
    p_i p_{N-i} = delta_{i-1} + delta_i with delta_0 = pN.
    """
    m = half_index(N)
    dsym = lambda l: RF(LP.var(f"delta{l}")) if l else RF(p(N))
    elim: Dict[str, RF] = {}
    if N % 2:
        for i in range(1, m):
            elim[p_name(N - i)] = (dsym(i - 1) + dsym(i)) / p(i)
        vars_ = [p_name(i) for i in range(1, m)] + [f"delta{l}" for l in range(1, m)] + [p_name(N)]
    else:
        for i in range(1, m - 2):
            elim[p_name(N - i)] = (dsym(i - 1) + dsym(i)) / p(i)
        elim[p_name(m)] = (dsym(m - 3) + RF(p(m - 1) * p_prime(N))) / p(m - 2)
        vars_ = (
            [p_name(i) for i in range(1, m - 1)]
            + [f"delta{l}" for l in range(1, m - 2)]
            + [p_name(m - 1), prime_name(N), p_name(N)]
        )
    return TorusChart(vars_, elim, RF(1))


def delta_symbols_to_pluecker(N: int) -> Dict[str, LP]:
    m = half_index(N)
    top = m if N % 2 else m - 2
    return {f"delta{l}": delta(N, l, p0=False) for l in range(1, top)}


# ---------------------------------------------------------------------------
# coordinate maps


@dataclass
class CoordinateMap:
    """Images of the target variables as rational functions of the source
    variables.  ``chart`` lists the source functions that must not vanish."""

    kind: str
    source: LGModel
    target: LGModel
    images: Dict[str, RF]
    chart: List[LP] = field(default_factory=list)
    notes: str = ""

    def pull_back(self, f) -> RF:
        return RF.coerce(f).substitute(self.images)

    def to_dict(self):
        return {
            "kind": self.kind,
            "source": self.source.name,
            "target": self.target.name,
            "images": {k: v.to_dict() for k, v in sorted(self.images.items())},
        }


def _check_parity(N: int, want_odd: Optional[bool], kind: str):
    if want_odd is True and N % 2 == 0:
        raise ValueError(f"map {kind} needs odd N")
    if want_odd is False and N % 2:
        raise ValueError(f"map {kind} needs even N")


def _prz_to_giv(N: int) -> CoordinateMap:
    z = [None] + [LP.var(f"z{i}") for i in range(1, N + 1)]
    zN_q = z[N] + Q
    im = {"nu1": RF(zN_q**2, _prod(z[1:]))}
    for i in range(2, N + 1):
        im[f"nu{i}"] = RF(z[i - 1])
    im[f"nu{N + 1}"] = RF(z[N], zN_q)
    im[f"nu{N + 2}"] = RF(Q, zN_q)
    return CoordinateMap("prz_to_giv", przyjalkowski_model(N), givental_model(N), im, [zN_q])


def _giv_to_prz(N: int) -> CoordinateMap:
    im = {f"z{i}": RF(LP.var(f"nu{i + 1}")) for i in range(1, N)}
    im[f"z{N}"] = RF(Q * LP.var(f"nu{N + 1}"), LP.var(f"nu{N + 2}"))
    return CoordinateMap("giv_to_prz", givental_model(N), przyjalkowski_model(N), im, [])


def _odd_delta(N: int, l: int) -> RF:
    return RF(delta0(N, p0=False)) if l == 0 else RF(delta(N, l, p0=False))


def _can_to_prz_odd(N: int) -> CoordinateMap:
    m = half_index(N)
    D = lambda l: _odd_delta(N, l)
    P = lambda i: RF(p(i)) if i else RF(1)
    im = {}
    for i in range(1, m):
        im[f"z{i}"] = P(i) / P(i - 1)
    for i in range(m, 2 * m - 2):
        im[f"z{i}"] = P(2 * m - 1 - i) * D(2 * m - 3 - i) / (P(2 * m - 2 - i) * D(2 * m - 2 - i))
    im[f"z{2 * m - 2}"] = RF(Q * p(1), p(N))
    im[f"z{2 * m - 1}"] = RF(Q) * D(m - 2) / D(m - 1)
    atoms = [p(i) for i in range(1, m)] + [delta(N, l, p0=False) for l in range(1, m)] + [p(N)]
    return CoordinateMap("can_to_prz", canonical_model(N), przyjalkowski_model(N), im, atoms)


def _can_to_giv_odd(N: int) -> CoordinateMap:
    m = half_index(N)
    D = lambda l: _odd_delta(N, l)
    P = lambda i: RF(p(i)) if i else RF(1)
    im = {"nu1": P(m) ** 2 / D(m - 1)}
    for i in range(2, m + 1):
        im[f"nu{i}"] = P(i - 1) / P(i - 2)
    for i in range(m + 1, 2 * m - 1):
        im[f"nu{i}"] = P(2 * m - i) * D(2 * m - 2 - i) / (P(2 * m - 1 - i) * D(2 * m - 1 - i))
    im[f"nu{2 * m - 1}"] = RF(Q * p(1), p(N))
    im[f"nu{2 * m}"] = D(m - 2) / (P(m - 1) * P(m))
    im[f"nu{2 * m + 1}"] = D(m - 1) / (P(m - 1) * P(m))
    atoms = [p(i) for i in range(1, m + 1)] + [delta(N, l, p0=False) for l in range(1, m)] + [p(N)]
    return CoordinateMap("can_to_giv", canonical_model(N), givental_model(N), im, atoms)


def _even_delta_rf(N: int, l: int) -> RF:
    """delta_l for even N with p0 = 1; l = 0 gives pN, l = m-2 the
    alternating sum (equal to p_{m-1}p'_{m-1} on the quadric)."""
    return RF(delta0(N, p0=False)) if l == 0 else RF(delta(N, l, p0=False))


def _can_to_prz_even(N: int) -> CoordinateMap:
    m = half_index(N)
    D = lambda l: _even_delta_rf(N, l)
    P = lambda i: RF(p(i)) if i else RF(1)
    im = {}
    for i in range(1, m - 1):
        im[f"z{i}"] = P(i) / P(i - 1)
    for i in range(m - 1, 2 * m - 4):
        im[f"z{i}"] = P(2 * m - 3 - i) * D(2 * m - 5 - i) / (P(2 * m - 4 - i) * D(2 * m - 4 - i))
    im[f"z{2 * m - 4}"] = P(m) / P(m - 1)
    im[f"z{2 * m - 3}"] = RF(p(m), p_prime(N))
    im[f"z{2 * m - 2}"] = RF(Q) * D(m - 3) / D(m - 2)
    atoms = [p(i) for i in range(1, m - 1)] + [p(m)]
    return CoordinateMap("can_to_prz", canonical_model(N), przyjalkowski_model(N), im, atoms)


def _prz_to_can_even(N: int) -> CoordinateMap:
    """Inverse of the even can -> prz map, derived from the exchange
    relations (the printed inverse table does not land on the quadric)."""
    m = half_index(N)
    z = {i: RF(LP.var(f"z{i}")) for i in range(1, N + 1)}
    P: Dict[int, RF] = {0: RF(1)}
    for i in range(1, m - 1):
        P[i] = P[i - 1] * z[i]
    # delta_j = pN * R_j with R_j = prod_{i<=j} p_{i+1} / (p_i z_{2m-4-i})
    R = {0: RF(1)}
    for j in range(1, m - 2):
        R[j] = R[j - 1] * P[j + 1] / (P[j] * z[2 * m - 4 - j])
    zq = z[N] + Q
    top = RF(Q) * z[N] * z[2 * m - 4] * z[2 * m - 3] * P[m - 2] ** 2 / (R[m - 3] * zq**2)
    D = {j: top * R[j] for j in range(m - 2)}
    P[m] = top * R[m - 3] * zq / (z[N] * P[m - 2])
    P[m - 1] = P[m] / z[2 * m - 4]
    prime = P[m] / z[2 * m - 3]
    for i in range(1, m - 2):
        P[N - i] = (D[i - 1] + D[i]) / P[i]
    P[N] = top
    im = {p_name(i): P[i] for i in range(1, N + 1)}
    im[prime_name(N)] = prime
    return CoordinateMap(
        "prz_to_can", przyjalkowski_model(N), canonical_model(N), im, [zq.num],
        notes="derived from the exchange relations",
    )


def printed_prz_to_can_even(N: int) -> Dict[str, RF]:
    """The inverse table exactly as printed; kept to document that it does
    not satisfy the quadric relation."""
    m = half_index(N)
    z = {i: RF(LP.var(f"z{i}")) for i in range(1, N + 1)}
    pre = lambda k: _prod_rf(z[j] for j in range(1, k + 1))
    zq = z[N] + Q
    im = {}
    for i in range(1, m - 1):
        im[p_name(i)] = pre(i)
    im[p_name(m - 1)] = RF(Q) * pre(m - 2) * z[2 * m - 3] / z[N]
    im[p_name(m)] = RF(Q) * pre(m - 2) * z[2 * m - 4] * z[2 * m - 3] / z[N]
    for i in range(m + 1, 2 * m - 2):
        im[p_name(i)] = (
            RF(Q) * pre(i - 2) * (1 + z[2 * m - 1 - i] / z[i - 2]) * z[2 * m - 4] * z[2 * m - 3] / zq
        )
    im[p_name(N)] = RF(Q) * pre(2 * m - 3) * z[1] / zq
    im[prime_name(N)] = RF(Q) * pre(m - 2) * z[2 * m - 4] / z[N]
    return im


def _prod_rf(items) -> RF:
    out = RF(1)
    for x in items:
        out = out * x
    return out


def _compose(first: CoordinateMap, second: CoordinateMap, kind: str) -> CoordinateMap:
    im = {k: v.substitute(first.images) for k, v in second.images.items()}
    return CoordinateMap(kind, first.source, second.target, im, list(first.chart))


def pluecker_in_lusztig(N: int) -> Dict[str, RF]:
    """Pluecker coordinates (p0 = 1) as Laurent polynomials on the Lusztig
    torus.  Even N follows the unipotent factorization; the odd images are
    the analogous factorization, validated by pulling back W_q."""
    m = half_index(N)
    a = lambda i: LP.var(f"a{i}")
    b = lambda i: LP.var(f"b{i}")
    c, d = LP.var("c"), LP.var("d")
    A = lambda k: _prod(a(i) for i in range(1, k + 1))
    out: Dict[str, LP] = {}
    if N % 2:
        for k in range(1, m):
            out[p_name(k)] = A(k - 1) * (a(k) + b(k))
        out[p_name(m)] = A(m - 1) * c
        for k in range(m + 1, N + 1):
            out[p_name(k)] = A(m - 1) * c * _prod(b(j) for j in range(2 * m - k, m))
    else:
        for k in range(1, m - 1):
            out[p_name(k)] = A(k - 1) * (a(k) + b(k))
        out[p_name(m - 1)] = A(m - 2) * c
        out[prime_name(N)] = A(m - 2) * d
        out[p_name(m)] = A(m - 2) * c * d
        for k in range(m + 1, N + 1):
            out[p_name(k)] = A(m - 2) * c * d * _prod(b(j) for j in range(2 * m - 1 - k, m - 1))
    return {k: RF(v) for k, v in out.items()}


def _pluecker_in_lusztig_map(N: int) -> CoordinateMap:
    return CoordinateMap(
        "pluecker_in_lusztig", lusztig_model(N), canonical_model(N), pluecker_in_lusztig(N), []
    )


MAP_KINDS = {
    "prz_to_giv": (None, _prz_to_giv),
    "giv_to_prz": (None, _giv_to_prz),
    "can_to_prz_odd": (True, _can_to_prz_odd),
    "can_to_giv_odd": (True, _can_to_giv_odd),
    "can_to_prz_even": (False, _can_to_prz_even),
    "prz_to_can_even": (False, _prz_to_can_even),
    "can_to_giv_even": (False, lambda N: _compose(_can_to_prz_even(N), _prz_to_giv(N), "can_to_giv")),
    "pluecker_in_lusztig": (None, _pluecker_in_lusztig_map),
}


def coordinate_map(kind: str, N: int) -> CoordinateMap:
    check_dimension(N)
    if kind not in MAP_KINDS:
        raise ValueError(f"unknown map kind {kind!r}")
    parity, builder = MAP_KINDS[kind]
    _check_parity(N, parity, kind)
    return builder(N)


def map_kinds_for(N: int) -> List[str]:
    odd = N % 2 == 1
    return [k for k, (par, _) in MAP_KINDS.items() if par is None or par == odd]


# ---------------------------------------------------------------------------
# verification


class PullbackFailure(AssertionError):
    def __init__(self, kind, what, lhs, rhs):
        self.kind, self.what, self.lhs, self.rhs = kind, what, lhs, rhs
        super().__init__(
            f"{kind}: {what} failed\n lhs = {json.dumps(RF.coerce(lhs).to_dict())}\n"
            f" rhs = {json.dumps(RF.coerce(rhs).to_dict())}"
        )


def _to_lusztig(N: int):
    return pluecker_in_lusztig(N)


def verify_pullback_report(kind: str, N: int) -> None:
    """Raise :class:`PullbackFailure` on the first failing identity."""
    cmap = coordinate_map(kind, N)
    src, tgt = cmap.source, cmap.target
    lhs = cmap.pull_back(tgt.superpotential)
    rhs = src.superpotential
    pulled_constraints = [cmap.pull_back(c) for c in tgt.constraints]
    if kind == "giv_to_prz":
        # the source is constrained: parametrize it by the prz torus
        param = _prz_to_giv(N).images
        lhs, rhs = lhs.substitute(param), rhs.substitute(param)
        pulled_constraints = []
        back = {k: v.substitute(param) for k, v in cmap.images.items()}
        for k, v in back.items():
            if not rf_equal(v, LP.var(k)):
                raise PullbackFailure(kind, f"round trip {k}", v, LP.var(k))
    if src.name == "canonical" and N % 2 == 0:
        lus = _to_lusztig(N)
        lhs, rhs = lhs.substitute(lus), rhs.substitute(lus)
        pulled_constraints = [c.substitute(lus) for c in pulled_constraints]
        for c in src.constraints:
            v = RF(c).substitute(lus)
            if not v.is_zero():
                raise PullbackFailure(kind, "source quadric on Lusztig torus", v, 0)
    if not rf_equal(lhs, rhs):
        raise PullbackFailure(kind, "superpotential", lhs, rhs)
    for i, c in enumerate(pulled_constraints):
        if not c.is_zero():
            raise PullbackFailure(kind, f"constraint {i}", c, 0)
    if kind == "prz_to_can_even":
        back = _can_to_prz_even(N).images
        for k, v in back.items():
            w = v.substitute(cmap.images)
            if not rf_equal(w, LP.var(k)):
                raise PullbackFailure(kind, f"round trip {k}", w, LP.var(k))


def verify_pullback(kind: str, N: int) -> bool:
    try:
        verify_pullback_report(kind, N)
    except PullbackFailure:
        return False
    return True


# ---------------------------------------------------------------------------
# log-Jacobians


def _det(matrix: List[List[RF]]) -> RF:
    """Fraction-free enough Gaussian elimination over rational functions."""
    M = [row[:] for row in matrix]
    n = len(M)
    det = RF(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if not M[r][col].is_zero()), None)
        if piv is None:
            return RF(0)
        if piv != col:
            M[col], M[piv] = M[piv], M[col]
            det = -det
        pv = M[col][col]
        det = det * pv
        inv = pv.inverse()
        for r in range(col + 1, n):
            if M[r][col].is_zero():
                continue
            f = M[r][col] * inv
            M[r] = [M[r][k] - f * M[col][k] if k > col else RF(0) for k in range(n)]
    return det


def log_jacobian_matrix(source_vars: Sequence[str], images: Sequence[RF]) -> List[List[RF]]:
    rows = []
    for s in source_vars:
        sv = LP.var(s)
        rows.append([RF(sv) * t.diff(s) / t for t in images])
    return rows


def log_jacobian_det(cmap: CoordinateMap) -> RF:
    """det(d log t_j / d log s_i) times rho_target / rho_source, computed on
    the torus charts of source and target."""
    src, tgt = cmap.source, cmap.target
    s_chart, t_chart = _chart_of(src), _chart_of(tgt)
    # target chart coordinates as functions of source model variables
    coords = chart_coordinate_functions(tgt)
    imgs = {v: coords[v].substitute(cmap.images) for v in t_chart.variables}
    # express through the source chart
    to_chart = s_chart.eliminate
    t_in_s = [imgs[v].substitute(to_chart) if to_chart else imgs[v] for v in t_chart.variables]
    if len(t_in_s) != len(s_chart.variables):
        raise ValueError("source and target charts have different dimensions")
    det = _det(log_jacobian_matrix(s_chart.variables, t_in_s))
    rho_t = t_chart.density.substitute({k: v for k, v in cmap.images.items()})
    if to_chart:
        rho_t = rho_t.substitute(to_chart)
    rho_s = s_chart.density
    return det * rho_t / rho_s


def chart_coordinate_functions(model: LGModel) -> Dict[str, RF]:
    """Chart coordinates of ``model`` as functions of its variables."""
    chart = _chart_of(model)
    out = {}
    for v in chart.variables:
        if v.startswith("delta"):
            out[v] = RF(delta(model.N, int(v[5:]), p0=False))
        else:
            out[v] = RF(LP.var(v))
    return out


def _chart_of(model: LGModel) -> TorusChart:
    if model.chart is not None:
        return model.chart
    if model.name == "canonical":
        return _canonical_chart_with_deltas(model.N)
    raise ValueError(f"model {model.name} has no torus chart")


def _canonical_chart_with_deltas(N: int) -> TorusChart:
    """Cluster chart of the canonical model, with the eliminated Pluecker
    coordinates written in the chart variables."""
    return cluster_chart_canonical(N)


def identity_map(model: LGModel) -> CoordinateMap:
    return CoordinateMap("identity", model, model, {v: RF(LP.var(v)) for v in model.variables})
