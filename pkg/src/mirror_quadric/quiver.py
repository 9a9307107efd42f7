"""Superpotential quivers for Q_N, the Gr(2,4) comparison, and the cluster
seed of the even mirror quadric with its exchange relations."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from .cohomology import check_dimension, half_index
from .exact import LaurentPolynomial, RationalFunction, rf_equal
from .lg_models import (
    delta,
    lusztig_model,
    p,
    p_name,
    p_prime,
    pluecker_in_lusztig,
    prime_name,
    quadric_relation,
)

LP = LaurentPolynomial
RF = RationalFunction


@dataclass
class Arrow:
    tail: str
    head: str
    label: Optional[str] = None


@dataclass
class Quiver:
    vertices: List[Tuple[str, str]]  # (name, role) with role in {"source", "sink", "internal"}
    arrows: List[Arrow]

    def vertex_names(self) -> List[str]:
        return [v for v, _ in self.vertices]

    def source(self) -> str:
        return next(v for v, r in self.vertices if r == "source")

    def sink(self) -> str:
        return next(v for v, r in self.vertices if r == "sink")

    def paths(self, start: str, end: str) -> List[List[Arrow]]:
        out = []

        def walk(v, acc):
            if v == end:
                out.append(acc)
                return
            for a in self.arrows:
                if a.tail == v:
                    walk(a.head, acc + [a])

        walk(start, [])
        return out

    def to_dot(self) -> str:
        lines = ["digraph Q {"]
        for v, role in self.vertices:
            shape = {"source": "doublecircle", "sink": "doublecircle"}.get(role, "circle")
            lines.append(f'  "{v}" [shape={shape}];')
        for a in self.arrows:
            attr = f' [label="{a.label}"]' if a.label else ""
            lines.append(f'  "{a.tail}" -> "{a.head}"{attr};')
        lines.append("}")
        return "\n".join(lines) + "\n"


def chain_labels(N: int) -> List[str]:
    """Labels of the N-2 vertical arrows leaving the vertex 1."""
    m = half_index(N)
    if N % 2:
        return [f"a{i}" for i in range(2, m)] + ["c"] + [f"b{i}" for i in range(m - 1, 1, -1)]
    return [f"a{i}" for i in range(2, m - 1)] + ["d", "c"] + [f"b{i}" for i in range(m - 2, 1, -1)]


def quadric_quiver(N: int) -> Quiver:
    """A vertical path from 1 followed by a diamond ending at q.  The diamond
    arrows leaving the path carry b1 and a1; the two arrows into q are
    unlabeled."""
    check_dimension(N)
    labels = chain_labels(N)
    verts = [("1", "source")] + [(f"v{i}", "internal") for i in range(1, len(labels) + 1)]
    arrows = []
    prev = "1"
    for i, lab in enumerate(labels, 1):
        arrows.append(Arrow(prev, f"v{i}", lab))
        prev = f"v{i}"
    verts += [("L", "internal"), ("R", "internal"), ("q", "sink")]
    arrows += [Arrow(prev, "L", "b1"), Arrow(prev, "R", "a1"), Arrow("L", "q"), Arrow("R", "q")]
    return Quiver(verts, arrows)


class InconsistentLabeling(ValueError):
    pass


def solve_unlabeled(qv: Quiver) -> Dict[int, RF]:
    """Labels for unlabeled arrows such that every path from the source to
    the sink has label product q.  Each unlabeled arrow must be the only
    unlabeled arrow on the paths through it."""
    q = RF(LP.var("q"))
    found: Dict[int, RF] = {}
    for path in qv.paths(qv.source(), qv.sink()):
        free = [i for i, a in enumerate(qv.arrows) if a in path and a.label is None]
        prod = RF(1)
        for a in path:
            if a.label is not None:
                prod = prod * LP.var(a.label)
        if len(free) != 1:
            if not free and rf_equal(prod, q):
                continue
            raise InconsistentLabeling("each path needs exactly one unlabeled arrow")
        val = q / prod
        k = free[0]
        if k in found and not rf_equal(found[k], val):
            raise InconsistentLabeling(f"arrow {k} gets two different labels")
        found[k] = val
    return found


def superpotential_from_quiver(qv: Quiver) -> RF:
    solved = solve_unlabeled(qv)
    W = RF(0)
    for i, a in enumerate(qv.arrows):
        W = W + (RF(LP.var(a.label)) if a.label else solved[i])
    return W


def gr24_superpotential() -> RF:
    m1, m2, m3, m4 = (LP.var(f"m{i}") for i in range(1, 5))
    q = LP.var("q")
    return RF(m1 + m2 + m3 + m4) + RF(m1 * m2, m4) + RF(q, m1 * m2 * m3)


def gr24_substitution(perturb: bool = False) -> Dict[str, RF]:
    a1, c, d, b1, q = (LP.var(v) for v in ("a1", "c", "d", "b1", "q"))
    return {
        "m1": RF(q, a1 * c * d),
        "m2": RF(a1**2 if perturb else a1),
        "m3": RF(c),
        "m4": RF(b1),
    }


def gr24_bridge(perturb: bool = False) -> bool:
    lhs = gr24_superpotential().substitute(gr24_substitution(perturb))
    return rf_equal(lhs, lusztig_model(4).superpotential)


def weighted_degrees(f: RF, weights: Dict[str, int]) -> set:
    """Set of weighted degrees of the terms of num minus those of den."""
    deg = lambda mono: sum(weights.get(v, 1) * e for v, e in mono)
    dens = {deg(m) for m, _ in f.den.items()}
    nums = {deg(m) for m, _ in f.num.items()}
    if len(dens) != 1:
        raise ValueError("denominator is not homogeneous")
    (dd,) = dens
    return {n - dd for n in nums}


# ---------------------------------------------------------------------------
# cluster seed (even case, N = 2m-2)


@dataclass
class ClusterSeed:
    m: int
    mutable_vars: List[str]
    frozen_vars: List[str]
    arrows: List[Tuple[str, str]] = field(default_factory=list)

    def to_dict(self):
        return {
            "m": self.m,
            "mutable": self.mutable_vars,
            "frozen": self.frozen_vars,
            "arrows": [list(a) for a in self.arrows],
        }

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=True)

    def is_type_A1_power(self) -> bool:
        mut = set(self.mutable_vars)
        return not any(t in mut and h in mut for t, h in self.arrows)


def initial_seed(m: int) -> ClusterSeed:
    if m < 3:
        raise ValueError("m must be >= 3")
    N = 2 * m - 2
    mut = [p_name(i) for i in range(1, m - 1)]
    frozen = [f"delta{l}" for l in range(1, m - 2)] + [p_name(0), p_name(m - 1), prime_name(N), p_name(N)]
    arrows = [(p_name(0), p_name(1)), (p_name(N), p_name(1))]
    for i in range(1, m - 2):
        arrows += [(p_name(i), f"delta{i}"), (f"delta{i}", p_name(i + 1))]
    arrows += [(p_name(m - 2), p_name(m - 1)), (p_name(m - 2), prime_name(N))]
    return ClusterSeed(m, mut, frozen, arrows)


def exchange_relation(m: int, i: int) -> Tuple[LP, LP]:
    """(p_i p_{2m-2-i}, right-hand side) of the i-th exchange relation, in
    homogeneous Pluecker coordinates."""
    if m < 3 or not 1 <= i <= m - 2:
        raise ValueError(f"exchange relation index {i} out of range for m={m}")
    N = 2 * m - 2
    D = lambda l: p(0) * p(N) if l == 0 else delta(N, l)
    lhs = p(i) * p(N - i)
    if i == m - 2:
        rhs = D(m - 3) + p(m - 1) * p_prime(N)
    else:
        rhs = D(i - 1) + D(i)
    return lhs, rhs


def _on_torus(N: int, f: LP) -> RF:
    img = dict(pluecker_in_lusztig(N))
    img[p_name(0)] = RF(1)
    return RF(f).substitute(img)


def verify_exchange_relations(m: int) -> bool:
    return not failing_exchange_relations(m)


def failing_exchange_relations(m: int) -> List[int]:
    N = 2 * m - 2
    bad = []
    for i in range(1, m - 1):
        lhs, rhs = exchange_relation(m, i)
        if not _on_torus(N, lhs - rhs).is_zero():
            bad.append(i)
    return bad


def delta_monomial_formula(m: int, l: int) -> LP:
    """(a1..a_l)^2 a_{l+1}..a_{m-2} c d b_{m-2}..b_{l+1}."""
    a = lambda i: LP.var(f"a{i}")
    b = lambda i: LP.var(f"b{i}")
    out = LP.var("c") * LP.var("d")
    for i in range(1, m - 1):
        out = out * (a(i) ** 2 if i <= l else a(i))
    for i in range(l + 1, m - 1):
        out = out * b(i)
    return out


def verify_delta_monomials(m: int) -> bool:
    N = 2 * m - 2
    return all(
        rf_equal(_on_torus(N, delta(N, l)), delta_monomial_formula(m, l)) for l in range(1, m - 2)
    )


def quadric_vanishes_on_torus(N: int) -> bool:
    return _on_torus(N, quadric_relation(N)).is_zero()


def last_exchange_is_quadric(m: int) -> bool:
    lhs, rhs = exchange_relation(m, m - 2)
    return (lhs - rhs + quadric_relation(2 * m - 2)).is_zero()
