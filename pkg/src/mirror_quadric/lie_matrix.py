"""Matrix computations in SO_{2m} for the even mirror: Chevalley generators,
the factored unipotent element u2, Pluecker coordinates from its bottom row
and the ordinary-minor identities.  Indices are 1-based like the usual
matrix units E_{ij}."""

from __future__ import annotations

import json
from functools import lru_cache
from typing import Dict, List, Sequence, Tuple

from .exact import LaurentPolynomial
from .lg_models import p_name, pluecker_in_lusztig, prime_name

LP = LaurentPolynomial


class PolyMatrix:
    """Square matrix with Laurent polynomial entries (1-based access)."""

    __slots__ = ("n", "rows")

    def __init__(self, rows: Sequence[Sequence]):
        self.rows = [[LP.coerce(x) for x in r] for r in rows]
        self.n = len(self.rows)

    @classmethod
    def identity(cls, n: int) -> "PolyMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def unit(cls, n: int, i: int, j: int) -> "PolyMatrix":
        rows = [[0] * n for _ in range(n)]
        rows[i - 1][j - 1] = 1
        return cls(rows)

    def __getitem__(self, ij: Tuple[int, int]) -> LP:
        i, j = ij
        return self.rows[i - 1][j - 1]

    def __add__(self, other):
        return PolyMatrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def scale(self, t) -> "PolyMatrix":
        t = LP.coerce(t)
        return PolyMatrix([[a * t for a in r] for r in self.rows])

    def __mul__(self, other: "PolyMatrix") -> "PolyMatrix":
        n = self.n
        cols = [[other.rows[k][j] for k in range(n)] for j in range(n)]
        out = []
        for r in self.rows:
            row = []
            for col in cols:
                acc = LP.const(0)
                for a, b in zip(r, col):
                    if a and b:
                        acc = acc + a * b
                row.append(acc)
            out.append(row)
        return PolyMatrix(out)

    def transpose(self) -> "PolyMatrix":
        return PolyMatrix([list(c) for c in zip(*self.rows)])

    def __eq__(self, other):
        return isinstance(other, PolyMatrix) and self.rows == other.rows

    def is_zero(self) -> bool:
        return all(x.is_zero() for r in self.rows for x in r)

    def apply(self, vec: Sequence) -> List[LP]:
        return [sum((a * LP.coerce(v) for a, v in zip(r, vec)), LP.const(0)) for r in self.rows]

    def to_dict(self):
        return {"size": self.n, "rows": [[x.to_dict() for x in r] for r in self.rows]}

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=True)


def _check_m(m: int):
    if not isinstance(m, int) or m < 3:
        raise ValueError("m must be an integer >= 3")


def chevalley_generators(m: int) -> Tuple[List[PolyMatrix], List[PolyMatrix]]:
    """(e_1..e_m, f_1..f_m) as 2m x 2m matrices; index 0 of each list is e_1."""
    _check_m(m)
    n = 2 * m
    E = lambda i, j: PolyMatrix.unit(n, i, j)
    es = [E(i, i + 1) + E(n - i, n - i + 1) for i in range(1, m)]
    es.append(E(m - 1, m + 1) + E(m, m + 2))
    return es, [e.transpose() for e in es]


def one_param_subgroup(m: int, i: int, t, lower: bool = True) -> PolyMatrix:
    """y_i(t) = I + t f_i (lower) or x_i(t) = I + t e_i; exact since the
    generators square to zero."""
    es, fs = chevalley_generators(m)
    if not 1 <= i <= m:
        raise ValueError(f"generator index {i} out of range")
    g = fs[i - 1] if lower else es[i - 1]
    return PolyMatrix.identity(2 * m) + g.scale(t)


def quadratic_form(m: int) -> PolyMatrix:
    n = 2 * m
    return PolyMatrix(
        [[(-1) ** max(i, j) if i + j == n + 1 else 0 for j in range(1, n + 1)] for i in range(1, n + 1)]
    )


def factor_word(m: int) -> List[Tuple[int, str]]:
    """(generator index, Lusztig variable) in the order of the product."""
    word = [(i, f"a{i}") for i in range(1, m - 1)]
    word += [(m, "d"), (m - 1, "c")]
    word += [(i, f"b{i}") for i in range(m - 2, 0, -1)]
    return word


def factored_u2(m: int) -> PolyMatrix:
    _check_m(m)
    out = PolyMatrix.identity(2 * m)
    for i, v in factor_word(m):
        out = out * one_param_subgroup(m, i, LP.var(v))
    return out


def simple_reflection(m: int, i: int) -> PolyMatrix:
    """s_i representative y_i(-1) x_i(1) y_i(-1)."""
    y = one_param_subgroup(m, i, -1)
    return y * one_param_subgroup(m, i, 1, lower=False) * y


def weyl_words(m: int) -> Dict[str, List[int]]:
    """Reduced words (leftmost letter first) for the minimal coset
    representatives attached to the Pluecker coordinates."""
    N = 2 * m - 2
    down = lambda k: list(range(k, 0, -1))  # s_k ... s_1
    words = {p_name(0): []}
    for k in range(1, m - 1):
        words[p_name(k)] = down(k)
    words[p_name(m - 1)] = down(m - 1)
    words[prime_name(N)] = [m] + down(m - 2)
    words[p_name(m)] = [m] + down(m - 1)
    for k in range(m + 1, N + 1):
        words[p_name(k)] = list(range(2 * m - 1 - k, m - 1)) + [m] + down(m - 1)
    return words


@lru_cache(maxsize=None)
def bottom_row_columns(m: int) -> Dict[str, Tuple[int, int]]:
    """Column (1-based) and sign with [w] v_{2m} = sign * v_column."""
    n = 2 * m
    out = {}
    for name, word in weyl_words(m).items():
        vec = [0] * n
        vec[n - 1] = 1
        vec = [LP.const(x) for x in vec]
        for i in reversed(word):
            vec = simple_reflection(m, i).apply(vec)
        nz = [(j + 1, v) for j, v in enumerate(vec) if not v.is_zero()]
        if len(nz) != 1 or not nz[0][1].is_constant() or abs(nz[0][1].constant_value()) != 1:
            raise AssertionError(f"Weyl word for {name} does not map v_2m to a basis vector")
        col, val = nz[0]
        out[name] = (col, int(val.constant_value()))
    return out


def pluecker_from_matrix(M: PolyMatrix, m: int) -> Dict[str, LP]:
    """Bottom-row entries, one per Pluecker coordinate; the representative
    [w] is rescaled so that it sends v_{2m} to +v_column."""
    n = 2 * m
    return {name: M[n, col] for name, (col, _sign) in bottom_row_columns(m).items()}


def minor(M: PolyMatrix, rows: Sequence[int], cols: Sequence[int]) -> LP:
    """Determinant of the submatrix with the given (1-based) rows and
    columns, taken in increasing order."""
    if len(rows) != len(cols):
        raise ValueError("minor needs as many rows as columns")
    rows, cols = sorted(rows), sorted(cols)
    sub = [[M[i, j] for j in cols] for i in rows]
    return _det(sub)


def _det(a: List[List[LP]]) -> LP:
    """Laplace expansion along the sparsest row; sizes here stay small."""
    n = len(a)
    if n == 0:
        return LP.const(1)
    if n == 1:
        return a[0][0]
    r = min(range(n), key=lambda i: sum(1 for x in a[i] if x))
    total = LP.const(0)
    for j, x in enumerate(a[r]):
        if not x:
            continue
        sub = [row[:j] + row[j + 1 :] for k, row in enumerate(a) if k != r]
        total = total + x * _det(sub) * (-1) ** (r + j)
    return total


def is_orthogonal(M: PolyMatrix, m: int) -> bool:
    Qf = quadratic_form(m)
    return M.transpose() * Qf * M == Qf


def is_lower_unipotent(M: PolyMatrix) -> bool:
    for i in range(1, M.n + 1):
        if M[i, i] != LP.const(1):
            return False
        if any(not M[i, j].is_zero() for j in range(i + 1, M.n + 1)):
            return False
    return True


def minor_identities(m: int) -> Dict[str, Tuple[LP, LP]]:
    """Named (minor, expected) pairs evaluated on u2, with the expected
    values in Lusztig coordinates.

    minor4 uses the extra row 2m and delta_{2m-2-s}: the printed row m+1
    gives delta_{2m-2-s} / p_{m-1} instead, which is checked separately
    as ``minor4_row_m+1``.
    """
    from .lg_models import delta

    n = 2 * m
    N = 2 * m - 2
    u = factored_u2(m)
    img = dict(pluecker_in_lusztig(N))
    img[p_name(0)] = LP.const(1)
    pl = {k: LP.coerce(v.to_laurent() if hasattr(v, "to_laurent") else v) for k, v in img.items()}
    dl = lambda l: delta(N, l).substitute(img).to_laurent()
    out = {}
    out["minor1"] = (minor(u, [n], [1]), pl[p_name(N)])
    for s in range(m + 1, 2 * m - 2):
        cols = list(range(1, 2 * m - s))
        out[f"minor4_s{s}"] = (minor(u, list(range(2, 2 * m - s)) + [n], cols), dl(2 * m - 2 - s))
        printed_rows = list(range(2, 2 * m - s)) + [m + 1]
        out[f"minor4_row_m+1_s{s}"] = (
            minor(u, printed_rows, cols) * pl[p_name(m - 1)],
            dl(2 * m - 2 - s),
        )
    for r in range(1, m - 1):
        out[f"leading_r{r}"] = (minor(u, range(2, r + 2), range(1, r + 1)), pl[p_name(r)])
        out[f"corner_r{r}"] = (minor(u, [n], [n - r]), pl[p_name(r)])
    rows = list(range(2, m + 1)) + [n]
    out["minor2_squared"] = (minor(u, rows, list(range(1, m)) + [m + 1]), pl[p_name(m - 1)] ** 2)
    rows = list(range(2, m)) + [m + 1, n]
    out["minor3_squared"] = (minor(u, rows, list(range(1, m + 1))), pl[prime_name(N)] ** 2)
    return out


def verify_minor_identities(m: int) -> bool:
    return not failing_minor_identities(m)


def failing_minor_identities(m: int) -> List[str]:
    return [k for k, (a, b) in minor_identities(m).items() if a != b]


def corner_minor_monomial(m: int, s: int) -> LP:
    """D^{m+1}_{2m-1-s}(u2), recorded as computed; the printed closed form
    uses b-indices beyond b_{m-2}."""
    return minor(factored_u2(m), [m + 1], [2 * m - 1 - s])


def printed_minor4_identities(m: int) -> Dict[str, Tuple[LP, LP]]:
    """The minor4 statement read literally: rows 2..2m-1-s and m+1, columns
    1..2m-1-s, expected delta_{s-m}.  Kept to document that it does not hold."""
    from .lg_models import delta

    _check_m(m)
    N = 2 * m - 2
    u = factored_u2(m)
    img = dict(pluecker_in_lusztig(N))
    img[p_name(0)] = LP.const(1)
    out = {}
    for s in range(m + 1, 2 * m - 2):
        rows = list(range(2, 2 * m - s)) + [m + 1]
        lhs = minor(u, rows, range(1, 2 * m - s))
        out[f"printed_minor4_s{s}"] = (lhs, delta(N, s - m).substitute(img).to_laurent())
    return out


def failing_printed_minor4(m: int) -> List[str]:
    return [k for k, (a, b) in printed_minor4_identities(m).items() if a != b]
