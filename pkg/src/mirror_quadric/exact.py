"""Exact multivariate Laurent polynomials and rational functions over Q.

Symbols are plain strings.  A monomial is stored as a sorted tuple of
``(name, exponent)`` pairs with nonzero exponents, so the empty tuple is the
constant monomial.  Coefficients are :class:`fractions.Fraction`.

Rational functions keep their denominator as a product of normalized
polynomial factors.  No gcd is ever computed; equality is decided by
cross-multiplication, and sums of rational functions reuse factors that are
syntactically equal, which keeps the expressions appearing in mirror-map
identities small.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Callable, Dict, Iterable, Mapping, Tuple, Union

Monomial = Tuple[Tuple[str, int], ...]
Number = Union[int, Fraction]

_EXP_BOUND = 2**63


class SubstitutionDenominatorZero(ZeroDivisionError):
    """A substitution produced an identically zero denominator."""


def _check_exp(e: int) -> int:
    if not -_EXP_BOUND <= e < _EXP_BOUND:
        raise OverflowError(f"exponent {e} exceeds 64-bit range")
    return e


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    d = dict(a)
    for v, e in b:
        s = d.get(v, 0) + e
        if s:
            d[v] = _check_exp(s)
        else:
            del d[v]
    return tuple(sorted(d.items()))


def _mono_pow(a: Monomial, n: int) -> Monomial:
    return tuple((v, _check_exp(e * n)) for v, e in a) if n else ()


def _as_fraction(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    if isinstance(c, str):
        return Fraction(c)
    raise TypeError(f"cannot use {type(c).__name__} as an exact coefficient")


class LaurentPolynomial:
    """Immutable sparse Laurent polynomial with rational coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, Number] | None = None):
        clean: Dict[Monomial, Fraction] = {}
        if terms:
            for m, c in terms.items():
                c = _as_fraction(c)
                if c:
                    clean[m] = c
        self._terms = clean
        self._hash = None

    # -- constructors ---------------------------------------------------
    @classmethod
    def _raw(cls, terms: Dict[Monomial, Fraction]) -> "LaurentPolynomial":
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def var(cls, name: str, exponent: int = 1) -> "LaurentPolynomial":
        if exponent == 0:
            return cls.const(1)
        return cls._raw({((name, _check_exp(exponent)),): Fraction(1)})

    @classmethod
    def const(cls, c: Number) -> "LaurentPolynomial":
        c = _as_fraction(c)
        return cls._raw({(): c} if c else {})

    @classmethod
    def monomial(cls, exps: Mapping[str, int], coef: Number = 1) -> "LaurentPolynomial":
        key = tuple(sorted((v, _check_exp(e)) for v, e in exps.items() if e))
        return cls({key: coef})

    @classmethod
    def coerce(cls, x) -> "LaurentPolynomial":
        if isinstance(x, LaurentPolynomial):
            return x
        if isinstance(x, RationalFunction):
            return x.to_laurent()
        return cls.const(x)

    # -- inspection -----------------------------------------------------
    @property
    def terms(self) -> Dict[Monomial, Fraction]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and () in self._terms)

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self._terms.get((), Fraction(0))

    def variables(self) -> set:
        return {v for m in self._terms for v, _ in m}

    def degree_in(self, var: str) -> int:
        return max((dict(m).get(var, 0) for m in self._terms), default=0)

    def min_degree_in(self, var: str) -> int:
        return min((dict(m).get(var, 0) for m in self._terms), default=0)

    def sorted_terms(self):
        """Terms in deterministic lex order of exponent vectors."""
        names = sorted(self.variables())
        return sorted(self._terms.items(), key=lambda t: tuple(dict(t[0]).get(v, 0) for v in names))

    # -- arithmetic -----------------------------------------------------
    def __add__(self, other):
        if isinstance(other, RationalFunction):
            return NotImplemented
        other = LaurentPolynomial.coerce(other)
        if len(other._terms) > len(self._terms):
            big, small = other._terms, self._terms
        else:
            big, small = self._terms, other._terms
        out = dict(big)
        for m, c in small.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return LaurentPolynomial._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolynomial._raw({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        if isinstance(other, RationalFunction):
            return NotImplemented
        return self + (-LaurentPolynomial.coerce(other))

    def __rsub__(self, other):
        return LaurentPolynomial.coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, RationalFunction):
            return NotImplemented
        if not isinstance(other, LaurentPolynomial):
            c = _as_fraction(other)
            if not c:
                return LaurentPolynomial._raw({})
            return LaurentPolynomial._raw({m: v * c for m, v in self._terms.items()})
        out: Dict[Monomial, Fraction] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = _mono_mul(m1, m2)
                s = out.get(m, 0) + c1 * c2
                if s:
                    out[m] = s
                else:
                    del out[m]
        return LaurentPolynomial._raw(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if isinstance(n, int) and n < 0 and self.is_monomial():
            return self.mono_inverse() ** (-n)
        if not isinstance(n, int) or n < 0:
            raise ValueError("only monomials have negative powers")
        _check_exp(n)
        if self.is_monomial():
            (m, c), = self._terms.items()
            return LaurentPolynomial._raw({_mono_pow(m, n): c**n})
        result = LaurentPolynomial.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __truediv__(self, other):
        return RationalFunction(self) / other

    def __rtruediv__(self, other):
        return RationalFunction(other) / self

    def mono_inverse(self) -> "LaurentPolynomial":
        """Inverse of a single-term polynomial."""
        if not self.is_monomial():
            raise ZeroDivisionError(f"{self} is not an invertible monomial")
        (m, c), = self._terms.items()
        return LaurentPolynomial._raw({_mono_pow(m, -1): 1 / c})

    # -- comparison -----------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, RationalFunction):
            return other == self
        if not isinstance(other, LaurentPolynomial):
            try:
                other = LaurentPolynomial.const(other)
            except TypeError:
                return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- calculus and substitution --------------------------------------
    def diff(self, var: str) -> "LaurentPolynomial":
        out: Dict[Monomial, Fraction] = {}
        for m, c in self._terms.items():
            d = dict(m)
            e = d.get(var, 0)
            if not e:
                continue
            if e == 1:
                del d[var]
            else:
                d[var] = e - 1
            out[tuple(sorted(d.items()))] = c * e
        return LaurentPolynomial._raw(out)

    def coefficient(self, partial_exponents: Mapping[str, int]) -> "LaurentPolynomial":
        """Sub-polynomial in the remaining variables whose exponents in the
        given variables match exactly."""
        out: Dict[Monomial, Fraction] = {}
        for m, c in self._terms.items():
            d = dict(m)
            if all(d.get(v, 0) == e for v, e in partial_exponents.items()):
                rest = tuple((v, e) for v, e in m if v not in partial_exponents)
                out[rest] = c
        return LaurentPolynomial._raw(out)

    def constant_term(self, variables: Iterable[str]) -> "LaurentPolynomial":
        return self.coefficient({v: 0 for v in variables})

    def truncate(self, var: str, max_degree: int) -> "LaurentPolynomial":
        return LaurentPolynomial._raw(
            {m: c for m, c in self._terms.items() if dict(m).get(var, 0) <= max_degree}
        )

    def monomial_content(self) -> Monomial:
        """Largest monomial dividing every term (exponentwise minimum)."""
        if not self._terms:
            return ()
        it = iter(self._terms)
        lo = dict(next(it))
        for m in it:
            d = dict(m)
            for v in set(lo) | set(d):
                lo[v] = min(lo.get(v, 0), d.get(v, 0))
        return tuple(sorted((v, e) for v, e in lo.items() if e))

    def shift(self, mono: Monomial) -> "LaurentPolynomial":
        """Multiply by the monomial ``mono``."""
        return LaurentPolynomial._raw({_mono_mul(m, mono): c for m, c in self._terms.items()})

    def evaluate(self, values: Mapping[str, object], one=None, invert: Callable | None = None):
        """Evaluate with ``values`` in any commutative ring.

        Unassigned variables are an error.  Negative exponents need ``invert``
        unless the values are Fractions.
        """
        if one is None:
            one = Fraction(1)
        total = one * 0
        powers: Dict[Tuple[str, int], object] = {}
        for m, c in self._terms.items():
            t = one * c
            for v, e in m:
                key = (v, e)
                if key not in powers:
                    x = values[v]
                    if e < 0:
                        x = invert(x) if invert else 1 / x
                        e = -e
                    powers[key] = x**e
                t = t * powers[key]
            total = total + t
        return total

    def substitute(self, mapping: Mapping[str, object]) -> "RationalFunction":
        """Compose with ``mapping``; unmapped variables stay as they are."""
        return _substitute_lp(self, mapping)

    # -- serialization --------------------------------------------------
    def to_dict(self) -> dict:
        return {
            "terms": [
                {"exps": {v: e for v, e in m}, "coef": _frac_str(c)} for m, c in self.sorted_terms()
            ]
        }

    @classmethod
    def from_dict(cls, data: Mapping) -> "LaurentPolynomial":
        out = {}
        for t in data["terms"]:
            key = tuple(sorted((v, int(e)) for v, e in t["exps"].items() if int(e)))
            out[key] = out.get(key, 0) + Fraction(t["coef"])
        return cls(out)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "LaurentPolynomial":
        return cls.from_dict(json.loads(text))

    def __repr__(self):
        return f"LaurentPolynomial({self})"

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for m, c in reversed(self.sorted_terms()):
            mono = "*".join(v if e == 1 else f"{v}^{e}" for v, e in m)
            if not mono:
                parts.append(_frac_str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{_frac_str(c)}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


def _frac_str(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def var(name: str) -> LaurentPolynomial:
    return LaurentPolynomial.var(name)


def variables(*names: str):
    return tuple(LaurentPolynomial.var(n) for n in names)


def const(c: Number) -> LaurentPolynomial:
    return LaurentPolynomial.const(c)


# ---------------------------------------------------------------------------
# rational functions


def _normalize_factor(f: LaurentPolynomial):
    """Split a nonzero polynomial as ``scale * x^mono * g`` with ``g`` having
    no monomial content and leading coefficient 1 (in sorted-term order).

    Returns ``(scale, mono, g)``; ``g`` is 1 when ``f`` is a monomial.
    """
    if f.is_zero():
        raise ZeroDivisionError("zero denominator")
    mono = f.monomial_content()
    g = f.shift(_mono_pow(mono, -1)) if mono else f
    lead = g.sorted_terms()[0][1]
    if lead != 1:
        g = g * (1 / lead)
    return lead, mono, g


class RationalFunction:
    """Quotient ``num / prod(factor**power)`` of Laurent polynomials.

    Denominator factors are normalized non-monomial polynomials; monomials
    and constants are absorbed into the numerator.
    """

    __slots__ = ("_num", "_factors")

    def __init__(self, num=0, den=None):
        num = LaurentPolynomial.coerce(num) if not isinstance(num, RationalFunction) else num
        if isinstance(num, RationalFunction):
            base = num
        else:
            base = RationalFunction._make(num, {})
        if den is not None:
            base = base / den
        self._num = base._num
        self._factors = base._factors

    @classmethod
    def _make(cls, num: LaurentPolynomial, factors: Dict[LaurentPolynomial, int]):
        obj = cls.__new__(cls)
        obj._num = num
        obj._factors = {} if num.is_zero() else factors
        return obj

    @classmethod
    def coerce(cls, x) -> "RationalFunction":
        if isinstance(x, RationalFunction):
            return x
        return cls._make(LaurentPolynomial.coerce(x), {})

    # -- inspection -----------------------------------------------------
    @property
    def num(self) -> LaurentPolynomial:
        return self._num

    @property
    def den(self) -> LaurentPolynomial:
        d = LaurentPolynomial.const(1)
        for f, e in self._sorted_factors():
            d = d * f**e
        return d

    @property
    def factors(self) -> Dict[LaurentPolynomial, int]:
        return dict(self._factors)

    def _sorted_factors(self):
        return sorted(self._factors.items(), key=lambda fe: str(fe[0]))

    def is_laurent(self) -> bool:
        return not self._factors

    def to_laurent(self) -> LaurentPolynomial:
        if self._factors:
            raise ValueError(f"{self} is not a Laurent polynomial")
        return self._num

    def is_zero(self) -> bool:
        return self._num.is_zero()

    def variables(self) -> set:
        out = self._num.variables()
        for f in self._factors:
            out |= f.variables()
        return out

    # -- arithmetic -----------------------------------------------------
    def __add__(self, other):
        other = RationalFunction.coerce(other)
        if other.is_zero():
            return self
        if self.is_zero():
            return other
        lcm = dict(self._factors)
        for f, e in other._factors.items():
            if lcm.get(f, 0) < e:
                lcm[f] = e
        a = self._num * _factor_product(lcm, self._factors)
        b = other._num * _factor_product(lcm, other._factors)
        return RationalFunction._make(a + b, lcm)._cancel()

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction._make(-self._num, dict(self._factors))

    def __sub__(self, other):
        return self + (-RationalFunction.coerce(other))

    def __rsub__(self, other):
        return RationalFunction.coerce(other) - self

    def __mul__(self, other):
        other = RationalFunction.coerce(other)
        if self.is_zero() or other.is_zero():
            return RationalFunction._make(LaurentPolynomial.const(0), {})
        factors = dict(self._factors)
        for f, e in other._factors.items():
            factors[f] = factors.get(f, 0) + e
        return RationalFunction._make(self._num * other._num, factors)._cancel()

    __rmul__ = __mul__

    def inverse(self) -> "RationalFunction":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero rational function")
        scale, mono, g = _normalize_factor(self._num)
        num = _factor_product(self._factors, {}).shift(_mono_pow(mono, -1)) * (1 / scale)
        factors = {} if g.is_constant() else {g: 1}
        return RationalFunction._make(num, factors)

    def __truediv__(self, other):
        other = RationalFunction.coerce(other)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return RationalFunction.coerce(other) / self

    def __pow__(self, n: int):
        if not isinstance(n, int):
            raise TypeError("integer powers only")
        if n < 0:
            return self.inverse() ** (-n)
        return RationalFunction._make(
            self._num**n, {f: e * n for f, e in self._factors.items()} if n else {}
        )

    def _cancel(self) -> "RationalFunction":
        # Cheap syntactic cancellation: a factor equal to the numerator up to
        # a scalar-times-monomial.
        if not self._factors or self._num.is_zero():
            return self
        scale, mono, g = _normalize_factor(self._num)
        if g in self._factors:
            factors = dict(self._factors)
            factors[g] -= 1
            if not factors[g]:
                del factors[g]
            return RationalFunction._make(LaurentPolynomial.monomial(dict(mono), scale), factors)
        return self

    # -- comparison -----------------------------------------------------
    def __eq__(self, other):
        if not isinstance(other, (RationalFunction, LaurentPolynomial, int, Fraction)):
            return NotImplemented
        return rf_equal(self, RationalFunction.coerce(other))

    def __hash__(self):
        raise TypeError("RationalFunction is unhashable (equality is not syntactic)")

    # -- calculus and substitution --------------------------------------
    def diff(self, v: str) -> "RationalFunction":
        """Quotient-rule partial derivative."""
        result = RationalFunction._make(self._num.diff(v), dict(self._factors))
        for f, e in self._factors.items():
            df = f.diff(v)
            if df.is_zero():
                continue
            factors = dict(self._factors)
            factors[f] = e + 1
            result = result - RationalFunction._make(self._num * df * e, factors)
        return result

    def substitute(self, mapping: Mapping[str, object]) -> "RationalFunction":
        out = _substitute_lp(self._num, mapping)
        for f, e in self._factors.items():
            img = _substitute_lp(f, mapping)
            if img.is_zero():
                raise SubstitutionDenominatorZero(f"denominator factor {f} maps to 0")
            out = out / img**e
        return out

    def evaluate(self, values: Mapping[str, object], one=None, invert=None):
        """Value at a point; returns ``(num_value, den_value)`` when ``invert``
        is None and the values are not Fractions."""
        n = self._num.evaluate(values, one=one, invert=invert)
        d = None
        for f, e in self._factors.items():
            fv = f.evaluate(values, one=one, invert=invert) ** e
            d = fv if d is None else d * fv
        if d is None:
            return n
        return n / d

    def evaluate_pair(self, values: Mapping[str, object], one=None, invert=None):
        """``(numerator value, denominator value)`` without dividing."""
        if one is None:
            one = Fraction(1)
        n = self._num.evaluate(values, one=one, invert=invert)
        d = one
        for f, e in self._factors.items():
            d = d * f.evaluate(values, one=one, invert=invert) ** e
        return n, d

    def polynomial_pair(self):
        """``(num, den)`` as genuine polynomials (no negative exponents)."""
        num, den = self._num, self.den
        shift = {}
        for p in (num, den):
            for m, _ in p.items():
                for v, e in m:
                    if e < 0:
                        shift[v] = max(shift.get(v, 0), -e)
        mono = tuple(sorted(shift.items()))
        return num.shift(mono), den.shift(mono)

    # -- serialization --------------------------------------------------
    def to_dict(self) -> dict:
        return {"num": self._num.to_dict(), "den": self.den.to_dict()}

    @classmethod
    def from_dict(cls, data: Mapping) -> "RationalFunction":
        return cls(LaurentPolynomial.from_dict(data["num"]), LaurentPolynomial.from_dict(data["den"]))

    def __repr__(self):
        return f"RationalFunction({self})"

    def __str__(self):
        if not self._factors:
            return str(self._num)
        den = " * ".join(
            f"({f})" if e == 1 else f"({f})^{e}" for f, e in self._sorted_factors()
        )
        return f"({self._num}) / ({den})"


def _factor_product(target: Mapping, have: Mapping) -> LaurentPolynomial:
    out = LaurentPolynomial.const(1)
    for f, e in sorted(target.items(), key=lambda fe: str(fe[0])):
        k = e - have.get(f, 0)
        if k:
            out = out * f**k
    return out


def _image(x) -> RationalFunction:
    return RationalFunction.coerce(x)


def _substitute_lp(p: LaurentPolynomial, mapping: Mapping[str, object]) -> RationalFunction:
    cache: Dict[Tuple[str, int], RationalFunction] = {}
    images = {v: _image(x) for v, x in mapping.items()}
    total = RationalFunction.coerce(0)
    # group terms by their image-independent part to keep sums cheap
    for m, c in p.items():
        term = RationalFunction.coerce(c)
        rest = []
        for v, e in m:
            if v in images:
                key = (v, e)
                if key not in cache:
                    img = images[v]
                    if e < 0 and img.is_zero():
                        raise SubstitutionDenominatorZero(f"{v} maps to 0 with negative exponent")
                    cache[key] = img**e
                term = term * cache[key]
            else:
                rest.append((v, e))
        if rest:
            term = term * LaurentPolynomial._raw({tuple(rest): Fraction(1)})
        total = total + term
    return total


# ---------------------------------------------------------------------------
# functional forms of the operations above


def lp_arith(a: LaurentPolynomial, b: LaurentPolynomial, op: str) -> LaurentPolynomial:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown op {op!r}")


def lp_pow(a: LaurentPolynomial, n: int) -> LaurentPolynomial:
    return a**n


def lp_coefficient(a: LaurentPolynomial, partial_exponents: Mapping[str, int]) -> LaurentPolynomial:
    return a.coefficient(partial_exponents)


def rf_partial_derivative(f, v: str) -> RationalFunction:
    return RationalFunction.coerce(f).diff(v)


def rf_substitute(f, mapping: Mapping[str, object]) -> RationalFunction:
    return RationalFunction.coerce(f).substitute(mapping)


def rf_equal(f, g) -> bool:
    f = RationalFunction.coerce(f)
    g = RationalFunction.coerce(g)
    lcm = dict(f._factors)
    for h, e in g._factors.items():
        if lcm.get(h, 0) < e:
            lcm[h] = e
    a = f._num * _factor_product(lcm, f._factors)
    b = g._num * _factor_product(lcm, g._factors)
    return a == b
