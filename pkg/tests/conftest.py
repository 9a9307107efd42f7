from fractions import Fraction

from hypothesis import settings, strategies as st

from mirror_quadric.exact import LaurentPolynomial, RationalFunction

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

VARS = ("x", "y", "z")

fractions = st.builds(Fraction, st.integers(-9, 9), st.integers(1, 5))
monomials = st.dictionaries(st.sampled_from(VARS), st.integers(-3, 3), max_size=3)


@st.composite
def laurent(draw, max_terms=4):
    terms = draw(st.lists(st.tuples(monomials, fractions), max_size=max_terms))
    out = LaurentPolynomial.const(0)
    for mono, c in terms:
        out = out + LaurentPolynomial.monomial(mono, c)
    return out


@st.composite
def nonzero_laurent(draw, max_terms=3):
    f = draw(laurent(max_terms))
    return f if not f.is_zero() else LaurentPolynomial.const(1)


@st.composite
def rational(draw):
    return RationalFunction(draw(laurent(3)), draw(nonzero_laurent(2)))


points = st.fixed_dictionaries({v: st.sampled_from([Fraction(2), Fraction(3), Fraction(-5, 7), Fraction(11, 3)]) for v in VARS})

# one line per acceptance criterion, filled in by test_acceptance.py
ACCEPTANCE = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE, key=lambda s: int(s.split()[0][2:])):
            terminalreporter.write_line(line)
