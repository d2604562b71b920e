"""Ring arithmetic, evaluation, and canonical rendering of Scalars."""

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from zwcumulants import MissingSymbolError, MomentSymbol, Scalar, as_scalar, mu, nu


SYMBOLS = [mu(1), mu(2), mu(3), nu(1), nu(2)]


@st.composite
def scalars(draw):
    n_terms = draw(st.integers(min_value=0, max_value=4))
    terms = {}
    for _ in range(n_terms):
        syms = draw(st.lists(st.sampled_from(SYMBOLS), max_size=3))
        mono = Scalar.one()
        for s in syms:
            mono = mono * Scalar.symbol(s)
        coeff = Fraction(draw(st.integers(-6, 6)), draw(st.sampled_from([1, 2, 3])))
        key = next(iter(mono.terms()))
        terms[key] = terms.get(key, Fraction(0)) + coeff
    return Scalar(terms)


def test_rational_addition():
    assert Scalar.rational(Fraction(1, 2)) + Scalar.rational(Fraction(1, 3)) \
        == Scalar.rational(Fraction(5, 6))


def test_like_term_collection():
    m1 = Scalar.symbol(mu(1))
    assert m1 + m1 == 2 * m1


def test_monomial_product():
    assert Scalar.symbol(mu(1)) * Scalar.symbol(nu(1)) == as_scalar(mu(1)) * as_scalar(nu(1))
    assert (Scalar.symbol(mu(1)) * Scalar.symbol(nu(1))).render() == "mu1*nu1"


def test_difference_of_squares():
    a, b = Scalar.symbol(mu(1)), Scalar.symbol(nu(1))
    assert (a + b) * (a - b) == a * a - b * b


@given(scalars())
def test_additive_and_multiplicative_identities(p):
    assert p + Scalar.zero() == p
    assert p * Scalar.one() == p


@given(scalars(), scalars(), scalars())
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


def test_evaluate_single_substitution():
    assert Scalar.symbol(mu(2)).evaluate({mu(2): 3}) == 3


def test_evaluate_arithmetic():
    p = Scalar.symbol(mu(1)) * Scalar.symbol(nu(1)) + Scalar.symbol(nu(2))
    assert p.evaluate({mu(1): 1, nu(1): 2, nu(2): 1}) == 3


def test_evaluate_zero_polynomial():
    assert Scalar.zero().evaluate({}) == 0


def test_evaluate_missing_symbol():
    with pytest.raises(MissingSymbolError):
        Scalar.symbol(mu(1)).evaluate({nu(1): 2})


@given(scalars(), scalars(), scalars())
def test_evaluate_is_a_ring_homomorphism(a, b, c):
    assignment = {s: Fraction(i + 1, 2) for i, s in enumerate(SYMBOLS)}
    lhs = (a * b + c).evaluate(assignment)
    rhs = a.evaluate(assignment) * b.evaluate(assignment) + c.evaluate(assignment)
    assert lhs == rhs


def test_render_monomial_with_powers():
    p = Scalar.symbol(mu(1)) ** 2 * Scalar.symbol(nu(3))
    assert p.render() == "mu1^2*nu3"


def test_render_sum_ordering():
    p = Scalar.symbol(mu(2)) - Scalar.symbol(mu(1)) ** 2
    assert p.render() == "mu2 - mu1^2"
    q = Scalar.symbol(mu(2)) + 2 * Scalar.symbol(mu(1)) * Scalar.symbol(nu(1)) \
        + Scalar.symbol(nu(2))
    assert q.render() == "mu2 + 2*mu1*nu1 + nu2"


def test_render_constants_and_zero():
    assert Scalar.zero().render() == "0"
    assert Scalar.rational(Fraction(-5, 6)).render() == "-5/6"
    assert (Scalar.symbol(mu(1)) + 1).render() == "mu1 + 1"


def test_constant_value():
    assert Scalar.rational(Fraction(3, 4)).constant_value() == Fraction(3, 4)
    assert Scalar.zero().constant_value() == 0
    with pytest.raises(ValueError):
        Scalar.symbol(mu(1)).constant_value()


def test_symbol_validation():
    with pytest.raises(ValueError):
        MomentSymbol("mu", 0)
    with pytest.raises(ValueError):
        MomentSymbol("MU", 1)


def test_hash_and_structural_equality():
    a = Scalar.symbol(mu(1)) * Scalar.symbol(mu(1))
    b = Scalar.symbol(mu(1)) ** 2
    assert a == b and hash(a) == hash(b)
    assert Scalar.rational(2) == 2
    assert Scalar.zero() == 0 and not Scalar.zero()


def test_division_by_rational():
    assert Scalar.symbol(mu(2)) / 2 == Scalar({((mu(2), 1),): Fraction(1, 2)})
