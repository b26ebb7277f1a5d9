"""Multivariate polynomials: ordering, arithmetic, parsing, rendering."""

from fractions import Fraction

import pytest

from realpv import Context, GaussRat, Monomial, Poly, parse_fraction, parse_poly
from realpv.errors import ContextError

from helpers import rand_poly, rng


@pytest.fixture
def ctx():
    return Context(["t", "c", "s"])  # t lowest, s highest


def test_context_ranks(ctx):
    assert ctx.rank("t") < ctx.rank("c") < ctx.rank("s")
    assert "t" in ctx and "x" not in ctx


def test_graded_lex_order(ctx):
    # total degree decides first
    p = parse_poly("t^3 + s*c + s^2 + t", ctx)
    assert p.leading_monomial().exponents() == {"t": 3}
    # on equal degree the higher-ranked variable wins
    q = parse_poly("s*c + s^2 + c^2", ctx)
    assert q.leading_monomial().exponents() == {"s": 2}
    assert parse_poly("s*c + c^2", ctx).leading_monomial().exponents() == {
        "s": 1,
        "c": 1,
    }


def test_monomial_operations():
    m = Monomial({"x": 2, "y": 1})
    n = Monomial({"x": 1})
    assert (m / n).exponents() == {"x": 1, "y": 1}
    assert m.degree() == 3
    assert n.divides(m)
    assert not m.divides(n)
    assert m.lcm(Monomial({"y": 3})).exponents() == {"x": 2, "y": 3}
    assert Monomial({}).is_one()


def test_poly_arithmetic(ctx):
    p = parse_poly("s + c", ctx)
    q = parse_poly("s - c", ctx)
    assert str(p * q) == "s^2 - c^2"
    assert (p + q).degree_in("c") == 0
    assert str(p**2) == "s^2 + 2*s*c + c^2"


def test_zero_coefficients_dropped(ctx):
    p = parse_poly("s + c", ctx) - parse_poly("s", ctx) - parse_poly("c", ctx)
    assert p.is_zero()
    assert p.terms == {}


def test_unknown_variable_rejected(ctx):
    with pytest.raises(ContextError):
        Poly.variable(ctx, "nope")


def test_parse_fraction(ctx):
    num, den = parse_fraction("(s^2 - 1)/(c + 1)", ctx)
    assert str(num) == "s^2 - 1"
    assert str(den) == "c + 1"


def test_parse_negative_power(ctx):
    num, den = parse_fraction("t^-2", ctx)
    assert str(num) == "1"
    assert str(den) == "t^2"


def test_parse_coefficients(ctx):
    p = parse_poly("3/4*s - 2*c + 1/2", ctx)
    assert p.coeff(Monomial({"s": 1})) == GaussRat.of(Fraction(3, 4))
    assert p.coeff(Monomial({"c": 1})) == GaussRat.of(-2)
    assert p.coeff(Monomial({})) == GaussRat.of(Fraction(1, 2))


def test_parse_i(ctx):
    p = parse_poly("i*s + 2", ctx)
    assert p.coeff(Monomial({"s": 1})) == GaussRat(Fraction(0), Fraction(1))


def test_str_roundtrip(ctx):
    r = rng(11)
    for _ in range(60):
        p = rand_poly(r, ctx)
        assert parse_poly(str(p), ctx) == p


def test_real_imag_split(ctx):
    p = parse_poly("(1 + 2*i)*s + i*c - 3", ctx)
    re, im = p.real_imag()
    assert str(re) == "s - 3"
    assert str(im) == "2*s + c"


def test_conj(ctx):
    p = parse_poly("i*s + 2", ctx)
    assert str(p.conj()) == "-i*s + 2"


def test_in_context_widening():
    small = Context(["t"])
    big = Context(["t", "x"])
    p = parse_poly("t^2 + 1", small)
    q = p.in_context(big)
    assert q.context is big or q.context == big
    with pytest.raises(ContextError):
        parse_poly("x", big).in_context(small)


def test_monic(ctx):
    p = parse_poly("2*s^2 + 4*c", ctx)
    assert str(p.monic()) == "s^2 + 2*c"


def test_distributivity_randomized(ctx):
    r = rng(7)
    for _ in range(150):
        p = rand_poly(r, ctx)
        q = rand_poly(r, ctx)
        w = rand_poly(r, ctx)
        assert (p + q) * w == p * w + q * w


def test_power_matches_repeated_multiplication(ctx):
    r = rng(13)
    for _ in range(40):
        p = rand_poly(r, ctx, max_terms=3, max_degree=2)
        acc = Poly.const(ctx, 1)
        for k in range(4):
            assert p**k == acc
            acc = acc * p
