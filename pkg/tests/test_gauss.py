"""Gaussian rational arithmetic: exact field operations."""

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from realpv import GaussRat
from realpv.gauss import I, ONE, ZERO, is_square, rational_sqrt

fractions = st.fractions(min_value=-50, max_value=50, max_denominator=20)
gauss = st.builds(GaussRat, fractions, fractions)
nonzero_gauss = gauss.filter(bool)


def test_constants():
    assert ZERO == GaussRat.of(0)
    assert ONE == GaussRat.of(1)
    assert I * I == GaussRat.of(-1)


def test_coercion_and_str():
    assert str(GaussRat.of(Fraction(3, 4))) == "3/4"
    assert str(GaussRat.of(-3)) == "-3"
    assert str(I) == "i"
    assert str(-I) == "-i"
    assert str(GaussRat(Fraction(1), Fraction(2))) == "1+2*i"
    assert str(GaussRat(Fraction(1), Fraction(-1, 2))) == "1-1/2*i"
    assert str(GaussRat(Fraction(0), Fraction(3, 4))) == "3/4*i"


def test_division_exact():
    a = GaussRat(Fraction(1), Fraction(2))
    b = GaussRat(Fraction(3), Fraction(-1))
    assert (a / b) * b == a


def test_inverse_of_zero():
    with pytest.raises(ZeroDivisionError):
        ZERO.inverse()


def test_pow():
    assert I**4 == ONE
    assert I**-1 == -I
    two = GaussRat.of(2)
    assert two**10 == GaussRat.of(1024)
    assert two**-2 == GaussRat.of(Fraction(1, 4))
    assert two**0 == ONE


@given(gauss, gauss, gauss)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@given(nonzero_gauss)
def test_field_inverse(a):
    assert a * a.inverse() == ONE


@given(gauss, gauss)
def test_conjugation_multiplicative(a, b):
    assert (a * b).conj() == a.conj() * b.conj()
    assert (a + b).conj() == a.conj() + b.conj()


@given(gauss)
def test_conj_involution_and_norm(a):
    assert a.conj().conj() == a
    n = a * a.conj()
    assert n.im == 0
    assert n.re == a.norm()
    assert n.re >= 0


def test_square_detection():
    assert is_square(Fraction(9, 4))
    assert rational_sqrt(Fraction(9, 4)) == Fraction(3, 2)
    assert not is_square(Fraction(2))
    assert not is_square(Fraction(-1))
    with pytest.raises(ValueError):
        rational_sqrt(Fraction(2))
