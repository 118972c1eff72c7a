from fractions import Fraction

import pytest

from chromabound.polynomial import ONE, Q, IntPolynomial


def test_normalisation_and_degree():
    p = IntPolynomial((1, 2, 0, 0))
    assert p.coeffs == (1, 2)
    assert p.degree == 1
    assert IntPolynomial(()).is_zero()


def test_arithmetic():
    p = Q - 1
    assert p * p == IntPolynomial((1, -2, 1))
    assert p ** 3 == (Q - 1) * (Q - 1) * (Q - 1)
    assert -p + p == IntPolynomial(())
    assert 2 * Q + ONE == IntPolynomial((1, 2))


def test_evaluation_generic():
    p = Q ** 3 - 3 * Q ** 2 + 2 * Q
    assert p(3) == 6
    assert p(Fraction(1, 2)) == Fraction(3, 8)
    assert p(1j) == (1j) ** 3 - 3 * (1j) ** 2 + 2j


def test_divide_linear():
    p = (Q - 2) * (Q + 1)
    quo, rem = p.divide_linear(2)
    assert quo == Q + 1 and rem == 0
    _, rem = p.divide_linear(3)
    assert rem == p(3)


def test_big_coefficients_stay_exact():
    p = (Q + 1) ** 60
    assert p[30] == 118264581564861424


def test_str():
    assert str(Q ** 2 - Q) == "q^2 - q"
