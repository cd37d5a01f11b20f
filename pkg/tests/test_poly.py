from fractions import Fraction

import pytest

from runwords.poly import (
    IntPoly,
    fibonacci_poly,
    pk_fraction,
    reciprocal_fibonacci_poly,
    tk_fraction,
)


def test_normalization_strips_trailing_zeros():
    assert IntPoly([1, 2, 0, 0]).coeffs == (1, 2)
    assert IntPoly([0, 0]).coeffs == ()
    assert not IntPoly([])
    assert IntPoly([0, 1]).degree == 1


def test_arithmetic():
    p = IntPoly([1, 1])  # 1 + x
    q = IntPoly([-1, 1])  # -1 + x
    assert (p * q).coeffs == (-1, 0, 1)
    assert (p + q).coeffs == (0, 2)
    assert (p - q).coeffs == (2,)
    assert (p * IntPoly([])).coeffs == ()


def test_evaluation_types():
    p = IntPoly([-1, 0, 1])  # x^2 - 1
    assert p(3) == 8
    assert p(Fraction(1, 2)) == Fraction(-3, 4)
    assert p(1j) == -2


def test_derivative():
    p = IntPoly([5, 3, 0, 2])  # 5 + 3x + 2x^3
    assert p.derivative().coeffs == (3, 0, 6)
    assert IntPoly([7]).derivative().coeffs == ()


def test_str():
    assert str(fibonacci_poly(2)) == "x^2 + x - 1"
    assert str(reciprocal_fibonacci_poly(2)) == "x^2 - x - 1"
    assert str(IntPoly([])) == "0"
    assert str(IntPoly([0, -2])) == "-2x"


def test_fibonacci_polys():
    assert fibonacci_poly(2).coeffs == (-1, 1, 1)
    assert fibonacci_poly(3).coeffs == (-1, 1, 1, 1)
    assert reciprocal_fibonacci_poly(3).coeffs == (-1, -1, -1, 1)
    with pytest.raises(ValueError):
        fibonacci_poly(1)
    with pytest.raises(ValueError):
        reciprocal_fibonacci_poly(0)


def test_reciprocal_relation():
    # r is a root of the reciprocal polynomial iff 1/r is a root of g_k
    for k in (2, 3, 4):
        g = fibonacci_poly(k)
        r = reciprocal_fibonacci_poly(k)
        x = Fraction(7, 5)
        assert r(x) == -(x**k) * g(1 / x)


def test_pk_fraction():
    num, den = pk_fraction(2)
    assert num.coeffs == (0, 1)  # x
    assert den == fibonacci_poly(2) * fibonacci_poly(2)
    num, _ = pk_fraction(3)
    assert num.coeffs == (0, 1, 2)  # x + 2x^2
    num, _ = pk_fraction(4)
    assert num.coeffs == (0, 1, 2, 3)


def test_tk_fraction():
    num, den = tk_fraction(2)
    assert num.coeffs == (0, 2, 2, 1)  # 2x + 2x^2 + x^3
    assert den == fibonacci_poly(2) * fibonacci_poly(2)
    num, _ = tk_fraction(3)
    # x * (2 + 4x + 3x^2 + 2x^3 + x^4) -- weights 2i+2 then 2k-i-1
    assert num.coeffs == (0, 2, 4, 3, 2, 1)
