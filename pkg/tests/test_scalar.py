import cmath
import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from conftest import coefficients, nonzero_coefficients
from nctorus.scalar import Coefficient, Cyclotomic, InconsistentSystem, frac_solve

Z = Coefficient.zeta(1)
L = Coefficient.lam


def test_zeta_has_order_twelve():
    assert Z ** 12 == Coefficient.one()
    assert all(Z ** k != Coefficient.one() for k in range(1, 12))


def test_cyclotomic_relation():
    # z^4 - z^2 + 1 = 0 for a primitive 12th root
    assert Z ** 4 - Z ** 2 + 1 == Coefficient.zero()


def test_i_and_sixth_root():
    i = Coefficient.zeta(3)
    assert i * i == Coefficient.const(-1)
    w6 = Coefficient.zeta(2)
    assert w6 ** 3 == Coefficient.const(-1)


@given(coefficients(), coefficients(), coefficients())
def test_ring_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert a + (-a) == Coefficient.zero()


@given(coefficients(), coefficients())
def test_conj_is_multiplicative(a, b):
    assert (a * b).conj() == a.conj() * b.conj()
    assert a.conj().conj() == a


@given(coefficients(), st.floats(0.01, 0.99))
def test_conj_matches_complex_conjugate(a, theta):
    assert abs(a.conj().to_complex(theta) - a.to_complex(theta).conjugate()) < 1e-9


@given(coefficients(), coefficients(), st.floats(0.01, 0.99))
def test_evaluation_is_a_homomorphism(a, b, theta):
    lhs = (a * b).to_complex(theta)
    rhs = a.to_complex(theta) * b.to_complex(theta)
    assert abs(lhs - rhs) <= 1e-9 * max(1, abs(lhs))


@given(coefficients())
def test_render_parse_roundtrip(a):
    assert Coefficient.parse(a.render()) == a


def test_render_format():
    c = Coefficient.zeta(3, Fraction(-1, 2)) * Fraction(-1, 4)
    assert c.render() == "(-1/4)*z^3*L^(-1/2)"
    assert Coefficient.zero().render() == "0"


def test_canonical_form_drops_zero_terms():
    a = L(Fraction(1, 3)) + L(Fraction(1, 3), -1)
    assert a.is_zero() and a == Coefficient.zero()
    assert hash(L(Fraction(2, 4))) == hash(L(Fraction(1, 2)))


def test_monomial_inverse():
    m = L(Fraction(-2, 3), Cyclotomic.zeta(5))
    assert m * m.inverse() == Coefficient.one()
    with pytest.raises(ValueError):
        (L(1) + 1).inverse()


@given(coefficients(), nonzero_coefficients)
def test_divexact_inverts_product(a, b):
    assert (a * b).divexact(b) == a


def test_divexact_rejects_inexact():
    with pytest.raises(ArithmeticError):
        Coefficient.one().divexact(Coefficient.one() - L(1))


def test_to_complex_of_lambda():
    theta = math.sqrt(2) - 1
    assert abs(L(Fraction(1, 2)).to_complex(theta) - cmath.exp(1j * math.pi * theta)) < 1e-12


def test_frac_solve_kernel_and_particular():
    one, lam = Coefficient.one(), L(1)
    sol = frac_solve([[one, -lam], [lam, -lam * lam]], [lam, lam * lam])
    assert sol.dim == 1
    x, y = (v.to_coefficient() for v in sol.particular)
    assert x - lam * y == lam
    k = [v.to_coefficient() for v in sol.kernel[0]]
    assert k[0] - lam * k[1] == Coefficient.zero()


def test_frac_solve_inconsistent():
    one = Coefficient.one()
    with pytest.raises(InconsistentSystem):
        frac_solve([[one], [one]], [one, Coefficient.zero()])


def test_frac_solve_size_limit():
    with pytest.raises(ValueError):
        frac_solve([[Coefficient.one()] * 9])
