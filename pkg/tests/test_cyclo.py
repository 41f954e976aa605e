import cmath
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from lambda_local.cyclo import (
    CycloNumber,
    Mu4,
    cyclotomic_polynomial,
    from_exponents,
    root_of_unity,
    snap_fourth_root,
    sqrt_prime,
)
from lambda_local.errors import InvalidOrder, NotAFourthRoot
from lambda_local.ffield import FiniteField, gauss_sum_bruteforce

I = root_of_unity(4, 1)

orders = st.sampled_from([1, 2, 3, 4, 5, 6, 8, 9, 10, 12, 15, 24])
coeffs = st.fractions(min_value=-5, max_value=5, max_denominator=6)


@st.composite
def cyclo(draw, order=None):
    n = draw(orders) if order is None else order
    terms = draw(st.dictionaries(st.integers(0, n - 1), coeffs, max_size=5))
    return CycloNumber(n, terms)


def close(z, w, tol=1e-9):
    return abs(complex(z) - complex(w)) <= tol


def test_root_of_unity_examples():
    assert root_of_unity(4, 1).eval_complex() == pytest.approx(1j)
    assert root_of_unity(1, 0) == CycloNumber.one()
    assert root_of_unity(8, 2) == root_of_unity(4, 1)
    assert root_of_unity(8, 2).lift(8) == root_of_unity(4, 1).lift(8)


def test_bad_order():
    with pytest.raises(InvalidOrder):
        root_of_unity(0, 1)


def test_cyclotomic_polynomials():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(4) == (1, 0, 1)
    assert cyclotomic_polynomial(6) == (1, -1, 1)
    assert len(cyclotomic_polynomial(15)) - 1 == 8


def test_vanishing_sum_of_cube_roots():
    z = root_of_unity(3, 1)
    assert (z + z * z + 1).is_zero()


def test_conjugate_of_i():
    assert I.conjugate() == -I


def test_gauss_sum_for_five_squares_to_five():
    z = lambda k: root_of_unity(5, k)
    g = z(1) - z(2) - z(3) + z(4)
    assert g * g == CycloNumber.rational(5)


def test_eval_complex():
    assert CycloNumber.zero().to_pair() == (0.0, 0.0)
    assert close(I.eval_complex(), 1j, 1e-12)
    z = root_of_unity(3, 1)
    assert close((z - z * z).eval_complex(), complex(0, 3 ** 0.5))


def test_snap_fourth_root():
    assert snap_fourth_root(I) == Mu4(1)
    # the (2 sqrt 2 + 0 i) / (2 sqrt 2) normalization from the Q_2 computation
    s2 = sqrt_prime(2)
    assert snap_fourth_root((s2 * 2) / (s2 * 2)) == Mu4(0)
    assert snap_fourth_root(root_of_unity(8, 2)) == Mu4(1)
    with pytest.raises(NotAFourthRoot):
        snap_fourth_root(root_of_unity(3, 1))
    with pytest.raises(NotAFourthRoot):
        snap_fourth_root(CycloNumber.rational(2))


@pytest.mark.parametrize("p", [2, 3, 5, 7, 11, 13])
def test_sqrt_prime_squares_to_p(p):
    r = sqrt_prime(p)
    assert r * r == CycloNumber.rational(p)
    assert close(r.eval_complex(), p ** 0.5)


def test_from_exponents():
    v = from_exponents({Fraction(1, 4): 1, Fraction(3, 4): 1})
    assert v.is_zero()
    assert from_exponents({Fraction(0): 2, Fraction(1, 2): 1}) == CycloNumber.one()


def test_division_and_inverse():
    z = root_of_unity(5, 1) + 2
    assert z * z.inverse() == CycloNumber.one()
    assert (z / z) == CycloNumber.one()
    with pytest.raises(ZeroDivisionError):
        CycloNumber.zero().inverse()


def test_json_roundtrip_sorted_terms():
    v = root_of_unity(12, 7) * Fraction(3, 2) + root_of_unity(12, 1)
    data = v.to_json()
    assert [k for k, _ in data["terms"]] == sorted(k for k, _ in data["terms"])
    assert CycloNumber.from_json(data) == v


def test_mu4():
    assert Mu4.parse("-i") == Mu4(3)
    assert Mu4(1) * Mu4(1) == Mu4.sign(-1)
    assert Mu4(1).inverse() == Mu4(3)
    assert [str(Mu4(k)) for k in range(4)] == ["1", "i", "-1", "-i"]
    assert Mu4(2).to_int() == -1


@given(cyclo())
def test_a_minus_a_is_empty(a):
    d = a - a
    assert d.is_zero()
    assert d.canonical() == (Fraction(0),) * len(d.canonical()) or not d.terms


@given(cyclo(), st.integers(1, 8))
def test_lift_preserves_value(a, m):
    assert close(a.lift(m * a.order).eval_complex(), a.eval_complex())
    assert a.lift(m * a.order) == a


@given(cyclo(), cyclo())
def test_conjugation_is_an_involutive_automorphism(a, b):
    assert a.conjugate().conjugate() == a
    assert (a * b).conjugate() == a.conjugate() * b.conjugate()
    assert (a + b).conjugate() == a.conjugate() + b.conjugate()


@given(cyclo(), cyclo(), cyclo())
def test_ring_laws(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)
    assert close((a * b).eval_complex(), a.eval_complex() * b.eval_complex(), 1e-6)


@given(cyclo())
def test_equality_agrees_with_numeric_value(a):
    assert a.is_zero() == (abs(a.eval_complex()) < 1e-9)


@pytest.mark.parametrize("p", [3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47])
def test_gauss_sum_times_conjugate_is_p(p):
    g = gauss_sum_bruteforce(FiniteField(p))
    assert g * g.conjugate() == CycloNumber.rational(p)
