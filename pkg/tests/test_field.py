from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from padic_gsm.errors import (InvalidInput, InvalidPrime, NotIntegral, RamificationMismatch,
                              RamificationUndetermined, ZeroDivisorDetected)
from padic_gsm.field import LocalField, newton_polygon
from padic_gsm.padic import AtLeast

ALPHA2_ROW = [-9, 0, 0, 9, 9, 9, 12, -9, 9, -9, 12, -9, 1]
D5_FIELD = [5, 0, 15, 0, 0, 1]


def vp(q, p):
    q = Fraction(q)
    v, n, d = 0, q.numerator, q.denominator
    while n % p == 0:
        n //= p
        v += 1
    while d % p == 0:
        d //= p
        v -= 1
    return v


@pytest.fixture(scope="module")
def fields():
    return {
        "d5": LocalField(5, D5_FIELD),
        "c4": LocalField(3, [18, 0, -3, 0, 1]),
        "unram": LocalField(2, [1, 1, 1]),
        "alpha2": LocalField(3, ALPHA2_ROW, prec=60),
        "gsm": LocalField(5, [3, 5, -5, 5, 0, 1], e_f_hint=(5, 1)),
    }


@pytest.mark.parametrize("p,poly,hint,ef", [
    (5, D5_FIELD, None, (5, 1)),
    (5, [5, 0, 10, 0, 0, 1], None, (5, 1)),
    (3, [18, 0, -3, 0, 1], None, (2, 2)),
    (2, [1, 1, 1], None, (1, 2)),
    (2, [-2, 0, 1], None, (2, 1)),
    (7, [3, 1], None, (1, 1)),
    (3, ALPHA2_ROW, None, (6, 2)),
    (5, [3, 5, -5, 5, 0, 1], (5, 1), (5, 1)),
])
def test_ramification_data(p, poly, hint, ef):
    K = LocalField(p, poly, prec=40, e_f_hint=hint)
    assert (K.e, K.f) == ef
    assert K.valuation(K.uniformizer) == 1
    assert K.valuation(K(p)) == K.e


def test_newton_polygon_vertices():
    assert newton_polygon([5, 0, 15, 0, 0, 1], 5) == [(0, 1), (5, 0)]
    assert newton_polygon([5, 1, 1], 5) == [(0, 1), (1, 0), (2, 0)]


def test_construction_errors():
    with pytest.raises(RamificationUndetermined):
        LocalField(5, [3, 5, -5, 5, 0, 1])
    with pytest.raises(RamificationMismatch):
        LocalField(5, D5_FIELD, e_f_hint=(1, 5))
    with pytest.raises(ZeroDivisorDetected):
        LocalField(5, [0, 5, 1])  # x(x + 5)
    with pytest.raises(ZeroDivisorDetected):
        LocalField(5, [-1, 0, 1], e_f_hint=(1, 2))  # (x - 1)(x + 1)
    with pytest.raises(InvalidPrime):
        LocalField(6, [0, 1])
    with pytest.raises(InvalidInput):
        LocalField(5, [1, 2])


def test_residue_modulus_choice():
    K = LocalField(3, [18, 0, -3, 0, 1], residue_modulus=[2, 2, 1])  # x^2 - x - 1
    assert K.residue_field.modulus == (2, 2, 1)
    assert K.residue(K.inertial_gen) == K.residue_field.gen


def test_d5_uniformizer_is_the_generator(fields):
    K = fields["d5"]
    assert K.valuation(K.generator) == 1
    pi = K.generator
    assert pi ** 5 == -15 * pi ** 2 - 5


def test_inverse_and_division(fields):
    K = fields["c4"]
    x = K.element([1, 2, 3, 4])
    assert x * x.inverse() == K.one
    y = K.uniformizer ** 3 * x
    assert (y / K.uniformizer ** 3) == x
    assert K.valuation(K.uniformizer.inverse()) == -1


def test_residue_errors(fields):
    K = fields["d5"]
    with pytest.raises(NotIntegral):
        K.residue(K.uniformizer.inverse())
    assert K.residue(K(7)).coeffs == (2,)
    assert K.zero.valuation() == AtLeast(K.cap)


def test_valuation_of_rationals(fields):
    K = fields["alpha2"]
    assert K.valuation(K(Fraction(2, 27))) == -18
    assert K.valuation(K(Fraction(45))) == 12


coords = st.lists(st.fractions(min_value=-400, max_value=400, max_denominator=30), min_size=1, max_size=12)


@settings(max_examples=200, deadline=None)
@given(coords, st.sampled_from(["d5", "c4", "unram", "alpha2", "gsm"]))
def test_valuation_agrees_with_norm(fields, c, name):
    K = fields[name]
    x = K.element(c[:K.n])
    if x.is_zero():
        return
    assert K.valuation(x) == K.norm_valuation(x)


EISENSTEIN = {
    "d5": (5, D5_FIELD),
    "q3": (3, [3, 3, 0, 1]),
    "q2": (2, [2, 2, 0, 0, 1]),
}


@pytest.fixture(scope="module")
def eisenstein_fields():
    return {k: LocalField(p, g, prec=40) for k, (p, g) in EISENSTEIN.items()}


@settings(max_examples=1000, deadline=None)
@given(st.sampled_from(sorted(EISENSTEIN)), st.data())
def test_eisenstein_valuation_formula(eisenstein_fields, name, data):
    """nu(sum c_i pi^i) = min(e*v_p(c_i) + i) when pi is an Eisenstein root."""
    K = eisenstein_fields[name]
    c = data.draw(st.lists(st.fractions(min_value=-10 ** 4, max_value=10 ** 4, max_denominator=50),
                           min_size=K.e, max_size=K.e))
    if not any(c):
        return
    expected = min(K.e * vp(ci, K.p) + i for i, ci in enumerate(c) if ci)
    assert K.valuation(K.element(c)) == expected


@settings(max_examples=1000, deadline=None)
@given(st.sampled_from(["c4", "unram", "d5", "alpha2"]), st.data())
def test_residue_lift_round_trip(fields, name, data):
    K = fields[name]
    k = K.residue_field
    c = k.from_index(data.draw(st.integers(0, k.order - 1)))
    assert K.residue(K.lift(c)) == c
    x = K.element(data.draw(st.lists(st.integers(-10 ** 6, 10 ** 6), min_size=K.n, max_size=K.n)))
    if isinstance(x.valuation(), int) and x.valuation() >= 0:
        d = K.valuation(x - K.lift(K.residue(x)))
        assert isinstance(d, AtLeast) or d >= 1


@settings(max_examples=200, deadline=None)
@given(coords, coords, st.sampled_from(["c4", "alpha2"]))
def test_multiplicativity(fields, a, b, name):
    K = fields[name]
    x, y = K.element(a[:K.n]), K.element(b[:K.n])
    if x.is_zero() or y.is_zero():
        return
    assert K.valuation(x * y) == K.valuation(x) + K.valuation(y)
    vs = K.valuation(x + y)
    assert isinstance(vs, AtLeast) or vs >= min(K.valuation(x), K.valuation(y))
