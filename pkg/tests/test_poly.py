import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from padic_gsm.errors import NotNormalized, PrecisionExhausted
from padic_gsm.field import LocalField
from padic_gsm.poly import BivariatePoly, PolyOverK, content_valuation, normalize, reduce_mod_pi

D5_TEMPLATE_S5 = [[0, 1], [5], [-11, -1, 1], [8, -1], [-3, 1], [1]]


@pytest.fixture(scope="module")
def Q5():
    return LocalField(5, [0, 1], prec=40)


@pytest.fixture(scope="module")
def K5():
    return LocalField(5, [5, 0, 15, 0, 0, 1])


def pi_poly(K, *c):
    pi = K.uniformizer
    return sum((K(x) * pi ** i for i, x in enumerate(c)), K.zero)


def test_content_and_normalize(Q5, K5):
    phi = PolyOverK(Q5, [25, 0, 5])
    assert content_valuation(phi) == 1
    assert normalize(PolyOverK(Q5, [25, 5])) == PolyOverK(Q5, [5, 1])
    psi = PolyOverK(K5, [K5.uniformizer ** 3, K5.uniformizer ** 3])
    assert content_valuation(psi) == 3
    assert content_valuation(normalize(psi)) == 0
    unit = PolyOverK(Q5, [1, 2])
    assert normalize(unit) is unit


def test_content_of_vanished_polynomial(Q5):
    with pytest.raises(PrecisionExhausted):
        content_valuation(PolyOverK(Q5, [Q5.zero, Q5.zero]))
    # a coefficient lost to precision cannot hide below the content
    lost = Q5.with_prec(Q5(0), 3)
    with pytest.raises(PrecisionExhausted):
        content_valuation(PolyOverK(Q5, [lost, 5 ** 4]))


def test_reduce(Q5, K5):
    red = reduce_mod_pi(PolyOverK(K5, [5, K5.uniformizer, 1]))
    assert [c.coeffs[0] for c in red] == [0, 0, 1]
    with pytest.raises(NotNormalized):
        reduce_mod_pi(PolyOverK(Q5, [5, 10]))


def test_substitute_binomial(K5):
    b = K5(3)
    pi = K5.uniformizer
    got = PolyOverK(K5, [0, 0, 1]).substitute(b, pi)
    assert got == PolyOverK(K5, [b * b, 2 * pi * b, pi * pi])
    phi = PolyOverK(K5, [1, 2, 3, 4])
    assert phi.substitute(0, 1) == phi


def test_worked_example_t_substitution(K5):
    phi = BivariatePoly(K5, D5_TEMPLATE_S5).substitute_t(3, 5)
    expected = BivariatePoly(K5, [[3, 5], [5], [-5, 25, 25], [5, -5], [0, 5], [1]])
    assert phi == expected
    red = phi.reduce()
    assert red.deg_t == 0 and red.deg_x == 5
    assert [c.coeffs[0] for c in red.x_poly()] == [3, 0, 0, 0, 0, 1]


def test_worked_example_x_lift_and_normalisation(K5):
    phi = BivariatePoly(K5, D5_TEMPLATE_S5).substitute_t(3, 5)
    lifted = phi.substitute_x(2, K5.uniformizer)
    assert lifted.rows[5] == [pi_poly(K5, -5, 0, -15)]
    twice = lifted.substitute_t(0, 5)
    assert twice.rows[0] == [K5(65), K5(725), K5(2500)]
    assert normalize(twice).rows[0] == [K5(13), K5(145), K5(500)]


def test_identity_substitutions(K5):
    phi = BivariatePoly(K5, D5_TEMPLATE_S5)
    assert phi.substitute_t(0, 1) == phi
    assert phi.substitute_x(0, 1) == phi


small = st.lists(st.integers(-30, 30), min_size=1, max_size=4)


@settings(max_examples=100, deadline=None)
@given(st.lists(small, min_size=1, max_size=4))
def test_substitute_x_composes(K5, rows):
    pi = K5.uniformizer
    phi = BivariatePoly(K5, rows)
    assert phi.substitute_x(0, pi).substitute_x(0, pi) == phi.substitute_x(0, pi * pi)


@settings(max_examples=100, deadline=None)
@given(st.lists(st.integers(-50, 50), min_size=2, max_size=5), st.lists(st.integers(-20, 20), min_size=5, max_size=5))
def test_reduction_commutes_with_evaluation(K5, coeffs, a):
    phi = PolyOverK(K5, coeffs)
    if phi.degree() < 0:
        return
    phi = normalize(phi)
    x = K5.element(a)
    red = reduce_mod_pi(phi)
    acc = K5.residue_field.zero
    r = K5.residue(x)
    for c in reversed(red):
        acc = acc * r + c
    assert acc == K5.residue(phi(x))


@settings(max_examples=100, deadline=None)
@given(st.lists(st.integers(-50, 50), min_size=2, max_size=5))
def test_normalize_has_zero_content(Q5, coeffs):
    phi = PolyOverK(Q5, [c * 125 for c in coeffs])
    if phi.degree() < 0:
        return
    assert content_valuation(normalize(phi)) == 0
