import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from padic_gsm.errors import FieldTooLarge, InvalidInput
from padic_gsm.residue import (ResidueField, first_irreducible, gfp_is_irreducible,
                               monic_polys, roots_in_k)


def brute_irreducible(poly, p):
    """Trial division by every monic polynomial of degree 1..deg/2."""
    n = len(poly) - 1
    for d in range(1, n // 2 + 1):
        for q in itertools.product(range(p), repeat=d):
            divisor = list(q) + [1]
            rem = list(poly)
            for k in range(n - d, -1, -1):
                c = rem[k + d] % p
                for i, y in enumerate(divisor):
                    rem[k + i] = (rem[k + i] - c * y) % p
            if not any(x % p for x in rem[:d]):
                return False
    return True


@pytest.mark.parametrize("p,n", [(2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (5, 2), (7, 2)])
def test_irreducibility_matches_trial_division(p, n):
    for poly in monic_polys(p, n):
        assert gfp_is_irreducible(poly, p) == brute_irreducible(poly, p), poly


def test_default_modulus_is_first_irreducible():
    assert first_irreducible(3, 2) == (1, 0, 1)
    assert ResidueField(3, 2).modulus == (1, 0, 1)
    assert ResidueField(2, 2).modulus == (1, 1, 1)


def test_reducible_modulus_rejected():
    with pytest.raises(InvalidInput):
        ResidueField(3, 2, [2, 0, 1])  # x^2 - 1


def test_gen_is_root_of_modulus():
    for p, f, mod in [(3, 2, [2, 2, 1]), (5, 1, [3, 1]), (2, 3, [1, 1, 0, 1])]:
        k = ResidueField(p, f, mod)
        g = k.gen
        acc = k.zero
        for c in reversed(k.modulus):
            acc = acc * g + c
        assert acc.is_zero()


def test_enumeration_order_and_guard():
    k = ResidueField(3, 2)
    elems = k.enumerate()
    assert [e.index() for e in elems] == list(range(9))
    assert elems[1] == k.one
    with pytest.raises(FieldTooLarge):
        ResidueField(2, 17).enumerate()


def test_roots_in_k():
    k = ResidueField(5, 1)
    assert [r.coeffs[0] for r in roots_in_k([k(4), k(0), k(1)])] == [1, 4]
    assert roots_in_k([k(3), k(0), k(1)]) == []
    with pytest.raises(InvalidInput):
        roots_in_k([k(0)])
    k9 = ResidueField(3, 2)
    # y^2 + 1 splits in GF(9)
    assert len(roots_in_k([k9(1), k9(0), k9(1)])) == 2


@pytest.mark.parametrize("p,f", [(2, 3), (3, 2), (5, 2)])
def test_field_axioms(p, f):
    k = ResidueField(p, f)
    elems = k.enumerate()
    for a in elems:
        if not a.is_zero():
            assert a * a.inverse() == k.one
        assert a ** k.order == a
    for a, b in itertools.islice(itertools.product(elems, elems), 200):
        assert a * b == b * a
        assert (a + b) - b == a


@settings(max_examples=300, deadline=None)
@given(st.lists(st.integers(0, 4), min_size=2, max_size=2),
       st.lists(st.integers(0, 4), min_size=2, max_size=2),
       st.lists(st.integers(0, 4), min_size=2, max_size=2))
def test_distributive_gf25(a, b, c):
    k = ResidueField(5, 2)
    a, b, c = k(a), k(b), k(c)
    assert a * (b + c) == a * b + a * c
