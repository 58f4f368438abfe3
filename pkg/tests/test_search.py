import json
from pathlib import Path

import pytest

from padic_gsm.errors import (DegenerateSpecialization, FrontierExplosion, InvalidInput,
                              UnsupportedReconstruction)
from padic_gsm.field import LocalField
from padic_gsm.residue import ResidueField
from padic_gsm.search import (BOUND_HIT, GenericPolynomial, SearchJob, bivariate,
                              check_gsm_local, load_catalog, reconstruct_global, search, specialize)

DATA = Path(__file__).parent / "data"


@pytest.fixture(scope="module")
def catalog():
    return load_catalog()


@pytest.fixture(scope="module")
def Q5():
    return LocalField(5, [0, 1])


def ints(poly):
    return [int(c.to_rational()) for c in poly.coeffs]


def test_catalog_entries(catalog):
    assert catalog["D5"].params == ("s", "t") and catalog["D5"].degree == 5
    assert catalog["C3"].arity == 1
    with pytest.raises(InvalidInput):
        GenericPolynomial.from_dict({"name": "bad", "params": ["t"], "template": [[[1]]]})


def test_specialize(catalog, Q5):
    assert ints(specialize(catalog["D5"], [5, 3], Q5)) == [3, 5, -5, 5, 0, 1]
    assert ints(specialize(catalog["D5"], [5, 13], Q5)) == [13, 5, 145, -5, 10, 1]
    assert ints(specialize(catalog["C3"], [0], Q5)) == [1, -3, 0, 1]
    degenerate = GenericPolynomial.from_dict({"name": "deg", "params": ["t"], "template": [[1], [0, 1]]})
    with pytest.raises(DegenerateSpecialization):
        specialize(degenerate, [0], Q5)
    with pytest.raises(InvalidInput):
        specialize(catalog["D5"], [5], Q5)


def test_bivariate_matches_template(catalog, Q5):
    phi = bivariate(catalog["D5"], [Q5(5)], 1, Q5)
    assert [[int(c.to_rational()) for c in row] for row in phi.rows] == \
        [[0, 1], [5], [-11, -1, 1], [8, -1], [-3, 1], [1]]


@pytest.mark.parametrize("poly,t,digits,spec", [
    ([5, 0, 15, 0, 0, 1], 3, [3, 0], [3, 5, -5, 5, 0, 1]),
    ([5, 0, 10, 0, 0, 1], 13, [3, 2], [13, 5, 145, -5, 10, 1]),
    ([5, 0, 0, 0, 5, 1], 18, None, [18, 5, 295, -10, 15, 1]),
])
def test_d5_search(catalog, poly, t, digits, spec):
    K = LocalField(5, poly)
    result = search(SearchJob(K, catalog["D5"], {"s": 5}, 6))
    first = result.gsm_branches()[0]
    assert first.reconstructed == t
    assert first.integer_coeffs == spec
    if digits is not None:
        assert first.digit_values() == digits
    for b in result.root_found():
        assert b.specialized is not None


def test_root_found_branches_are_prefix_free(catalog):
    K = LocalField(5, [5, 0, 15, 0, 0, 1])
    found = [tuple(b.digit_values()) for b in search(SearchJob(K, catalog["D5"], {"s": 5}, 6)).root_found()]
    assert len(found) == len(set(found))
    for a in found:
        for b in found:
            assert a == b or b[:len(a)] != a


def test_zero_digit_bound(catalog):
    K = LocalField(5, [5, 0, 15, 0, 0, 1])
    result = search(SearchJob(K, catalog["D5"], {"s": 5}, 0))
    assert {b.status for b in result.branches} == {BOUND_HIT}


def test_frontier_cap(catalog):
    K = LocalField(5, [5, 0, 15, 0, 0, 1])
    with pytest.raises(FrontierExplosion) as info:
        search(SearchJob(K, catalog["D5"], {"s": 5}, 6, frontier_cap=2))
    assert info.value.partial is not None


def test_missing_parameter(catalog):
    K = LocalField(5, [5, 0, 15, 0, 0, 1])
    with pytest.raises(InvalidInput):
        search(SearchJob(K, catalog["D5"], {}, 3))


def test_reconstruct_global():
    k = ResidueField(5, 1)
    assert reconstruct_global([k(3), k(0)]) == 3
    assert reconstruct_global([k(3), k(2)]) == 13
    assert reconstruct_global([k(3), k(3)]) == 18
    assert reconstruct_global([k(0)]) == 0
    F = LocalField(3, [18, 0, -3, 0, 1])
    with pytest.raises(UnsupportedReconstruction):
        reconstruct_global([k(1)], F)
    Q5 = LocalField(5, [0, 1])
    assert reconstruct_global(Q5(13), digit_count=2) == 13


@pytest.mark.parametrize("local,candidate,p,expected", [
    ([5, 0, 15, 0, 0, 1], [3, 5, -5, 5, 0, 1], 5, True),
    ([5, 0, 10, 0, 0, 1], [13, 5, 145, -5, 10, 1], 5, True),
    ([5, 0, 0, 0, 5, 1], [18, 5, 295, -10, 15, 1], 5, True),
    # 2 * 3 = 6 is a square mod 5, so sqrt(2) lies in Q_5(sqrt(3))
    ([-2, 0, 1], [-3, 0, 1], 5, True),
    # 10 / 5 = 2 is not a square mod 5: Q_5(sqrt(5)) and Q_5(sqrt(10)) differ
    ([-5, 0, 1], [-10, 0, 1], 5, False),
    # ramified versus unramified quadratic
    ([-2, 0, 1], [-5, 0, 1], 5, False),
])
def test_check_gsm_local(local, candidate, p, expected):
    assert check_gsm_local(local, candidate, p) is expected


def test_check_swapped_gsms():
    rows = json.loads((DATA / "table1.json").read_text())["rows"]
    # the D5 candidates for two different fields are not interchangeable
    assert check_gsm_local([5, 0, 15, 0, 0, 1], [13, 5, 145, -5, 10, 1], 5) is False
    assert check_gsm_local(rows[3]["defining"], rows[3]["gsm"], 3, prec=80) is True


def test_search_over_nontrivial_subfield(catalog):
    """C3 over a C3 wr C4 field: digits range over the residue field of the C4 subfield."""
    rows = json.loads((DATA / "table1.json").read_text())["rows"]
    K = LocalField(3, rows[3]["defining"], prec=60)
    result = search(SearchJob(K, catalog["C3"], {}, 2, F_poly=(18, 0, -3, 0, 1)))
    found = result.root_found()
    assert found
    for b in found:
        assert all(len(d) == 2 for d in b.digit_values())  # GF(9) digits
        assert b.reconstructed is None
        assert b.t_star is not None
