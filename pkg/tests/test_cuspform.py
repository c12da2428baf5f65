import random
from fractions import Fraction

import pytest

from siegel12 import cuspform, niemeier, reference, rootsys


@pytest.fixture(scope="module")
def cf():
    return cuspform.CuspForm(cache=niemeier.default_cache())


def test_solved_coefficients_match_published(cf):
    assert cf.coefficients == [c for _, c in reference.THEOREM4]


def test_leech_coefficient_value(cf):
    assert cf.coefficients[0] == Fraction(1, 152769576960)


def test_normalization(cf):
    assert cf.coefficient(rootsys.parse_type("D12")) == 1


def test_vanishing_below_rank_12(cf):
    for t in niemeier.ROW_TYPES:
        if rootsys.rank(t) < 12:
            assert cf.coefficient(t) == 0
    rng = random.Random(4)
    comps = ([("A", n) for n in range(1, 12)] +
             [("D", n) for n in range(4, 12)] + [("E", 6), ("E", 7)])
    for _ in range(25):
        chosen, left = [], 11
        while left > 0:
            c = rng.choice([c for c in comps if c[1] <= left])
            chosen.append(c)
            left -= c[1]
            if rng.random() < 0.4:
                break
        assert cf.coefficient(rootsys.make_type(chosen)) == 0


def test_det_table_matches_published(cf):
    got = {(d, rootsys.format_type(t)): v for d, v, t in cf.det_table(96)}
    assert len(got) == len(reference.DET_TABLE)
    for d, c, lat in reference.DET_TABLE:
        key = (d, rootsys.format_type(rootsys.parse_type(lat)))
        assert got[key] == c


def test_det_table_sorted_and_integral(cf):
    table = cf.det_table(96)
    keys = [(d, rootsys.format_type(t)) for d, _, t in table]
    assert keys == sorted(keys)
    for _, v, _ in table:
        assert v.denominator == 1


def test_denominator_bound(cf):
    # c_nu times the automorphism group order has denominator within the
    # bound (the raw c_nu absorb 1/#Aut factors and are much smaller)
    for c, rec in zip(cf.coefficients, cf.records):
        assert (c * rec.aut_order).denominator == 1
        assert cuspform.DENOMINATOR_BOUND % (c * rec.aut_order).denominator \
            == 0


def test_rank_guard(cf):
    with pytest.raises(ValueError):
        cf.coefficient(rootsys.parse_type("A13"))


def test_witt_igusa(cf):
    for text in ["A1", "A2", "A1^2", "A3", "A1 A2", "A1^3"]:
        assert cf.witt_igusa_check(rootsys.parse_type(text))
    with pytest.raises(ValueError):
        cf.witt_igusa_check(rootsys.parse_type("D4"))
    assert cf.witt_igusa_check(rootsys.parse_type("D4"),
                               allow_unchecked=True) is False


def test_rank12_types_complete():
    types = cuspform.rank12_types(16)
    assert rootsys.parse_type("D12") in types
    assert rootsys.parse_type("E6^2") in types
    assert rootsys.parse_type("D4 E8") in types
    assert rootsys.parse_type("A1^12") not in types  # det 2^12
    assert all(rootsys.rank(t) == 12 and rootsys.det(t) <= 16
               for t in types)
