from fractions import Fraction

import pytest

from siegel12 import hecke, niemeier
from siegel12.cuspform import CuspForm


@pytest.fixture(scope="module")
def cf():
    return CuspForm(cache=niemeier.default_cache())


def test_beta():
    assert hecke.beta(2) == Fraction(1, 2**66)
    assert hecke.beta(3) == Fraction(1, 3**66)


def test_is_prime():
    assert hecke.is_prime(2) and hecke.is_prime(23)
    assert hecke.is_prime(901141)
    assert not hecke.is_prime(1) and not hecke.is_prime(901143)


def test_expected_constants_are_consistent():
    assert hecke.LAMBDA_OVER_BETA_EXPECTED == \
        2**7 * 3**11 * 5 * 17 * 901141
    assert hecke.SATAKE_PRODUCT_EXPECTED == \
        Fraction(hecke.LAMBDA_OVER_BETA_EXPECTED, 2**33)
    assert hecke.SATAKE_PRODUCT_EXPECTED == \
        Fraction(3**11 * 5 * 17 * 901141, 2**26)
    assert hecke.SATAKE_PRODUCT_EXPECTED > 2**12


def test_missing_data_raises(cf):
    # the curated data ships without the 23 non-D24 Leech sublattice
    # counts, so the eigenvalue is unavailable until they are supplied
    with pytest.raises(niemeier.MissingDataError):
        hecke.lambda2_over_beta(cf)
    with pytest.raises(niemeier.MissingDataError):
        hecke.satake_product(cf)
