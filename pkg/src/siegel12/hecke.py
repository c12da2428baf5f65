"""Hecke eigenvalue at p = 2 and the Satake product bound.

The eigenvalue is read off from the Leech row of the T(2) matrix.  The
entry counting doubled-Leech sublattices of each class is obtained from
the symmetry of #Aut(M) * n(L(2) in M) (dualizing an embedding L(2) -> M
gives an embedding M(2) -> L), which turns the row into a sum over the
curated Leech sublattice counts:

    lambda(2) * c_1 = beta * sum_nu c_nu * autOrder(nu) * leechCount(nu)
                                / autOrder(Leech).
"""

from __future__ import annotations

from fractions import Fraction

from . import niemeier

N_DEGREE = 12
LAMBDA_OVER_BETA_EXPECTED = 2**7 * 3**11 * 5 * 17 * 901141
SATAKE_PRODUCT_EXPECTED = Fraction(3**11 * 5 * 17 * 901141, 2**26)


def beta(p: int = 2) -> Fraction:
    """Normalization constant p^(n(n+1)/2 - 12 n) of T(p) at degree 12."""
    return Fraction(p) ** (N_DEGREE * (N_DEGREE + 1) // 2 - 12 * N_DEGREE)


def lambda2_over_beta(cusp_form) -> Fraction:
    """lambda(2) / beta(2,24,12), from the Leech row of T(2).

    Needs every leechCount from the registry; raises MissingDataError if
    any is not curated.
    """
    recs = cusp_form.records
    total = Fraction(0)
    for c, rec in zip(cusp_form.coefficients, recs):
        total += c * rec.aut_order * niemeier.mass(rec)
    c_leech = cusp_form.coefficients[0]
    value = total / c_leech
    if value == 0:
        raise ArithmeticError("vanishing eigenvalue")
    return value


def lambda2(cusp_form) -> Fraction:
    return lambda2_over_beta(cusp_form) * beta(2)


def satake_product(cusp_form) -> Fraction:
    """|prod_j (y_j + 1/y_j)| for the Satake square roots at p = 2.

    Equals (lambda(2)/beta) / 2^33: squaring the product identity
    lambda^2 / (x_0^{-2} x_1 ... x_12) = prod (y_j + 1/y_j)^2 with
    x_0^{-2} x_1 ... x_12 = 2^-66 gives |prod| = lambda / (beta 2^33).
    """
    return abs(lambda2_over_beta(cusp_form)) / 2**33


def ramanujan_violated(cusp_form) -> bool:
    """|prod (y_j + 1/y_j)| > 2^12 forces some |x_j| != 1."""
    return satake_product(cusp_form) > 2**N_DEGREE


def is_prime(n: int) -> bool:
    """Trial division; ample for the factor 901141 (< 2^20)."""
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True
