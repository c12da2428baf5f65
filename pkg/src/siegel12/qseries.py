"""Integer q-expansion of eta(8 tau)^12 * theta(tau) and the comparison
of its coefficients with the cusp form's determinant table."""

from __future__ import annotations

from math import comb


def eta8_12_theta(terms: int) -> list:
    """Coefficients [a_0, ..., a_{terms-1}] of eta(8t)^12 * theta(t).

    eta(8t)^12 = q^4 prod_{k>=1} (1 - q^{8k})^12 and
    theta(t) = 1 + 2 sum_{j>=1} q^{j^2}; everything is exact integer
    polynomial arithmetic truncated at the requested order.
    """
    if terms <= 0:
        return []
    n = terms - 1
    poly = [0] * (n + 1)
    if n < 4:
        return poly  # the expansion starts at q^4
    poly[4] = 1
    k = 1
    while 8 * k <= n:
        factor_done = [0] * (n + 1)
        for j in range(0, n // (8 * k) + 1):
            if j > 12:
                break
            c = (-1) ** j * comb(12, j)
            shift = 8 * k * j
            for e in range(shift, n + 1):
                if poly[e - shift]:
                    factor_done[e] += c * poly[e - shift]
        poly = factor_done
        k += 1
    theta = [0] * (n + 1)
    theta[0] = 1
    j = 1
    while j * j <= n:
        theta[j * j] = 2
        j += 1
    out = [0] * (n + 1)
    for e, c in enumerate(poly):
        if c:
            for e2 in range(0, n + 1 - e):
                if theta[e2]:
                    out[e + e2] += c * theta[e2]
    return out


def support_ok(coeffs) -> bool:
    """Nonzero coefficients only occur at exponents 0, 4, 5 mod 8."""
    return all(c == 0 or e % 8 in (0, 4, 5) for e, c in enumerate(coeffs))


def compare_report(cusp_form, max_det: int = 96) -> list:
    """Rows (det, type, coefficient, series coefficient, flag).

    flag is 'equal' when the cusp form coefficient equals the q^det series
    coefficient, '-2x' when the series coefficient is -2 times it (the
    typical behavior at det = 5 mod 8), and 'differs' otherwise.
    """
    series = eta8_12_theta(max_det + 1)
    rows = []
    for d, value, t in cusp_form.det_table(max_det):
        s = series[d]
        if value == s:
            flag = "equal"
        elif s == -2 * value:
            flag = "-2x"
        else:
            flag = "differs"
        rows.append((d, t, value, s, flag))
    return rows
