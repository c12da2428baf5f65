"""The fourteen acceptance checks, shared by `siegel12 selftest` and the
test suite.  Each check returns (number, name, passed, detail) and asserts
nothing itself; callers decide how to report."""

from __future__ import annotations

import random
from fractions import Fraction

from . import (cuspform, gf2quad, golay, hecke, niemeier, qseries, reference,
               rootsys, subcount)

RANK4_TYPES = ["A1", "A2", "A3", "A4", "D4", "A1^2", "A1 A2", "A1 A3",
               "A1^3", "A1^2 A2", "A2^2", "A1^4"]


def all_types_up_to_rank(max_rank: int, families=None):
    """All root types (including reducible) of rank 1..max_rank."""
    comps = (families if families is not None else
             [("A", n) for n in range(1, max_rank + 1)] +
             [("D", n) for n in range(4, max_rank + 1)] +
             [("E", n) for n in (6, 7, 8) if n <= max_rank])
    out = set()

    def rec(start, left, chosen):
        if chosen:
            out.add(rootsys.make_type(chosen))
        for i in range(start, len(comps)):
            if comps[i][1] <= left:
                rec(i, left - comps[i][1], chosen + [comps[i]])

    rec(0, max_rank, [])
    return sorted(out)


def run_all(cache=None, data_path=None, progress=None):
    cf = cuspform.CuspForm(cache=cache, data_path=data_path)
    results = []
    for check in (_c1, _c2, _c3, _c4, _c5, _c6, _c7, _c8, _c9, _c10, _c11,
                  _c12, _c13, _c14):
        res = check(cf)
        results.append(res)
        if progress:
            progress(res)
    return results


def _c1(cf):
    bad = sum(1 for got, exp in zip(cf.matrix, reference.MATRIX)
              if got != exp)
    return (1, "24x24 sublattice matrix matches the printed table",
            bad == 0, f"{bad} mismatching rows" if bad else "576/576 exact")


def _c2(cf):
    from .exactq import ExactMatrix
    rk = ExactMatrix(cf.matrix).rank()
    vanishing = [row for t, row in zip(niemeier.ROW_TYPES, cf.matrix)
                 if rootsys.rank(t) < 12]
    kdim = len(ExactMatrix(vanishing).nullspace())
    ok = rk == 24 and kdim == 1
    return (2, "matrix rank 24, vanishing submatrix kernel dimension 1",
            ok, f"rank={rk}, kernel dim={kdim}")


def _c3(cf):
    exp = [c for _, c in reference.THEOREM4]
    ok = cf.coefficients == exp
    return (3, "solver reproduces the 24 printed cusp form coefficients",
            ok, "all 24 exact" if ok else "mismatch")


def _c4(cf):
    table = {t: (d, v) for d, v, t in cf.det_table(96)}
    bad = [lat for d, c, lat in reference.DET_TABLE
           if table.get(rootsys.parse_type(lat)) != (d, Fraction(c))]
    return (4, "determinant table reproduces all printed rows",
            not bad, f"{len(reference.DET_TABLE) - len(bad)}/"
            f"{len(reference.DET_TABLE)} rows exact" +
            (f"; first bad: {bad[0]}" if bad else ""))


def _c5(cf):
    bad = []
    for t in niemeier.ROW_TYPES:
        if rootsys.rank(t) < 12 and cf.coefficient(t) != 0:
            bad.append(t)
    pool = all_types_up_to_rank(11)
    sample = random.Random(12).sample(pool, 50)
    for t in sample:
        if cf.coefficient(t) != 0:
            bad.append(t)
    return (5, "cusp vanishing at 23 row types and 50 sampled rank<=11 types",
            not bad, "all zero" if not bad else
            f"nonzero at {rootsys.format_type(bad[0])}")


def _c6(cf):
    bad = [t for t in all_types_up_to_rank(3)
           if not cf.witt_igusa_check(t)]
    d4 = rootsys.parse_type("D4")
    counter = cf.witt_igusa_check(d4, allow_unchecked=True)
    ok = not bad and counter is False
    return (6, "Witt-Igusa embedding equality at rank<=3, D4 counterexample",
            ok, f"rank<=3 all equal: {not bad}; D4 equal: {counter}")


def _c7(cf):
    coeffs = qseries.eta8_12_theta(97)
    bad = [e for e, c in reference.ETA_COEFFS.items() if coeffs[e] != c]
    printed = {e for e, c in reference.ETA_COEFFS.items()}
    spurious = [e for e, c in enumerate(coeffs)
                if c != 0 and 4 <= e <= 96 and e not in printed]
    sup = qseries.support_ok(qseries.eta8_12_theta(200))
    ok = not bad and not spurious and sup
    return (7, "eta(8t)^12 theta(t) expansion matches and has 0,4,5 mod 8 "
            "support", ok,
            f"printed terms ok: {not bad}; support ok: {sup}")


def _c8(cf):
    try:
        classes = golay.classify_subsets()
    except AssertionError as exc:
        return (8, "Golay 12-subset classification and frame route", False,
                str(exc))
    a = golay.a_d12_frames()
    ok = classes == golay.CLASS_SIZES and a == golay.A_D12_EXPECTED
    return (8, "Golay 12-subset classification and frame route", ok,
            f"classes ok; a(D12) = 2^28 3^14 5^6 7^3 11 13 23: "
            f"{a == golay.A_D12_EXPECTED}")


def _c9(cf):
    c_d12 = cf.coefficient(rootsys.parse_type("D12"))
    ok = (c_d12 == 1 and golay.a_d12_frames() ==
          niemeier.AUT_LEECH * 2**6 * 3**5 * 5**2 * 7 * c_d12)
    return (9, "frame route agrees with theta route (coefficient(D12)=1)",
            ok, f"coefficient(D12) = {c_d12}")


def _c10(cf):
    try:
        lam = hecke.lambda2_over_beta(cf)
        sat = hecke.satake_product(cf)
    except niemeier.MissingDataError as exc:
        return (10, "Hecke eigenvalue lambda(2) and Satake product", False,
                f"unavailable: {exc}")
    ok = (lam == hecke.LAMBDA_OVER_BETA_EXPECTED and
          sat == hecke.SATAKE_PRODUCT_EXPECTED and sat > 2**12)
    return (10, "Hecke eigenvalue lambda(2) and Satake product", ok,
            f"lambda/beta = {lam}")


def _c11(cf):
    parts = []
    d24 = cf.records[23]
    ok1 = niemeier.mass(d24) == Fraction(1, 2) * Fraction(1, 501397585920)
    parts.append(f"mass(D24) ok: {ok1}")
    expected_total = gf2quad.count_maximal_isotropic(24)
    try:
        total = sum(niemeier.mass(r) for r in cf.records)
        ok2 = total * niemeier.AUT_LEECH == expected_total
        parts.append(f"sum of leech counts ok: {ok2}")
    except niemeier.MissingDataError as exc:
        ok2 = False
        parts.append(f"sum of leech counts unavailable: {exc}")
    ok3 = all(len(gf2quad.enumerate_maximal_isotropic(
        gf2quad.QuadraticSpaceF2(m))) == gf2quad.count_maximal_isotropic(m)
        for m in (2, 4, 6, 8))
    parts.append(f"closed form vs enumeration (m<=8) ok: {ok3}")
    return (11, "mass data consistency", ok1 and ok2 and ok3,
            "; ".join(parts))


def _c12(cf):
    sp4 = gf2quad.QuadraticSpaceF2(4)
    group = _orthogonal_group_m4(sp4)
    ok_hom = all(
        gf2quad.dickson(g.compose(h)) ==
        (gf2quad.dickson(g) + gf2quad.dickson(h)) % 2
        for g in group for h in group)
    ok_size = len(group) == 72
    ok_trans = all(
        gf2quad.dickson(gf2quad.transvection(sp4, a)) == 1
        for a in range(1, 16) if sp4.q(a) == 1)
    ok_orbits = True
    for m in (2, 4, 6, 8):
        sp = gf2quad.QuadraticSpaceF2(m)
        f0 = sp.standard_max_isotropic()
        subs = gf2quad.enumerate_maximal_isotropic(sp)
        signs = [gf2quad.orbit_sign(sp, f, f0) for f in subs]
        if signs.count(1) != signs.count(-1):
            ok_orbits = False
    ok_sum = _extension_sums_vanish()
    ok = ok_hom and ok_size and ok_trans and ok_orbits and ok_sum
    return (12, "GF(2) suite: Dickson, transvections, orbits, extension sums",
            ok, f"hom: {ok_hom}; |O+(4)|=72: {ok_size}; transvections: "
            f"{ok_trans}; equal orbits: {ok_orbits}; sums vanish: {ok_sum}")


def _orthogonal_group_m4(sp):
    group = []
    for c0 in range(1, 16):
        for c1 in range(1, 16):
            for c2 in range(1, 16):
                for c3 in range(1, 16):
                    g = gf2quad.OrthogonalMapF2(sp, (c0, c1, c2, c3))
                    if g.is_orthogonal():
                        group.append(g)
    return group


def _all_isotropic_subspaces(sp, max_dim):
    """Canonical bases of isotropic subspaces of dimension <= max_dim."""
    found = {()}
    frontier = [()]
    for _ in range(max_dim):
        nxt = []
        for basis in frontier:
            for v in range(1, 1 << sp.m):
                if sp.q(v) or gf2quad.span_contains(basis, v):
                    continue
                if any(sp.b(v, w) for w in basis):
                    continue
                ext = gf2quad.gf2_rref(basis + (v,), sp.m)
                if ext not in found:
                    found.add(ext)
                    nxt.append(ext)
        frontier = nxt
    return sorted(found)


def _extension_sums_vanish():
    for m in (2, 4, 6):
        sp = gf2quad.QuadraticSpaceF2(m)
        f0 = sp.standard_max_isotropic()
        for fp in _all_isotropic_subspaces(sp, sp.h - 1):
            if gf2quad.sum_epsilon_over_extensions(sp, fp, f0) != 0:
                return False
    sp = gf2quad.QuadraticSpaceF2(8)
    f0 = sp.standard_max_isotropic()
    rng = random.Random(8)
    sample = _all_isotropic_subspaces(sp, 2)
    for fp in rng.sample(sample, 60):
        if len(fp) < sp.h and \
                gf2quad.sum_epsilon_over_extensions(sp, fp, f0) != 0:
            return False
    return True


def _c13(cf):
    ambients = all_types_up_to_rank(8)
    bad = []
    for amb in ambients:
        for xs in RANK4_TYPES:
            x = rootsys.parse_type(xs)
            a = subcount.count(x, amb, None)
            b = subcount.brute_force_count(x, amb)
            if a != b:
                bad.append((xs, rootsys.format_type(amb), a, b))
    return (13, "count equals brute-force oracle (rank<=4 in rank<=8)",
            not bad, f"{len(ambients) * len(RANK4_TYPES)} cases" +
            (f"; first bad: {bad[0]}" if bad else ", all equal"))


def _c14(cf):
    bound = cuspform.DENOMINATOR_BOUND
    bad = [(d, rootsys.format_type(t)) for d, v, t in cf.det_table(96)
           if v.denominator != 1]
    denom_ok = all(
        bound % (c * rec.aut_order).denominator == 0
        for c, rec in zip(cf.coefficients, cf.records))
    ok = not bad and denom_ok
    return (14, "table values integral, denominators within 2^7 3^5 5^2 7",
            ok, "all integral" if ok else
            f"denominators divide bound: {denom_ok}; first bad: {bad[:1]}")


def format_results(results):
    lines = []
    for num, name, ok, detail in results:
        status = "PASS" if ok else "FAIL"
        lines.append(f"[{status}] {num:2d}. {name} ({detail})")
    return "\n".join(lines)
