import random
from itertools import combinations

import pytest

from siegel12 import gf2quad as g


def space(m):
    return g.QuadraticSpaceF2(m)


def test_form_values_m2():
    sp = space(2)
    # q(x0, x1) = x0*x1 on bit pattern (hi<<1)|lo
    assert [sp.q(v) for v in range(4)] == [0, 0, 0, 1]


def test_polar_form_identity():
    sp = space(6)
    rng = random.Random(3)
    for _ in range(200):
        x, y = rng.randrange(64), rng.randrange(64)
        assert sp.b(x, y) == (sp.q(x ^ y) ^ sp.q(x) ^ sp.q(y))
        assert sp.b(x, y) == bin(x & sp.swap_halves(y)).count("1") % 2


def test_counts_match_closed_form():
    for m in (2, 4, 6, 8):
        subs = g.enumerate_maximal_isotropic(space(m))
        assert len(subs) == g.count_maximal_isotropic(m)
        assert len(set(subs)) == len(subs)
    assert [g.count_maximal_isotropic(m) for m in (2, 4, 6)] == [2, 6, 30]


def test_enumerated_subspaces_are_maximal_isotropic():
    sp = space(6)
    for sub in g.enumerate_maximal_isotropic(sp):
        assert len(sub) == sp.h
        assert g.is_isotropic(sp, sub)
        assert g.gf2_rref(sub, sp.m) == sub


def full_orthogonal_group_m4():
    sp = space(4)
    out = []
    for cols in ((a, b, c, d) for a in range(1, 16) for b in range(1, 16)
                 for c in range(1, 16) for d in range(1, 16)):
        m = g.OrthogonalMapF2(sp, cols)
        if m.is_orthogonal():
            out.append(m)
    return sp, out


def test_dickson_homomorphism_exhaustive_m4():
    sp, group = full_orthogonal_group_m4()
    assert len(group) == 72  # |O+(4, F2)|
    kernel = sum(1 for m in group if g.dickson(m) == 0)
    assert kernel == 36
    rng = random.Random(5)
    for _ in range(300):
        a, b = rng.choice(group), rng.choice(group)
        assert g.dickson(a.compose(b)) == (g.dickson(a) ^ g.dickson(b))


def test_transvections_have_dickson_one():
    for m in (2, 4, 6, 8):
        sp = space(m)
        for a in range(1, 1 << m):
            if sp.q(a):
                t = g.transvection(sp, a)
                assert t.is_orthogonal()
                assert g.dickson(t) == 1
    with pytest.raises(ValueError):
        g.transvection(space(4), 1)  # q = 0


def test_identity_has_dickson_zero():
    for m in (2, 4, 6, 8):
        assert g.dickson(g.identity_map(space(m))) == 0


def test_orbit_sign_splits_evenly():
    for m in (2, 4, 6, 8):
        sp = space(m)
        f0 = sp.standard_max_isotropic()
        signs = [g.orbit_sign(sp, f, f0)
                 for f in g.enumerate_maximal_isotropic(sp)]
        assert signs.count(1) == signs.count(-1)
        assert g.orbit_sign(sp, f0, f0) == (-1 if sp.h % 2 else 1)


def test_orbit_sign_invariant_under_kernel():
    sp, group = full_orthogonal_group_m4()
    f0 = sp.standard_max_isotropic()
    for f in g.enumerate_maximal_isotropic(sp):
        s = g.orbit_sign(sp, f, f0)
        for m in group:
            if g.dickson(m) == 0:
                img = g.gf2_rref([m.apply(v) for v in f], sp.m)
                assert g.orbit_sign(sp, img, f0) == s


def all_isotropic(sp, dim):
    out = set()
    for vecs in combinations(range(1, 1 << sp.m), dim):
        basis = g.gf2_rref(vecs, sp.m)
        if len(basis) == dim and g.is_isotropic(sp, basis):
            out.add(basis)
    return sorted(out)


def test_extension_sums_vanish_small():
    for m in (2, 4, 6):
        sp = space(m)
        f0 = sp.standard_max_isotropic()
        for d in range(0, sp.h):
            for fp in all_isotropic(sp, d):
                assert g.sum_epsilon_over_extensions(sp, fp, f0) == 0
        for fp in all_isotropic(sp, sp.h):
            assert (g.sum_epsilon_over_extensions(sp, fp, f0) ==
                    g.orbit_sign(sp, fp, f0))


def test_extension_sums_vanish_m8_sampled():
    sp = space(8)
    f0 = sp.standard_max_isotropic()
    rng = random.Random(17)
    pool = all_isotropic(sp, 2)
    for fp in rng.sample(pool, 40):
        assert g.sum_epsilon_over_extensions(sp, fp, f0) == 0


def test_perp_basis():
    sp = space(6)
    rng = random.Random(9)
    for _ in range(30):
        vs = g.gf2_rref([rng.randrange(1, 64) for _ in range(2)], 6)
        perp = g.perp_basis(sp, vs)
        assert len(perp) == 6 - len(vs)
        for p in perp:
            for v in vs:
                assert sp.b(p, v) == 0
