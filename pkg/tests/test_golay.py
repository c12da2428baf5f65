import math

from siegel12 import golay, niemeier


def test_weight_distribution():
    words = golay.codewords()
    assert len(words) == 4096
    dist = {}
    for w in words:
        dist[bin(w).count("1")] = dist.get(bin(w).count("1"), 0) + 1
    assert dist == {0: 1, 8: 759, 12: 2576, 16: 759, 24: 1}


def test_code_is_linear_and_selfdual():
    words = set(golay.codewords())
    gens = golay.generator_matrix()
    assert len(gens) == 12
    for g in gens:
        for h in gens:
            assert g ^ h in words
            assert bin(g & h).count("1") % 2 == 0  # self-orthogonal


def test_octads_and_dodecads():
    assert len(golay.octads()) == 759
    assert len(golay.dodecads()) == 2576


def test_steiner_property():
    # every 5-set of the 24 points lies in exactly one octad
    assert golay.steiner_property(sample=500, seed=1)


def test_classification_sizes():
    classes = golay.classify_subsets()
    assert classes == golay.CLASS_SIZES
    assert sum(classes.values()) == math.comb(24, 12)
    assert classes["umbral"] == 2576
    assert classes["special"] == 35420
    assert classes["extraspecial"] == 1275120
    assert classes["transverse"] == 1020096
    assert classes["penumbral"] == 370944


def test_golay_free_count():
    t, p = golay.golay_free_count()
    assert (t, p) == (1020096, 370944)


def test_frame_route_value():
    a = golay.a_d12_frames()
    assert a == golay.A_D12_EXPECTED
    assert a == 2**28 * 3**14 * 5**6 * 7**3 * 11 * 13 * 23
    # consistency with the theta route normalization constant
    assert a == niemeier.AUT_LEECH * 2**6 * 3**5 * 5**2 * 7
