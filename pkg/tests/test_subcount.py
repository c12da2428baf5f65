import random

import pytest

from siegel12 import rootsys as rs
from siegel12 import subcount as sc


def T(text):
    return rs.parse_type(text)


def test_a_in_a_formulas():
    # N(A1, An) = n(n+1)/2 root pairs
    for n in range(1, 9):
        assert sc.count(T("A1"), T(f"A{n}")) == n * (n + 1) // 2
    # chains of simple roots: N(Am, An) counts (n+1)! / ((m+1)! (n-m)!) * ...
    assert sc.count(T("A2"), T("A2")) == 1
    assert sc.count(T("A2"), T("A3")) == 4


def test_d_in_d_basics():
    assert sc.count(T("D4"), T("D4")) == 1
    assert sc.count(T("A1"), T("D4")) == 12
    # D2 = A1^2 coincidence contributes to A1^2 counts inside D-lattices
    assert sc.count(T("A1^2"), T("D4")) == sc.brute_force_count(
        T("A1^2"), T("D4"))


def test_paper_matrix_anchors():
    anchors = [
        ("D4", "E6", 45),
        ("D4", "E7", 315),
        ("D4", "E8", 3150),
        ("E6", "E7", 28),
        ("E6", "E8", 1120),
        ("E7", "E8", 120),
        ("A4", "E8", 24192),
        ("D5", "E8", 7560),
    ]
    for x, amb, expected in anchors:
        assert sc.count(T(x), T(amb)) == expected


def test_formula_matches_oracle_sampled():
    rng = random.Random(23)
    xs = ["A1", "A2", "A3", "A1^2", "A1 A2", "A1^3", "A2^2", "D4", "A4"]
    ambients = ["A4", "A5", "D4", "D5", "D6", "A2 A3", "A1 D5", "E6", "E7"]
    for _ in range(25):
        x, amb = T(rng.choice(xs)), T(rng.choice(ambients))
        assert sc.count(x, amb) == sc.brute_force_count(x, amb)


def test_count_zero_when_too_big():
    assert sc.count(T("E6"), T("A8")) == 0
    assert sc.count(T("D5"), T("D4")) == 0
    assert sc.count(T("A9"), T("E8")) == 0


def test_empty_type():
    assert sc.count(T("-"), T("E8")) == 1
    assert sc.count(T("-"), T("-")) == 1


def test_embeddings_vs_count():
    x, amb = T("A2"), T("E6")
    assert sc.embeddings(x, amb) == sc.count(x, amb) * rs.aut_order(x)


def test_oracle_guard():
    with pytest.raises(ValueError):
        sc.brute_force_count(T("A1"), T("A9"))


def test_cache_roundtrip(tmp_path):
    path = tmp_path / "counts.txt"
    cache = sc.CountCache(str(path))
    n = sc.count(T("D4"), T("E6"), cache)
    assert n == 45
    cache.save()
    reloaded = sc.CountCache(str(path))
    assert reloaded.get(T("D4"), ("E", 6)) == 45


def test_cache_corruption_detected(tmp_path):
    path = tmp_path / "counts.txt"
    path.write_text("D4|E6 46\n")
    with pytest.raises(sc.CacheCorruption):
        sc.CountCache(str(path))


def test_cache_bad_line(tmp_path):
    path = tmp_path / "counts.txt"
    path.write_text("not a cache line\n")
    with pytest.raises(sc.CacheCorruption):
        sc.CountCache(str(path))
