import random
from fractions import Fraction

import pytest

from siegel12.exactq import ExactMatrix, solve_unique


def random_matrix(rng, n, m):
    return ExactMatrix([[Fraction(rng.randint(-5, 5), rng.randint(1, 4))
                         for _ in range(m)] for _ in range(n)])


def test_rank_identity():
    eye = ExactMatrix([[1 if i == j else 0 for j in range(5)]
                       for i in range(5)])
    assert eye.rank() == 5
    assert eye.nullspace() == []


def test_rank_singular():
    m = ExactMatrix([[1, 2, 3], [2, 4, 6], [1, 0, 1]])
    assert m.rank() == 2
    ns = m.nullspace()
    assert len(ns) == 1
    for row in m.rows:
        assert sum(a * x for a, x in zip(row, ns[0])) == 0


def test_nullspace_members_random():
    rng = random.Random(7)
    for _ in range(20):
        n, m = rng.randint(2, 6), rng.randint(2, 6)
        a = random_matrix(rng, n, m)
        ns = a.nullspace()
        assert a.rank() + len(ns) == m
        for v in ns:
            for row in a.rows:
                assert sum(c * x for c, x in zip(row, v)) == 0


def test_det_and_solve():
    a = ExactMatrix([[2, 1], [1, 3]])
    assert a.det() == 5
    x = solve_unique(a, [1, 0])
    assert x == [Fraction(3, 5), Fraction(-1, 5)]
    assert a.mul_vec(x) == [Fraction(1), Fraction(0)]


def test_det_multiplicative():
    rng = random.Random(11)
    for _ in range(10):
        a = random_matrix(rng, 4, 4)
        b = random_matrix(rng, 4, 4)
        prod = ExactMatrix([[sum(a.rows[i][k] * b.rows[k][j]
                                 for k in range(4)) for j in range(4)]
                            for i in range(4)])
        assert prod.det() == a.det() * b.det()


def test_solve_singular_raises():
    a = ExactMatrix([[1, 1], [2, 2]])
    with pytest.raises((ArithmeticError, ValueError)):
        solve_unique(a, [1, 0])
