"""The degree-12 weight-12 cusp form as a combination of theta series.

The 24 theta series are linearly independent in degree 12; requiring the
Fourier coefficient to vanish at the 23 row types of rank below 12 leaves a
one-dimensional kernel, normalized so that the coefficient at the D12 root
lattice equals 1.  Fourier coefficients at a root-lattice Gram matrix count
embeddings: sublattice count times the number of ordered simple-root
systems (aut_order).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from . import exactq, niemeier, rootsys, subcount

D12 = rootsys.parse_type("D12")
DENOMINATOR_BOUND = 2**7 * 3**5 * 5**2 * 7


class CuspForm:
    def __init__(self, cache=None, data_path=None):
        self.records = niemeier.records(data_path)
        self.cache = cache
        self.matrix = niemeier.build_matrix(cache, data_path)
        self.coefficients = self._solve()

    def _solve(self):
        """Nullspace of the 23 vanishing rows, D12-normalized."""
        vanishing = [row for t, row in zip(niemeier.ROW_TYPES, self.matrix)
                     if rootsys.rank(t) < 12]
        assert len(vanishing) == 23
        kernel = exactq.ExactMatrix(vanishing).nullspace()
        if len(kernel) != 1:
            raise ArithmeticError(
                f"kernel dimension {len(kernel)} != 1: counting inconsistency")
        k = kernel[0]
        d12_row = self.matrix[niemeier.ROW_TYPES.index(D12)]
        scale = sum((ki * n for ki, n in zip(k, d12_row)), Fraction(0))
        scale *= rootsys.aut_order(D12)
        if scale == 0:
            raise ArithmeticError("degenerate D12 normalization")
        return [ki / scale for ki in k]

    def coefficient(self, t) -> Fraction:
        """Fourier coefficient at the Gram matrix of the root lattice of
        type ``t`` (any root type of rank <= 12)."""
        if rootsys.rank(t) > 12:
            raise ValueError("coefficients only defined up to rank 12")
        total = Fraction(0)
        for c, rec in zip(self.coefficients, self.records):
            if c and rootsys.rank(t) <= 24:
                n = subcount.count(t, rec.root_system, self.cache)
                if n:
                    total += c * n
        return total * rootsys.aut_order(t)

    def det_table(self, max_det: int = 96):
        """(det, value, type) for every rank-12 root type with determinant
        at most max_det, ascending det then lattice expression."""
        entries = []
        for t in rank12_types(max_det):
            entries.append((rootsys.det(t), self.coefficient(t), t))
        entries.sort(key=lambda e: (e[0], rootsys.format_type(e[2])))
        return entries

    def witt_igusa_check(self, t, allow_unchecked: bool = False) -> bool:
        """Whether L embeds equally often into E8+E8 and into D16.

        True for every root type of rank <= 3 (the theta series of the two
        16-dimensional even unimodular lattices agree there; norm-2 vectors
        of the D16 overlattice are exactly the D16 roots).  Rank above 3 is
        rejected unless ``allow_unchecked``: the statement genuinely fails
        there, e.g. for D4.
        """
        if rootsys.rank(t) > 3 and not allow_unchecked:
            raise ValueError("equality only guaranteed for rank <= 3")
        e8e8 = rootsys.make_type([("E", 8), ("E", 8)])
        d16 = rootsys.make_type([("D", 16)])
        return (subcount.embeddings(t, e8e8, self.cache) ==
                subcount.embeddings(t, d16, self.cache))


@lru_cache(maxsize=None)
def rank12_types(max_det: int) -> tuple:
    """All root types of rank exactly 12 with determinant <= max_det."""
    comps = ([("A", n) for n in range(1, 13)] +
             [("D", n) for n in range(4, 13)] +
             [("E", n) for n in (6, 7, 8)])
    out = []

    def rec(start, left, detacc, chosen):
        if detacc > max_det:
            return
        if left == 0:
            out.append(rootsys.make_type(chosen))
            return
        for i in range(start, len(comps)):
            c = comps[i]
            if c[1] > left:
                continue
            rec(i, left - c[1], detacc * rootsys.irr_det(c), chosen + [c])

    rec(0, 12, 1, [])
    return tuple(sorted(set(out)))
