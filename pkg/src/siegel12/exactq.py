"""Exact dense linear algebra over the rationals.

Scalars are plain Python ints and fractions.Fraction, so every result is
exact.  Matrices are small (at most a few dozen rows), which keeps naive
Gaussian elimination entirely adequate.
"""

from __future__ import annotations

from fractions import Fraction


class ExactMatrix:
    """Dense matrix with Fraction entries and exact elimination."""

    def __init__(self, rows):
        self.rows = [[Fraction(x) for x in row] for row in rows]
        self.nrows = len(self.rows)
        self.ncols = len(self.rows[0]) if self.rows else 0
        for row in self.rows:
            if len(row) != self.ncols:
                raise ValueError("ragged rows")

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    def copy(self) -> "ExactMatrix":
        return ExactMatrix(self.rows)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other):
        return isinstance(other, ExactMatrix) and self.rows == other.rows

    def mul_vec(self, v):
        """Matrix times column vector, returned as a list of Fractions."""
        if len(v) != self.ncols:
            raise ValueError("dimension mismatch")
        return [sum((row[j] * v[j] for j in range(self.ncols)), Fraction(0))
                for row in self.rows]

    def rref(self):
        """Reduced row echelon form.

        Returns (matrix, pivot_columns).  The first nonzero entry of each
        nonzero row is 1 and is the only nonzero entry in its column, so the
        result is canonical for the row space.
        """
        m = [row[:] for row in self.rows]
        pivots = []
        r = 0
        for c in range(self.ncols):
            pivot = next((i for i in range(r, self.nrows) if m[i][c] != 0), None)
            if pivot is None:
                continue
            m[r], m[pivot] = m[pivot], m[r]
            inv = 1 / m[r][c]
            m[r] = [x * inv for x in m[r]]
            for i in range(self.nrows):
                if i != r and m[i][c] != 0:
                    f = m[i][c]
                    m[i] = [a - f * b for a, b in zip(m[i], m[r])]
            pivots.append(c)
            r += 1
            if r == self.nrows:
                break
        return ExactMatrix(m), pivots

    def rank(self) -> int:
        _, pivots = self.rref()
        return len(pivots)

    def nullspace(self):
        """Basis of the right kernel, one vector per free column.

        The basis is in the standard reduced-echelon normalization: vector k
        for free column f has entry 1 at position f, zero at every other free
        column, and minus the reduced matrix entry at each pivot position.
        The order follows increasing free column index, so the output is
        deterministic.
        """
        red, pivots = self.rref()
        pivot_set = set(pivots)
        free = [c for c in range(self.ncols) if c not in pivot_set]
        basis = []
        for f in free:
            v = [Fraction(0)] * self.ncols
            v[f] = Fraction(1)
            for r, p in enumerate(pivots):
                v[p] = -red.rows[r][f]
            basis.append(v)
        return basis

    def det(self) -> Fraction:
        if self.nrows != self.ncols:
            raise ValueError("determinant of a non-square matrix")
        m = [row[:] for row in self.rows]
        n = self.nrows
        d = Fraction(1)
        for c in range(n):
            pivot = next((i for i in range(c, n) if m[i][c] != 0), None)
            if pivot is None:
                return Fraction(0)
            if pivot != c:
                m[c], m[pivot] = m[pivot], m[c]
                d = -d
            d *= m[c][c]
            inv = 1 / m[c][c]
            for i in range(c + 1, n):
                if m[i][c] != 0:
                    f = m[i][c] * inv
                    m[i] = [a - f * b for a, b in zip(m[i], m[c])]
        return d


def solve_unique(a: ExactMatrix, b) -> list:
    """Solve a x = b when the solution exists and is unique."""
    aug = ExactMatrix([row + [bi] for row, bi in zip(a.rows, b)])
    red, pivots = aug.rref()
    if a.ncols in pivots:
        raise ValueError("inconsistent system")
    if len(pivots) != a.ncols:
        raise ValueError("solution is not unique")
    x = [Fraction(0)] * a.ncols
    for r, p in enumerate(pivots):
        x[p] = red.rows[r][a.ncols]
    return x
