"""Hyperbolic quadratic spaces over GF(2), bitmask based.

The space of dimension m = 2h carries the split quadratic form

    q(x) = sum_{j<h} x_j * x_{h+j},

with polar form b(x, y) = q(x+y) + q(x) + q(y).  Vectors are ints with m
bits, subspaces are canonical tuples of reduced-echelon basis vectors, and
orthogonal maps are stored by their columns.  Everything here is exact and
deterministic; enumeration of maximal isotropic subspaces is feasible up to
m = 12 (151470 subspaces) and is guarded by MAX_ENUM_DIM.
"""

from __future__ import annotations

from itertools import combinations

MAX_ENUM_DIM = 12


class QuadraticSpaceF2:
    """Split (plus type) quadratic space of even dimension m over GF(2)."""

    def __init__(self, m: int):
        if m <= 0 or m % 2:
            raise ValueError("dimension must be a positive even number")
        self.m = m
        self.h = m // 2
        self.lo_mask = (1 << self.h) - 1
        self.full_mask = (1 << m) - 1

    def q(self, v: int) -> int:
        return ((v & self.lo_mask) & (v >> self.h)).bit_count() & 1

    def b(self, x: int, y: int) -> int:
        """Polar bilinear form b(x,y) = q(x+y) + q(x) + q(y)."""
        lo = ((x & self.lo_mask) & (y >> self.h)).bit_count()
        hi = ((x >> self.h) & (y & self.lo_mask)).bit_count()
        return (lo + hi) & 1

    def swap_halves(self, v: int) -> int:
        """b(x, v) = parity(x & swap_halves(v)) as a plain dot product."""
        return ((v & self.lo_mask) << self.h) | (v >> self.h)

    def standard_max_isotropic(self) -> tuple:
        """The coordinate subspace spanned by the first h basis vectors."""
        return tuple(1 << i for i in range(self.h))


# ---------------------------------------------------------------------------
# GF(2) linear algebra on bitmask bases


def gf2_rref(vectors, m: int) -> tuple:
    """Canonical reduced-echelon basis (lowest set bit as pivot) of a span."""
    basis = []  # kept sorted by pivot
    for v in vectors:
        for row in basis:
            if v & (row & -row):
                v ^= row
        if v:
            for i, row in enumerate(basis):
                if row & (v & -v):
                    basis[i] = row ^ v
            basis.append(v)
            basis.sort(key=lambda r: r & -r)
    return tuple(basis)


def gf2_rank(vectors, m: int) -> int:
    return len(gf2_rref(vectors, m))


def span_contains(basis, v: int) -> bool:
    for row in basis:
        if v & (row & -row):
            v ^= row
    return v == 0


def intersection_dim(basis1, basis2, m: int) -> int:
    return len(basis1) + len(basis2) - gf2_rank(basis1 + basis2, m)


def gf2_kernel(rows, m: int) -> list:
    """Basis of {x : parity(x & r) = 0 for every constraint mask r}."""
    red = gf2_rref(rows, m)
    pivots = [(r & -r).bit_length() - 1 for r in red]
    pivot_set = set(pivots)
    kernel = []
    for f in range(m):
        if f in pivot_set:
            continue
        v = 1 << f
        for p, row in zip(pivots, red):
            if row & (1 << f):
                v |= 1 << p
        kernel.append(v)
    return kernel


def perp_basis(space: QuadraticSpaceF2, basis) -> list:
    """Basis of the orthogonal complement of span(basis) w.r.t. b."""
    constraints = [space.swap_halves(v) for v in basis]
    return gf2_kernel(constraints, space.m)


# ---------------------------------------------------------------------------
# Orthogonal maps and the Dickson invariant


class OrthogonalMapF2:
    """Invertible linear map preserving q, stored as column images."""

    def __init__(self, space: QuadraticSpaceF2, cols):
        self.space = space
        self.cols = tuple(cols)
        if len(self.cols) != space.m:
            raise ValueError("need one column per basis vector")

    def apply(self, v: int) -> int:
        out = 0
        for i, col in enumerate(self.cols):
            if v & (1 << i):
                out ^= col
        return out

    def is_orthogonal(self) -> bool:
        sp = self.space
        if gf2_rank(self.cols, sp.m) != sp.m:
            return False
        for i, ci in enumerate(self.cols):
            if sp.q(ci) != sp.q(1 << i):
                return False
            for j in range(i + 1, sp.m):
                if sp.b(ci, self.cols[j]) != sp.b(1 << i, 1 << j):
                    return False
        return True

    def compose(self, other: "OrthogonalMapF2") -> "OrthogonalMapF2":
        """self after other (matrix product self @ other)."""
        return OrthogonalMapF2(self.space,
                               [self.apply(c) for c in other.cols])

    def __eq__(self, other):
        return self.cols == other.cols

    def __hash__(self):
        return hash(self.cols)


def identity_map(space: QuadraticSpaceF2) -> OrthogonalMapF2:
    return OrthogonalMapF2(space, [1 << i for i in range(space.m)])


def transvection(space: QuadraticSpaceF2, a: int) -> OrthogonalMapF2:
    """x -> x + b(a,x) a.  Orthogonal exactly when q(a) = 1."""
    if space.q(a) != 1:
        raise ValueError("transvections need q(a) = 1")
    cols = []
    for i in range(space.m):
        e = 1 << i
        cols.append(e ^ (a if space.b(a, e) else 0))
    return OrthogonalMapF2(space, cols)


def dickson(g: OrthogonalMapF2) -> int:
    """Dickson invariant trace(C' B) of the block matrix (A B; C D).

    The blocks refer to the splitting into the first h and last h
    coordinates.  The kernel of this map is the index 2 subgroup of the
    orthogonal group; transvections have invariant 1.
    """
    sp = g.space
    h = sp.h
    t = 0
    for i in range(h):
        # column i of C is the high half of cols[i]; column i of B is the
        # low half of cols[h+i]; the trace entry is their dot product.
        t ^= ((g.cols[i] >> h) & (g.cols[h + i] & sp.lo_mask)).bit_count() & 1
    return t


# ---------------------------------------------------------------------------
# Isotropic subspaces


def is_isotropic(space: QuadraticSpaceF2, basis) -> bool:
    for i, v in enumerate(basis):
        if space.q(v):
            return False
        for w in basis[i + 1:]:
            if space.b(v, w):
                return False
    return True


def count_maximal_isotropic(m: int) -> int:
    """prod_{i=0}^{m/2-1} (2^i + 1), the split-form count."""
    if m <= 0 or m % 2:
        raise ValueError("dimension must be a positive even number")
    out = 1
    for i in range(m // 2):
        out *= (1 << i) + 1
    return out


def enumerate_maximal_isotropic(space: QuadraticSpaceF2) -> list:
    """All maximal isotropic subspaces, as canonical reduced-echelon tuples.

    Enumerates reduced-echelon matrices directly (choose pivot columns, then
    fill free entries row by row, pruning on isotropy), so each subspace is
    produced exactly once with no dedup set.
    """
    m, h = space.m, space.h
    if m > MAX_ENUM_DIM:
        raise ValueError(f"enumeration capped at dimension {MAX_ENUM_DIM}")
    out = []

    def extend(rows, level, pivots, free_positions):
        if level == h:
            out.append(tuple(rows))
            return
        p = pivots[level]
        base = 1 << p
        frees = free_positions[level]
        for bits in range(1 << len(frees)):
            v = base
            k = bits
            for pos in frees:
                if k & 1:
                    v |= 1 << pos
                k >>= 1
            if space.q(v):
                continue
            if any(space.b(v, r) for r in rows):
                continue
            rows.append(v)
            extend(rows, level + 1, pivots, free_positions)
            rows.pop()

    for pivots in combinations(range(m), h):
        pivot_set = set(pivots)
        free_positions = [[c for c in range(p + 1, m) if c not in pivot_set]
                          for p in pivots]
        extend([], 0, pivots, free_positions)
    out.sort()
    return out


def orbit_sign(space: QuadraticSpaceF2, f, f0) -> int:
    """(-1)^dim(F intersect F0) for two maximal isotropic subspaces.

    Constant +1 on the orbit of F0 under the Dickson kernel, -1 on the
    other orbit.
    """
    return -1 if intersection_dim(tuple(f), tuple(f0), space.m) & 1 else 1


# ---------------------------------------------------------------------------
# Extensions of a small isotropic subspace


def _hyperbolic_pairs(space: QuadraticSpaceF2, vectors):
    """Split span(vectors) (nondegenerate, plus type) into hyperbolic pairs.

    Returns [(x_0, y_0), (x_1, y_1), ...] with q(x)=q(y)=0, b(x_i,y_i)=1
    and all other pairings zero.
    """
    vecs = list(vectors)
    pairs = []
    while vecs:
        n = len(vecs)
        x = None
        for bits in range(1, 1 << n):
            v = 0
            k = bits
            for i in range(n):
                if k & 1:
                    v ^= vecs[i]
                k >>= 1
            if v and space.q(v) == 0:
                x = v
                break
        if x is None:
            raise ValueError("space is not of plus type")
        y = next((w for w in vecs if space.b(x, w)), None)
        if y is None:
            raise ValueError("degenerate space")
        if space.q(y):
            y ^= x
        pairs.append((x, y))
        reduced = []
        for w in vecs:
            w ^= x if space.b(w, y) else 0
            w ^= y if space.b(w, x) else 0
            if w and not span_contains(gf2_rref([x, y], space.m), w):
                reduced.append(w)
        vecs = gf2_rref(reduced, space.m)
        vecs = [v for v in vecs]
    return pairs


def sum_epsilon_over_extensions(space: QuadraticSpaceF2, fp, f0) -> int:
    """sum of orbit_sign(F, F0) over maximal isotropic F containing Fp.

    Fp must be isotropic.  The extensions correspond to maximal isotropic
    subspaces of the quotient Fp-perp / Fp, which is again a split space;
    the sum vanishes unless Fp is itself maximal, in which case it is the
    sign of Fp.
    """
    fp = gf2_rref(tuple(fp), space.m)
    if not is_isotropic(space, fp):
        raise ValueError("Fp is not isotropic")
    f0 = gf2_rref(tuple(f0), space.m)
    d = len(fp)
    if d == space.h:
        return orbit_sign(space, fp, f0)

    # transversal of Fp inside its b-orthogonal complement
    perp = perp_basis(space, fp)
    transversal = []
    acc = list(fp)
    for v in perp:
        if not span_contains(gf2_rref(acc, space.m), v):
            transversal.append(v)
            acc.append(v)
    assert len(transversal) == space.m - 2 * d

    pairs = _hyperbolic_pairs(space, transversal)
    small = QuadraticSpaceF2(space.m - 2 * d)
    total = 0
    for sub in enumerate_maximal_isotropic(small):
        lifted = list(fp)
        for v in sub:
            w = 0
            for i, (x, y) in enumerate(pairs):
                if v & (1 << i):
                    w ^= x
                if v & (1 << (small.h + i)):
                    w ^= y
            lifted.append(w)
        total += orbit_sign(space, gf2_rref(lifted, space.m), f0)
    return total
