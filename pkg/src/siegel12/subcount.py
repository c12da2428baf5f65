"""Counting root sublattices of a given type inside ADE root lattices.

A sublattice "of type X" means a sublattice generated by norm 2 vectors
whose root system is X; these correspond exactly to full root subsystems of
type X, since an ADE root lattice contains no norm 2 vectors beyond its
roots.  Counts factor over the ambient components: a sub-multiset of X is
assigned to each component and the per-component counts multiply.

Per irreducible ambient the count N(Y, S) is obtained by:

  * closed formulas for S = A_m and S = D_m (block/support combinatorics on
    the coordinate description of the roots);
  * exact backtracking over ordered tuples of simple roots for S = E6, E7,
    E8, divided by the number of such tuples per subsystem (aut_order).

``brute_force_count`` is an independent oracle: plain tuple backtracking
over explicit roots with no symmetry shortcuts, for ambients of rank <= 8.
"""

from __future__ import annotations

import random
from collections import Counter
from functools import lru_cache
from math import comb, factorial

from . import rootsys
from .rootsys import aut_order, format_type, gram_matrix, rank, root_gram

ORACLE_MAX_RANK = 8


class CacheCorruption(Exception):
    pass


# ---------------------------------------------------------------------------
# Public API


def count(x, ambient, cache=None) -> int:
    """Number of sublattices of type ``x`` in the root lattice of ``ambient``.

    Both arguments are canonical type tuples (see rootsys.make_type).
    """
    if rank(x) > rank(ambient):
        return 0
    return _distribute(tuple(x), tuple(ambient), cache, {})


def embeddings(x, ambient, cache=None) -> int:
    """Number of isometric embeddings: count * aut_order(x)."""
    if not x:
        return 1
    return count(x, ambient, cache) * aut_order(x)


def _distribute(x, comps, cache, memo) -> int:
    if not x:
        return 1
    if not comps:
        return 0
    key = (x, comps)
    if key in memo:
        return memo[key]
    total = 0
    for sub, rest in _sub_multisets(x):
        n = count_in_irreducible(sub, comps[0], cache)
        if n:
            total += n * _distribute(rest, comps[1:], cache, memo)
    memo[key] = total
    return total


def _sub_multisets(x):
    """All (sub, rest) splittings of a canonical type tuple."""
    groups = []
    i = 0
    while i < len(x):
        j = i
        while j < len(x) and x[j] == x[i]:
            j += 1
        groups.append((x[i], j - i))
        i = j
    out = []

    def rec(g, sub, rest):
        if g == len(groups):
            out.append((tuple(sub), tuple(rest)))
            return
        comp, mult = groups[g]
        for k in range(mult + 1):
            rec(g + 1, sub + [comp] * k, rest + [comp] * (mult - k))

    rec(0, [], [])
    return out


def count_in_irreducible(y, comp, cache=None) -> int:
    """N(Y, S) for an irreducible ambient component S."""
    if not y:
        return 1
    if rank(y) > comp[1]:
        return 0
    fam = comp[0]
    if fam == "A":
        return _count_in_a(y, comp[1])
    if fam == "D":
        return _count_in_d(y, comp[1])
    return _count_in_e(y, comp, cache)


# ---------------------------------------------------------------------------
# Classical ambients


def _count_in_a(y, m: int) -> int:
    """Subsystems of A_m.  Components are chains on disjoint supports in
    the coordinate description of A_m inside Z^(m+1), and every A_k
    subsystem has support of size exactly k+1, so the count is a plain
    set-partition multinomial."""
    if any(fam != "A" for fam, _ in y):
        return 0
    mult = Counter(k for _, k in y)
    points = m + 1
    used = sum(c * (k + 1) for k, c in mult.items())
    if used > points:
        return 0
    out = factorial(points) // factorial(points - used)
    for k, c in mult.items():
        out //= factorial(k + 1) ** c * factorial(c)
    return out


def _count_in_d(y, m: int) -> int:
    """Subsystems of D_m via support blocks.

    On the coordinates of D_m, every irreducible subsystem occupies a
    support block disjoint from the others.  The possible blocks are:

      * a chain A_k on k+1 coordinates (2^k sign patterns per support);
      * a full D_j block on j coordinates, one per support (j >= 4);
      * the coincidences D_2 = A_1 + A_1 (a pair of A_1 components on a
        common 2-coordinate support) and D_3 = A_3 (an A_3 on a
        3-coordinate support).

    The sum runs over how many A_1 pairs and A_3 components are realized
    through the coincidences.
    """
    if any(fam == "E" for fam, _ in y):
        return 0
    a_mult = Counter(k for fam, k in y if fam == "A")
    d_mult = Counter(k for fam, k in y if fam == "D")
    total = 0
    for pairs in range(a_mult[1] // 2 + 1):
        for triples in range(a_mult[3] + 1):
            blocks = []  # (support, count, weight)
            for k, c in a_mult.items():
                c -= 2 * pairs if k == 1 else 0
                c -= triples if k == 3 else 0
                if c:
                    blocks.append((k + 1, c, 2 ** k))
            if pairs:
                blocks.append((2, pairs, 1))
            if triples:
                blocks.append((3, triples, 1))
            for j, c in d_mult.items():
                blocks.append((j, c, 1))
            used = sum(s * c for s, c, _ in blocks)
            if used > m:
                continue
            term = factorial(m) // factorial(m - used)
            for s, c, w in blocks:
                term = term * w ** c // (factorial(s) ** c * factorial(c))
            total += term
    return total


# ---------------------------------------------------------------------------
# Exceptional ambients: backtracking over tuples of simple roots


@lru_cache(maxsize=None)
def _root_masks(ambient):
    """(gram, mask0, mask_m1) for the full root list of a type tuple.

    mask0[r] / mask_m1[r] are bitmasks of the roots having inner product
    0 / -1 with root r.
    """
    gram = root_gram(ambient)
    n = len(gram)
    mask0 = [0] * n
    mask_m1 = [0] * n
    for i in range(n):
        row = gram[i]
        m0 = m1 = 0
        for j in range(n):
            if row[j] == 0:
                m0 |= 1 << j
            elif row[j] == -1:
                m1 |= 1 << j
        mask0[i] = m0
        mask_m1[i] = m1
    return gram, tuple(mask0), tuple(mask_m1)


def _tuple_backtrack(ambient, target, fix_symmetry: bool) -> int:
    """Ordered tuples (r_0,...,r_{s-1}) of ambient roots with Gram matrix
    ``target`` (diagonal 2, off-diagonal 0 or -1).

    With ``fix_symmetry`` the first root is pinned (the ambient group is
    transitive on roots) and the second is pinned within its candidate set
    (the stabilizer of a root in E6/E7/E8 is transitive on the roots at
    each inner product); the result is rescaled accordingly.  Only valid
    for a single exceptional ambient component.
    """
    _, mask0, mask_m1 = _root_masks(ambient)
    n = len(mask0)
    s = len(target)
    for i in range(s):
        for j in range(s):
            if i != j and target[i][j] not in (0, -1):
                raise ValueError("off-diagonal Gram entries must be 0 or -1")

    def cand_mask(r, g):
        return mask0[r] if g == 0 else mask_m1[r]

    def dfs(level, cands):
        # cands[j - level] is the candidate mask for position j
        if level == s - 1:
            return cands[0].bit_count()
        total = 0
        m = cands[0]
        row = target[level]
        while m:
            low = m & -m
            r = low.bit_length() - 1
            m ^= low
            nxt = []
            dead = False
            for off, c in enumerate(cands[1:], start=level + 1):
                nc = c & cand_mask(r, row[off])
                if not nc:
                    dead = True
                    break
                nxt.append(nc)
            if not dead:
                total += dfs(level + 1, nxt)
        return total

    full = (1 << n) - 1
    if s == 0:
        return 1
    if not fix_symmetry:
        return dfs(0, [full] * s)
    if s == 1:
        return n
    r0 = 0
    cands = [full & cand_mask(r0, target[0][j]) for j in range(1, s)]
    c1 = cands[0].bit_count()
    if c1 == 0:
        return 0
    if s == 2:
        return n * c1
    r1 = (cands[0] & -cands[0]).bit_length() - 1
    nxt = [c & cand_mask(r1, target[1][j])
           for j, c in enumerate(cands[1:], start=2)]
    if any(c == 0 for c in nxt):
        return 0
    return n * c1 * dfs(2, nxt)


@lru_cache(maxsize=None)
def _count_in_e_computed(y, comp) -> int:
    target = gram_matrix(y)
    tuples = _tuple_backtrack((comp,), target, fix_symmetry=True)
    auts = aut_order(y)
    assert tuples % auts == 0
    return tuples // auts


def _count_in_e(y, comp, cache) -> int:
    if cache is not None:
        hit = cache.get(y, comp)
        if hit is not None:
            return hit
    val = _count_in_e_computed(y, comp)
    if cache is not None:
        cache.put(y, comp, val)
    return val


# ---------------------------------------------------------------------------
# Independent oracle


def brute_force_count(x, ambient) -> int:
    """Sublattice count by exhaustive tuple enumeration over explicit roots.

    No closed formulas, no symmetry shortcuts, no cache; the ambient may be
    any type of rank <= 8.  Intended as a cross-check for ``count``.
    """
    if rank(ambient) > ORACLE_MAX_RANK:
        raise ValueError(f"oracle limited to ambient rank {ORACLE_MAX_RANK}")
    if not x:
        return 1
    if rank(x) > rank(ambient):
        return 0
    target = gram_matrix(x)
    tuples = _tuple_backtrack(tuple(ambient), target, fix_symmetry=False)
    auts = aut_order(x)
    assert tuples % auts == 0
    return tuples // auts


# ---------------------------------------------------------------------------
# Persistent cache for the exceptional-ambient counts


class CountCache:
    """Plain text cache of N(Y, E) values: one "Y|E count" line each.

    On load, one randomly chosen entry is recomputed from scratch and a
    mismatch raises CacheCorruption.
    """

    def __init__(self, path=None):
        self.entries = {}
        self.path = path
        if path is not None:
            try:
                with open(path) as fh:
                    self._parse(fh)
            except FileNotFoundError:
                pass
            else:
                self._verify_random_entry()

    def _parse(self, fh):
        for line in fh:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            try:
                key, value = line.rsplit(None, 1)
                ytext, etext = key.split("|")
                y = rootsys.parse_type(ytext)
                comp = rootsys.parse_type(etext)
                if len(comp) != 1:
                    raise ValueError("ambient must be irreducible")
                self.entries[(y, comp[0])] = int(value)
            except ValueError as exc:
                raise CacheCorruption(f"bad cache line {line!r}") from exc

    def _verify_random_entry(self):
        if not self.entries:
            return
        key = random.choice(sorted(self.entries,
                                   key=lambda k: (format_type(k[0]), k[1])))
        y, comp = key
        fresh = _count_in_e_computed(y, comp)
        if fresh != self.entries[key]:
            raise CacheCorruption(
                f"cache entry {format_type(y)}|{comp[0]}{comp[1]} has "
                f"{self.entries[key]}, recomputation gives {fresh}")

    def get(self, y, comp):
        return self.entries.get((tuple(y), comp))

    def put(self, y, comp, value: int):
        self.entries[(tuple(y), comp)] = value

    def save(self, path=None):
        path = path or self.path
        if path is None:
            raise ValueError("no path to save to")
        items = sorted(self.entries.items(),
                       key=lambda kv: (kv[0][1], rank(kv[0][0]),
                                       format_type(kv[0][0])))
        with open(path, "w") as fh:
            fh.write("# N(Y, E) cache: sublattices of type Y in an "
                     "exceptional root lattice.\n")
            for (y, comp), value in items:
                fh.write(f"{format_type(y).replace(' ', '')}|"
                         f"{comp[0]}{comp[1]} {value}\n")
