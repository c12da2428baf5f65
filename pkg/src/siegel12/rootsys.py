"""ADE root system types: parsing, invariants, and explicit root vectors.

A type is a multiset of irreducible components, stored as a canonical tuple
of (family, rank) pairs sorted by decreasing rank.  D2 and D3 are folded
into their ADE normal forms A1+A1 and A3 on input, so every stored D
component has rank at least 4.
"""

from __future__ import annotations

import re
from functools import lru_cache

Irr = tuple  # ('A' | 'D' | 'E', rank)

_TOKEN = re.compile(r"([ADE])(\d+)(?:\^(\d+))?")

_E_DATA = {
    6: {"roots": 72, "coxeter": 12, "det": 3, "weyl": 51840, "diagram": 2},
    7: {"roots": 126, "coxeter": 18, "det": 2, "weyl": 2903040, "diagram": 1},
    8: {"roots": 240, "coxeter": 30, "det": 1, "weyl": 696729600, "diagram": 1},
}


def _validate_irr(fam: str, n: int) -> list:
    """Normalize one component; returns a list of components."""
    if fam == "A":
        if n < 1:
            raise ValueError(f"invalid component A{n}")
        return [("A", n)]
    if fam == "D":
        if n < 2:
            raise ValueError(f"invalid component D{n}")
        if n == 2:
            return [("A", 1), ("A", 1)]
        if n == 3:
            return [("A", 3)]
        return [("D", n)]
    if fam == "E":
        if n not in (6, 7, 8):
            raise ValueError(f"invalid component E{n}")
        return [("E", n)]
    raise ValueError(f"unknown family {fam!r}")


def make_type(components) -> tuple:
    """Canonical type tuple from an iterable of (family, rank) pairs."""
    out = []
    for fam, n in components:
        out.extend(_validate_irr(fam, int(n)))
    out.sort(key=lambda c: (-c[1], c[0]))
    return tuple(out)


def parse_type(text: str) -> tuple:
    """Parse strings like 'A5^4 D4', 'A1^24', 'E8^3' or '-' (empty type)."""
    text = text.strip()
    if text in ("", "-", "0"):
        return ()
    compact = text.replace(" ", "").replace("+", "")
    pos = 0
    comps = []
    for match in _TOKEN.finditer(compact):
        if match.start() != pos:
            raise ValueError(f"cannot parse root system {text!r}")
        fam, n, mult = match.group(1), int(match.group(2)), match.group(3)
        comps.extend([(fam, n)] * (int(mult) if mult else 1))
        pos = match.end()
    if pos != len(compact):
        raise ValueError(f"cannot parse root system {text!r}")
    return make_type(comps)


def format_type(t) -> str:
    if not t:
        return "-"
    parts = []
    i = 0
    while i < len(t):
        j = i
        while j < len(t) and t[j] == t[i]:
            j += 1
        fam, n = t[i]
        parts.append(f"{fam}{n}" + (f"^{j - i}" if j - i > 1 else ""))
        i = j
    return " ".join(parts)


# ---------------------------------------------------------------------------
# Invariants


def rank(t) -> int:
    return sum(n for _, n in t)


def irr_num_roots(c: Irr) -> int:
    fam, n = c
    if fam == "A":
        return n * (n + 1)
    if fam == "D":
        return 2 * n * (n - 1)
    return _E_DATA[n]["roots"]


def num_roots(t) -> int:
    return sum(irr_num_roots(c) for c in t)


def irr_coxeter(c: Irr) -> int:
    fam, n = c
    if fam == "A":
        return n + 1
    if fam == "D":
        return 2 * n - 2
    return _E_DATA[n]["coxeter"]


def irr_det(c: Irr) -> int:
    fam, n = c
    if fam == "A":
        return n + 1
    if fam == "D":
        return 4
    return _E_DATA[n]["det"]


def det(t) -> int:
    out = 1
    for c in t:
        out *= irr_det(c)
    return out


def irr_weyl_order(c: Irr) -> int:
    fam, n = c
    if fam == "A":
        out = 1
        for k in range(2, n + 2):
            out *= k
        return out
    if fam == "D":
        out = 1 << (n - 1)
        for k in range(2, n + 1):
            out *= k
        return out
    return _E_DATA[n]["weyl"]


def irr_diagram_auts(c: Irr) -> int:
    fam, n = c
    if fam == "A":
        return 1 if n == 1 else 2
    if fam == "D":
        return 6 if n == 4 else 2
    return _E_DATA[n]["diagram"]


def weyl_order(t) -> int:
    out = 1
    for c in t:
        out *= irr_weyl_order(c)
    return out


def aut_order(t) -> int:
    """Order of the full automorphism group of the root system.

    Product over components of |Weyl| * |diagram automorphisms|, times a
    factorial for each multiplicity (components of equal type may be
    permuted).  Equivalently, the number of ordered tuples of simple roots
    realizing the Cartan matrix within the root system itself.
    """
    out = 1
    i = 0
    while i < len(t):
        j = i
        while j < len(t) and t[j] == t[i]:
            j += 1
        mult = j - i
        base = irr_weyl_order(t[i]) * irr_diagram_auts(t[i])
        out *= base ** mult
        for k in range(2, mult + 1):
            out *= k
        i = j
    return out


# ---------------------------------------------------------------------------
# Cartan matrices (Gram matrices of simple roots, all roots of norm 2)


def _diagram_edges(c: Irr) -> list:
    """Edges of the Dynkin diagram on nodes 0..n-1."""
    fam, n = c
    chain = [(i, i + 1) for i in range(n - 1)]
    if fam == "A":
        return chain
    if fam == "D":
        # chain on 0..n-2 with the fork node n-1 attached to n-3
        return [(i, i + 1) for i in range(n - 2)] + [(n - 3, n - 1)]
    # E6/E7/E8: chain on 0..n-2 with node n-1 attached to node 2
    return [(i, i + 1) for i in range(n - 2)] + [(2, n - 1)]


def gram_matrix(t) -> list:
    """Block Gram matrix of a system of simple roots for the whole type."""
    n = rank(t)
    g = [[0] * n for _ in range(n)]
    offset = 0
    for c in t:
        cn = c[1]
        for i in range(cn):
            g[offset + i][offset + i] = 2
        for i, j in _diagram_edges(c):
            g[offset + i][offset + j] = -1
            g[offset + j][offset + i] = -1
        offset += cn
    return g


# ---------------------------------------------------------------------------
# Explicit roots.  Vectors are integer tuples; inner products must be
# divided by the returned scale (E type roots live in doubled coordinates).


@lru_cache(maxsize=None)
def irr_roots(c: Irr) -> tuple:
    """(roots, scale): root vectors and the inner product denominator."""
    fam, n = c
    roots = []
    if fam == "A":
        for i in range(n + 1):
            for j in range(n + 1):
                if i != j:
                    v = [0] * (n + 1)
                    v[i], v[j] = 1, -1
                    roots.append(tuple(v))
        scale = 1
    elif fam == "D":
        for i in range(n):
            for j in range(i + 1, n):
                for si in (1, -1):
                    for sj in (1, -1):
                        v = [0] * n
                        v[i], v[j] = si, sj
                        roots.append(tuple(v))
        scale = 1
    else:
        e8 = _e8_roots()
        if n == 8:
            roots = list(e8)
        else:
            a = (1,) * 8
            sel = [r for r in e8 if _dot(r, a) == 0]
            if n == 7:
                roots = sel
            else:
                bvec = (-1, -1, -1, -1, -1, -1, 1, 1)
                roots = [r for r in sel if _dot(r, bvec) == 0]
        scale = 4
    assert len(roots) == irr_num_roots(c)
    return tuple(roots), scale


def _dot(u, v) -> int:
    return sum(a * b for a, b in zip(u, v))


@lru_cache(maxsize=None)
def _e8_roots() -> tuple:
    """E8 roots in doubled coordinates (inner product scale 4).

    112 vectors (+-2, +-2, 0^6) and 128 vectors (+-1)^8 with an even
    number of minus signs; all have squared length 8, i.e. norm 2.
    """
    roots = []
    for i in range(8):
        for j in range(i + 1, 8):
            for si in (2, -2):
                for sj in (2, -2):
                    v = [0] * 8
                    v[i], v[j] = si, sj
                    roots.append(tuple(v))
    for bits in range(256):
        if bin(bits).count("1") % 2 == 0:
            roots.append(tuple(-1 if bits & (1 << i) else 1
                               for i in range(8)))
    return tuple(roots)


@lru_cache(maxsize=None)
def root_gram(t) -> tuple:
    """Gram matrix (exact inner products) of all roots of a type.

    Roots of distinct components are orthogonal; the matrix is assembled
    blockwise so mixed scales never interact.
    """
    blocks = []
    for c in t:
        roots, scale = irr_roots(c)
        blocks.append((roots, scale))
    total = num_roots(t)
    g = [[0] * total for _ in range(total)]
    offset = 0
    for roots, scale in blocks:
        k = len(roots)
        for i in range(k):
            for j in range(k):
                p = _dot(roots[i], roots[j])
                assert p % scale == 0
                g[offset + i][offset + j] = p // scale
        offset += k
    return tuple(tuple(row) for row in g)
