"""Binary Golay code [24,12,8] and the dodecad route to the D12 coefficient.

The extended code is built from the length-23 quadratic residue code
(generator polynomial x^11 + x^10 + x^6 + x^5 + x^4 + x^2 + 1) plus an
overall parity bit; the weight distribution (1, 759, 2576, 759, 1) is
asserted at construction, so a wrong generator cannot slip through.

The 2704156 twelve-element subsets of the 24 coordinates fall into five
classes distinguished by how they meet the 759 octads; the two classes
containing no nonzero codeword parametrize (together with the norm-8
coordinate frames) the sublattices that feed the Fourier coefficient at
the D12 lattice.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations

import numpy as np

N = 24
QR_LENGTH = 23
# x^11 + x^10 + x^6 + x^5 + x^4 + x^2 + 1
QR_GENERATOR = (1 << 11) | (1 << 10) | (1 << 6) | (1 << 5) | (1 << 4) | (1 << 2) | 1

from math import factorial

FRAME_COUNT = 3**6 * 5**3 * 7 * 13
AUT_D12 = 2**12 * factorial(12)

CLASS_SIZES = {
    "special": 35420,
    "extraspecial": 1275120,
    "transverse": 1020096,
    "penumbral": 370944,
    "umbral": 2576,
}


def generator_matrix() -> list:
    """12 basis codewords of the extended code, as 24-bit ints."""
    rows = []
    for i in range(12):
        word = QR_GENERATOR << i
        assert word < (1 << QR_LENGTH)
        if word.bit_count() % 2:
            word |= 1 << QR_LENGTH
        rows.append(word)
    return rows


@lru_cache(maxsize=None)
def codewords() -> tuple:
    """All 4096 codewords, with the weight distribution asserted."""
    basis = generator_matrix()
    words = [0]
    for b in basis:
        words += [w ^ b for w in words]
    dist = {}
    for w in words:
        dist[w.bit_count()] = dist.get(w.bit_count(), 0) + 1
    assert dist == {0: 1, 8: 759, 12: 2576, 16: 759, 24: 1}, dist
    return tuple(words)


@lru_cache(maxsize=None)
def octads() -> tuple:
    return tuple(w for w in codewords() if w.bit_count() == 8)


@lru_cache(maxsize=None)
def dodecads() -> tuple:
    return tuple(w for w in codewords() if w.bit_count() == 12)


def _popcount(arr):
    if hasattr(np, "bitwise_count"):
        return np.bitwise_count(arr)
    v = arr.view(np.uint8).reshape(arr.shape + (4,))
    lut = np.array([bin(i).count("1") for i in range(256)], dtype=np.uint8)
    return lut[v].sum(axis=-1)


@lru_cache(maxsize=None)
def classify_subsets() -> dict:
    """Sizes of the five classes of 12-element subsets of the coordinates.

    Signature per subset: (is a codeword, number of octads contained,
    number of octads met in exactly 7 points).  Codewords are the umbral
    class; 3 or 1 contained octads mark special / extraspecial; the
    codeword-free sets split by the 7-point count (12 transverse, 11
    penumbral).  Raises if the signatures do not coalesce into exactly
    five classes of the expected sizes.
    """
    masks = np.fromiter(
        (sum(1 << i for i in c) for c in combinations(range(N), 12)),
        dtype=np.uint32, count=2704156)
    contained = np.zeros(masks.shape, dtype=np.uint16)
    met7 = np.zeros(masks.shape, dtype=np.uint16)
    for o in octads():
        inter = _popcount(masks & np.uint32(o))
        contained += inter == 8
        met7 += inter == 7
    dodecad_set = np.array(sorted(dodecads()), dtype=np.uint32)
    is_dodecad = np.isin(masks, dodecad_set)

    sig_codes = (is_dodecad.astype(np.uint32) << 24
                 | contained.astype(np.uint32) << 12
                 | met7.astype(np.uint32))
    uniq, counts = np.unique(sig_codes, return_counts=True)
    classes = {}
    for code, cnt in zip(uniq.tolist(), counts.tolist()):
        is_cw, n8, n7 = code >> 24, (code >> 12) & 0xFFF, code & 0xFFF
        if is_cw:
            name = "umbral"
        elif n8 == 3:
            name = "special"
        elif n8 == 1:
            name = "extraspecial"
        elif n8 == 0 and n7 == 12:
            name = "transverse"
        elif n8 == 0 and n7 == 11:
            name = "penumbral"
        else:
            raise AssertionError(f"unexpected signature {(is_cw, n8, n7)}")
        classes[name] = classes.get(name, 0) + cnt
    if classes != CLASS_SIZES:
        raise AssertionError(f"classification failed: {classes}")
    return classes


def golay_free_count() -> tuple:
    """(transverse, penumbral): 12-subsets containing no nonzero codeword."""
    c = classify_subsets()
    return c["transverse"], c["penumbral"]


def steiner_property(sample: int = 2000, seed: int = 0) -> bool:
    """Every 5-element subset lies in exactly one octad (S(5,8,24))."""
    import random

    rng = random.Random(seed)
    oct_arr = np.array(octads(), dtype=np.uint32)
    for _ in range(sample):
        five = sum(1 << i for i in rng.sample(range(N), 5))
        hits = int((( oct_arr & np.uint32(five)) == np.uint32(five)).sum())
        if hits != 1:
            return False
    return True


def a_d12_frames() -> int:
    """Fourier coefficient at the D12 lattice via frames and 12-subsets.

    Sublattices isomorphic to the doubled D12 lattice correspond to pairs
    (norm-8 frame, 12-subset of the frame); the sublattice reduces to a
    maximal isotropic subspace exactly when the subset contains no nonzero
    codeword, and the sign is +1 on both qualifying orbits.  The
    coefficient is #Aut(D12) times the number of qualifying sublattices.
    """
    transverse, penumbral = golay_free_count()
    return AUT_D12 * FRAME_COUNT * (transverse + penumbral)


A_D12_EXPECTED = 2**28 * 3**14 * 5**6 * 7**3 * 11 * 13 * 23
