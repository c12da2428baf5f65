"""Registry of the 24 rank-24 even unimodular lattice classes.

Loads the curated data file (root systems, Coxeter numbers, automorphism
group orders, Leech sublattice counts), validates it against everything
that can be recomputed, and builds the 24x24 matrix whose (row, column)
entry counts the sublattices of a given root type inside each class.
"""

from __future__ import annotations

import importlib.resources
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import rootsys, subcount

AUT_LEECH = 2**22 * 3**9 * 5**4 * 7**2 * 11 * 13 * 23
FRAME_COUNT = 3**6 * 5**3 * 7 * 13  # norm-8 coordinate frames, index 24

# Minkowski-Siegel mass of the genus of even unimodular rank-24 lattices;
# the sum of 1/aut_order over the 24 classes must equal this exactly.
GENUS_MASS_24 = Fraction(
    1027637932586061520960267,
    129477933340026851560636148613120000000)

# row types of the sublattice-count matrix: the empty type followed by the
# irreducible types occurring among Niemeier root system components
ROW_TYPES = ([()] +
             [rootsys.make_type([("A", n)]) for n in range(1, 12)] +
             [rootsys.make_type([("D", n)]) for n in range(4, 13)] +
             [rootsys.make_type([("E", n)]) for n in (6, 7, 8)])


class MissingDataError(Exception):
    """A curated value marked unavailable in the data file was requested."""


@dataclass(frozen=True)
class NiemeierClass:
    index: int
    label: str
    root_system: tuple
    coxeter: int
    glue_order: int
    leech_count: int | None  # None when not curated in this build

    @property
    def aut_order(self) -> int:
        return rootsys.weyl_order(self.root_system) * self.glue_order


def data_path():
    return importlib.resources.files("siegel12") / "data" / "niemeier.txt"


@lru_cache(maxsize=None)
def records(path=None) -> tuple:
    """The 24 classes in Coxeter number order, loaded and validated."""
    src = data_path() if path is None else path
    recs = []
    with open(src) as fh:
        for line in fh:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            idx, label, rs, cox, glue, lc = line.split()
            recs.append(NiemeierClass(
                index=int(idx), label=label,
                root_system=rootsys.parse_type(rs),
                coxeter=int(cox), glue_order=int(glue),
                leech_count=None if lc == "-1" else int(lc)))
    _validate(recs)
    return tuple(recs)


def _validate(recs):
    if len(recs) != 24:
        raise ValueError(f"expected 24 records, found {len(recs)}")
    if [r.index for r in recs] != list(range(1, 25)):
        raise ValueError("indices must be 1..24 in order")
    if len({r.label for r in recs}) != 24:
        raise ValueError("duplicate labels")
    for r in recs:
        if r.index == 1:
            if r.root_system != () or r.coxeter != 0:
                raise ValueError("index 1 must be the root-free class")
            if r.aut_order != AUT_LEECH:
                raise ValueError("wrong automorphism group order at index 1")
            continue
        if rootsys.rank(r.root_system) != 24:
            raise ValueError(f"{r.label}: root system rank is not 24")
        h = {rootsys.irr_coxeter(c) for c in r.root_system}
        if h != {r.coxeter}:
            raise ValueError(f"{r.label}: components must share the Coxeter "
                             f"number {r.coxeter}")
        if r.glue_order <= 0:
            raise ValueError(f"{r.label}: glue order must be positive")
    if sorted(r.coxeter for r in recs) != [r.coxeter for r in recs]:
        raise ValueError("records must be in Coxeter number order")
    last = recs[23]
    if last.root_system != rootsys.parse_type("D24"):
        raise ValueError("index 24 must be the D24 class")
    if last.leech_count != FRAME_COUNT:
        raise ValueError("index 24 leech_count must be the frame count "
                         f"{FRAME_COUNT}")
    if mass(last) != Fraction(1, 2) * Fraction(1, 501397585920):
        raise ValueError("index 24 mass is inconsistent")
    total = sum(Fraction(1, r.aut_order) for r in recs)
    if total != GENUS_MASS_24:
        raise ValueError("automorphism group orders violate the genus mass")


def by_label(label: str, path=None) -> NiemeierClass:
    for r in records(path):
        if r.label == label:
            return r
    raise KeyError(label)


def mass(rec: NiemeierClass) -> Fraction:
    """Orbit mass leech_count / |Aut(Leech)|."""
    if rec.leech_count is None:
        raise MissingDataError(
            f"leech_count for {rec.label} is not curated in this build")
    return Fraction(rec.leech_count, AUT_LEECH)


def build_matrix(cache=None, path=None):
    """24x24 matrix: entry [i][j] counts sublattices of ROW_TYPES[i] in the
    root lattice of class j+1 (column 1, the root-free class, is zero except
    for the empty row type)."""
    recs = records(path)
    return [[subcount.count(row, r.root_system, cache) for r in recs]
            for row in ROW_TYPES]


def default_cache() -> subcount.CountCache:
    """Cache seeded from the packaged counts file when present."""
    seed = importlib.resources.files("siegel12") / "data" / "counts.txt"
    return subcount.CountCache(str(seed))
