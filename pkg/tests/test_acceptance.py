"""End-to-end acceptance checks.

Each check prints its own PASS/FAIL line.  Checks 10 and 11 need the 23
Leech sublattice counts that the bundled data file marks as not curated
(see the data file header); until those integers are supplied they fail,
by design, rather than being skipped.
"""

import pytest

from siegel12 import acceptance, niemeier

NAMES = {
    1: "matrix", 2: "rank_and_kernel", 3: "coefficients", 4: "det_table",
    5: "cusp_vanishing", 6: "witt_igusa", 7: "eta_expansion", 8: "golay",
    9: "frame_vs_theta", 10: "hecke_eigenvalue", 11: "mass_data",
    12: "gf2_suite", 13: "oracle", 14: "integrality",
}


@pytest.fixture(scope="module")
def results():
    return {num: (num, name, ok, detail) for num, name, ok, detail
            in acceptance.run_all(cache=niemeier.default_cache())}


@pytest.mark.parametrize("num", sorted(NAMES), ids=NAMES.get)
def test_criterion(results, num):
    res = results[num]
    print(acceptance.format_results([res]))
    num_, name, ok, detail = res
    assert ok, f"criterion {num} failed: {name} ({detail})"
