import csv
import io
import json

import pytest

from siegel12 import cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_factor_str():
    assert cli.factor_str(0) == "0"
    assert cli.factor_str(1) == "1"
    assert cli.factor_str(-12) == "-2^2 * 3"
    assert cli.factor_str(901141) == "901141"
    assert cli.factor_str(2**28 * 3**14) == "2^28 * 3^14"


def test_coeff_command(capsys):
    code, out, _ = run(capsys, "coeff", "D12")
    assert code == 0
    assert "1" in out.split()[-1]


def test_coeff_rejects_bad_type(capsys):
    code, _, err = run(capsys, "coeff", "B2")
    assert code == 2
    assert "error" in err


def test_cuspform_json(capsys):
    code, out, _ = run(capsys, "--format", "json", "cuspform")
    assert code == 0
    rows = json.loads(out)
    assert len(rows) == 24
    assert rows[0]["class"] == "Leech"
    assert rows[0]["coefficient"] == "1/152769576960"


def test_table_csv_sorted(capsys):
    code, out, _ = run(capsys, "--format", "csv", "table", "--max-det", "24")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    keys = [(int(r["det"]), r["type"]) for r in rows]
    assert keys == sorted(keys)
    assert keys[0] == (4, "D12")


def test_qexp(capsys):
    code, out, _ = run(capsys, "qexp", "--terms", "30")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[1].split() == ["4", "1"]
    assert lines[2].split() == ["5", "2"]


def test_d12_routes_agree(capsys):
    code, out, _ = run(capsys, "d12")
    assert code == 0
    assert "theta" in out and "frames" in out


def test_d12_frames_raw_value(capsys):
    code, out, _ = run(capsys, "d12", "--method", "frames")
    assert code == 0
    assert "2^28" in out and "theta" not in out


def test_golay_classify(capsys):
    code, out, _ = run(capsys, "golay", "classify")
    assert code == 0
    assert "umbral" in out and "2576" in out


def test_hecke_missing_data_exit_code(capsys):
    code, _, err = run(capsys, "hecke")
    assert code == cli.EXIT_DATA_ERROR
    assert "data error" in err


def test_matrix_row_count(capsys):
    code, out, _ = run(capsys, "matrix")
    assert code == 0
    assert len(out.strip().splitlines()) == 25  # header + 24 row types


def test_threads_flag_accepted(capsys):
    code, out, _ = run(capsys, "--threads", "4", "coeff", "D12")
    assert code == 0


def test_bad_cache_exit_code(tmp_path, capsys):
    bad = tmp_path / "counts.txt"
    bad.write_text("garbage\n")
    code, _, err = run(capsys, "--cache", str(bad), "cuspform")
    assert code == cli.EXIT_DATA_ERROR
    assert "data error" in err
