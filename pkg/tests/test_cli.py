import json
from pathlib import Path

import pytest

from regpowers.cli import run_cli
from regpowers.regularity import RegRecord

GOLDEN = Path(__file__).parent / "golden" / "reg_9_1_1_r1_10.csv"


def run(capsys, *argv):
    code = run_cli(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_reg_csv_matches_golden_file(capsys):
    code, out, err = run(
        capsys, "reg", "--a", "9", "--b", "1", "--c", "1", "--r-min", "1", "--r-max", "10"
    )
    assert code == 0 and err == ""
    assert out.encode() == GOLDEN.read_bytes()


def test_reg_out_file_matches_golden_file(tmp_path, capsys):
    target = tmp_path / "table.csv"
    code, out, _ = run(
        capsys,
        "reg", "--a", "9", "--b", "1", "--c", "1",
        "--r-min", "1", "--r-max", "10", "--out", str(target),
    )
    assert code == 0 and out == ""
    assert target.read_bytes() == GOLDEN.read_bytes()


def test_reg_is_deterministic(capsys):
    args = ("reg", "--a", "9", "--b", "1", "--c", "1", "--r-min", "1", "--r-max", "30")
    _, first, _ = run(capsys, *args)
    _, second, _ = run(capsys, *args)
    assert first == second


def test_reg_tsv(capsys):
    code, out, _ = run(
        capsys,
        "reg", "--a", "9", "--b", "1", "--c", "1",
        "--r-min", "1", "--r-max", "2", "--format", "tsv",
    )
    assert code == 0
    assert out.splitlines() == [
        "r\tfloor_r_lambda2\tsigma\treg\tis_exception",
        "1\t10\t0\t11\ttrue",
        "2\t20\t1\t22\tfalse",
    ]


def test_reg_json_round_trip(capsys):
    code, out, _ = run(
        capsys,
        "reg", "--a", "9", "--b", "1", "--c", "1",
        "--r-min", "1", "--r-max", "10", "--format", "json",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["params"] == {"a": 9, "b": 1, "c": 1, "d": 2}
    records = [
        RegRecord(
            r=int(row["r"]),
            floor_r_lambda2=int(row["floor_r_lambda2"]),
            sigma=row["sigma"],
            reg=int(row["reg"]),
            is_exception=row["is_exception"],
        )
        for row in payload["rows"]
    ]
    assert records[0] == RegRecord(r=1, floor_r_lambda2=10, sigma=0, reg=11, is_exception=True)
    assert len(records) == 10


def test_reg_json_serializes_huge_integers_as_strings(capsys):
    r = 2**60  # far past the 2^53 double-precision cliff
    code, out, _ = run(
        capsys,
        "reg", "--a", "9", "--b", "1", "--c", "1",
        "--r-min", str(r), "--r-max", str(r), "--format", "json",
    )
    assert code == 0
    row = json.loads(out)["rows"][0]
    assert isinstance(row["r"], str) and int(row["r"]) == r
    assert isinstance(row["reg"], str)
    record = RegRecord(
        r=int(row["r"]),
        floor_r_lambda2=int(row["floor_r_lambda2"]),
        sigma=row["sigma"],
        reg=int(row["reg"]),
        is_exception=row["is_exception"],
    )
    assert record.reg == record.floor_r_lambda2 + 1 + record.sigma


def test_reg_scan_check_passes_up_to_200(capsys):
    code, out, err = run(
        capsys,
        "reg", "--a", "9", "--b", "1", "--c", "1",
        "--r-min", "1", "--r-max", "200", "--scan-check",
    )
    assert code == 0 and err == ""
    assert len(out.splitlines()) == 201


def test_scan_check_mismatch_exits_3(capsys, monkeypatch):
    import regpowers.cli as cli_module

    monkeypatch.setattr(cli_module, "reg_scan", lambda params, r: 0)
    code, out, err = run(
        capsys,
        "reg", "--a", "9", "--b", "1", "--c", "1",
        "--r-min", "1", "--r-max", "1", "--scan-check",
    )
    assert code == 3 and out == ""
    assert "mismatch" in err


def test_unknown_cohomology_request_exits_3(capsys, monkeypatch):
    import regpowers.cli as cli_module
    from regpowers.cohomology import UnknownValueError

    def explode(params, r):
        raise UnknownValueError(7, 1, 1)

    monkeypatch.setattr(cli_module, "reg_closed_form", explode)
    code, _, err = run(
        capsys, "reg", "--a", "9", "--b", "1", "--c", "1", "--r-min", "1", "--r-max", "1"
    )
    assert code == 3
    assert "not determined" in err


def test_reg_rejects_bad_range(capsys):
    code, _, err = run(
        capsys, "reg", "--a", "9", "--b", "1", "--c", "1", "--r-min", "5", "--r-max", "2"
    )
    assert code == 2 and "r_min" in err


def test_reg_refuses_lattice_only(capsys):
    code, _, _ = run(
        capsys,
        "reg", "--a", "9", "--b", "1", "--c", "1",
        "--r-min", "1", "--r-max", "2", "--lattice-only",
    )
    assert code == 2


def test_validate_accepts_and_echoes(capsys):
    code, out, _ = run(capsys, "validate", "--a", "9", "--b", "1", "--c", "1")
    assert code == 0
    assert out == "valid: a=9 b=1 c=1 d=2\n"


def test_validate_rejects_square_radicand(capsys):
    code, out, err = run(capsys, "validate", "--a", "9", "--b", "3", "--c", "4")
    assert code == 2 and out == ""
    assert "perfect square" in err


def test_validate_lattice_only_relaxation(capsys):
    code, _, _ = run(capsys, "validate", "--a", "8", "--b", "1", "--c", "1")
    assert code == 2
    code, out, _ = run(capsys, "validate", "--a", "8", "--b", "1", "--c", "1", "--lattice-only")
    assert code == 0 and out == "valid: a=8 b=1 c=1 d=2\n"


def test_exceptions_lists_one_per_line(capsys):
    code, out, _ = run(capsys, "exceptions", "--a", "9", "--b", "1", "--c", "1", "--r-max", "200")
    assert code == 0
    assert out.splitlines() == ["1", "5", "29", "169"]


def test_pell_solutions(capsys):
    code, out, _ = run(capsys, "pell", "--d", "2", "--count", "3")
    assert code == 0
    assert out.splitlines() == ["1,1", "7,5", "41,29"]


def test_pell_unsolvable_exits_2(capsys):
    code, out, err = run(capsys, "pell", "--d", "3", "--count", "1")
    assert code == 2 and out == ""
    assert "no integer solutions" in err


def test_pell_cf_mode(capsys):
    code, out, _ = run(capsys, "pell", "--d", "2", "--cf", "--count", "3")
    assert code == 0
    assert out.splitlines() == ["cf: [1; 2]", "1,1", "3,2", "7,5"]


def test_cohom_prints_known_and_unknown(capsys):
    code, out, _ = run(capsys, "cohom", "--a", "9", "--b", "1", "--c", "1", "--m", "9", "--r", "1")
    assert code == 0
    assert out.splitlines() == [
        "surface h0: known 0",
        "surface h1: known 2",
        "surface h2: known 0",
        "ideal h1: known 2",
        "ideal h2: known 0",
        "ideal h3: known 0",
    ]
    code, out, _ = run(capsys, "cohom", "--a", "9", "--b", "1", "--c", "1", "--m", "3", "--r", "1")
    assert code == 0
    assert out.splitlines() == [
        "surface h0: unknown",
        "surface h1: unknown",
        "surface h2: unknown",
        "ideal h1: unknown",
        "ideal h2: unknown",
        "ideal h3: unknown",
    ]


def test_cohom_lattice_only(capsys):
    code, out, _ = run(
        capsys,
        "cohom", "--a", "8", "--b", "1", "--c", "1",
        "--m", "100", "--r", "1", "--lattice-only",
    )
    assert code == 0
    lines = out.splitlines()
    assert lines[1] == "surface h1: known 0"  # the surface values need no strict regime
    assert lines[3] == "ideal h1: unknown"  # the blowup statements do


def test_limit_table(capsys):
    code, out, _ = run(capsys, "limit", "--a", "9", "--b", "1", "--c", "1", "--r-max", "3")
    assert code == 0
    assert out.splitlines() == [
        "r,gap_rational,gap_sqrt_coeff,bracket_ok",
        "1,2,1,true",
        "2,4,2,true",
        "3,6,3,true",
    ]


def test_sparsity(capsys):
    code, out, _ = run(capsys, "sparsity", "--n-max", "15")
    assert code == 0 and out == "true\n"


def test_unknown_subcommand_exits_2(capsys):
    assert run(capsys, "frobnicate")[0] == 2


def test_missing_required_flag_exits_2(capsys):
    assert run(capsys, "reg", "--a", "9", "--b", "1", "--c", "1")[0] == 2


def test_out_to_unwritable_path_exits_1(capsys):
    code, _, err = run(
        capsys,
        "reg", "--a", "9", "--b", "1", "--c", "1",
        "--r-min", "1", "--r-max", "2",
        "--out", "/nonexistent-dir/table.csv",
    )
    assert code == 1 and err != ""
