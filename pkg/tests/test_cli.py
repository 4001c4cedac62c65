import json
from pathlib import Path

from superchar.cli import main

DATA = Path(__file__).parent / "data"


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_chartab_text(capsys):
    code, out, _ = run_cli(capsys, "chartab", "--group", "S3")
    assert code == 0
    assert out.startswith("chartab S3 classes=3 exponent=6")
    assert "2, 0, -1" in out


def test_chartab_json(capsys):
    code, out, _ = run_cli(capsys, "chartab", "--group", "C2", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["degrees"] == [1, 1]
    assert payload["validation"]["ok"] is True


def test_chartab_ingest_good(capsys):
    code, out, err = run_cli(
        capsys, "chartab", "--group", "S3", "--ingest", str(DATA / "s3.tbl")
    )
    assert code == 0
    assert "validation checks pass" in err


def test_chartab_ingest_corrupted_exits_2(capsys):
    code, _, err = run_cli(
        capsys, "chartab", "--group", "S3", "--ingest", str(DATA / "s3_bad_orth.tbl")
    )
    assert code == 2
    assert "orthogonality" in err


def test_chartab_nonassociative_file_exits_2(capsys):
    code, _, err = run_cli(
        capsys, "chartab", "--group", f"file:{DATA / 'group_nonassoc.txt'}"
    )
    assert code == 2
    assert "associativity" in err


def test_chartab_missing_file_exits_2(capsys):
    code, _, err = run_cli(capsys, "chartab", "--group", "file:no_such_file.tbl")
    assert code == 2
    assert "error" in err


def test_enumerate_counts(capsys):
    for name, count in (("S3", 2), ("C4", 3), ("C2", 1)):
        code, out, _ = run_cli(capsys, "enumerate", "--group", name)
        assert code == 0
        assert out.startswith(f"{count} supercharacter theories")


def test_enumerate_json(capsys):
    code, out, _ = run_cli(capsys, "enumerate", "--group", "C4", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["count"] == 3
    assert len(payload["theories"]) == 3


def test_analyze_q8(capsys):
    code, out, _ = run_cli(capsys, "analyze", "--group", "Q8", "--sct", "finest")
    assert code == 0
    assert "VZ theory:        True" in out
    assert "nilpotence class: 2" in out
    assert "U(S)            = {0, 1}" in out


def test_analyze_s3_camina_pair(capsys):
    code, out, _ = run_cli(capsys, "analyze", "--group", "S3", "--sct", "finest")
    assert code == 0
    assert "V(S)            = {0, 3, 4}" in out
    assert "Camina pair: True" in out


def test_analyze_coarsest_c4(capsys):
    code, out, _ = run_cli(capsys, "analyze", "--group", "C4", "--sct", "coarsest")
    assert code == 0
    assert "Z(S)            = {0} (= 1)" in out
    assert "VZ theory:        False" in out


def test_analyze_index_selector_and_json(capsys):
    code, out, _ = run_cli(
        capsys, "analyze", "--group", "C4", "--sct", "index:1", "--format", "json"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["group"]["label"] == "C4"
    code, _, err = run_cli(capsys, "analyze", "--group", "C4", "--sct", "index:99")
    assert code == 2
    code, _, err = run_cli(capsys, "analyze", "--group", "C4", "--sct", "bogus")
    assert code == 2


def test_verify_single_group(capsys):
    code, out, _ = run_cli(capsys, "verify", "--group", "S3")
    assert code == 0
    assert "fail 0" in out.replace("fail   0", "fail 0")


def test_verify_json_and_out_file(capsys, tmp_path):
    out_path = tmp_path / "report.json"
    code, _, _ = run_cli(
        capsys, "verify", "--group", "C4", "--format", "json", "--out", str(out_path)
    )
    assert code == 0
    payload = json.loads(out_path.read_text())
    assert payload["summary"]["fail"] == 0
    assert payload["groups"][0]["label"] == "C4"


def test_verify_text_and_json_agree(capsys):
    code, text_out, _ = run_cli(capsys, "verify", "--group", "Q8")
    assert code == 0
    code, json_out, _ = run_cli(capsys, "verify", "--group", "Q8", "--format", "json")
    assert code == 0
    payload = json.loads(json_out)
    s = payload["summary"]
    tail = text_out.strip().splitlines()[-1]
    assert tail == (
        f"summary: pass {s['pass']}, fail {s['fail']}, "
        f"vacuous {s['vacuous']}, n/a {s['na']}"
    )


def test_verify_missing_file_exits_2(capsys):
    code, _, err = run_cli(capsys, "verify", "--group", "file:missing.tbl")
    assert code == 2


def test_verify_permutation_input(capsys):
    code, out, _ = run_cli(capsys, "verify", "--group", f"perm:{DATA / 'perm_d4.txt'}")
    assert code == 0


def test_verify_extremes_only_flag(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "--group", "Q8", "--extremes-only", "--format", "json"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["groups"][0]["theory_count"] == 2


def test_verify_max_order_flag(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "--catalog", "default", "--max-order", "4", "--format", "json"
    )
    assert code == 0
    payload = json.loads(out)
    assert {e["label"] for e in payload["groups"]} == {"C2", "C3", "C4", "C2xC2"}
    assert "S4" in payload["skipped"]


def test_usage_error_exits_2(capsys):
    assert main(["chartab"]) == 2  # missing --group
    assert main(["bogus-command"]) == 2


def test_help_exits_0(capsys):
    assert main(["--help"]) == 0
