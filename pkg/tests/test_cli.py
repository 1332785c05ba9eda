"""
Tests for the command-line interface
"""

import json

import pytest

from pdrm.cli import cli_dispatch, parse_weights
from pdrm.codes import to_hex


@pytest.fixture
def run(tmp_path, capsys):
    """Run the CLI with a private config file, returning (code, stdout)"""

    def _run(*argv):
        code = cli_dispatch([*argv, "--config", str(tmp_path / "config.yaml")])
        return code, capsys.readouterr().out

    return _run


def test_parse_weights():
    """Test range and list syntax"""
    assert parse_weights("1..4") == (1, 2, 3, 4)
    assert parse_weights("2,5") == (2, 5)


def test_info(run):
    """Test factorization and information-set output"""
    code, out = run("info", "--m", "8", "--r1", "17")
    payload = json.loads(out)
    assert code == 0
    assert (payload["r1"], payload["r2"], payload["a"], payload["s"]) == (17, 15, 8, 44)
    assert len(payload["info_set"]["positions"]) == 9


def test_info_all(run):
    """Test listing every factorization"""
    code, out = run("info", "--m", "8", "--all")
    payload = json.loads(out)
    assert code == 0
    assert len(payload["factorizations"]) == 6
    assert [f["s"] for f in payload["ranked"]] == [44, 34, 32]


def test_tables_text(run):
    """Test the aligned correctable-error table"""
    code, out = run("tables", "--which", "2", "--format", "text")
    assert code == 0
    assert "4334" in out
    assert "printed 5" in out


def test_tables_json(run):
    """Test versioned table output"""
    code, out = run("tables", "--which", "1")
    payload = json.loads(out)
    assert payload["schema"] == 1
    assert len(payload["rows"]) == 10


def test_encode_all_ones(run):
    """Test that five ones encode to the all-ones word"""
    code, out = run("encode", "--m", "4", "--info", "11111")
    assert code == 0
    assert json.loads(out)["codeword"] == "ffff"
    code, out = run("encode", "--m", "4", "--info", "11111", "--format", "text")
    assert out.strip() == "ffff"


def test_decode_success(run):
    """Test decoding a word with one error at position 0"""
    code, out = run("decode", "--m", "4", "--received", "7fff")
    payload = json.loads(out)
    assert code == 0
    assert payload["status"] == "decoded"
    assert payload["codeword"] == "ffff"
    assert payload["err_weight_observed"] == 1


def test_decode_failure_exit_code(run, bent4):
    """Test exit code 1 when decoding fails"""
    code, out = run("decode", "--m", "4", "--received", to_hex(bent4))
    assert code == 1
    assert json.loads(out)["status"] == "failure"


def test_simulate_writes_report(run, tmp_path):
    """Test the simulation report on stdout and on disk"""
    output = tmp_path / "reports" / "sim.json"
    code, out = run(
        "simulate",
        "--m",
        "4",
        "--weights",
        "1..3",
        "--trials",
        "20",
        "--seed",
        "7",
        "--output",
        str(output),
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["seed"] == 7
    assert [r["successes"] for r in payload["records"]] == [20, 20, 20]
    assert json.loads(output.read_text())["records"][0]["weight"] == 1


def test_verify_pdlike(run):
    """Test the exhaustive check and the s override"""
    code, out = run("verify-pdlike", "--m", "4", "--mode", "exhaustive")
    assert code == 0
    assert json.loads(out)["checked"] == 3003

    code, out = run("verify-pdlike", "--m", "4", "--s", "12")
    payload = json.loads(out)
    assert code == 1
    assert payload["holds"] is False


def test_matrix(run):
    """Test 0/1 export of the standard-form parity-check matrix"""
    code, out = run("matrix", "--m", "4", "--which", "Hstd")
    rows = out.split()
    assert code == 0
    assert len(rows) == 11
    assert all(len(r) == 16 and set(r) <= {"0", "1"} for r in rows)


def test_domain_errors_exit_2(run, capsys):
    """Test that domain errors become exit code 2"""
    code, _ = run("info", "--m", "7")
    assert code == 2
    code, _ = run("encode", "--m", "4", "--info", "1121")
    assert code == 2
    code, _ = run("info", "--m", "4", "--poly", "0x1f")
    assert code == 2


def test_usage_errors_exit_2(run):
    """Test argparse failures"""
    code, _ = run("tables", "--which", "3")
    assert code == 2
    code, _ = run("simulate", "--m", "4", "--weights", "5..1")
    assert code == 2


def test_simulate_oracle_limit_from_config(run, tmp_path):
    """Test that oracle.max_m from the config file guards --oracle"""
    (tmp_path / "config.yaml").write_text("oracle:\n  max_m: 3\n")
    code, _ = run("simulate", "--m", "4", "--weights", "1", "--trials", "5", "--oracle")
    assert code == 2


def test_simulate_explicit_zero_overrides_config(run, tmp_path):
    """Test that --trials 0 and --workers 0 win over configured values"""
    (tmp_path / "config.yaml").write_text("simulation:\n  trials: 1000\n  workers: 4\n")
    code, out = run("simulate", "--m", "4", "--weights", "1", "--trials", "0", "--workers", "0")
    assert code == 0
    assert json.loads(out)["records"][0]["trials"] == 0
