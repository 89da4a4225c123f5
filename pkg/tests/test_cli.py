import csv
import io
import json

import pytest

from rainbow_lab import cli
from rainbow_lab.certificates import read_certificate


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestRb:
    def test_both_agree(self, capsys):
        code, out, _ = run(capsys, "rb", "--n", "12", "--k", "1", "--method", "both")
        assert code == cli.EXIT_OK
        assert "rb(12,1) = 5" in out
        assert "formula=search" in out

    def test_search_only(self, capsys):
        code, out, _ = run(capsys, "rb", "--n", "9", "--k", "3", "--method", "search")
        assert code == cli.EXIT_OK
        assert "rb(9,3) = 4" in out

    def test_formula_rejects_composite_k(self, capsys):
        code, _, err = run(capsys, "rb", "--n", "7", "--k", "4", "--method", "formula")
        assert code == cli.EXIT_INPUT
        assert "no closed form" in err

    def test_mismatch_exits_3(self, capsys, monkeypatch):
        from rainbow_lab.results import Method, RbResult

        monkeypatch.setattr(
            cli, "rb_schur", lambda n: RbResult(99, Method.SCHUR_FACTORIZATION)
        )
        code, _, err = run(capsys, "rb", "--n", "6", "--k", "1", "--method", "both")
        assert code == cli.EXIT_MISMATCH
        assert "MISMATCH" in err

    def test_inconclusive_exits_4(self, capsys):
        code, out, _ = run(
            capsys,
            "rb", "--n", "26", "--k", "1", "--method", "search",
            "--budget-secs", "0.005",
        )
        assert code == cli.EXIT_INCONCLUSIVE
        assert "inconclusive" in out

    def test_budget_env_var(self, capsys, monkeypatch):
        monkeypatch.setenv(cli.BUDGET_ENV_VAR, "0.005")
        code, _, _ = run(capsys, "rb", "--n", "26", "--k", "1", "--method", "search")
        assert code == cli.EXIT_INCONCLUSIVE


class TestWitnessAndVerify:
    @pytest.mark.parametrize(
        "n,k,colors", ((10, 1, 4), (25, 5, 3), (13, 3, 3))
    )
    def test_round_trip(self, capsys, tmp_path, n, k, colors):
        path = tmp_path / "w.json"
        code, out, _ = run(
            capsys, "witness", "--n", str(n), "--k", str(k), "--out", str(path)
        )
        assert code == cli.EXIT_OK
        assert f"colors={colors}" in out
        cert = read_certificate(path)
        assert cert.n == n and len(set(cert.colors)) == colors
        code, out, _ = run(capsys, "verify", str(path))
        assert code == cli.EXIT_OK
        assert "rainbow-free" in out

    def test_witness_records_construction(self, capsys, tmp_path):
        path = tmp_path / "w.json"
        run(capsys, "witness", "--n", "12", "--k", "1", "--out", str(path))
        assert read_certificate(path).meta["construction"] == "schur-lift"

    def test_witness_oracle_fallback(self, capsys, tmp_path):
        # k = 4 is composite: no construction applies, the oracle must step in
        path = tmp_path / "w.json"
        code, out, _ = run(capsys, "witness", "--n", "10", "--k", "4", "--out", str(path))
        assert code == cli.EXIT_OK
        assert "oracle-search" in out

    def test_verify_reports_rainbow_triple(self, capsys, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text(json.dumps({"n": 5, "k": 1, "colors": [0, 1, 2, 2, 3]}))
        code, out, _ = run(capsys, "verify", str(path))
        assert code == cli.EXIT_RAINBOW
        assert "NOT rainbow-free" in out
        assert "(1, 3, 4)" in out

    def test_verify_truncated_json(self, capsys, tmp_path):
        path = tmp_path / "trunc.json"
        path.write_text('{"n": 5, "k": 1, "colors": [0, 1')
        code, _, err = run(capsys, "verify", str(path))
        assert code == cli.EXIT_INPUT
        assert "invalid certificate" in err

    def test_verify_non_canonical_prints_hint(self, capsys, tmp_path):
        path = tmp_path / "noncanon.json"
        path.write_text(json.dumps({"n": 3, "k": 1, "colors": [1, 0, 0]}))
        code, _, err = run(capsys, "verify", str(path))
        assert code == cli.EXIT_INPUT
        assert "canonical" in err
        assert "[0, 1, 1]" in err

    def test_verify_palettes(self, capsys, tmp_path):
        path = tmp_path / "w.json"
        run(capsys, "witness", "--n", "10", "--k", "1", "--out", str(path))
        code, out, _ = run(capsys, "verify", str(path), "--palettes", "5")
        assert code == cli.EXIT_OK
        assert "P_0 (mod 5)" in out

    def test_verify_palettes_must_divide(self, capsys, tmp_path):
        path = tmp_path / "w.json"
        run(capsys, "witness", "--n", "10", "--k", "1", "--out", str(path))
        code, _, err = run(capsys, "verify", str(path), "--palettes", "3")
        assert code == cli.EXIT_INPUT
        assert "does not divide" in err


class TestTable:
    def test_csv_schur(self, capsys):
        code, out, _ = run(capsys, "table", "--n-max", "10", "--k", "1")
        assert code == cli.EXIT_OK
        rows = list(csv.reader(io.StringIO(out)))
        assert rows[0] == cli.TABLE_COLUMNS
        assert len(rows) == 10  # header + n = 2..10
        for row in rows[1:]:
            assert row[2] == row[3]
            assert row[4] == "yes"

    def test_json_matches_csv_content(self, capsys):
        code, out, _ = run(
            capsys, "table", "--n-max", "6", "--k", "1", "--format", "json"
        )
        assert code == cli.EXIT_OK
        doc = json.loads(out)
        assert [row["n"] for row in doc] == [2, 3, 4, 5, 6]
        assert all(row["agree"] == "yes" for row in doc)

    def test_includes_z9_k3(self, capsys):
        code, out, _ = run(
            capsys, "table", "--n-max", "9", "--k", "3", "--format", "json"
        )
        assert code == cli.EXIT_OK
        by_n = {row["n"]: row for row in json.loads(out)}
        assert by_n[9]["rb_search"] == 4

    def test_rejects_composite_k(self, capsys):
        code, _, err = run(capsys, "table", "--n-max", "10", "--k", "4")
        assert code == cli.EXIT_INPUT
        assert "no closed form" in err

    def test_inconclusive_rows_marked_and_exit_4(self, capsys):
        code, out, _ = run(
            capsys,
            "table", "--n-max", "26", "--k", "1", "--budget-secs", "0.005",
        )
        assert code == cli.EXIT_INCONCLUSIVE
        rows = list(csv.reader(io.StringIO(out)))
        inconclusive = [r for r in rows[1:] if r[4] == "inconclusive"]
        assert inconclusive
        for row in inconclusive:
            assert row[3] == ""  # never guessed

    def test_semantic_determinism(self, capsys):
        # identical values modulo the timing columns (elapsed_ms)
        def strip(out):
            return [
                [v for i, v in enumerate(row) if cli.TABLE_COLUMNS[i] != "elapsed_ms"]
                for row in list(csv.reader(io.StringIO(out)))[1:]
            ]

        _, out1, _ = run(capsys, "table", "--n-max", "8", "--k", "1")
        _, out2, _ = run(capsys, "table", "--n-max", "8", "--k", "1")
        assert strip(out1) == strip(out2)


class TestParser:
    def test_version(self, capsys):
        with pytest.raises(SystemExit) as exc_info:
            cli.main(["--version"])
        assert exc_info.value.code == 0
        assert "rainbow-lab" in capsys.readouterr().out

    def test_command_required(self):
        with pytest.raises(SystemExit):
            cli.main([])
