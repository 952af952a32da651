"""Command-line behavior: exit codes, reports, file round-trips."""

import json

import pytest

from homyb.cli import main


@pytest.fixture()
def export(tmp_path, capsys):
    def _export(entry_id):
        path = tmp_path / f"{entry_id}.json"
        assert main(["catalog", "export", entry_id, "--out", str(path)]) == 0
        capsys.readouterr()
        return str(path)

    return _export


class TestAxioms:
    def test_valid_structure_exits_zero(self, export, capsys):
        assert main(["axioms", export("ex2.3")]) == 0
        out = capsys.readouterr().out
        assert "PASS" in out

    def test_broken_structure_exits_one_with_witness(self, export, capsys):
        assert main(["axioms", export("ex2.5-verbatim")]) == 1
        out = capsys.readouterr().out
        assert "HA2-assoc: FAIL" in out
        assert "HA2(g,g,x)" in out

    def test_shape_error_exits_two(self, tmp_path, export, capsys):
        doc = json.loads(open(export("ex2.3")).read())
        doc["mult"] = doc["mult"][:2]  # 2 rows where dim = 3
        bad = tmp_path / "malformed.json"
        bad.write_text(json.dumps(doc))
        assert main(["axioms", str(bad)]) == 2
        err = capsys.readouterr().err
        assert "mult: expected 3" in err

    def test_missing_file_exits_two(self, capsys):
        assert main(["axioms", "/no/such/file.json"]) == 2

    def test_json_report(self, export, tmp_path, capsys):
        out = tmp_path / "report.json"
        assert main(["axioms", export("ex4.3"), "--json", str(out)]) == 0
        doc = json.loads(out.read_text())
        assert doc["holds"] is True
        assert doc["check"] == "hom-lie-axioms"
        assert "elapsed_ms" in doc


class TestBuild:
    def test_build_writes_square_matrix(self, export, tmp_path, capsys):
        out = tmp_path / "op.json"
        code = main(
            ["build", export("ex2.3"), "--construction", "thm2.1",
             "--lambda", "lam", "--nu", "nu", "--out", str(out)]
        )
        assert code == 0
        doc = json.loads(out.read_text())
        assert doc["kind"] == "operator"
        assert len(doc["matrix"]) == 9
        assert all(len(row) == 9 for row in doc["matrix"])

    def test_build_warns_when_u_moves_under_alpha(self, export, tmp_path, capsys):
        out = tmp_path / "op.json"
        code = main(
            ["build", export("ex4.3"), "--construction", "thm4.1",
             "--u", "0,0,1", "--out", str(out)]
        )
        assert code == 0
        assert "alpha-invariant" in capsys.readouterr().err

    def test_kind_mismatch_exits_two(self, export, capsys):
        assert main(["build", export("ex3.3"), "--construction", "thm2.1"]) == 2
        assert "requires a hom-algebra" in capsys.readouterr().err

    def test_strict_inverse_build_refuses_non_involutive(self, export, capsys):
        assert main(["build", export("ex2.3"), "--construction", "cor2.2"]) == 2
        assert "involutive" in capsys.readouterr().err

    def test_operator_round_trip_through_verify(self, export, tmp_path, capsys):
        op_path = tmp_path / "op.json"
        structure = export("ex2.3")
        assert main(["build", structure, "--construction", "thm2.1", "--out", str(op_path)]) == 0
        assert main(["verify", structure, "--operator", str(op_path), "--check", "hybe"]) == 0
        assert main(["verify", structure, "--operator", str(op_path), "--check", "alpha"]) == 0


class TestVerify:
    def test_braid_check_passes_on_3dim_algebra(self, export, capsys):
        code = main(
            ["verify", export("ex2.3"), "--construction", "thm2.1", "--check", "hybe"]
        )
        assert code == 0
        assert "hybe: PASS" in capsys.readouterr().out

    def test_inverse_check_fails_with_symbolic_twist_parameter(self, export, tmp_path, capsys):
        report = tmp_path / "report.json"
        code = main(
            ["verify", export("ex2.3"), "--construction", "cor2.2",
             "--check", "inverse", "--json", str(report)]
        )
        assert code == 1
        doc = json.loads(report.read_text())
        assert doc["holds"] is False
        residuals = " ".join(w["residual"] for sub in doc["subreports"] for w in sub["witnesses"])
        assert "l^2" in residuals

    def test_system_check_passes(self, export, capsys):
        code = main(
            ["verify", export("ex2.3"), "--construction", "thm5.2", "--check", "system"]
        )
        assert code == 0
        out = capsys.readouterr().out
        assert "[W,W,W]: PASS" in out
        assert "[X,X,Z]: PASS" in out

    def test_braid_check_fails_on_lie_example(self, export, capsys):
        code = main(
            ["verify", export("ex4.3"), "--construction", "thm4.1",
             "--u", "0,0,1", "--check", "hybe"]
        )
        assert code == 1

    def test_lie_inverse_pair_passes(self, export, capsys):
        code = main(
            ["verify", export("ex4.3"), "--construction", "cor4.2",
             "--u", "0,0,1", "--check", "inverse"]
        )
        assert code == 0

    def test_chybe_check(self, export, capsys):
        structure = export("ex4.3")
        code = main(
            ["verify", structure, "--check", "chybe",
             "--x", "1,0,0", "--y", "0,1,0", "--u", "0,0,1", "--m", "0", "--n", "0"]
        )
        assert code == 0
        code = main(
            ["verify", structure, "--check", "chybe",
             "--x", "1,0,0", "--y", "0,1,0", "--u", "0,0,1", "--m", "-2", "--n", "-1"]
        )
        assert code == 0

    def test_concrete_parameter_values(self, export, capsys):
        # verification at lambda = 2, nu = 1/3 instead of symbols
        code = main(
            ["verify", export("ex2.3"), "--construction", "thm2.1", "--check", "hybe",
             "--lambda", "2", "--nu", "1/3"]
        )
        assert code == 0

    def test_check_without_construction_exits_two(self, export, capsys):
        assert main(["verify", export("ex2.3"), "--check", "hybe"]) == 2


class TestCatalog:
    def test_list_prints_all_ids(self, capsys):
        assert main(["catalog", "list"]) == 0
        out = capsys.readouterr().out
        for eid in ("ex2.3", "ex2.5", "ex2.5-verbatim", "ex3.3", "ex3.5", "ex4.3"):
            assert eid in out

    def test_unknown_export_exits_two(self, capsys):
        assert main(["catalog", "export", "nope"]) == 2
        assert "unknown catalog id" in capsys.readouterr().err

    def test_export_axioms_round_trip(self, export):
        assert main(["axioms", export("ex4.3"), "--require-multiplicative"]) == 0

    def test_verify_all_exits_zero_and_lists_expected_failures(self, tmp_path, capsys):
        out = tmp_path / "all.json"
        assert main(["catalog", "verify-all", "--json", str(out)]) == 0
        text = capsys.readouterr().out
        assert "axioms: FAIL (expected FAIL)" in text  # ex2.5-verbatim
        assert "hybe: FAIL (expected FAIL)" in text  # ex4.3
        assert "UNEXPECTED" not in text
        doc = json.loads(out.read_text())
        assert doc["all_as_expected"] is True
        entries = {e["entry"]: e for e in doc["entries"]}
        assert entries["ex2.3"]["report"]["holds"] is False  # raw verdicts, not masked
        assert entries["ex2.3"]["as_expected"] is True
        assert entries["ex3.3"]["report"]["holds"] is True
