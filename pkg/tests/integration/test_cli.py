import json
from pathlib import Path

import pytest

from censtab.main import EXIT_FAIL, EXIT_INPUT, EXIT_PASS, EXIT_RESOURCE, run

SAMPLE_DATA = Path(__file__).resolve().parents[2] / "data" / "sample_data"


class TestCommandLine:
    """Test the censtab command line end to end."""

    def setup_method(self):
        self.modules = SAMPLE_DATA / "modules"
        self.categories = SAMPLE_DATA / "categories"

    def _json(self, capsys, argv):
        code = run(argv + ["--json"])
        out = capsys.readouterr().out
        return code, json.loads(out)

    def test_snf(self, capsys):
        code, data = self._json(capsys, ["snf", "--matrix", "[[2,4],[6,8]]"])
        assert code == EXIT_PASS
        assert data["schema"] == 1
        assert data["diagonal"] == [2, 4]
        assert "wall_time" not in data

    def test_timings_flag(self, capsys):
        code, data = self._json(capsys, ["snf", "--matrix", "[[3]]", "--timings"])
        assert code == EXIT_PASS
        assert "wall_time" in data

    @pytest.mark.parametrize("matrix", ["[[1,2],[3]]", "[[1,", "[[1.5]]"])
    def test_bad_matrix(self, capsys, matrix):
        assert run(["snf", "--matrix", matrix]) == EXIT_INPUT
        captured = capsys.readouterr()
        assert captured.out == ""
        assert "error" in captured.err

    def test_stability_pass_and_fail(self, capsys):
        module = str(self.modules / "z2_fi.json")
        code, data = self._json(capsys, ["check-stability", "--module", module, "--N", "1", "--n-max", "3"])
        assert code == EXIT_PASS
        assert data["passed"] is True

        code, data = self._json(capsys, ["check-stability", "--module", module, "--N", "0", "--n-max", "2"])
        assert code == EXIT_FAIL
        assert data["verdicts"][1]["kernel_invariants"] == [0]

    def test_output_is_reproducible(self, capsys):
        argv = ["check-stability", "--module", str(self.modules / "z2_fi.json"), "--N", "1", "--n-max", "2", "--json"]
        run(argv)
        first = capsys.readouterr().out
        run(argv)
        assert capsys.readouterr().out == first

    def test_human_table(self, capsys):
        code = run(["hom-stat", "--category", "fi", "--n-max", "2"])
        out = capsys.readouterr().out
        assert code == EXIT_PASS
        assert "fi" in out

    def test_prd(self, capsys):
        code, data = self._json(capsys, ["prd", "--module", str(self.modules / "z2_fi.json")])
        assert code == EXIT_PASS
        assert data["prd"] == 1

    def test_cross_check_flags(self, capsys):
        module = str(self.modules / "z2_fi.json")
        code, data = self._json(capsys, ["prd", "--module", module, "--n-max", "3", "--cross-check"])
        assert code == EXIT_PASS
        assert all(v["constructions_agree"] for run in data["runs"] for v in run["verdicts"])

        argv = ["reduce-idempotent", "--module", module, "--N", "3", "--n", "4", "--cross-check"]
        code, data = self._json(capsys, argv)
        assert code == EXIT_PASS
        assert [v["M"] for v in data["verdicts"]] == [0, 1]
        assert all(v["constructions_agree"] for v in data["verdicts"])

    def test_resource_cap_exit_code(self, capsys):
        module = str(self.modules / "free_fi_2.json")
        code, data = self._json(
            capsys, ["check-stability", "--module", module, "--N", "2", "--n-max", "6", "--ambient-cap", "30"]
        )
        assert code == EXIT_RESOURCE
        assert data["coverage_complete"] is False

    def test_hom_cap_exit_code(self, capsys):
        code, data = self._json(capsys, ["hom-stat", "--category", "fi", "--n-max", "3", "--hom-cap", "5"])
        assert code == EXIT_RESOURCE
        assert data["coverage_complete"] is False

    def test_counterexample_conditions(self, capsys):
        category = str(self.categories / "counterexample.json")
        code, data = self._json(capsys, ["check-conditions", "--category", category, "--m-max", "0", "--n-max", "3"])
        assert code == EXIT_FAIL
        assert any(v["condition"] == "ii" and v["witness"] for v in data["conditions"])

    def test_relations_with_ring(self, capsys):
        code, data = self._json(
            capsys, ["check-relations", "--category", "fi", "--ring", "F2", "--m-max", "0", "--n-max", "3"]
        )
        assert code == EXIT_PASS
        assert data["rings"] == ["F2"]

    def test_metrics_file(self, capsys, tmp_path):
        target = tmp_path / "metrics.prom"
        assert run(["snf", "--matrix", "[[1]]", "--metrics-file", str(target)]) == EXIT_PASS
        assert "censtab_checks_total" in target.read_text(encoding="utf-8")

    @pytest.mark.parametrize(
        "argv",
        [
            [],
            ["no-such-command"],
            ["hom-stat", "--category", "fi", "--hom-cap", "0"],
            ["check-dstep", "--module", "x.json", "--N", "1", "--d", "0"],
            ["hom-stat", "--category", "nonsense"],
            ["check-stability", "--module", "/nonexistent/module.json", "--N", "0"],
            ["check-relations", "--category", "fi", "--ring", "F4"],
        ],
    )
    def test_input_errors(self, capsys, argv):
        assert run(argv) == EXIT_INPUT
        assert capsys.readouterr().out == ""

    def test_human_witness_lines(self, capsys):
        category = str(self.categories / "counterexample.json")
        code = run(["check-conditions", "--category", category, "--m-max", "0", "--n-max", "3"])
        out = capsys.readouterr().out
        assert code == EXIT_FAIL
        assert "FAIL" in out
        assert "alpha1=b1'' b1'" in out

    def test_human_stability_table(self, capsys):
        module = str(self.modules / "z2_fi.json")
        code = run(["check-stability", "--module", module, "--N", "0", "--n-max", "2", "--timings"])
        out = capsys.readouterr().out
        assert code == EXIT_FAIL
        assert "[0,0]" in out
        assert "wall time:" in out

    def test_plactic_by_parameter(self, capsys):
        code, data = self._json(
            capsys,
            ["check-relations", "--category", "plactic", "--param", "alphabet=12", "--ring", "Z",
             "--m-max", "0", "--n-max", "3", "--max-gap", "3"],
        )
        assert code == EXIT_FAIL
        failing = [p for p in data["generation"] if not p["passed"]]
        assert [(p["m"], p["n"]) for p in failing] == [(0, 3)]
