import json

from censtab.schemas import DegreeVerdictSchema, SnfReportSchema, StabilityReportSchema


class TestReportSchemas:
    """JSON envelope of reports."""

    def setup_method(self):
        self.report = StabilityReportSchema(
            kind="central",
            module_id="z2",
            category="fi",
            ring="Z",
            parameters={"N": 0, "n_max": 1},
            passed=False,
            coverage_complete=True,
            verdicts=[
                DegreeVerdictSchema(n=1, M=0, N=0, is_iso=False, kernel_invariants=[0], cokernel_invariants=[])
            ],
            wall_time=0.25,
        )

    def test_schema_version_first(self):
        text = self.report.to_json()
        assert text.startswith('{\n  "schema": 1,')
        assert json.loads(text)["schema"] == 1

    def test_wall_time_only_with_timings(self):
        assert "wall_time" not in json.loads(self.report.to_json())
        assert json.loads(self.report.to_json(timings=True))["wall_time"] == 0.25

    def test_output_is_stable(self):
        assert self.report.to_json() == self.report.model_copy(update={"wall_time": 9.0}).to_json()

    def test_snf_defaults(self):
        report = SnfReportSchema(matrix=[[2]], U=[[1]], D=[[2]], V=[[1]], diagonal=[2])
        data = json.loads(report.to_json())
        assert data["kind"] == "snf"
        assert data["passed"] is True
