from typing import List, Optional

import pandas as pd

from censtab.schemas.reports import (
    HomStatReportSchema,
    MorphismSchema,
    RelationsReportSchema,
    SnfReportSchema,
    StabilityReportSchema,
)


def _label(morphism: Optional[MorphismSchema]) -> str:
    if morphism is None:
        return ""
    return f"{morphism.source}->{morphism.target} #{morphism.hom_index} [{morphism.label}]"


def _frame(rows: List[dict]) -> str:
    if not rows:
        return "(no cells)"
    return pd.DataFrame(rows).to_string(index=False)


def _footer(report) -> List[str]:
    lines = []
    if not report.coverage_complete:
        lines.append(f"PARTIAL COVERAGE: {report.resource_error}")
    if report.wall_time is not None:
        lines.append(f"wall time: {report.wall_time:.3f}s")
    return lines


class ReportTables:
    """Human-readable renderings of reports."""

    def stability(self, report: StabilityReportSchema) -> str:
        parameters = ", ".join(f"{k}={v}" for k, v in report.parameters.items())
        header = (
            f"{report.kind} check of '{report.module_id}' over {report.ring} on {report.category} "
            f"({parameters}): {'PASS' if report.passed else 'FAIL'}"
        )
        if report.kind == "prd":
            rows = []
            for run in report.runs:
                failure = run.first_failure
                rows.append({
                    "N": run.N,
                    "passed": run.passed,
                    "first non-iso n": failure.n if failure else "",
                    "kernel": failure.kernel_invariants if failure else "",
                    "cokernel": failure.cokernel_invariants if failure else "",
                })
            prd = "none in window" if report.prd is None else str(report.prd)
            body = [f"empirical prd: {prd}", _frame(rows)]
        else:
            rows = []
            for verdict in report.verdicts:
                row = {
                    "n": verdict.n,
                    "window": f"[{verdict.M},{verdict.N}]",
                    "iso": verdict.is_iso,
                    "kernel": verdict.kernel_invariants,
                    "cokernel": verdict.cokernel_invariants,
                }
                if verdict.constructions_agree is not None:
                    row["tensor=colimit"] = verdict.constructions_agree
                rows.append(row)
            body = [_frame(rows)]
        return "\n".join([header] + body + _footer(report))

    def relations(self, report: RelationsReportSchema) -> str:
        header = f"{report.kind} check of {report.category}, d={report.d}: {'PASS' if report.passed else 'FAIL'}"
        rows = []
        witnesses = []
        for pair in report.generation:
            for verdict in pair.verdicts:
                rows.append({
                    "m": verdict.m,
                    "n": verdict.n,
                    "ring": verdict.ring,
                    "passed": verdict.passed,
                    "surjective": verdict.surjective,
                    "|Ĩ gens|": verdict.lhs_generators,
                    "|translates|": verdict.rhs_generators,
                    "ring sensitive": pair.ring_sensitive,
                })
                if verdict.witness:
                    terms = " ".join(
                        f"{t.coeff:+d}·({' | '.join(x.label for x in t.chain)})" for t in verdict.witness
                    )
                    witnesses.append(f"  ({verdict.m},{verdict.n}) over {verdict.ring}: {terms}")
        for condition in report.conditions:
            row = {
                "condition": condition.condition,
                "m": condition.m,
                "l": "" if condition.l is None else condition.l,
                "n": condition.n,
                "passed": condition.passed,
            }
            rows.append(row)
            if condition.unhit is not None:
                witnesses.append(f"  (i) at ({condition.m},{condition.l},{condition.n}): unhit {_label(condition.unhit)}")
            if condition.witness is not None:
                w = condition.witness
                witnesses.append(
                    f"  (ii) at ({condition.m},{condition.n}): alpha1={w.alpha1.label}, alpha2={w.alpha2.label}, "
                    f"beta1={w.beta1.label}, beta2={w.beta2.label}"
                )
        lines = [header, _frame(rows)]
        if witnesses:
            lines.append("witnesses:")
            lines.extend(witnesses)
        return "\n".join(lines + _footer(report))

    def hom_stat(self, report: HomStatReportSchema) -> str:
        rows = [{"m": c.m, "n": c.n, "|hom(m,n)|": c.count} for c in report.counts]
        return "\n".join([f"hom-set sizes of {report.category}", _frame(rows)] + _footer(report))

    def snf(self, report: SnfReportSchema) -> str:
        lines = [
            f"D = diag({', '.join(str(x) for x in report.diagonal)})",
            "U =", pd.DataFrame(report.U).to_string(index=False, header=False) if report.U else "[]",
            "D =", pd.DataFrame(report.D).to_string(index=False, header=False) if report.D else "[]",
            "V =", pd.DataFrame(report.V).to_string(index=False, header=False) if report.V else "[]",
        ]
        return "\n".join(lines)

    def render(self, report, timings: bool = False) -> str:
        if not timings and getattr(report, "wall_time", None) is not None:
            report = report.model_copy(update={"wall_time": None})
        if isinstance(report, StabilityReportSchema):
            return self.stability(report)
        if isinstance(report, RelationsReportSchema):
            return self.relations(report)
        if isinstance(report, HomStatReportSchema):
            return self.hom_stat(report)
        return self.snf(report)
