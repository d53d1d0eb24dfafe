import time
from typing import Optional

from censtab.config import DEFAULT_LIMITS, Limits
from censtab.core.exceptions import CensTabError, ResourceLimitError
from censtab.core.modules.presentation import ModulePresentation
from censtab.core.stability.checker import (
    DegreeVerdict,
    PrdReport,
    StabilityReport,
    check_central_stability,
    check_d_step,
    check_reducing_idempotent,
    check_reduction_chain,
    empirical_prd,
)
from censtab.core.utils.logger import get_logger
from censtab.schemas.reports import DegreeVerdictSchema, StabilityReportSchema, StabilityRunSchema
from monitoring.metrics import MetricsCollector, metrics_collector

logger = get_logger(__name__)


def verdict_schema(verdict: DegreeVerdict) -> DegreeVerdictSchema:
    return DegreeVerdictSchema(
        n=verdict.n,
        M=verdict.M,
        N=verdict.N,
        is_iso=verdict.is_iso,
        kernel_invariants=verdict.kernel_invariants,
        cokernel_invariants=verdict.cokernel_invariants,
        constructions_agree=verdict.constructions_agree,
    )


def report_schema(report: StabilityReport) -> StabilityReportSchema:
    return StabilityReportSchema(
        kind=report.kind,
        module_id=report.module_id,
        category=report.category,
        ring=report.ring,
        parameters=report.parameters,
        passed=report.passed,
        coverage_complete=report.coverage_complete,
        resource_error=report.resource_error,
        verdicts=[verdict_schema(v) for v in report.verdicts],
        wall_time=report.wall_time,
    )


def prd_schema(report: PrdReport) -> StabilityReportSchema:
    runs = []
    for run in report.runs:
        failures = run.failures
        runs.append(
            StabilityRunSchema(
                N=run.parameters["N"],
                passed=run.passed,
                first_failure=verdict_schema(failures[0]) if failures else None,
                verdicts=[verdict_schema(v) for v in run.verdicts],
            )
        )
    return StabilityReportSchema(
        kind="prd",
        module_id=report.module_id,
        category=report.category,
        ring=report.ring,
        parameters={"N_max": report.N_max, "n_max": report.n_max},
        passed=report.passed and report.coverage_complete,
        coverage_complete=report.coverage_complete,
        resource_error=report.resource_error,
        prd=report.prd,
        runs=runs,
        wall_time=report.wall_time,
    )


class StabilityService:
    """Service running stability checks and turning them into reports."""

    def __init__(self, limits: Optional[Limits] = None, metrics: Optional[MetricsCollector] = None):
        self.limits = limits or DEFAULT_LIMITS
        self.metrics = metrics or metrics_collector

    def _record(self, kind: str, passed: bool, complete: bool, started: float, cells: int) -> float:
        duration = time.perf_counter() - started
        self.metrics.record_check(kind, passed, duration, cells)
        if not complete:
            self.metrics.record_resource_limit()
        logger.info(f"{kind} check finished in {duration:.2f}s: {'pass' if passed else 'fail'}")
        return duration

    def central(
        self, presentation: ModulePresentation, N: int, n_max: Optional[int] = None, cross_check: bool = False
    ) -> StabilityReportSchema:
        logger.info(f"Checking central stability of '{presentation.name}' at N={N}")
        started = time.perf_counter()
        try:
            report = check_central_stability(presentation, N, n_max, self.limits, cross_check)
        except CensTabError as e:
            logger.error(f"central stability check failed: {e}")
            raise
        report.wall_time = self._record(
            "central", report.passed, report.coverage_complete, started, len(report.verdicts)
        )
        return report_schema(report)

    def d_step(
        self,
        presentation: ModulePresentation,
        d: int,
        N: int,
        n_max: Optional[int] = None,
        cross_check: bool = False,
    ) -> StabilityReportSchema:
        logger.info(f"Checking {d}-step central stability of '{presentation.name}' at N={N}")
        started = time.perf_counter()
        try:
            report = check_d_step(presentation, d, N, n_max, self.limits, cross_check)
        except CensTabError as e:
            logger.error(f"d-step check failed: {e}")
            raise
        report.wall_time = self._record(
            "d_step", report.passed, report.coverage_complete, started, len(report.verdicts)
        )
        return report_schema(report)

    def prd(
        self,
        presentation: ModulePresentation,
        N_max: int,
        n_max: Optional[int] = None,
        cross_check: bool = False,
    ) -> StabilityReportSchema:
        logger.info(f"Searching the presentation degree of '{presentation.name}' up to N={N_max}")
        started = time.perf_counter()
        try:
            _, report = empirical_prd(presentation, N_max, n_max, self.limits, cross_check)
        except CensTabError as e:
            logger.error(f"prd search failed: {e}")
            raise
        cells = sum(len(run.verdicts) for run in report.runs)
        report.wall_time = self._record(
            "prd", report.passed and report.coverage_complete, report.coverage_complete, started, cells
        )
        return prd_schema(report)

    def reducing_idempotent(
        self,
        presentation: ModulePresentation,
        d: int,
        N: int,
        n: int,
        m: Optional[int] = None,
        cross_check: bool = False,
    ) -> StabilityReportSchema:
        """One reducing-idempotent isomorphism at m, or the whole chain m = 0..N-d."""
        logger.info(f"Checking reducing idempotents of '{presentation.name}' at N={N}, n={n}")
        started = time.perf_counter()
        try:
            if m is None:
                report = check_reduction_chain(presentation, d, N, n, self.limits, cross_check)
            else:
                report = StabilityReport(
                    kind="reducing_idempotent",
                    module_id=presentation.name,
                    category=presentation.category.identifier,
                    ring=presentation.ring.label,
                    parameters={"d": d, "m": m, "N": N, "n": n},
                )
                try:
                    report.verdicts.append(
                        check_reducing_idempotent(presentation, m, N, n, d, self.limits, cross_check)
                    )
                except ResourceLimitError as e:
                    report.coverage_complete = False
                    report.resource_error = str(e)
        except CensTabError as e:
            logger.error(f"reducing idempotent check failed: {e}")
            raise
        report.wall_time = self._record(
            "reducing_idempotent", report.passed, report.coverage_complete, started, len(report.verdicts)
        )
        return report_schema(report)
