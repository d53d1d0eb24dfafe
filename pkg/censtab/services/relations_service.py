import time
from typing import Iterable, List, Optional

from censtab.config import DEFAULT_LIMITS, Limits
from censtab.core.categories.base import CategorySpec, Morphism
from censtab.core.exceptions import ResourceLimitError
from censtab.core.linalg.ring import RingSpec
from censtab.core.relations.analyzer import (
    ConditionOneVerdict,
    ConditionTwoVerdict,
    RingComparison,
    check_condition_i,
    check_condition_ii,
    compare_rings,
)
from censtab.core.utils.logger import get_logger
from censtab.schemas.reports import (
    ConditionVerdictSchema,
    GenerationPairSchema,
    GenerationVerdictSchema,
    HomCountSchema,
    HomStatReportSchema,
    MorphismSchema,
    RelationsReportSchema,
    WitnessSchema,
    WitnessTermSchema,
)
from monitoring.metrics import MetricsCollector, metrics_collector

logger = get_logger(__name__)


class RelationsService:
    """Service for relation-ideal and factorization checks on a category."""

    def __init__(self, limits: Optional[Limits] = None, metrics: Optional[MetricsCollector] = None):
        self.limits = limits or DEFAULT_LIMITS
        self.metrics = metrics or metrics_collector

    def _morphism(self, category: CategorySpec, morphism: Optional[Morphism]) -> Optional[MorphismSchema]:
        if morphism is None:
            return None
        return MorphismSchema(**category.encode(morphism))

    def _pair_schema(self, category: CategorySpec, comparison: RingComparison) -> GenerationPairSchema:
        verdicts = []
        for verdict in comparison.verdicts.values():
            witness = None
            if verdict.witness is not None:
                witness = [
                    WitnessTermSchema(coeff=coeff, chain=[self._morphism(category, xi) for xi in chain])
                    for coeff, chain in verdict.witness
                ]
            verdicts.append(
                GenerationVerdictSchema(
                    ring=verdict.ring,
                    m=verdict.m,
                    n=verdict.n,
                    d=verdict.d,
                    passed=verdict.passed,
                    surjective=verdict.surjective,
                    unhit=self._morphism(category, verdict.unhit),
                    lhs_generators=verdict.lhs_generators,
                    rhs_generators=verdict.rhs_generators,
                    rhs_contained=verdict.rhs_contained,
                    witness=witness,
                )
            )
        return GenerationPairSchema(
            m=comparison.m,
            n=comparison.n,
            d=comparison.d,
            passed=comparison.passed,
            ring_sensitive=comparison.ring_sensitive,
            verdicts=verdicts,
        )

    def _condition_one(self, category: CategorySpec, verdict: ConditionOneVerdict) -> ConditionVerdictSchema:
        return ConditionVerdictSchema(
            condition="i",
            m=verdict.m,
            l=verdict.l,
            n=verdict.n,
            passed=verdict.passed,
            unhit=self._morphism(category, verdict.unhit),
        )

    def _condition_two(self, category: CategorySpec, verdict: ConditionTwoVerdict) -> ConditionVerdictSchema:
        witness = None
        if verdict.witness is not None:
            w = verdict.witness
            witness = WitnessSchema(
                alpha1=self._morphism(category, w.alpha1),
                alpha2=self._morphism(category, w.alpha2),
                beta1=self._morphism(category, w.beta1),
                beta2=self._morphism(category, w.beta2),
            )
        return ConditionVerdictSchema(
            condition="ii",
            m=verdict.m,
            n=verdict.n,
            d=verdict.d,
            passed=verdict.passed,
            quadruples_checked=verdict.quadruples_checked,
            witness=witness,
        )

    def generation(
        self,
        category: CategorySpec,
        rings: Iterable[RingSpec],
        d: int,
        m_max: int,
        n_max: int,
        max_gap: Optional[int] = None,
    ) -> RelationsReportSchema:
        """Degree-d generation on every pair m ≤ m_max, m+2 ≤ n ≤ min(n_max, m+max_gap)."""
        rings = list(rings)
        max_gap = n_max if max_gap is None else max_gap
        logger.info(f"Checking degree-{d} generation of {category.identifier} over {[r.label for r in rings]}")
        started = time.perf_counter()

        pairs: List[GenerationPairSchema] = []
        complete, error = True, None
        try:
            for m in range(m_max + 1):
                for n in range(m + 2, min(n_max, m + max_gap) + 1):
                    comparison = compare_rings(category, rings, d, m, n, self.limits.ambient_cap)
                    pairs.append(self._pair_schema(category, comparison))
        except ResourceLimitError as e:
            complete, error = False, str(e)
            logger.warning(f"generation check stopped: {e}")

        passed = complete and all(p.passed for p in pairs)
        duration = self._finish("generation", passed, complete, started, len(pairs))
        return RelationsReportSchema(
            kind="generation",
            category=category.identifier,
            rings=[r.label for r in rings],
            d=d,
            parameters={"m_max": m_max, "n_max": n_max, "max_gap": max_gap},
            passed=passed,
            coverage_complete=complete,
            resource_error=error,
            generation=pairs,
            wall_time=duration,
        )

    def conditions(self, category: CategorySpec, d: int, m_max: int, n_max: int) -> RelationsReportSchema:
        """Conditions (i) and (ii) on every tested triple and pair."""
        logger.info(f"Checking factorization conditions of {category.identifier} for d={d} up to n={n_max}")
        started = time.perf_counter()

        verdicts: List[ConditionVerdictSchema] = []
        complete, error = True, None
        try:
            for verdict in check_condition_i(category, m_max, n_max):
                verdicts.append(self._condition_one(category, verdict))
            for m in range(m_max + 1):
                for n in range(m + d + 1, n_max + 1):
                    verdicts.append(self._condition_two(category, check_condition_ii(category, d, m, n)))
        except ResourceLimitError as e:
            complete, error = False, str(e)
            logger.warning(f"condition check stopped: {e}")

        passed = complete and all(v.passed for v in verdicts)
        duration = self._finish("conditions", passed, complete, started, len(verdicts))
        return RelationsReportSchema(
            kind="conditions",
            category=category.identifier,
            rings=[],
            d=d,
            parameters={"m_max": m_max, "n_max": n_max},
            passed=passed,
            coverage_complete=complete,
            resource_error=error,
            conditions=verdicts,
            wall_time=duration,
        )

    def hom_stat(self, category: CategorySpec, n_max: int) -> HomStatReportSchema:
        """|hom(m, n)| for 0 ≤ m ≤ n ≤ n_max."""
        started = time.perf_counter()
        counts: List[HomCountSchema] = []
        complete, error = True, None
        try:
            for n in range(n_max + 1):
                for m in range(n + 1):
                    counts.append(HomCountSchema(m=m, n=n, count=len(category.hom(m, n))))
        except ResourceLimitError as e:
            complete, error = False, str(e)
            logger.warning(f"hom-stat stopped: {e}")
        duration = self._finish("hom_stat", complete, complete, started, len(counts))
        return HomStatReportSchema(
            category=category.identifier,
            n_max=n_max,
            passed=complete,
            coverage_complete=complete,
            resource_error=error,
            counts=counts,
            wall_time=duration,
        )

    def _finish(self, kind: str, passed: bool, complete: bool, started: float, cells: int) -> float:
        duration = time.perf_counter() - started
        self.metrics.record_check(kind, passed, duration, cells)
        if not complete:
            self.metrics.record_resource_limit()
        logger.info(f"{kind} finished in {duration:.2f}s over {cells} cells: {'pass' if passed else 'fail'}")
        return duration
