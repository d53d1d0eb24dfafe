"""Degreewise checks of central stability and its variants."""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

from censtab.config import DEFAULT_LIMITS, Limits, settings
from censtab.core.exceptions import PreconditionError, ResourceLimitError
from censtab.core.kan.colimit import degree_map, compare_values, kan_value_colimit
from censtab.core.kan.tensor import kan_value_tensor, restriction_map
from censtab.core.linalg.modules import is_isomorphism
from censtab.core.modules.presentation import ModulePresentation, ensure_valid
from censtab.core.utils.logger import get_logger

logger = get_logger(__name__)


@dataclass
class DegreeVerdict:
    """Isomorphism verdict for one degree n and window [M, N]."""

    n: int
    M: int
    N: int
    is_iso: bool
    kernel_invariants: List[int] = field(default_factory=list)
    cokernel_invariants: List[int] = field(default_factory=list)
    constructions_agree: Optional[bool] = None

    @property
    def passed(self) -> bool:
        return self.is_iso and self.constructions_agree is not False


@dataclass
class StabilityReport:
    """Per-degree verdicts of one check over a finite window of degrees."""

    kind: str
    module_id: str
    category: str
    ring: str
    parameters: Dict[str, Any]
    verdicts: List[DegreeVerdict] = field(default_factory=list)
    coverage_complete: bool = True
    resource_error: Optional[str] = None
    wall_time: Optional[float] = None

    @property
    def passed(self) -> bool:
        return self.coverage_complete and all(v.passed for v in self.verdicts)

    @property
    def failures(self) -> List[DegreeVerdict]:
        return [v for v in self.verdicts if not v.passed]


@dataclass
class PrdReport:
    """Search for the least N passing central stability on a fixed degree window."""

    module_id: str
    category: str
    ring: str
    N_max: int
    n_max: int
    prd: Optional[int]
    runs: List[StabilityReport] = field(default_factory=list)
    coverage_complete: bool = True
    resource_error: Optional[str] = None
    wall_time: Optional[float] = None

    @property
    def passed(self) -> bool:
        return self.prd is not None

    def failing_degree(self, N: int) -> Optional[DegreeVerdict]:
        """First non-iso degree recorded for N."""
        for run in self.runs:
            if run.parameters.get("N") == N and run.failures:
                return run.failures[0]
        return None


def _report(kind: str, presentation: ModulePresentation, **parameters) -> StabilityReport:
    return StabilityReport(
        kind=kind,
        module_id=presentation.name,
        category=presentation.category.identifier,
        ring=presentation.ring.label,
        parameters=parameters,
    )


def _resolve_n_max(presentation: ModulePresentation, n_max: Optional[int]) -> int:
    if n_max is None:
        return presentation.default_n_max(settings.default_n_max_margin)
    if n_max < 0:
        raise PreconditionError(f"n_max must be non-negative, got {n_max}")
    return n_max


def stability_cell(
    presentation: ModulePresentation,
    M: int,
    N: int,
    n: int,
    limits: Limits = DEFAULT_LIMITS,
    cross_check: bool = False,
) -> DegreeVerdict:
    """Test the canonical map (Lan_{M,N} Res V)_n → V_n for isomorphism."""
    cap = limits.ambient_cap
    colimit = kan_value_colimit(presentation, M, N, n, cap)
    verdict = is_isomorphism(degree_map(presentation, colimit, n, cap))

    agrees = None
    if cross_check:
        tensor = kan_value_tensor(presentation, M, N, n, cap)
        agrees = is_isomorphism(compare_values(tensor, colimit)).is_iso
        if not agrees:
            logger.error(f"tensor and colimit constructions disagree at n={n}, window [{M},{N}]")

    logger.debug(f"cell n={n} [{M},{N}]: iso={verdict.is_iso}")
    return DegreeVerdict(
        n=n,
        M=M,
        N=N,
        is_iso=verdict.is_iso,
        kernel_invariants=verdict.kernel_invariants,
        cokernel_invariants=verdict.cokernel_invariants,
        constructions_agree=agrees,
    )


def _sweep(report: StabilityReport, presentation, M: int, N: int, degrees, limits: Limits, cross_check: bool):
    for n in degrees:
        try:
            report.verdicts.append(stability_cell(presentation, M, N, n, limits, cross_check))
        except ResourceLimitError as e:
            report.coverage_complete = False
            report.resource_error = str(e)
            logger.warning(f"{report.kind} check of '{report.module_id}' stopped at n={n}: {e}")
            break
    return report


def check_central_stability(
    presentation: ModulePresentation,
    N: int,
    n_max: Optional[int] = None,
    limits: Limits = DEFAULT_LIMITS,
    cross_check: bool = False,
) -> StabilityReport:
    """Ae ⊗_{eAe} eV → V at e = e_{0,N}, for every degree n ≤ n_max."""
    ensure_valid(presentation)
    if N < 0:
        raise PreconditionError(f"N must be non-negative, got {N}")
    n_max = _resolve_n_max(presentation, n_max)
    report = _report("central", presentation, N=N, n_max=n_max)
    return _sweep(report, presentation, 0, N, range(n_max + 1), limits, cross_check)


def check_d_step(
    presentation: ModulePresentation,
    d: int,
    N: int,
    n_max: Optional[int] = None,
    limits: Limits = DEFAULT_LIMITS,
    cross_check: bool = False,
) -> StabilityReport:
    """Same isomorphism using only the window e_{N-(d-1),N}, for N-(d-1) ≤ n ≤ n_max."""
    ensure_valid(presentation)
    if d < 1:
        raise PreconditionError(f"d must be at least 1, got {d}")
    if N < d - 1:
        raise PreconditionError(f"d-step stability needs N >= d-1, got N={N}, d={d}")
    n_max = _resolve_n_max(presentation, n_max)
    M = N - (d - 1)
    report = _report("d_step", presentation, d=d, N=N, n_max=n_max)
    return _sweep(report, presentation, M, N, range(M, n_max + 1), limits, cross_check)


def empirical_prd(
    presentation: ModulePresentation,
    N_max: int,
    n_max: Optional[int] = None,
    limits: Limits = DEFAULT_LIMITS,
    cross_check: bool = False,
) -> Tuple[Optional[int], PrdReport]:
    """Least N ≤ N_max whose central stability check passes on degrees ≤ n_max.

    Every smaller N is kept in the report with its failing degrees. The
    bound holds for the tested window only.
    """
    ensure_valid(presentation)
    n_max = _resolve_n_max(presentation, n_max)
    result = PrdReport(
        module_id=presentation.name,
        category=presentation.category.identifier,
        ring=presentation.ring.label,
        N_max=N_max,
        n_max=n_max,
        prd=None,
    )
    for N in range(N_max + 1):
        run = check_central_stability(presentation, N, n_max, limits, cross_check)
        result.runs.append(run)
        if not run.coverage_complete:
            result.coverage_complete = False
            result.resource_error = run.resource_error
            break
        if run.passed:
            result.prd = N
            break
    logger.info(f"empirical prd of '{presentation.name}' on n <= {n_max}: {result.prd}")
    return result.prd, result


def check_reducing_idempotent(
    presentation: ModulePresentation,
    m: int,
    N: int,
    n: int,
    d: int = 2,
    limits: Limits = DEFAULT_LIMITS,
    cross_check: bool = False,
) -> DegreeVerdict:
    """e_nAf ⊗_{fAf} fV → e_nAe ⊗_{eAe} eV for e = e_{m,N}, f = e_{m+1,N}.

    With cross_check, both sides are rebuilt as comma-category colimits and
    the colimit-side map must give the same verdict.
    """
    ensure_valid(presentation)
    if m < 0 or not n > N >= m + d:
        raise PreconditionError(f"need n > N >= m + d, got m={m}, N={N}, n={n}, d={d}")
    small, large, phi = restriction_map(presentation, m, N, n, limits.ambient_cap)
    verdict = is_isomorphism(phi)

    agrees = None
    if cross_check:
        cap = limits.ambient_cap
        small_colimit = kan_value_colimit(presentation, m + 1, N, n, cap)
        large_colimit = kan_value_colimit(presentation, m, N, n, cap)
        agrees = (
            is_isomorphism(compare_values(small, small_colimit)).is_iso
            and is_isomorphism(compare_values(large, large_colimit)).is_iso
            and is_isomorphism(compare_values(small_colimit, large_colimit)).is_iso == verdict.is_iso
        )
        if not agrees:
            logger.error(f"tensor and colimit constructions disagree for m={m}, N={N}, n={n}")
    logger.debug(f"reducing idempotent m={m} N={N} n={n}: iso={verdict.is_iso}")
    return DegreeVerdict(
        n=n,
        M=m,
        N=N,
        is_iso=verdict.is_iso,
        kernel_invariants=verdict.kernel_invariants,
        cokernel_invariants=verdict.cokernel_invariants,
        constructions_agree=agrees,
    )


def check_reduction_chain(
    presentation: ModulePresentation,
    d: int,
    N: int,
    n: int,
    limits: Limits = DEFAULT_LIMITS,
    cross_check: bool = False,
) -> StabilityReport:
    """Reducing-idempotent isomorphisms for m = 0, ..., N-d, shrinking [0, N] to [N-d+1, N]."""
    ensure_valid(presentation)
    if d < 1 or N < d or n <= N:
        raise PreconditionError(f"need d >= 1 and n > N >= d, got d={d}, N={N}, n={n}")
    report = _report("reducing_idempotent", presentation, d=d, N=N, n=n)
    for m in range(N - d + 1):
        try:
            report.verdicts.append(check_reducing_idempotent(presentation, m, N, n, d, limits, cross_check))
        except ResourceLimitError as e:
            report.coverage_complete = False
            report.resource_error = str(e)
            logger.warning(f"reduction chain of '{presentation.name}' stopped at m={m}: {e}")
            break
    return report
