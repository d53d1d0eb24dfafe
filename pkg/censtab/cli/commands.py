import json
from pathlib import Path
from typing import Any, Dict

from censtab.config import settings
from censtab.core.categories.base import CategorySpec
from censtab.core.categories.registry import builtin_category
from censtab.core.exceptions import InvalidInputError
from censtab.core.linalg.ring import RingSpec
from censtab.core.utils.file_handler import load_category, load_module
from censtab.cli.parser import RunConfig
from censtab.schemas.reports import ReportBase
from censtab.services.linalg_service import snf_report
from censtab.services.relations_service import RelationsService
from censtab.services.stability_service import StabilityService


def _param_value(text: str) -> Any:
    stripped = text.lstrip("-")
    return int(text) if stripped.isdigit() else text


def resolve_category(config: RunConfig) -> CategorySpec:
    """Family id with --param values, or a category JSON file."""
    selector = config.category
    if selector.endswith(".json") or Path(selector).is_file():
        return load_category(selector, config.limits.hom_cap)
    params: Dict[str, Any] = {k: _param_value(v) for k, v in config.params.items()}
    if "alphabet" in params:
        params["alphabet"] = str(params["alphabet"])
    return builtin_category(selector, params, hom_cap=config.limits.hom_cap)


def run_hom_stat(config: RunConfig) -> ReportBase:
    return RelationsService(config.limits).hom_stat(resolve_category(config), config.n_max)


def run_check_stability(config: RunConfig) -> ReportBase:
    presentation = load_module(config.module, config.limits)
    return StabilityService(config.limits).central(presentation, config.N, config.n_max, config.cross_check)


def run_check_dstep(config: RunConfig) -> ReportBase:
    presentation = load_module(config.module, config.limits)
    return StabilityService(config.limits).d_step(presentation, config.d, config.N, config.n_max, config.cross_check)


def run_prd(config: RunConfig) -> ReportBase:
    presentation = load_module(config.module, config.limits)
    N_max = config.N_max if config.N_max is not None else presentation.prd_bound + 1
    return StabilityService(config.limits).prd(presentation, N_max, config.n_max, config.cross_check)


def run_check_relations(config: RunConfig) -> ReportBase:
    category = resolve_category(config)
    rings = [RingSpec.parse(r) for r in (config.rings or settings.default_relation_rings)]
    return RelationsService(config.limits).generation(
        category, rings, config.d, config.m_max, config.n_max, config.max_gap
    )


def run_check_conditions(config: RunConfig) -> ReportBase:
    category = resolve_category(config)
    m_max = config.m_max if config.m_max is not None else config.n_max
    return RelationsService(config.limits).conditions(category, config.d, m_max, config.n_max)


def run_reduce_idempotent(config: RunConfig) -> ReportBase:
    presentation = load_module(config.module, config.limits)
    return StabilityService(config.limits).reducing_idempotent(
        presentation, config.d, config.N, config.n, config.m, config.cross_check
    )


def run_snf(config: RunConfig) -> ReportBase:
    try:
        rows = json.loads(config.matrix)
    except json.JSONDecodeError as e:
        raise InvalidInputError(f"--matrix: column {e.colno}: {e.msg}") from None
    return snf_report(rows)


HANDLERS = {
    "hom-stat": run_hom_stat,
    "check-stability": run_check_stability,
    "check-dstep": run_check_dstep,
    "prd": run_prd,
    "check-relations": run_check_relations,
    "check-conditions": run_check_conditions,
    "reduce-idempotent": run_reduce_idempotent,
    "snf": run_snf,
}
