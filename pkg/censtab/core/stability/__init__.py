from censtab.core.stability.checker import (
    DegreeVerdict,
    PrdReport,
    StabilityReport,
    check_central_stability,
    check_d_step,
    check_reducing_idempotent,
    check_reduction_chain,
    empirical_prd,
    stability_cell,
)

__all__ = [
    "DegreeVerdict",
    "PrdReport",
    "StabilityReport",
    "check_central_stability",
    "check_d_step",
    "check_reducing_idempotent",
    "check_reduction_chain",
    "empirical_prd",
    "stability_cell",
]
