from censtab.schemas.reports import (
    SCHEMA_VERSION,
    ConditionVerdictSchema,
    DegreeVerdictSchema,
    GenerationPairSchema,
    GenerationVerdictSchema,
    HomCountSchema,
    HomStatReportSchema,
    MorphismSchema,
    RelationsReportSchema,
    ReportBase,
    SnfReportSchema,
    StabilityReportSchema,
    StabilityRunSchema,
    WitnessSchema,
    WitnessTermSchema,
)

__all__ = [
    "SCHEMA_VERSION",
    "ConditionVerdictSchema",
    "DegreeVerdictSchema",
    "GenerationPairSchema",
    "GenerationVerdictSchema",
    "HomCountSchema",
    "HomStatReportSchema",
    "MorphismSchema",
    "RelationsReportSchema",
    "ReportBase",
    "SnfReportSchema",
    "StabilityReportSchema",
    "StabilityRunSchema",
    "WitnessSchema",
    "WitnessTermSchema",
]
