from censtab.core.modules.presentation import (
    GradedElement,
    ModulePresentation,
    PresentationDiagnostics,
    Term,
    ensure_valid,
    free_module,
    presentation_from_indices,
    relation,
    validate_presentation,
)
from censtab.core.modules.evaluation import evaluate_degree, induced_images, induced_map

__all__ = [
    "GradedElement",
    "ModulePresentation",
    "PresentationDiagnostics",
    "Term",
    "ensure_valid",
    "free_module",
    "presentation_from_indices",
    "relation",
    "validate_presentation",
    "evaluate_degree",
    "induced_images",
    "induced_map",
]
