from censtab.core.categories.base import (
    CategorySpec,
    LawViolation,
    Morphism,
    check_category_laws,
    check_degree,
    compose,
    hom,
)
from censtab.core.categories.families import (
    ColoredInjectionCategory,
    FICategory,
    LinearInjectionCategory,
    OppositeSurjectionCategory,
    OrderedColoredInjectionCategory,
)
from censtab.core.categories.presented import (
    PresentedCategory,
    counterexample_category,
    load_presented_category,
    normalize_word,
)
from censtab.core.categories.plactic import (
    MonoidCategory,
    PlacticCategory,
    knuth_relations,
    plactic_presentation,
    rsk_normal_form,
)
from censtab.core.categories.registry import FAMILY_IDS, builtin_category

__all__ = [
    "CategorySpec",
    "Morphism",
    "LawViolation",
    "check_category_laws",
    "check_degree",
    "hom",
    "compose",
    "FICategory",
    "ColoredInjectionCategory",
    "OrderedColoredInjectionCategory",
    "OppositeSurjectionCategory",
    "LinearInjectionCategory",
    "PresentedCategory",
    "counterexample_category",
    "load_presented_category",
    "normalize_word",
    "MonoidCategory",
    "PlacticCategory",
    "knuth_relations",
    "plactic_presentation",
    "rsk_normal_form",
    "builtin_category",
    "FAMILY_IDS",
]
