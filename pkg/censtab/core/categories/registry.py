from typing import Any, Callable, Dict, Mapping, Optional

from censtab.config import DEFAULT_LIMITS
from censtab.core.categories.base import CategorySpec
from censtab.core.categories.families import (
    ColoredInjectionCategory,
    FICategory,
    LinearInjectionCategory,
    OppositeSurjectionCategory,
    OrderedColoredInjectionCategory,
)
from censtab.core.categories.plactic import MonoidCategory, PlacticCategory
from censtab.core.categories.presented import counterexample_category, load_presented_category
from censtab.core.exceptions import InvalidInputError, UnknownCategoryError


def _int_param(params: Mapping[str, Any], name: str) -> int:
    if name not in params:
        raise InvalidInputError(f"missing parameter '{name}'")
    value = params[name]
    if isinstance(value, bool):
        raise InvalidInputError(f"parameter '{name}' must be an integer, got {value!r}")
    try:
        return int(value)
    except (TypeError, ValueError):
        raise InvalidInputError(f"parameter '{name}' must be an integer, got {value!r}") from None


def _alphabet_param(params: Mapping[str, Any]) -> list:
    alphabet = params.get("alphabet")
    if isinstance(alphabet, str):
        alphabet = [x for x in alphabet.split(",") if x] if "," in alphabet else list(alphabet)
    if not alphabet:
        raise InvalidInputError("missing parameter 'alphabet'")
    return list(alphabet)


_FACTORIES: Dict[str, Callable[[Mapping[str, Any], int], CategorySpec]] = {
    "fi": lambda params, cap: FICategory(hom_cap=cap),
    "fi_a": lambda params, cap: ColoredInjectionCategory(_int_param(params, "a"), hom_cap=cap),
    "oi_a": lambda params, cap: OrderedColoredInjectionCategory(_int_param(params, "a"), hom_cap=cap),
    "fs_op": lambda params, cap: OppositeSurjectionCategory(hom_cap=cap),
    "vi": lambda params, cap: LinearInjectionCategory(_int_param(params, "q"), hom_cap=cap),
    "plactic": lambda params, cap: PlacticCategory(_alphabet_param(params), hom_cap=cap),
    "monoid": lambda params, cap: MonoidCategory(
        _alphabet_param(params), params.get("relations", []), hom_cap=cap
    ),
    "counterexample": lambda params, cap: counterexample_category(hom_cap=cap),
    "presented": lambda params, cap: load_presented_category(params, hom_cap=cap),
}

FAMILY_IDS = tuple(_FACTORIES)


def builtin_category(
    family: str,
    params: Optional[Mapping[str, Any]] = None,
    hom_cap: int = DEFAULT_LIMITS.hom_cap,
) -> CategorySpec:
    """Instantiate a category family by its string id."""
    factory = _FACTORIES.get(family)
    if factory is None:
        raise UnknownCategoryError(f"unknown category family '{family}'; expected one of {', '.join(FAMILY_IDS)}")
    return factory(dict(params or {}), hom_cap)
