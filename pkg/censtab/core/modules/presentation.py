from dataclasses import dataclass, field
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple

from censtab.core.categories.base import CategorySpec, Morphism
from censtab.core.exceptions import InvalidInputError, InvalidPresentationError
from censtab.core.linalg.ring import RingSpec
from censtab.core.utils.logger import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class Term:
    """coeff · (generator slot, morphism a_slot → degree)"""

    coeff: int
    slot: int
    morphism: Morphism


@dataclass(frozen=True)
class GradedElement:
    """Element of ⊕_i R[Hom(a_i, degree)]."""

    degree: int
    terms: Tuple[Term, ...]


@dataclass(frozen=True)
class ModulePresentation:
    """Graded module presented by generator degrees and relations in their native degrees."""

    category: CategorySpec
    ring: RingSpec
    generators: Tuple[int, ...]
    relations: Tuple[GradedElement, ...] = ()
    name: str = field(default="module", compare=False)

    @property
    def max_generator_degree(self) -> Optional[int]:
        return max(self.generators) if self.generators else None

    @property
    def max_relation_degree(self) -> Optional[int]:
        return max(r.degree for r in self.relations) if self.relations else None

    @property
    def prd_bound(self) -> int:
        """A-priori bound on the presentation degree."""
        degrees = [d for d in (self.max_generator_degree, self.max_relation_degree) if d is not None]
        return max(degrees) if degrees else 0

    def default_n_max(self, margin: int = 4) -> int:
        return self.prd_bound + margin


@dataclass
class PresentationDiagnostics:
    """Outcome of validate_presentation."""

    ok: bool
    errors: List[str]
    max_generator_degree: Optional[int]
    max_relation_degree: Optional[int]
    prd_bound: int


def free_module(category: CategorySpec, ring: RingSpec, k: int, name: Optional[str] = None) -> ModulePresentation:
    """The free module Ae_k: one generator of degree k, no relations."""
    if k < 0:
        raise InvalidInputError(f"generator degree must be non-negative, got {k}")
    return ModulePresentation(category, ring, (k,), (), name or f"free({category.identifier},{k})")


def relation(degree: int, terms: Sequence[Tuple[int, int, Morphism]]) -> GradedElement:
    """Build a relation from (coeff, slot, morphism) triples."""
    return GradedElement(degree, tuple(Term(c, s, m) for c, s, m in terms))


def presentation_from_indices(
    category: CategorySpec,
    ring: RingSpec,
    generators: Sequence[int],
    relations: Sequence[Mapping[str, Any]],
    name: str = "module",
) -> ModulePresentation:
    """Resolve relations whose terms reference morphisms by index within hom(a_slot, degree)."""
    resolved = []
    for j, spec in enumerate(relations):
        degree = spec["degree"]
        terms = []
        for term in spec["terms"]:
            slot = term["gen"]
            if not 0 <= slot < len(generators):
                raise InvalidInputError(f"relation {j}: generator slot {slot} out of range")
            homset = category.hom(generators[slot], degree)
            index = term["hom_index"]
            if not 0 <= index < len(homset):
                raise InvalidInputError(
                    f"relation {j}: hom_index {index} outside hom({generators[slot]},{degree}) of size {len(homset)}"
                )
            terms.append(Term(int(term.get("coeff", 1)), slot, homset[index]))
        resolved.append(GradedElement(degree, tuple(terms)))
    return ModulePresentation(category, ring, tuple(generators), tuple(resolved), name)


def validate_presentation(presentation: ModulePresentation) -> PresentationDiagnostics:
    """Check slot and endpoint constraints of every relation term."""
    errors: List[str] = []
    category = presentation.category

    for i, degree in enumerate(presentation.generators):
        if not isinstance(degree, int) or degree < 0:
            errors.append(f"generator {i} has invalid degree {degree!r}")

    for j, element in enumerate(presentation.relations):
        if element.degree < 0:
            errors.append(f"relation {j} has negative degree {element.degree}")
            continue
        for t, term in enumerate(element.terms):
            where = f"relation {j} term {t}"
            if not 0 <= term.slot < len(presentation.generators):
                errors.append(f"{where}: generator slot {term.slot} out of range")
                continue
            morphism = term.morphism
            if morphism.source != presentation.generators[term.slot]:
                errors.append(
                    f"{where}: morphism starts at {morphism.source}, generator {term.slot} has degree "
                    f"{presentation.generators[term.slot]}"
                )
            elif morphism.target != element.degree:
                errors.append(f"{where}: morphism ends at {morphism.target}, relation degree is {element.degree}")
            elif not category.contains(morphism):
                errors.append(f"{where}: morphism is not in {category.identifier}")

    diagnostics = PresentationDiagnostics(
        ok=not errors,
        errors=errors,
        max_generator_degree=presentation.max_generator_degree,
        max_relation_degree=presentation.max_relation_degree,
        prd_bound=presentation.prd_bound,
    )
    if errors:
        logger.warning(f"presentation '{presentation.name}' has {len(errors)} problems")
    return diagnostics


def ensure_valid(presentation: ModulePresentation) -> PresentationDiagnostics:
    diagnostics = validate_presentation(presentation)
    if not diagnostics.ok:
        raise InvalidPresentationError(diagnostics.errors)
    return diagnostics
