from functools import lru_cache
from typing import Dict, Tuple

from censtab.config import DEFAULT_LIMITS
from censtab.core.categories.base import Morphism
from censtab.core.exceptions import ResourceLimitError
from censtab.core.linalg.modules import ModuleMap, PresentedModule
from censtab.core.linalg.sparse import add_scaled
from censtab.core.modules.presentation import ModulePresentation
from censtab.core.utils.logger import get_logger

logger = get_logger(__name__)


@lru_cache(maxsize=512)
def _evaluate(presentation: ModulePresentation, n: int, ambient_cap: int) -> PresentedModule:
    category = presentation.category
    basis = []
    for slot, degree in enumerate(presentation.generators):
        basis.extend((slot, alpha) for alpha in category.hom(degree, n))
        if len(basis) > ambient_cap:
            raise ResourceLimitError(f"ambient basis of V_{n}", len(basis), ambient_cap)
    index = {label: i for i, label in enumerate(basis)}

    # β · r_j for every β: b_j → n
    columns = []
    for element in presentation.relations:
        for beta in category.hom(element.degree, n):
            column: Dict[int, int] = {}
            for term in element.terms:
                label = (term.slot, category.compose(beta, term.morphism))
                add_scaled(presentation.ring, column, {index[label]: 1}, term.coeff)
            columns.append(column)

    module = PresentedModule.build(presentation.ring, basis, columns)
    logger.debug(f"V_{n} of '{presentation.name}': ambient {module.rank}, {len(module.relations)} relations")
    return module


def evaluate_degree(
    presentation: ModulePresentation, n: int, ambient_cap: int = DEFAULT_LIMITS.ambient_cap
) -> PresentedModule:
    """Degree-n part V_n as a cokernel on the basis ⊔_i Hom(a_i, n)."""
    return _evaluate(presentation, n, ambient_cap)


@lru_cache(maxsize=65536)
def _induced_images(presentation: ModulePresentation, phi: Morphism, ambient_cap: int) -> Tuple[int, ...]:
    category = presentation.category
    domain = _evaluate(presentation, phi.source, ambient_cap)
    codomain = _evaluate(presentation, phi.target, ambient_cap)
    target_index = codomain.index
    return tuple(target_index[(slot, category.compose(phi, alpha))] for slot, alpha in domain.basis)


def induced_images(
    presentation: ModulePresentation, phi: Morphism, ambient_cap: int = DEFAULT_LIMITS.ambient_cap
) -> Tuple[int, ...]:
    """Index of (i, φ∘α) in V_t for every basis element (i, α) of V_s."""
    return _induced_images(presentation, phi, ambient_cap)


def induced_map(
    presentation: ModulePresentation, phi: Morphism, ambient_cap: int = DEFAULT_LIMITS.ambient_cap
) -> ModuleMap:
    """V(φ): V_s → V_t on ambient bases, (i, α) ↦ (i, φ∘α)."""
    presentation.category.check_morphism(phi)
    domain = _evaluate(presentation, phi.source, ambient_cap)
    codomain = _evaluate(presentation, phi.target, ambient_cap)
    images = induced_images(presentation, phi, ambient_cap)
    return ModuleMap(domain, codomain, tuple(((k, 1),) for k in images))
