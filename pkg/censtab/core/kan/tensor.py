"""The truncated tensor product e_n A e ⊗_{eAe} eV."""

from typing import List, Tuple

from censtab.config import DEFAULT_LIMITS
from censtab.core.categories.base import CategorySpec, Morphism
from censtab.core.exceptions import PreconditionError
from censtab.core.kan.colimit import KanValue, _finish, _node_builder, compare_values, kan_value_colimit
from censtab.core.kan.comma import CommaObject, TruncationRange, comma_objects
from censtab.core.linalg.modules import ModuleMap
from censtab.core.modules.evaluation import induced_images
from censtab.core.modules.presentation import ModulePresentation
from censtab.core.utils.logger import get_logger

logger = get_logger(__name__)


def window_generators(cat: CategorySpec, window: TruncationRange, top: int) -> List[Morphism]:
    """Generators of the algebra eAe restricted to degrees [M, top].

    Monoid generators of every End(s), plus the morphisms s′ → s that do not
    factor through a degree strictly between.
    """
    generators: List[Morphism] = []
    degrees = range(window.M, min(window.N, top) + 1)
    for s in degrees:
        generators.extend(cat.endomorphism_generators(s))
    for s in degrees:
        for t in degrees:
            if t <= s:
                continue
            composites = {
                cat.compose(g, h) for k in range(s + 1, t) for h in cat.hom(s, k) for g in cat.hom(k, t)
            }
            generators.extend(g for g in cat.hom(s, t) if g not in composites)
    return generators


def kan_value_tensor(
    presentation: ModulePresentation,
    M: int,
    N: int,
    n: int,
    ambient_cap: int = DEFAULT_LIMITS.ambient_cap,
) -> KanValue:
    """Coequalizer of e_nAe ⊗ eAe ⊗ eV ⇉ e_nAe ⊗ eV, balanced over generators of eAe.

    Basis labels are (α: s → n, x) with x an ambient basis element of V_s;
    balancing identifies (α∘γ) ⊗ x with α ⊗ (γ·x).
    """
    category = presentation.category
    window = TruncationRange(M, N)
    objects = comma_objects(category, window, n)
    position = {o: k for k, o in enumerate(objects)}
    builder, offsets, modules = _node_builder(presentation, objects, ambient_cap)

    generators = window_generators(category, window, n)
    for gamma in generators:
        images = induced_images(presentation, gamma, ambient_cap)
        for alpha in category.hom(gamma.target, n):
            source = position[CommaObject(gamma.source, category.compose(alpha, gamma))]
            target = position[CommaObject(gamma.target, alpha)]
            for k, image in enumerate(images):
                builder.identify(offsets[source] + k, offsets[target] + image)

    value = _finish(builder, objects, offsets, modules)
    logger.debug(
        f"tensor at n={n} over [{M},{N}] with {len(generators)} balancing generators: "
        f"ambient {len(builder.labels)} -> {value.module.rank}"
    )
    return value


def tensor_to_colimit(
    presentation: ModulePresentation, M: int, N: int, n: int, ambient_cap: int = DEFAULT_LIMITS.ambient_cap
) -> ModuleMap:
    """Natural comparison map α ⊗ x ↦ x at node (s, α)."""
    tensor = kan_value_tensor(presentation, M, N, n, ambient_cap)
    colimit = kan_value_colimit(presentation, M, N, n, ambient_cap)
    return compare_values(tensor, colimit)


def restriction_map(
    presentation: ModulePresentation, m: int, N: int, n: int, ambient_cap: int = DEFAULT_LIMITS.ambient_cap
) -> Tuple[KanValue, KanValue, ModuleMap]:
    """Φ: e_nAf ⊗_{fAf} fV → e_nAe ⊗_{eAe} eV for e = e_{m,N}, f = e_{m+1,N}."""
    if m + 1 > N:
        raise PreconditionError(f"need m < N, got m={m}, N={N}")
    small = kan_value_tensor(presentation, m + 1, N, n, ambient_cap)
    large = kan_value_tensor(presentation, m, N, n, ambient_cap)
    return small, large, compare_values(small, large)
