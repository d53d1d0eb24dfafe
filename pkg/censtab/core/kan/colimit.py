"""Left Kan extension values as colimits over comma categories."""

from dataclasses import dataclass
from itertools import combinations
from typing import Dict, List, Literal, Optional, Tuple

from censtab.config import DEFAULT_LIMITS
from censtab.core.categories.base import Morphism
from censtab.core.categories.families import FICategory
from censtab.core.exceptions import PreconditionError
from censtab.core.kan.comma import CommaDiagram, CommaObject, comma_category
from censtab.core.linalg.builder import PresentationBuilder
from censtab.core.linalg.modules import ModuleMap, PresentedModule
from censtab.core.modules.evaluation import evaluate_degree, induced_images
from censtab.core.modules.presentation import ModulePresentation
from censtab.core.utils.logger import get_logger

logger = get_logger(__name__)


@dataclass
class KanValue:
    """A quotient of ⊕_{(s,α)} V_s: the module with the class of every node basis element.

    Labels of the quotient basis are (object, (slot, β)) where object = (s, α).
    """

    module: PresentedModule
    objects: Tuple[CommaObject, ...]
    offsets: Tuple[int, ...]
    classes: Tuple[int, ...]
    node_modules: Tuple[PresentedModule, ...]

    def node_class(self, position: int, k: int) -> int:
        return self.classes[self.offsets[position] + k]

    def cocone(self, position: int) -> ModuleMap:
        """Quotient injection of node `position` into the colimit."""
        node = self.node_modules[position]
        return ModuleMap(
            node, self.module, tuple(((self.node_class(position, k), 1),) for k in range(node.rank))
        )


def _node_builder(
    presentation: ModulePresentation, objects, ambient_cap: int
) -> Tuple[PresentationBuilder, List[int], List[PresentedModule]]:
    builder = PresentationBuilder(presentation.ring, ambient_cap)
    offsets: List[int] = []
    modules: List[PresentedModule] = []
    for obj in objects:
        node = evaluate_degree(presentation, obj.s, ambient_cap)
        offset = len(builder.labels)
        offsets.append(offset)
        modules.append(node)
        for label in node.basis:
            builder.add_generator((obj, label))
        for relation in node.relations:
            builder.add_relation({offset + i: v for i, v in relation})
    return builder, offsets, modules


def _finish(builder: PresentationBuilder, objects, offsets, modules) -> KanValue:
    module, classes = builder.build()
    return KanValue(module, tuple(objects), tuple(offsets), tuple(classes), tuple(modules))


def kan_value_colimit(
    presentation: ModulePresentation,
    M: int,
    N: int,
    n: int,
    ambient_cap: int = DEFAULT_LIMITS.ambient_cap,
    diagram: Optional[CommaDiagram] = None,
) -> KanValue:
    """colim over the comma category of V_s, as one cokernel of the total difference map."""
    diagram = diagram or comma_category(presentation.category, M, N, n)
    builder, offsets, modules = _node_builder(presentation, diagram.objects, ambient_cap)

    for arrow in diagram.arrows:
        images = induced_images(presentation, arrow.phi, ambient_cap)
        source_offset = offsets[arrow.source]
        target_offset = offsets[arrow.target]
        for k, image in enumerate(images):
            builder.identify(source_offset + k, target_offset + image)

    value = _finish(builder, diagram.objects, offsets, modules)
    logger.debug(
        f"colimit at n={n} over [{M},{N}]: ambient {len(builder.labels)} -> {value.module.rank}, "
        f"{len(value.module.relations)} relations"
    )
    return value


def degree_map(presentation: ModulePresentation, value: KanValue, n: int, ambient_cap: int) -> ModuleMap:
    """Map a Kan value to V_n: x at node (s, α) goes to V(α)(x)."""
    category = presentation.category
    target = evaluate_degree(presentation, n, ambient_cap)
    images = []
    for obj, (slot, beta) in value.module.basis:
        images.append(((target.index[(slot, category.compose(obj.alpha, beta))], 1),))
    return ModuleMap(value.module, target, tuple(images))


def canonical_map(
    presentation: ModulePresentation,
    M: int,
    N: int,
    n: int,
    via: Literal["colimit", "tensor"] = "colimit",
    ambient_cap: int = DEFAULT_LIMITS.ambient_cap,
) -> ModuleMap:
    """Map to V_n sending x at node (s, α) to V(α)(x)."""
    if via == "colimit":
        value = kan_value_colimit(presentation, M, N, n, ambient_cap)
    elif via == "tensor":
        from censtab.core.kan.tensor import kan_value_tensor

        value = kan_value_tensor(presentation, M, N, n, ambient_cap)
    else:
        raise PreconditionError(f"unknown construction '{via}'")
    return degree_map(presentation, value, n, ambient_cap)


def fi_subset_colimit_oracle(
    presentation: ModulePresentation, N: int, n: int, ambient_cap: int = DEFAULT_LIMITS.ambient_cap
) -> KanValue:
    """colim over subsets S ⊆ [n] with |S| ≤ N of V_{|S|}, glued along inclusions.

    Nodes are objects (|S|, inclusion of S), so the result compares directly
    with kan_value_colimit(P, 0, N, n).
    """
    category = presentation.category
    if not isinstance(category, FICategory):
        raise PreconditionError(f"the subset oracle needs FI, got {category.identifier}")

    subsets = [S for size in range(min(N, n) + 1) for S in combinations(range(1, n + 1), size)]
    objects = [CommaObject(len(S), Morphism(len(S), n, S)) for S in subsets]
    builder, offsets, modules = _node_builder(presentation, objects, ambient_cap)

    for a, S in enumerate(subsets):
        for b, T in enumerate(subsets):
            if len(S) >= len(T) or not set(S) < set(T):
                continue
            phi = Morphism(len(S), len(T), tuple(T.index(x) + 1 for x in S))
            images = induced_images(presentation, phi, ambient_cap)
            for k, image in enumerate(images):
                builder.identify(offsets[a] + k, offsets[b] + image)

    return _finish(builder, objects, offsets, modules)


def compare_values(source: KanValue, target: KanValue) -> ModuleMap:
    """Map between quotients sharing node labels: class of (o, x) ↦ class of (o, x)."""
    positions: Dict[CommaObject, int] = {o: k for k, o in enumerate(target.objects)}
    images = []
    for obj, label in source.module.basis:
        position = positions[obj]
        k = target.node_modules[position].index[label]
        images.append(((target.node_class(position, k), 1),))
    return ModuleMap(source.module, target.module, tuple(images))


def oracle_to_colimit(
    presentation: ModulePresentation, N: int, n: int, ambient_cap: int = DEFAULT_LIMITS.ambient_cap
) -> ModuleMap:
    """Natural map from the subset oracle to the comma-category colimit."""
    oracle = fi_subset_colimit_oracle(presentation, N, n, ambient_cap)
    colimit = kan_value_colimit(presentation, 0, N, n, ambient_cap)
    return compare_values(oracle, colimit)
