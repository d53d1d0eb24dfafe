from dataclasses import dataclass
from typing import Dict, List, Tuple

from censtab.core.categories.base import CategorySpec, Morphism, check_degree
from censtab.core.exceptions import PreconditionError
from censtab.core.utils.logger import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class TruncationRange:
    """Degree window [M, N] of the idempotent e_{M,N}."""

    M: int
    N: int

    def __post_init__(self):
        check_degree(self.M, "M")
        check_degree(self.N, "N")
        if self.M > self.N:
            raise PreconditionError(f"truncation window needs M <= N, got M={self.M}, N={self.N}")

    def degrees(self, n: int) -> range:
        """Window degrees that can map to n."""
        return range(self.M, min(self.N, n) + 1)


@dataclass(frozen=True, order=True)
class CommaObject:
    s: int
    alpha: Morphism


@dataclass(frozen=True, order=True)
class CommaArrow:
    """φ: s → s′ with α′∘φ = α, between object positions source and target."""

    source: int
    target: int
    phi: Morphism


@dataclass
class CommaDiagram:
    category: CategorySpec
    window: TruncationRange
    n: int
    objects: Tuple[CommaObject, ...]
    arrows: Tuple[CommaArrow, ...]

    def __post_init__(self):
        self.position: Dict[CommaObject, int] = {o: k for k, o in enumerate(self.objects)}


def comma_objects(cat: CategorySpec, window: TruncationRange, n: int) -> List[CommaObject]:
    return [CommaObject(s, alpha) for s in window.degrees(n) for alpha in cat.hom(s, n)]


def comma_category(cat: CategorySpec, M: int, N: int, n: int) -> CommaDiagram:
    """Objects α: s → n with M ≤ s ≤ N and every factorization arrow between them."""
    window = TruncationRange(M, N)
    check_degree(n, "n")
    objects = comma_objects(cat, window, n)
    position = {o: k for k, o in enumerate(objects)}

    arrows = []
    for target in objects:
        for s in range(window.M, target.s + 1):
            for phi in cat.hom(s, target.s):
                source = CommaObject(s, cat.compose(target.alpha, phi))
                arrows.append(CommaArrow(position[source], position[target], phi))
    arrows.sort()

    logger.debug(f"comma category over {n} in [{M},{N}] of {cat.identifier}: {len(objects)} objects, {len(arrows)} arrows")
    return CommaDiagram(cat, window, n, tuple(objects), tuple(arrows))
