"""Ã(m,n) = Hom(n-1,n) ⊗_{End(n-1)} ⋯ ⊗_{End(m+1)} Hom(m,m+1) and the kernel Ĩ(m,n).

Tensor products of permutation modules over monoid algebras are again
permutation modules, so Ã(m,n) is free on classes of composable chains
(ξ_{n-1}, ..., ξ_m) under the balancing moves (ξ∘g, ξ′) ~ (ξ, g∘ξ′).
Chains are stored outermost first.
"""

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

from censtab.config import DEFAULT_LIMITS
from censtab.core.categories.base import CategorySpec, Morphism, check_degree
from censtab.core.exceptions import PreconditionError, ResourceLimitError
from censtab.core.linalg.modules import ModuleMap, PresentedModule, Vector
from censtab.core.linalg.ring import RingSpec
from censtab.core.utils.logger import get_logger

logger = get_logger(__name__)

Chain = Tuple[Morphism, ...]


@dataclass
class ChainLevel:
    """Chain classes from degree k up to the top: (parent class, ξ_k) ↦ class."""

    degree: int
    lookup: Dict[Tuple[int, Morphism], int]
    representatives: List[Tuple[int, Morphism]]
    composites: List[Morphism]

    @property
    def size(self) -> int:
        return len(self.representatives)


class ChainTower:
    """Chain classes ending at a fixed top degree, built downward on demand."""

    def __init__(self, category: CategorySpec, top: int, ambient_cap: int = DEFAULT_LIMITS.ambient_cap):
        self.category = category
        self.top = top
        self.ambient_cap = ambient_cap
        self._levels: Dict[int, ChainLevel] = {}

    def level(self, k: int) -> ChainLevel:
        if not 0 <= k < self.top:
            raise PreconditionError(f"chain level {k} outside [0, {self.top})")
        cached = self._levels.get(k)
        if cached is None:
            cached = self._build_top() if k == self.top - 1 else self._build_below(k)
            self._levels[k] = cached
            logger.debug(f"chain classes {k}->{self.top} in {self.category.identifier}: {cached.size}")
        return cached

    def _build_top(self) -> ChainLevel:
        k = self.top - 1
        homset = self.category.hom(k, k + 1)
        return ChainLevel(
            degree=k,
            lookup={(0, xi): i for i, xi in enumerate(homset)},
            representatives=[(0, xi) for xi in homset],
            composites=list(homset),
        )

    def _build_below(self, k: int) -> ChainLevel:
        cat = self.category
        upper = self.level(k + 1)
        homset = cat.hom(k, k + 1)
        pairs = [(c, xi) for c in range(upper.size) for xi in homset]
        if len(pairs) > self.ambient_cap:
            raise ResourceLimitError(f"chains {k}->{self.top}", len(pairs), self.ambient_cap)
        index = {pair: i for i, pair in enumerate(pairs)}

        parent = list(range(len(pairs)))

        def find(i: int) -> int:
            while parent[i] != i:
                parent[i] = parent[parent[i]]
                i = parent[i]
            return i

        for g in cat.endomorphism_generators(k + 1):
            for c, xi in pairs:
                a = find(index[(self.right_act(k + 1, c, g), xi)])
                b = find(index[(c, cat.compose(g, xi))])
                if a != b:
                    parent[max(a, b)] = min(a, b)

        roots = [find(i) for i in range(len(pairs))]
        class_of_root: Dict[int, int] = {}
        representatives: List[Tuple[int, Morphism]] = []
        composites: List[Morphism] = []
        for i, root in enumerate(roots):
            if root not in class_of_root:
                class_of_root[root] = len(representatives)
                c, xi = pairs[root]
                representatives.append((c, xi))
                composites.append(cat.compose(upper.composites[c], xi))
        lookup = {pair: class_of_root[roots[i]] for i, pair in enumerate(pairs)}
        return ChainLevel(k, lookup, representatives, composites)

    def right_act(self, k: int, c: int, g: Morphism) -> int:
        """Class of chain(c)∘g for g ∈ End(k)."""
        level = self.level(k)
        parent, xi = level.representatives[c]
        return level.lookup[(parent, self.category.compose(xi, g))]

    def class_of(self, chain: Sequence[Morphism]) -> int:
        c = 0
        for xi in chain:
            c = self.level(xi.source).lookup[(c, xi)]
        return c

    def chain(self, k: int, c: int) -> Chain:
        """Representative chain of class c at level k."""
        links: List[Morphism] = []
        for degree in range(k, self.top):
            c, xi = self.level(degree).representatives[c]
            links.append(xi)
        return tuple(reversed(links))


@lru_cache(maxsize=64)
def chain_tower(category: CategorySpec, top: int, ambient_cap: int = DEFAULT_LIMITS.ambient_cap) -> ChainTower:
    return ChainTower(category, top, ambient_cap)


@dataclass
class TensorChain:
    """Ã(m,n) as a free module on chain classes, with the composite of every class."""

    category: CategorySpec
    ring: RingSpec
    m: int
    n: int
    module: PresentedModule
    composites: Tuple[Morphism, ...]
    tower: Optional[ChainTower] = field(default=None, repr=False)

    @property
    def rank(self) -> int:
        return self.module.rank

    def chain(self, c: int) -> Chain:
        return self.module.basis[c]

    def class_of(self, chain: Sequence[Morphism]) -> int:
        if self.tower is None:
            return self.module.index[tuple(chain)]
        return self.tower.class_of(chain)


def _check_pair(m: int, n: int) -> None:
    check_degree(m, "m")
    check_degree(n, "n")
    if n < m:
        raise PreconditionError(f"need n >= m, got m={m}, n={n}")


def a_tilde(
    category: CategorySpec, ring: RingSpec, m: int, n: int, ambient_cap: int = DEFAULT_LIMITS.ambient_cap
) -> Tuple[TensorChain, ModuleMap]:
    """Ã(m,n) with the composition map π: Ã(m,n) → R[Hom(m,n)]."""
    _check_pair(m, n)
    target = PresentedModule.free(ring, category.hom(m, n))

    if m == n:
        endomorphisms = category.hom(m, m)
        chains = tuple((g,) for g in endomorphisms)
        tensor = TensorChain(category, ring, m, n, PresentedModule.free(ring, chains), tuple(endomorphisms))
    else:
        tower = chain_tower(category, n, ambient_cap)
        level = tower.level(m)
        chains = tuple(tower.chain(m, c) for c in range(level.size))
        tensor = TensorChain(
            category, ring, m, n, PresentedModule.free(ring, chains), tuple(level.composites), tower
        )

    pi = ModuleMap(tensor.module, target, tuple(((target.index[g], 1),) for g in tensor.composites))
    return tensor, pi


def fibres(tensor: TensorChain) -> Dict[Morphism, List[int]]:
    """Chain classes grouped by composite, in class order."""
    grouped: Dict[Morphism, List[int]] = {}
    for c, composite in enumerate(tensor.composites):
        grouped.setdefault(composite, []).append(c)
    return grouped


def i_tilde(
    category: CategorySpec, ring: RingSpec, m: int, n: int, ambient_cap: int = DEFAULT_LIMITS.ambient_cap
) -> List[Vector]:
    """Generators of Ĩ(m,n) = ker π: differences of chain classes with a common composite.

    π sends every class to a basis element, so these differences form an
    R-basis of the kernel over every ring.
    """
    tensor, _ = a_tilde(category, ring, m, n, ambient_cap)
    one = ring.reduce(1)
    generators: List[Vector] = []
    for classes in fibres(tensor).values():
        first = classes[0]
        for c in classes[1:]:
            generators.append(((first, one), (c, ring.reduce(-1))))
    generators.sort()
    return generators


def unhit_morphisms(category: CategorySpec, tensor: TensorChain) -> List[Morphism]:
    """Morphisms m → n that are no composite of a chain."""
    hit = set(tensor.composites)
    return [g for g in category.hom(tensor.m, tensor.n) if g not in hit]
