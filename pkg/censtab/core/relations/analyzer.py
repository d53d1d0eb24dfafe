"""Degree-d generation of the ideal of relations and the two factorization conditions."""

from dataclasses import dataclass, field
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from censtab.config import DEFAULT_LIMITS
from censtab.core.categories.base import CategorySpec, Morphism, check_degree
from censtab.core.exceptions import PreconditionError
from censtab.core.linalg.modules import Vector, freeze, submodule_contains, submodule_span
from censtab.core.linalg.ring import RingSpec
from censtab.core.linalg.sparse import add_scaled
from censtab.core.relations.tensor_chain import (
    Chain,
    TensorChain,
    a_tilde,
    chain_tower,
    i_tilde,
    unhit_morphisms,
)
from censtab.core.utils.logger import get_logger

logger = get_logger(__name__)


@dataclass
class GenerationVerdict:
    """Whether Ĩ(m,n) is the sum of translates of Ĩ(r, r+d)."""

    category: str
    ring: str
    d: int
    m: int
    n: int
    surjective: bool
    unhit: Optional[Morphism]
    lhs_generators: int
    rhs_generators: int
    rhs_contained: bool
    passed: bool
    witness: Optional[List[Tuple[int, Chain]]] = None


@dataclass
class ConditionOneVerdict:
    """Surjectivity of Hom(l,n) × Hom(m,l) → Hom(m,n)."""

    m: int
    l: int
    n: int
    passed: bool
    unhit: Optional[Morphism] = None


@dataclass
class ConditionTwoWitness:
    alpha1: Morphism
    alpha2: Morphism
    beta1: Morphism
    beta2: Morphism


@dataclass
class ConditionTwoVerdict:
    """Existence of (γ, δ₁, δ₂) for every commuting square α₁β₁ = α₂β₂."""

    d: int
    m: int
    n: int
    passed: bool
    quadruples_checked: int
    witness: Optional[ConditionTwoWitness] = None


@dataclass
class RingComparison:
    """Generation verdicts for one pair over several rings."""

    m: int
    n: int
    d: int
    verdicts: Dict[str, GenerationVerdict] = field(default_factory=dict)

    @property
    def ring_sensitive(self) -> bool:
        return len({v.passed for v in self.verdicts.values()}) > 1

    @property
    def passed(self) -> bool:
        return all(v.passed for v in self.verdicts.values())


def _orbit_cover(size: int, act: Callable[[int, Morphism], int], generators: Sequence[Morphism]) -> List[int]:
    """Representatives c with every element of the form act(c, g) for a monoid element g."""
    covered = [False] * size
    representatives = []
    for start in range(size):
        if covered[start]:
            continue
        representatives.append(start)
        covered[start] = True
        stack = [start]
        while stack:
            current = stack.pop()
            for g in generators:
                image = act(current, g)
                if not covered[image]:
                    covered[image] = True
                    stack.append(image)
    return representatives


def _outer_chains(category: CategorySpec, low: int, n: int, ambient_cap: int) -> List[Chain]:
    """Cover of Ã(low, n) under the right End(low) action; the identity when low = n."""
    if low == n:
        return [()]
    tower = chain_tower(category, n, ambient_cap)
    size = tower.level(low).size
    generators = category.endomorphism_generators(low)
    cover = _orbit_cover(size, lambda c, g: tower.right_act(low, c, g), generators)
    return [tower.chain(low, c) for c in cover]


def _inner_chains(category: CategorySpec, ring: RingSpec, m: int, high: int, ambient_cap: int) -> List[Chain]:
    """Cover of Ã(m, high) under the left End(high) action; the identity when high = m."""
    if high == m:
        return [()]
    inner, _ = a_tilde(category, ring, m, high, ambient_cap)

    def act(c: int, g: Morphism) -> int:
        chain = inner.chain(c)
        return inner.class_of((category.compose(g, chain[0]),) + chain[1:])

    return [inner.chain(c) for c in _orbit_cover(inner.rank, act, category.endomorphism_generators(high))]


def relation_translates(
    category: CategorySpec,
    ring: RingSpec,
    d: int,
    tensor: TensorChain,
    ambient_cap: int = DEFAULT_LIMITS.ambient_cap,
) -> List[Vector]:
    """Spanning set of Σ_r Ã(r+d,n) ⊗ Ĩ(r,r+d) ⊗ Ã(m,r) inside Ã(m,n), by chain concatenation."""
    m, n = tensor.m, tensor.n
    elements: List[Vector] = []
    seen = set()
    for r in range(m, n - d + 1):
        relations = i_tilde(category, ring, r, r + d, ambient_cap)
        if not relations:
            continue
        middle, _ = a_tilde(category, ring, r, r + d, ambient_cap)
        outer = _outer_chains(category, r + d, n, ambient_cap)
        inner = _inner_chains(category, ring, m, r, ambient_cap)
        for a in outer:
            for relation in relations:
                for b in inner:
                    vector: Dict[int, int] = {}
                    for c, coeff in relation:
                        add_scaled(ring, vector, {tensor.class_of(a + middle.chain(c) + b): 1}, coeff)
                    frozen = freeze(ring, vector)
                    if frozen and frozen not in seen:
                        seen.add(frozen)
                        elements.append(frozen)
    return elements


def _vanishes(tensor: TensorChain, ring: RingSpec, vector: Vector) -> bool:
    image: Dict[Morphism, int] = {}
    for c, coeff in vector:
        composite = tensor.composites[c]
        image[composite] = ring.reduce(image.get(composite, 0) + coeff)
    return not any(image.values())


def check_degree_generation(
    category: CategorySpec,
    ring: RingSpec,
    d: int,
    m: int,
    n: int,
    ambient_cap: int = DEFAULT_LIMITS.ambient_cap,
) -> GenerationVerdict:
    """Ĩ(m,n) against the submodule generated by translates of Ĩ(r, r+d), plus surjectivity of π.

    For n < m + d there are no translates and the check asks for Ĩ(m,n) = 0.
    """
    if d < 1:
        raise PreconditionError(f"d must be at least 1, got {d}")
    check_degree(m, "m")
    if n < m:
        raise PreconditionError(f"need n >= m, got m={m}, n={n}")

    tensor, _ = a_tilde(category, ring, m, n, ambient_cap)
    unhit = unhit_morphisms(category, tensor)
    lhs = i_tilde(category, ring, m, n, ambient_cap)
    rhs = relation_translates(category, ring, d, tensor, ambient_cap)

    contained = all(_vanishes(tensor, ring, v) for v in rhs)
    if not contained:
        logger.error(f"translates escape the kernel at ({m},{n}) in {category.identifier}")

    witness = None
    span = submodule_span([dict(v) for v in rhs], tensor.module)
    for generator in lhs:
        if not submodule_contains(span, dict(generator), tensor.module):
            witness = [(coeff, tensor.chain(c)) for c, coeff in generator]
            break

    verdict = GenerationVerdict(
        category=category.identifier,
        ring=ring.label,
        d=d,
        m=m,
        n=n,
        surjective=not unhit,
        unhit=unhit[0] if unhit else None,
        lhs_generators=len(lhs),
        rhs_generators=len(rhs),
        rhs_contained=contained,
        passed=not unhit and contained and witness is None,
        witness=witness,
    )
    logger.debug(
        f"generation d={d} ({m},{n}) over {ring}: |Ĩ gens|={len(lhs)}, |translates|={len(rhs)}, "
        f"passed={verdict.passed}"
    )
    return verdict


def compare_rings(
    category: CategorySpec,
    rings: Iterable[RingSpec],
    d: int,
    m: int,
    n: int,
    ambient_cap: int = DEFAULT_LIMITS.ambient_cap,
) -> RingComparison:
    """Run check_degree_generation over each ring; disagreements are flagged, not merged."""
    comparison = RingComparison(m, n, d)
    for ring in rings:
        comparison.verdicts[ring.label] = check_degree_generation(category, ring, d, m, n, ambient_cap)
    if comparison.ring_sensitive:
        logger.warning(f"generation verdict at ({m},{n}), d={d} depends on the ring")
    return comparison


def check_condition_i(category: CategorySpec, m_max: int, n_max: int) -> List[ConditionOneVerdict]:
    """Surjectivity of composition through every intermediate degree m < l < n ≤ n_max, m ≤ m_max."""
    verdicts = []
    for m in range(m_max + 1):
        for n in range(m + 2, n_max + 1):
            targets = category.hom(m, n)
            for l in range(m + 1, n):
                hit = set()
                for f in category.hom(m, l):
                    for g in category.hom(l, n):
                        hit.add(category.compose(g, f))
                    if len(hit) == len(targets):
                        break
                missing = next((t for t in targets if t not in hit), None)
                verdicts.append(ConditionOneVerdict(m, l, n, missing is None, missing))
    return verdicts


def _group_orbit(start: Morphism, moves: Sequence[Callable[[Morphism], Morphism]]) -> set:
    orbit = {start}
    stack = [start]
    while stack:
        current = stack.pop()
        for move in moves:
            image = move(current)
            if image not in orbit:
                orbit.add(image)
                stack.append(image)
    return orbit


def _orbit_representatives(elements: Sequence[Morphism], moves) -> List[Morphism]:
    representatives = []
    covered: set = set()
    for element in elements:
        if element not in covered:
            representatives.append(element)
            covered |= _group_orbit(element, moves)
    return representatives


def check_condition_ii(category: CategorySpec, d: int, m: int, n: int) -> ConditionTwoVerdict:
    """Brute-force search for (γ, δ₁, δ₂) over every commuting square α₁β₁ = α₂β₂.

    Quadruples are taken up to the automorphism groups of the endpoints,
    which preserve solvability; the search is lexicographic over
    (α₁, α₂, β₁, β₂) and (γ, δ₁, δ₂).
    """
    if d < 2:
        raise PreconditionError(f"condition (ii) needs d >= 2, got {d}")
    check_degree(m, "m")
    if n <= m + d:
        raise PreconditionError(f"condition (ii) needs n > m + d, got m={m}, n={n}, d={d}")

    cat = category
    alphas = cat.hom(m + 1, n)
    betas = cat.hom(m, m + 1)
    aut_n = cat.automorphism_generators(n)
    aut_mid = cat.automorphism_generators(m + 1)
    aut_m = cat.automorphism_generators(m)

    left_right = [lambda a, u=u: cat.compose(u, a) for u in aut_n] + [
        lambda a, v=v: cat.compose(a, v) for v in aut_mid
    ]
    right_mid = [lambda a, v=v: cat.compose(a, v) for v in aut_mid]
    right_m = [lambda b, x=x: cat.compose(b, x) for x in aut_m]

    first_alphas = _orbit_representatives(alphas, left_right)
    second_alphas = _orbit_representatives(alphas, right_mid)
    first_betas = _orbit_representatives(betas, right_m)

    # α ↦ γ ↦ [δ] with γ∘δ = α
    factorizations: Dict[Morphism, Dict[Morphism, List[Morphism]]] = {}
    for gamma in cat.hom(m + d, n):
        for delta in cat.hom(m + 1, m + d):
            factorizations.setdefault(cat.compose(gamma, delta), {}).setdefault(gamma, []).append(delta)

    squares: Dict[Morphism, List[Tuple[Morphism, Morphism]]] = {}
    for alpha in second_alphas:
        for beta in betas:
            squares.setdefault(cat.compose(alpha, beta), []).append((alpha, beta))

    def solvable(a1: Morphism, a2: Morphism, b1: Morphism, b2: Morphism) -> bool:
        first = factorizations.get(a1, {})
        second = factorizations.get(a2, {})
        for gamma in sorted(set(first) & set(second)):
            for delta1 in first[gamma]:
                left = cat.compose(delta1, b1)
                for delta2 in second[gamma]:
                    if cat.compose(delta2, b2) == left:
                        return True
        return False

    checked = 0
    for a1 in first_alphas:
        candidates = sorted(
            (a2, b1, b2)
            for b1 in first_betas
            for a2, b2 in squares.get(cat.compose(a1, b1), [])
        )
        for a2, b1, b2 in candidates:
            checked += 1
            if not solvable(a1, a2, b1, b2):
                logger.info(f"condition (ii) fails at ({m},{n}) in {cat.identifier} after {checked} squares")
                return ConditionTwoVerdict(d, m, n, False, checked, ConditionTwoWitness(a1, a2, b1, b2))

    return ConditionTwoVerdict(d, m, n, True, checked)
