from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple

from censtab.config import DEFAULT_LIMITS
from censtab.core.exceptions import (
    EndpointMismatchError,
    ForeignMorphismError,
    InvalidInputError,
    ResourceLimitError,
)
from censtab.core.utils.logger import get_logger

logger = get_logger(__name__)


def check_degree(value: int, name: str = "degree") -> int:
    if not isinstance(value, int) or isinstance(value, bool) or value < 0:
        raise InvalidInputError(f"{name} must be a non-negative integer, got {value!r}")
    return value


@dataclass(frozen=True, order=True)
class Morphism:
    """One arrow source → target with a payload in canonical form."""

    source: int
    target: int
    payload: Tuple


def _jsonable(value: Any) -> Any:
    if isinstance(value, tuple):
        return [_jsonable(v) for v in value]
    return value


class CategorySpec(ABC):
    """Enumerable, composable category on the objects 0, 1, 2, ... with finite hom-sets."""

    family: str = ""

    def __init__(self, hom_cap: int = DEFAULT_LIMITS.hom_cap):
        self.hom_cap = hom_cap
        self._hom_cache: Dict[Tuple[int, int], Tuple[Morphism, ...]] = {}
        self._hom_sets: Dict[Tuple[int, int], frozenset] = {}
        self._generator_cache: Dict[Tuple[str, int], Tuple[Morphism, ...]] = {}

    # --- family hooks ---------------------------------------------------

    @property
    @abstractmethod
    def params(self) -> Dict[str, Any]:
        """Family parameters, JSON-ready."""

    @abstractmethod
    def _enumerate(self, m: int, n: int) -> Iterable[Tuple]:
        """Payloads of all morphisms m → n (any order, duplicates allowed)."""

    @abstractmethod
    def _compose(self, g: Tuple, f: Tuple, m: int, n: int, p: int) -> Tuple:
        """Payload of g ∘ f for f: m → n and g: n → p."""

    @abstractmethod
    def _identity(self, n: int) -> Tuple:
        pass

    def hom_count(self, m: int, n: int) -> Optional[int]:
        """Closed-form |hom(m, n)| when the family has one (checked against the cap before enumerating)."""
        return None

    def describe_payload(self, payload: Tuple) -> str:
        return str(_jsonable(payload))

    # --- public API -----------------------------------------------------

    @property
    def identifier(self) -> str:
        if not self.params:
            return self.family
        rendered = ",".join(f"{k}={v}" for k, v in sorted(self.params.items()) if k != "relations")
        return f"{self.family}({rendered})"

    def hom(self, m: int, n: int) -> Tuple[Morphism, ...]:
        """All morphisms m → n in canonical (lexicographic payload) order."""
        check_degree(m, "source")
        check_degree(n, "target")
        key = (m, n)
        cached = self._hom_cache.get(key)
        if cached is not None:
            return cached
        if m > n:
            result: Tuple[Morphism, ...] = ()
        else:
            expected = self.hom_count(m, n)
            if expected is not None and expected > self.hom_cap:
                raise ResourceLimitError(f"hom({m},{n}) in {self.identifier}", expected, self.hom_cap)
            payloads = set()
            for payload in self._enumerate(m, n):
                payloads.add(payload)
                if len(payloads) > self.hom_cap:
                    raise ResourceLimitError(f"hom({m},{n}) in {self.identifier}", len(payloads), self.hom_cap)
            result = tuple(Morphism(m, n, payload) for payload in sorted(payloads))
            logger.debug(f"{self.identifier}: |hom({m},{n})| = {len(result)}")
        self._hom_cache[key] = result
        return result

    def identity(self, n: int) -> Morphism:
        check_degree(n)
        return Morphism(n, n, self._identity(n))

    def compose(self, g: Morphism, f: Morphism) -> Morphism:
        """g ∘ f"""
        if f.target != g.source:
            raise EndpointMismatchError(f"cannot compose {g.source}->{g.target} after {f.source}->{f.target}")
        return Morphism(f.source, g.target, self._compose(g.payload, f.payload, f.source, f.target, g.target))

    def compose_all(self, morphisms: Sequence[Morphism]) -> Morphism:
        """Compose a chain given outermost first."""
        result = morphisms[-1]
        for morphism in reversed(morphisms[:-1]):
            result = self.compose(morphism, result)
        return result

    def contains(self, morphism: Morphism) -> bool:
        key = (morphism.source, morphism.target)
        members = self._hom_sets.get(key)
        if members is None:
            members = frozenset(self.hom(*key))
            self._hom_sets[key] = members
        return morphism in members

    def check_morphism(self, morphism: Morphism) -> Morphism:
        if not isinstance(morphism, Morphism) or not self.contains(morphism):
            raise ForeignMorphismError(f"{morphism!r} is not a morphism of {self.identifier}")
        return morphism

    def hom_index(self, morphism: Morphism) -> int:
        return self.hom(morphism.source, morphism.target).index(morphism)

    def describe(self, morphism: Morphism) -> str:
        return self.describe_payload(morphism.payload)

    def encode(self, morphism: Morphism) -> Dict[str, Any]:
        """Machine-readable encoding used in report witnesses."""
        return {
            "source": morphism.source,
            "target": morphism.target,
            "hom_index": self.hom_index(morphism),
            "payload": _jsonable(morphism.payload),
            "label": self.describe(morphism),
        }

    def endomorphism_generators(self, k: int) -> Tuple[Morphism, ...]:
        """A generating set of the monoid End(k), identity excluded."""
        key = ("end", k)
        if key not in self._generator_cache:
            self._generator_cache[key] = self._greedy_generators(self.hom(k, k), k)
        return self._generator_cache[key]

    def automorphisms(self, k: int) -> Tuple[Morphism, ...]:
        return tuple(g for g in self.hom(k, k) if self._is_unit(g, k))

    def automorphism_generators(self, k: int) -> Tuple[Morphism, ...]:
        """A generating set of the unit group of End(k), identity excluded."""
        key = ("aut", k)
        if key not in self._generator_cache:
            self._generator_cache[key] = self._greedy_generators(self.automorphisms(k), k)
        return self._generator_cache[key]

    def _is_unit(self, g: Morphism, k: int) -> bool:
        # In a finite monoid g is a unit iff some power of g is the identity
        identity = self.identity(k)
        power = g
        seen = set()
        while power not in seen:
            if power == identity:
                return True
            seen.add(power)
            power = self.compose(g, power)
        return False

    def _greedy_generators(self, elements: Sequence[Morphism], k: int) -> Tuple[Morphism, ...]:
        identity = self.identity(k)
        generators: List[Morphism] = []
        generated = {identity}
        for element in elements:
            if element in generated:
                continue
            generators.append(element)
            generated = {identity}
            frontier = [identity]
            while frontier:
                current = frontier.pop()
                for generator in generators:
                    product = self.compose(generator, current)
                    if product not in generated:
                        generated.add(product)
                        frontier.append(product)
        return tuple(generators)

    def __eq__(self, other) -> bool:
        if not isinstance(other, CategorySpec):
            return NotImplemented
        return (
            self.family == other.family
            and repr(self.params) == repr(other.params)
            and self.hom_cap == other.hom_cap
        )

    def __hash__(self) -> int:
        # Cached evaluations are keyed on the category, cap included
        return hash((self.family, repr(self.params), self.hom_cap))

    def __repr__(self) -> str:
        return f"<{type(self).__name__} {self.identifier}>"


@dataclass
class LawViolation:
    """A failed associativity or identity check."""

    law: str
    morphisms: Tuple[Morphism, ...]


def hom(cat: CategorySpec, m: int, n: int) -> Tuple[Morphism, ...]:
    return cat.hom(m, n)


def compose(cat: CategorySpec, g: Morphism, f: Morphism) -> Morphism:
    return cat.compose(g, f)


def check_category_laws(cat: CategorySpec, bound: int, limit: int = 10) -> List[LawViolation]:
    """Exhaustively test identity and associativity laws on all degrees ≤ bound."""
    violations: List[LawViolation] = []

    for m in range(bound + 1):
        for n in range(m, bound + 1):
            for f in cat.hom(m, n):
                if cat.compose(cat.identity(n), f) != f or cat.compose(f, cat.identity(m)) != f:
                    violations.append(LawViolation("identity", (f,)))
                    if len(violations) >= limit:
                        return violations

    for m in range(bound + 1):
        for l in range(m, bound + 1):
            for k in range(l, bound + 1):
                inner = {(b, a): cat.compose(b, a) for b in cat.hom(l, k) for a in cat.hom(m, l)}
                for n in range(k, bound + 1):
                    for c in cat.hom(k, n):
                        for b in cat.hom(l, k):
                            cb = cat.compose(c, b)
                            for a in cat.hom(m, l):
                                if cat.compose(cb, a) != cat.compose(c, inner[(b, a)]):
                                    violations.append(LawViolation("associativity", (c, b, a)))
                                    if len(violations) >= limit:
                                        return violations
    logger.info(f"{cat.identifier}: category laws checked up to degree {bound}, {len(violations)} violations")
    return violations
