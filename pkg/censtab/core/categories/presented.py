"""Finitely presented categories with length-preserving relations."""

from collections import deque
from itertools import product
from typing import Any, Dict, Iterable, List, Mapping, Sequence, Tuple

from censtab.config import DEFAULT_LIMITS
from censtab.core.categories.base import CategorySpec, check_degree
from censtab.core.exceptions import InvalidInputError
from censtab.core.utils.logger import get_logger

logger = get_logger(__name__)

Word = Tuple[int, ...]


class PresentedCategory(CategorySpec):
    """Category generated by arrows k → k+1 modulo equal-length relations.

    Words are written outermost first, so ("g", "f") means g ∘ f. A morphism is
    stored as the lexicographically least word (by generator declaration
    order) in its congruence class.
    """

    family = "presented"

    def __init__(
        self,
        generators: Sequence[Tuple[str, int, int]],
        relations: Sequence[Tuple[Sequence[str], Sequence[str]]],
        objects_max: int,
        name: str = "presented",
        hom_cap: int = DEFAULT_LIMITS.hom_cap,
    ):
        super().__init__(hom_cap)
        self.name = name
        self.objects_max = check_degree(objects_max, "objects_max")

        self.names: List[str] = []
        self.sources: List[int] = []
        self._by_name: Dict[str, int] = {}
        self._at_degree: Dict[int, List[int]] = {}
        for gen_name, source, target in generators:
            check_degree(source, f"source of {gen_name}")
            if gen_name in self._by_name:
                raise InvalidInputError(f"duplicate generator name '{gen_name}'")
            if target != source + 1:
                raise InvalidInputError(f"generator '{gen_name}' must go from k to k+1, got {source}->{target}")
            if target > self.objects_max:
                raise InvalidInputError(f"generator '{gen_name}' leaves the objects 0..{self.objects_max}")
            index = len(self.names)
            self.names.append(gen_name)
            self.sources.append(source)
            self._by_name[gen_name] = index
            self._at_degree.setdefault(source, []).append(index)

        self.relations: List[Tuple[Word, Word]] = []
        self._rewrites: Dict[Word, List[Word]] = {}
        for left, right in relations:
            lhs, rhs = self._encode(left), self._encode(right)
            if len(lhs) != len(rhs):
                raise InvalidInputError(f"relation {list(left)} = {list(right)} changes word length")
            if not lhs:
                raise InvalidInputError("relations between empty words are not allowed")
            if self._endpoints(lhs) != self._endpoints(rhs):
                raise InvalidInputError(f"relation {list(left)} = {list(right)} has unequal endpoints")
            self.relations.append((lhs, rhs))
            self._rewrites.setdefault(lhs, []).append(rhs)
            self._rewrites.setdefault(rhs, []).append(lhs)
        self._lengths = sorted({len(w) for w in self._rewrites})
        self._normal_cache: Dict[Word, Word] = {}

    @property
    def identifier(self) -> str:
        return self.name

    @property
    def params(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "objects_max": self.objects_max,
            "generators": [
                {"name": n, "source": s, "target": s + 1} for n, s in zip(self.names, self.sources)
            ],
            "relations": [[self.decode(l), self.decode(r)] for l, r in self.relations],
        }

    # --- words --------------------------------------------------------------

    def _encode(self, word: Sequence[str]) -> Word:
        try:
            encoded = tuple(self._by_name[name] for name in word)
        except KeyError as exc:
            raise InvalidInputError(f"unknown generator {exc.args[0]!r}") from None
        if encoded:
            self._endpoints(encoded)
        return encoded

    def decode(self, word: Word) -> List[str]:
        return [self.names[i] for i in word]

    def _endpoints(self, word: Word) -> Tuple[int, int]:
        for outer, inner in zip(word, word[1:]):
            if self.sources[outer] != self.sources[inner] + 1:
                raise InvalidInputError(
                    f"word {self.decode(word)} is not composable at {self.names[outer]} ∘ {self.names[inner]}"
                )
        return self.sources[word[-1]], self.sources[word[0]] + 1

    def _neighbours(self, word: Word) -> Iterable[Word]:
        for length in self._lengths:
            for start in range(len(word) - length + 1):
                for replacement in self._rewrites.get(word[start:start + length], ()):
                    yield word[:start] + replacement + word[start + length:]

    def _normal_form(self, word: Word) -> Word:
        cached = self._normal_cache.get(word)
        if cached is not None:
            return cached
        seen = {word}
        queue = deque([word])
        while queue:
            current = queue.popleft()
            for neighbour in self._neighbours(current):
                if neighbour not in seen:
                    seen.add(neighbour)
                    queue.append(neighbour)
        least = min(seen)
        for member in seen:
            self._normal_cache[member] = least
        return least

    def normalize_word(self, word: Sequence[str]) -> List[str]:
        """Lexicographically least word congruent to word."""
        encoded = self._encode(word)
        if not encoded:
            return []
        return self.decode(self._normal_form(encoded))

    # --- category hooks ------------------------------------------------------

    def _enumerate(self, m: int, n: int) -> Iterable[Tuple]:
        if m == n:
            yield ()
            return
        layers = [self._at_degree.get(k, []) for k in range(n - 1, m - 1, -1)]
        for word in product(*layers):
            yield self._normal_form(word)

    def _compose(self, g: Tuple, f: Tuple, m: int, n: int, p: int) -> Tuple:
        if not g:
            return f
        if not f:
            return g
        return self._normal_form(g + f)

    def _identity(self, n: int) -> Tuple:
        return ()

    def describe_payload(self, payload: Tuple) -> str:
        if not payload:
            return "id"
        return " ".join(self.decode(payload))


def normalize_word(cat: PresentedCategory, word: Sequence[str]) -> List[str]:
    return cat.normalize_word(word)


def counterexample_category(hom_cap: int = DEFAULT_LIMITS.hom_cap) -> PresentedCategory:
    """Degree-2 generated category on objects 0..3 whose composition fails the factorization condition."""
    generators = (
        [(f"b{i}", 0, 1) for i in (1, 2, 3)]
        + [(f"b{i}'", 1, 2) for i in (1, 2, 3, 4)]
        + [(f"b{i}''", 2, 3) for i in (1, 2)]
    )
    relations = [
        (["b1'", "b1"], ["b3'", "b3"]),
        (["b2'", "b2"], ["b4'", "b3"]),
        (["b1''", "b3'"], ["b2''", "b4'"]),
    ]
    return PresentedCategory(generators, relations, objects_max=3, name="counterexample", hom_cap=hom_cap)


def load_presented_category(
    document: Mapping[str, Any], hom_cap: int = DEFAULT_LIMITS.hom_cap
) -> PresentedCategory:
    """Build a presented category from a validated category document."""
    generators = [(g["name"], g["source"], g["target"]) for g in document["generators"]]
    relations = [(pair[0], pair[1]) for pair in document.get("relations", [])]
    return PresentedCategory(
        generators,
        relations,
        objects_max=document["objects_max"],
        name=document.get("name") or "presented",
        hom_cap=hom_cap,
    )
