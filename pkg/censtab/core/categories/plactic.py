"""Length-preserving monoid categories, plactic monoids and Schensted insertion."""

from bisect import bisect_right
from collections import deque
from itertools import product
from typing import Any, Dict, Iterable, List, Sequence, Tuple

from censtab.config import DEFAULT_LIMITS
from censtab.core.categories.base import CategorySpec
from censtab.core.categories.presented import PresentedCategory
from censtab.core.exceptions import InvalidInputError

Word = Tuple[int, ...]


def _alphabet(alphabet: Sequence[Any]) -> Tuple[str, ...]:
    letters = tuple(str(letter) for letter in alphabet)
    if not letters:
        raise InvalidInputError("alphabet must be non-empty")
    if len(set(letters)) != len(letters):
        raise InvalidInputError(f"alphabet has repeated letters: {list(letters)}")
    return letters


def _encode_letters(word: Sequence[Any], letters: Tuple[str, ...]) -> Word:
    position = {letter: i for i, letter in enumerate(letters)}
    try:
        return tuple(position[str(letter)] for letter in word)
    except KeyError as exc:
        raise InvalidInputError(f"letter {exc.args[0]!r} is not in the alphabet {list(letters)}") from None


def _insertion_reading_word(word: Word) -> Word:
    rows: List[List[int]] = []
    for letter in word:
        for row in rows:
            slot = bisect_right(row, letter)
            if slot == len(row):
                row.append(letter)
                break
            row[slot], letter = letter, row[slot]
        else:
            rows.append([letter])
    return tuple(x for row in reversed(rows) for x in row)


def rsk_normal_form(word: Sequence[Any], alphabet: Sequence[Any]) -> List[str]:
    """Row-reading word (bottom row first) of the Schensted insertion tableau of word."""
    letters = _alphabet(alphabet)
    return [letters[i] for i in _insertion_reading_word(_encode_letters(word, letters))]


def knuth_relations(alphabet: Sequence[Any]) -> List[Tuple[List[str], List[str]]]:
    """xzy = zxy for x ≤ y < z and yxz = yzx for x < y ≤ z."""
    letters = _alphabet(alphabet)
    k = len(letters)
    relations = []
    for x in range(k):
        for y in range(k):
            for z in range(k):
                if x <= y < z:
                    relations.append(([letters[x], letters[z], letters[y]], [letters[z], letters[x], letters[y]]))
                if x < y <= z:
                    relations.append(([letters[y], letters[x], letters[z]], [letters[y], letters[z], letters[x]]))
    return relations


class MonoidCategory(CategorySpec):
    """Category of a monoid presented by length-preserving relations.

    Hom(m, n) is the set of monoid elements of length n − m and composition is
    the product. Elements are stored as the least word of their class.
    """

    family = "monoid"

    def __init__(
        self,
        alphabet: Sequence[Any],
        relations: Sequence[Tuple[Sequence[Any], Sequence[Any]]] = (),
        hom_cap: int = DEFAULT_LIMITS.hom_cap,
    ):
        super().__init__(hom_cap)
        self.letters = _alphabet(alphabet)
        self.relations: List[Tuple[Word, Word]] = []
        self._rewrites: Dict[Word, List[Word]] = {}
        for left, right in relations:
            lhs, rhs = _encode_letters(left, self.letters), _encode_letters(right, self.letters)
            if len(lhs) != len(rhs) or not lhs:
                raise InvalidInputError(f"relation {list(left)} = {list(right)} must relate non-empty words of equal length")
            self.relations.append((lhs, rhs))
            self._rewrites.setdefault(lhs, []).append(rhs)
            self._rewrites.setdefault(rhs, []).append(lhs)
        self._lengths = sorted({len(w) for w in self._rewrites})
        self._normal_cache: Dict[Word, Word] = {}
        self._elements: Dict[int, Tuple[Word, ...]] = {}

    @property
    def params(self) -> Dict[str, Any]:
        return {
            "alphabet": list(self.letters),
            "relations": [[self.decode(l), self.decode(r)] for l, r in self.relations],
        }

    def decode(self, word: Word) -> List[str]:
        return [self.letters[i] for i in word]

    def _normal_form(self, word: Word) -> Word:
        cached = self._normal_cache.get(word)
        if cached is not None:
            return cached
        seen = {word}
        queue = deque([word])
        while queue:
            current = queue.popleft()
            for length in self._lengths:
                for start in range(len(current) - length + 1):
                    for replacement in self._rewrites.get(current[start:start + length], ()):
                        neighbour = current[:start] + replacement + current[start + length:]
                        if neighbour not in seen:
                            seen.add(neighbour)
                            queue.append(neighbour)
        least = min(seen)
        for member in seen:
            self._normal_cache[member] = least
        return least

    def normal_form(self, word: Sequence[Any]) -> List[str]:
        return self.decode(self._normal_form(_encode_letters(word, self.letters)))

    def _enumerate(self, m: int, n: int) -> Iterable[Tuple]:
        length = n - m
        cached = self._elements.get(length)
        if cached is not None:
            return cached
        return self._classes(length)

    def _classes(self, length: int) -> Iterable[Tuple]:
        """Distinct classes of words of the given length, yielded as found."""
        found = set()
        for word in product(range(len(self.letters)), repeat=length):
            normal = self._normal_form(word)
            if normal not in found:
                found.add(normal)
                yield normal
        self._elements[length] = tuple(found)

    def _compose(self, g: Tuple, f: Tuple, m: int, n: int, p: int) -> Tuple:
        return self._normal_form(g + f)

    def _identity(self, n: int) -> Tuple:
        return ()

    def describe_payload(self, payload: Tuple) -> str:
        if not payload:
            return "id"
        letters = self.decode(payload)
        if all(len(letter) == 1 for letter in letters):
            return "".join(letters)
        return " ".join(letters)


class PlacticCategory(MonoidCategory):
    """Category of the plactic monoid on an ordered alphabet, normalized by Schensted insertion."""

    family = "plactic"

    def __init__(self, alphabet: Sequence[Any], hom_cap: int = DEFAULT_LIMITS.hom_cap):
        super().__init__(alphabet, knuth_relations(alphabet), hom_cap)

    @property
    def params(self) -> Dict[str, Any]:
        return {"alphabet": list(self.letters)}

    def _normal_form(self, word: Word) -> Word:
        return _insertion_reading_word(word)


def plactic_presentation(
    alphabet: Sequence[Any], objects_max: int, hom_cap: int = DEFAULT_LIMITS.hom_cap
) -> PresentedCategory:
    """The plactic category on degrees 0..objects_max as a degree-indexed presented category.

    Generator "x@k" is the letter x as an arrow k → k+1.
    """
    letters = _alphabet(alphabet)
    generators = [(f"{x}@{k}", k, k + 1) for k in range(objects_max) for x in letters]
    relations = []
    for base in range(objects_max - 2):
        for left, right in knuth_relations(letters):
            # Outermost letter sits at the top degree
            relations.append(
                (
                    [f"{x}@{base + 2 - t}" for t, x in enumerate(left)],
                    [f"{x}@{base + 2 - t}" for t, x in enumerate(right)],
                )
            )
    return PresentedCategory(
        generators, relations, objects_max, name=f"plactic-presented({','.join(letters)})", hom_cap=hom_cap
    )
