"""Built-in combinatorial categories: FI, FIₐ, OIₐ, FSᵒᵖ and VI(𝔽_q)."""

from itertools import combinations, permutations, product
from math import comb, factorial
from typing import Any, Dict, Iterable, List, Optional, Tuple

from censtab.config import DEFAULT_LIMITS
from censtab.core.categories.base import CategorySpec
from censtab.core.exceptions import InvalidInputError


class FICategory(CategorySpec):
    """Finite sets and injections; a morphism m → n is the tuple (f(1), ..., f(m))."""

    family = "fi"

    @property
    def params(self) -> Dict[str, Any]:
        return {}

    def _enumerate(self, m: int, n: int) -> Iterable[Tuple]:
        return permutations(range(1, n + 1), m)

    def _compose(self, g: Tuple, f: Tuple, m: int, n: int, p: int) -> Tuple:
        return tuple(g[x - 1] for x in f)

    def _identity(self, n: int) -> Tuple:
        return tuple(range(1, n + 1))

    def hom_count(self, m: int, n: int) -> Optional[int]:
        return factorial(n) // factorial(n - m) if m <= n else 0


def _complement(image: Tuple[int, ...], n: int) -> List[int]:
    used = set(image)
    return [i for i in range(1, n + 1) if i not in used]


class ColoredInjectionCategory(CategorySpec):
    """FIₐ: pairs (f, c) of an injection and an a-coloring of the complement of its image."""

    family = "fi_a"

    def __init__(self, a: int, hom_cap: int = DEFAULT_LIMITS.hom_cap):
        if not isinstance(a, int) or a < 1:
            raise InvalidInputError(f"number of colors must be a positive integer, got {a!r}")
        super().__init__(hom_cap)
        self.a = a

    @property
    def params(self) -> Dict[str, Any]:
        return {"a": self.a}

    def _injections(self, m: int, n: int) -> Iterable[Tuple[int, ...]]:
        return permutations(range(1, n + 1), m)

    def _enumerate(self, m: int, n: int) -> Iterable[Tuple]:
        colors = range(1, self.a + 1)
        for f in self._injections(m, n):
            for c in product(colors, repeat=n - m):
                yield (f, c)

    def _compose(self, g: Tuple, f: Tuple, m: int, n: int, p: int) -> Tuple:
        f2, c2 = g
        f1, c1 = f
        image = tuple(f2[x - 1] for x in f1)
        inner_colors = dict(zip(_complement(f1, n), c1))
        outer_colors = dict(zip(_complement(f2, p), c2))
        preimage = {y: j for j, y in enumerate(f2, 1)}

        # i = f2(j) with j outside Im(f1) keeps the inner color, otherwise the outer one
        colors = []
        for i in _complement(image, p):
            j = preimage.get(i)
            colors.append(inner_colors[j] if j is not None else outer_colors[i])
        return (image, tuple(colors))

    def _identity(self, n: int) -> Tuple:
        return (tuple(range(1, n + 1)), ())

    def hom_count(self, m: int, n: int) -> Optional[int]:
        if m > n:
            return 0
        return factorial(n) // factorial(n - m) * self.a ** (n - m)

    def describe_payload(self, payload: Tuple) -> str:
        f, c = payload
        return f"{list(f)}|{list(c)}"


class OrderedColoredInjectionCategory(ColoredInjectionCategory):
    """OIₐ: as FIₐ with strictly increasing injections."""

    family = "oi_a"

    def _injections(self, m: int, n: int) -> Iterable[Tuple[int, ...]]:
        return combinations(range(1, n + 1), m)

    def hom_count(self, m: int, n: int) -> Optional[int]:
        if m > n:
            return 0
        return comb(n, m) * self.a ** (n - m)


class OppositeSurjectionCategory(CategorySpec):
    """FSᵒᵖ: a morphism m → n is a surjection [n] → [m], stored as its value list of length n."""

    family = "fs_op"

    @property
    def params(self) -> Dict[str, Any]:
        return {}

    def _enumerate(self, m: int, n: int) -> Iterable[Tuple]:
        full = set(range(1, m + 1))
        for values in product(range(1, m + 1), repeat=n):
            if set(values) == full:
                yield values

    def _compose(self, g: Tuple, f: Tuple, m: int, n: int, p: int) -> Tuple:
        # Opposite category: the surjection of g∘f is σ_f ∘ σ_g
        return tuple(f[x - 1] for x in g)

    def _identity(self, n: int) -> Tuple:
        return tuple(range(1, n + 1))

    def hom_count(self, m: int, n: int) -> Optional[int]:
        if m > n:
            return 0
        return sum((-1) ** k * comb(m, k) * (m - k) ** n for k in range(m + 1))


class _SmallField:
    """Arithmetic tables for 𝔽_q with q ∈ {2, 3, 4}."""

    def __init__(self, q: int):
        self.q = q
        if q in (2, 3):
            self.add = [[(x + y) % q for y in range(q)] for x in range(q)]
            self.mul = [[(x * y) % q for y in range(q)] for x in range(q)]
        elif q == 4:
            # 𝔽₂[t]/(t² + t + 1), element b0 + 2·b1 encodes b0 + b1·t
            self.add = [[x ^ y for y in range(4)] for x in range(4)]
            self.mul = [[self._gf4_mul(x, y) for y in range(4)] for x in range(4)]
        else:
            raise InvalidInputError(f"VI supports q in {{2, 3, 4}}, got {q}")

    @staticmethod
    def _gf4_mul(x: int, y: int) -> int:
        result = 0
        for shift in range(2):
            if (y >> shift) & 1:
                result ^= x << shift
        if result & 4:
            result ^= 0b111
        return result

    def axpy(self, scalar: int, vector: Tuple[int, ...], accumulator: List[int]) -> None:
        if scalar:
            row = self.mul[scalar]
            for i, value in enumerate(vector):
                if value:
                    accumulator[i] = self.add[accumulator[i]][row[value]]


class LinearInjectionCategory(CategorySpec):
    """VI(𝔽_q): injective linear maps 𝔽_q^m → 𝔽_q^n, stored column-major."""

    family = "vi"

    def __init__(self, q: int, hom_cap: int = DEFAULT_LIMITS.hom_cap):
        if not isinstance(q, int):
            raise InvalidInputError(f"q must be an integer, got {q!r}")
        self.field = _SmallField(q)
        super().__init__(hom_cap)
        self.q = q

    @property
    def params(self) -> Dict[str, Any]:
        return {"q": self.q}

    def _span_with(self, span: frozenset, vector: Tuple[int, ...]) -> frozenset:
        extended = set()
        for base in span:
            for scalar in range(self.q):
                accumulator = list(base)
                self.field.axpy(scalar, vector, accumulator)
                extended.add(tuple(accumulator))
        return frozenset(extended)

    def _enumerate(self, m: int, n: int) -> Iterable[Tuple]:
        vectors = list(product(range(self.q), repeat=n))

        def extend(prefix: Tuple, span: frozenset):
            if len(prefix) == m:
                yield prefix
                return
            for vector in vectors:
                if vector not in span:
                    yield from extend(prefix + (vector,), self._span_with(span, vector))

        yield from extend((), frozenset({(0,) * n}))

    def _compose(self, g: Tuple, f: Tuple, m: int, n: int, p: int) -> Tuple:
        columns = []
        for column in f:
            accumulator = [0] * p
            for i, scalar in enumerate(column):
                self.field.axpy(scalar, g[i], accumulator)
            columns.append(tuple(accumulator))
        return tuple(columns)

    def _identity(self, n: int) -> Tuple:
        return tuple(tuple(1 if i == j else 0 for i in range(n)) for j in range(n))

    def hom_count(self, m: int, n: int) -> Optional[int]:
        if m > n:
            return 0
        count = 1
        for i in range(m):
            count *= self.q ** n - self.q ** i
        return count
