"""Finitely presented modules over ℤ or 𝔽_p and maps between them."""

from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, Hashable, Iterable, List, Mapping, Optional, Sequence, Tuple

from censtab.core.exceptions import DimensionMismatchError, IllDefinedMapError, RingMismatchError
from censtab.core.linalg.matrix import ExactMatrix
from censtab.core.linalg.normal_forms import smith_diagonal
from censtab.core.linalg.ring import RingSpec
from censtab.core.linalg.sparse import (
    LatticeSpan,
    SparseEliminator,
    SparseVector,
    add_scaled,
    clean_vector,
    nullspace,
)
from censtab.core.utils.logger import get_logger

logger = get_logger(__name__)

Vector = Tuple[Tuple[int, int], ...]


def freeze(ring: RingSpec, vector: Mapping[int, int]) -> Vector:
    return tuple(sorted(clean_vector(ring, vector).items()))


class _Reduction:
    """Tietze-reduced form of a presentation: unit relations eliminate generators."""

    def __init__(self, ring: RingSpec, rank: int, relations: Sequence[Vector]):
        self.ring = ring
        eliminator = SparseEliminator(ring, (dict(r) for r in relations), rank).run()
        self.alive: List[int] = sorted(eliminator.alive)
        self.position: Dict[int, int] = {index: k for k, index in enumerate(self.alive)}
        self.projection: Dict[int, SparseVector] = {
            column: {self.position[c]: v for c, v in combo.items()}
            for column, combo in eliminator.expressions().items()
        }

        seen = set()
        self.relations: List[SparseVector] = []
        for row in eliminator.residual():
            reduced = {self.position[c]: v for c, v in row.items()}
            key = tuple(sorted(reduced.items()))
            if key not in seen:
                seen.add(key)
                self.relations.append(reduced)

    @property
    def rank(self) -> int:
        return len(self.alive)

    def project(self, vector: Mapping[int, int]) -> SparseVector:
        result: SparseVector = {}
        for index, value in vector.items():
            if index in self.position:
                add_scaled(self.ring, result, {self.position[index]: 1}, value)
            else:
                add_scaled(self.ring, result, self.projection[index], value)
        return result

    @cached_property
    def span(self) -> LatticeSpan:
        return LatticeSpan(self.ring, self.relations, self.rank)

    @cached_property
    def invariant_factors(self) -> List[int]:
        if self.ring.is_field:
            return [0] * self.rank
        involved = sorted({i for relation in self.relations for i in relation})
        if not involved:
            return [0] * self.rank
        position = {i: k for k, i in enumerate(involved)}
        matrix = [[0] * len(self.relations) for _ in involved]
        for j, relation in enumerate(self.relations):
            for i, value in relation.items():
                matrix[position[i]][j] = value
        diagonal = smith_diagonal(matrix, len(involved), len(self.relations))
        torsion = [d for d in diagonal if d > 1]
        free_rank = self.rank - sum(1 for d in diagonal if d)
        return torsion + [0] * free_rank


@dataclass(frozen=True, eq=False)
class PresentedModule:
    """Cokernel of a relation matrix whose columns are relations among a labeled basis."""

    ring: RingSpec
    basis: Tuple[Hashable, ...]
    relations: Tuple[Vector, ...] = ()

    def __post_init__(self):
        for relation in self.relations:
            for index, _ in relation:
                if not 0 <= index < len(self.basis):
                    raise DimensionMismatchError(f"relation index {index} outside ambient rank {len(self.basis)}")

    @classmethod
    def build(
        cls,
        ring: RingSpec,
        basis: Sequence[Hashable],
        relations: Iterable[Mapping[int, int]] = (),
    ) -> "PresentedModule":
        """Construct from sparse relation columns, dropping zeros and duplicates."""
        frozen = []
        seen = set()
        for relation in relations:
            vector = freeze(ring, relation)
            if vector and vector not in seen:
                seen.add(vector)
                frozen.append(vector)
        return cls(ring, tuple(basis), tuple(frozen))

    @classmethod
    def free(cls, ring: RingSpec, basis: Sequence[Hashable]) -> "PresentedModule":
        return cls(ring, tuple(basis), ())

    @property
    def rank(self) -> int:
        """Ambient rank (size of the labeled basis)."""
        return len(self.basis)

    @cached_property
    def index(self) -> Dict[Hashable, int]:
        return {label: i for i, label in enumerate(self.basis)}

    @cached_property
    def reduction(self) -> _Reduction:
        return _Reduction(self.ring, self.rank, self.relations)

    def relation_matrix(self) -> ExactMatrix:
        columns = [dict(r) for r in self.relations]
        rows = [[column.get(i, 0) for column in columns] for i in range(self.rank)]
        return ExactMatrix.from_rows(rows, self.ring, len(columns))

    def is_zero_element(self, vector: Mapping[int, int]) -> bool:
        """Whether an ambient vector lies in the relation span."""
        reduction = self.reduction
        return reduction.span.contains(reduction.project(vector))

    def is_zero(self) -> bool:
        return not invariant_factors(self)


@dataclass(frozen=True, eq=False)
class ModuleMap:
    """Map of presented modules given by images of the domain ambient basis."""

    domain: PresentedModule
    codomain: PresentedModule
    images: Tuple[Vector, ...] = field(default=())

    def __post_init__(self):
        if self.domain.ring != self.codomain.ring:
            raise RingMismatchError(f"map from a module over {self.domain.ring} to one over {self.codomain.ring}")
        if len(self.images) != self.domain.rank:
            raise DimensionMismatchError(f"{len(self.images)} images for a domain of ambient rank {self.domain.rank}")
        for image in self.images:
            for index, _ in image:
                if not 0 <= index < self.codomain.rank:
                    raise DimensionMismatchError(f"image index {index} outside codomain rank {self.codomain.rank}")

    @classmethod
    def build(
        cls,
        domain: PresentedModule,
        codomain: PresentedModule,
        images: Sequence[Mapping[int, int]],
    ) -> "ModuleMap":
        return cls(domain, codomain, tuple(freeze(domain.ring, image) for image in images))

    @classmethod
    def identity(cls, module: PresentedModule) -> "ModuleMap":
        return cls(module, module, tuple(((i, 1),) for i in range(module.rank)))

    @classmethod
    def zero(cls, domain: PresentedModule, codomain: PresentedModule) -> "ModuleMap":
        return cls(domain, codomain, tuple(() for _ in range(domain.rank)))

    @property
    def ring(self) -> RingSpec:
        return self.domain.ring

    def apply(self, vector: Mapping[int, int]) -> SparseVector:
        result: SparseVector = {}
        for index, value in vector.items():
            add_scaled(self.ring, result, dict(self.images[index]), value)
        return result

    def matrix(self) -> ExactMatrix:
        """Matrix on ambient bases: column j is the image of domain basis element j."""
        rows = [[0] * self.domain.rank for _ in range(self.codomain.rank)]
        for j, image in enumerate(self.images):
            for i, value in image:
                rows[i][j] = value
        return ExactMatrix.from_rows(rows, self.ring, self.domain.rank)

    def is_well_defined(self) -> bool:
        return self.first_ill_defined_relation() is None

    def first_ill_defined_relation(self) -> Optional[int]:
        for k, relation in enumerate(self.domain.relations):
            if not self.codomain.is_zero_element(self.apply(dict(relation))):
                return k
        return None

    def ensure_well_defined(self) -> None:
        k = self.first_ill_defined_relation()
        if k is not None:
            raise IllDefinedMapError(f"domain relation {k} is not sent into the codomain relation span")


def compose_maps(g: ModuleMap, f: ModuleMap) -> ModuleMap:
    """g ∘ f"""
    if f.codomain is not g.domain and f.codomain.basis != g.domain.basis:
        raise DimensionMismatchError("maps are not composable")
    return ModuleMap.build(f.domain, g.codomain, [g.apply(dict(image)) for image in f.images])


def invariant_factors(module: PresentedModule) -> List[int]:
    """Invariant factors: torsion coefficients then zeros for the free rank.

    Over a prime field the list holds one zero per dimension, so the zero
    module has an empty list over every ring.
    """
    return list(module.reduction.invariant_factors)


def _kernel_in_reduced_coordinates(f: ModuleMap) -> List[SparseVector]:
    source = f.domain.reduction
    target = f.codomain.reduction
    width = source.rank

    # Columns: images of surviving domain generators, then codomain relations
    rows: List[SparseVector] = [{} for _ in range(target.rank)]
    for k, index in enumerate(source.alive):
        for i, value in target.project(dict(f.images[index])).items():
            rows[i][k] = value
    for t, relation in enumerate(target.relations):
        for i, value in relation.items():
            rows[i][width + t] = value

    kernel = []
    seen = set()
    for solution in nullspace(f.ring, rows, width + len(target.relations)):
        element = {k: v for k, v in solution.items() if k < width}
        key = tuple(sorted(element.items()))
        if element and key not in seen:
            seen.add(key)
            kernel.append(element)
    return kernel


def kernel_generators(f: ModuleMap, verify: bool = True) -> List[Vector]:
    """Generators of ker(f) as ambient vectors of the domain."""
    if verify:
        f.ensure_well_defined()
    alive = f.domain.reduction.alive
    return [freeze(f.ring, {alive[k]: v for k, v in element.items()}) for element in _kernel_in_reduced_coordinates(f)]


def cokernel(f: ModuleMap, verify: bool = True) -> PresentedModule:
    """Codomain ambient basis with the codomain relations and the image columns."""
    if verify:
        f.ensure_well_defined()
    relations = [dict(r) for r in f.codomain.relations] + [dict(image) for image in f.images]
    return PresentedModule.build(f.ring, f.codomain.basis, relations)


@dataclass
class IsoVerdict:
    """Outcome of an isomorphism test."""

    is_iso: bool
    kernel_invariants: List[int]
    cokernel_invariants: List[int]


def is_isomorphism(f: ModuleMap, verify: bool = True) -> IsoVerdict:
    """Decide whether f is an isomorphism; invariants of kernel and cokernel witness failures."""
    if verify:
        f.ensure_well_defined()
    ring = f.ring
    source = f.domain.reduction
    target = f.codomain.reduction

    # Cokernel, presented on the reduced codomain
    image_columns = [target.project(dict(f.images[index])) for index in source.alive]
    coker = PresentedModule.build(ring, range(target.rank), list(target.relations) + image_columns)
    cokernel_invariants = invariant_factors(coker)

    # Kernel as a submodule of the reduced domain
    kernel = _kernel_in_reduced_coordinates(f)
    kernel_invariants: List[int] = []
    if kernel:
        width = len(kernel)
        rows: List[SparseVector] = [{} for _ in range(source.rank)]
        for k, element in enumerate(kernel):
            for i, value in element.items():
                rows[i][k] = value
        for t, relation in enumerate(source.relations):
            for i, value in relation.items():
                rows[i][width + t] = value
        syzygies = [
            {k: v for k, v in solution.items() if k < width}
            for solution in nullspace(ring, rows, width + len(source.relations))
        ]
        kernel_invariants = invariant_factors(PresentedModule.build(ring, range(width), syzygies))

    verdict = IsoVerdict(
        is_iso=not kernel_invariants and not cokernel_invariants,
        kernel_invariants=kernel_invariants,
        cokernel_invariants=cokernel_invariants,
    )
    logger.debug(
        f"iso test {f.domain.rank}->{f.codomain.rank} (reduced {source.rank}->{target.rank}): "
        f"kernel {kernel_invariants}, cokernel {cokernel_invariants}"
    )
    return verdict


def _check_elements(elements: Sequence[Mapping[int, int]], ambient: PresentedModule) -> None:
    for element in elements:
        for index in element:
            if not 0 <= index < ambient.rank:
                raise DimensionMismatchError(f"element index {index} outside ambient rank {ambient.rank}")


def submodule_span(generators: Sequence[Mapping[int, int]], ambient: PresentedModule) -> LatticeSpan:
    """Span of generators plus relations, in reduced coordinates of the ambient module."""
    _check_elements(generators, ambient)
    reduction = ambient.reduction
    vectors = [reduction.project(dict(g)) for g in generators] + list(reduction.relations)
    return LatticeSpan(ambient.ring, vectors, reduction.rank)


def submodule_contains(span: LatticeSpan, element: Mapping[int, int], ambient: PresentedModule) -> bool:
    _check_elements([element], ambient)
    return span.contains(ambient.reduction.project(dict(element)))


def submodule_equal(
    generators_a: Sequence[Mapping[int, int]],
    generators_b: Sequence[Mapping[int, int]],
    ambient: PresentedModule,
) -> bool:
    """Whether two generator lists span the same submodule of ambient."""
    generators_a = [dict(g) for g in generators_a]
    generators_b = [dict(g) for g in generators_b]
    span_a = submodule_span(generators_a, ambient)
    span_b = submodule_span(generators_b, ambient)
    return all(submodule_contains(span_b, g, ambient) for g in generators_a) and all(
        submodule_contains(span_a, g, ambient) for g in generators_b
    )
