from typing import Any, Dict, List, Optional, Union

from pydantic import BaseModel, Field, field_validator, model_validator

from censtab.core.linalg.ring import RingSpec


class RingValidator(BaseModel):
    """Validator for a ring selection: "Z", "F3", "Fp:3" or {"Fp": 3}."""

    ring: Union[str, Dict[str, int]] = "Z"

    @field_validator("ring")
    def validate_ring(cls, v):
        # RingSpec raises InvalidInputError, a ValueError
        RingSpec.parse(v)
        return v

    def to_ring(self) -> RingSpec:
        return RingSpec.parse(self.ring)


class GeneratorDocument(BaseModel):
    """One generator of a presented category."""

    name: str
    source: int = Field(ge=0)
    target: int = Field(ge=0)

    @field_validator("name")
    def validate_name(cls, v):
        if not v.strip():
            raise ValueError("generator name must not be empty")
        return v.strip()

    @model_validator(mode="after")
    def validate_endpoints(self):
        if self.target != self.source + 1:
            raise ValueError(f"generator '{self.name}' must go from k to k+1, got {self.source}->{self.target}")
        return self


class CategoryDocument(BaseModel):
    """Validator for a category selection: a built-in family or a presented category."""

    id: Optional[str] = None
    params: Dict[str, Any] = Field(default_factory=dict)
    name: Optional[str] = None
    objects_max: Optional[int] = Field(default=None, ge=0)
    generators: Optional[List[GeneratorDocument]] = None
    relations: List[List[List[str]]] = Field(default_factory=list)

    @field_validator("relations")
    def validate_relations(cls, v):
        for k, pair in enumerate(v):
            if len(pair) != 2:
                raise ValueError(f"relation {k} must be a pair of words")
        return v

    @model_validator(mode="after")
    def validate_kind(self):
        if self.generators is not None:
            if self.objects_max is None:
                raise ValueError("a presented category needs 'objects_max'")
            if self.id not in (None, "presented"):
                raise ValueError(f"category id '{self.id}' cannot carry generators")
        elif self.id is None:
            raise ValueError("category needs an 'id' or a list of 'generators'")
        return self

    @property
    def is_presented(self) -> bool:
        return self.generators is not None

    def to_category(self, hom_cap: int):
        from censtab.core.categories.registry import builtin_category

        if self.is_presented:
            document = {
                "name": self.name,
                "objects_max": self.objects_max,
                "generators": [g.model_dump() for g in self.generators],
                "relations": self.relations,
            }
            return builtin_category("presented", document, hom_cap=hom_cap)
        return builtin_category(self.id, self.params, hom_cap=hom_cap)


class TermDocument(BaseModel):
    """coeff · (generator slot, hom_index-th morphism of hom(a_gen, degree))"""

    gen: int = Field(ge=0)
    hom_index: int = Field(ge=0)
    coeff: int = 1


class RelationDocument(BaseModel):
    degree: int = Field(ge=0)
    terms: List[TermDocument]

    @field_validator("terms")
    def validate_terms(cls, v):
        if not v:
            raise ValueError("a relation needs at least one term")
        return v


class ModuleDocument(BaseModel):
    """Validator for a module file."""

    id: Optional[str] = None
    category: CategoryDocument
    ring: Union[str, Dict[str, int]] = "Z"
    generators: List[int]
    relations: List[RelationDocument] = Field(default_factory=list)

    @field_validator("ring")
    def validate_ring(cls, v):
        RingSpec.parse(v)
        return v

    @field_validator("generators")
    def validate_generators(cls, v):
        for k, degree in enumerate(v):
            if degree < 0:
                raise ValueError(f"generator {k} has negative degree {degree}")
        return v

    @model_validator(mode="after")
    def validate_slots(self):
        for j, relation in enumerate(self.relations):
            for t, term in enumerate(relation.terms):
                if term.gen >= len(self.generators):
                    raise ValueError(f"relation {j} term {t}: generator slot {term.gen} out of range")
        return self
