from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field

SCHEMA_VERSION = 1


class ReportBase(BaseModel):
    """Common envelope of every JSON report."""

    schema_version: int = Field(default=SCHEMA_VERSION, alias="schema")

    class Config:
        populate_by_name = True

    def to_json(self, timings: bool = False) -> str:
        exclude = None if timings else {"wall_time"}
        return self.model_dump_json(by_alias=True, indent=2, exclude=exclude)


class MorphismSchema(BaseModel):
    """Canonical morphism encoding."""
    source: int
    target: int
    hom_index: int
    payload: Any
    label: str


class DegreeVerdictSchema(BaseModel):
    """Schema for one degree of a stability check."""
    n: int
    M: int
    N: int
    is_iso: bool
    kernel_invariants: List[int]
    cokernel_invariants: List[int]
    constructions_agree: Optional[bool] = None


class StabilityRunSchema(BaseModel):
    N: int
    passed: bool
    first_failure: Optional[DegreeVerdictSchema] = None
    verdicts: List[DegreeVerdictSchema]


class StabilityReportSchema(ReportBase):
    """Schema for central, d-step, prd and reducing-idempotent reports."""
    kind: str
    module_id: str
    category: str
    ring: str
    parameters: Dict[str, int]
    passed: bool
    coverage_complete: bool
    resource_error: Optional[str] = None
    prd: Optional[int] = None
    verdicts: List[DegreeVerdictSchema] = Field(default_factory=list)
    runs: List[StabilityRunSchema] = Field(default_factory=list)
    wall_time: Optional[float] = None


class WitnessTermSchema(BaseModel):
    coeff: int
    chain: List[MorphismSchema]


class GenerationVerdictSchema(BaseModel):
    """Schema for one ring's verdict on one (m, n) pair."""
    ring: str
    m: int
    n: int
    d: int
    passed: bool
    surjective: bool
    unhit: Optional[MorphismSchema] = None
    lhs_generators: int
    rhs_generators: int
    rhs_contained: bool
    witness: Optional[List[WitnessTermSchema]] = None


class GenerationPairSchema(BaseModel):
    m: int
    n: int
    d: int
    passed: bool
    ring_sensitive: bool
    verdicts: List[GenerationVerdictSchema]


class WitnessSchema(BaseModel):
    """A commuting square α₁β₁ = α₂β₂ with no factorization through m+d."""
    alpha1: MorphismSchema
    alpha2: MorphismSchema
    beta1: MorphismSchema
    beta2: MorphismSchema


class ConditionVerdictSchema(BaseModel):
    condition: str
    m: int
    n: int
    l: Optional[int] = None
    d: Optional[int] = None
    passed: bool
    unhit: Optional[MorphismSchema] = None
    quadruples_checked: Optional[int] = None
    witness: Optional[WitnessSchema] = None


class RelationsReportSchema(ReportBase):
    """Schema for generation and factorization-condition reports."""
    kind: str
    category: str
    rings: List[str]
    d: int
    parameters: Dict[str, int]
    passed: bool
    coverage_complete: bool
    resource_error: Optional[str] = None
    generation: List[GenerationPairSchema] = Field(default_factory=list)
    conditions: List[ConditionVerdictSchema] = Field(default_factory=list)
    wall_time: Optional[float] = None


class HomCountSchema(BaseModel):
    m: int
    n: int
    count: int


class HomStatReportSchema(ReportBase):
    kind: str = "hom_stat"
    category: str
    n_max: int
    passed: bool = True
    coverage_complete: bool = True
    resource_error: Optional[str] = None
    counts: List[HomCountSchema] = Field(default_factory=list)
    wall_time: Optional[float] = None


class SnfReportSchema(ReportBase):
    """Schema for a Smith normal form computation."""
    kind: str = "snf"
    ring: str = "Z"
    matrix: List[List[int]]
    U: List[List[int]]
    D: List[List[int]]
    V: List[List[int]]
    diagonal: List[int]
    passed: bool = True
    coverage_complete: bool = True
    wall_time: Optional[float] = None
