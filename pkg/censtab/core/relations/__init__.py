from censtab.core.relations.tensor_chain import (
    ChainTower,
    TensorChain,
    a_tilde,
    chain_tower,
    fibres,
    i_tilde,
    unhit_morphisms,
)
from censtab.core.relations.analyzer import (
    ConditionOneVerdict,
    ConditionTwoVerdict,
    ConditionTwoWitness,
    GenerationVerdict,
    RingComparison,
    check_condition_i,
    check_condition_ii,
    check_degree_generation,
    compare_rings,
    relation_translates,
)

__all__ = [
    "ChainTower",
    "TensorChain",
    "a_tilde",
    "chain_tower",
    "fibres",
    "i_tilde",
    "unhit_morphisms",
    "ConditionOneVerdict",
    "ConditionTwoVerdict",
    "ConditionTwoWitness",
    "GenerationVerdict",
    "RingComparison",
    "check_condition_i",
    "check_condition_ii",
    "check_degree_generation",
    "compare_rings",
    "relation_translates",
]
