from censtab.core.kan.comma import CommaArrow, CommaDiagram, CommaObject, TruncationRange, comma_category
from censtab.core.kan.colimit import (
    KanValue,
    canonical_map,
    degree_map,
    compare_values,
    fi_subset_colimit_oracle,
    kan_value_colimit,
    oracle_to_colimit,
)
from censtab.core.kan.tensor import kan_value_tensor, restriction_map, tensor_to_colimit, window_generators

__all__ = [
    "CommaArrow",
    "CommaDiagram",
    "CommaObject",
    "TruncationRange",
    "comma_category",
    "KanValue",
    "canonical_map",
    "degree_map",
    "compare_values",
    "fi_subset_colimit_oracle",
    "kan_value_colimit",
    "oracle_to_colimit",
    "kan_value_tensor",
    "restriction_map",
    "tensor_to_colimit",
    "window_generators",
]
