from censtab.core.linalg.ring import RingSpec, ZZ
from censtab.core.linalg.matrix import ExactMatrix
from censtab.core.linalg.normal_forms import hermite_normal_form, rank, rref, smith_normal_form
from censtab.core.linalg.modules import (
    IsoVerdict,
    ModuleMap,
    PresentedModule,
    cokernel,
    compose_maps,
    invariant_factors,
    is_isomorphism,
    kernel_generators,
    submodule_equal,
)
from censtab.core.linalg.builder import PresentationBuilder

__all__ = [
    "RingSpec",
    "ZZ",
    "ExactMatrix",
    "smith_normal_form",
    "hermite_normal_form",
    "rref",
    "rank",
    "PresentedModule",
    "ModuleMap",
    "IsoVerdict",
    "invariant_factors",
    "kernel_generators",
    "cokernel",
    "is_isomorphism",
    "submodule_equal",
    "compose_maps",
    "PresentationBuilder",
]
