from pathlib import Path
from typing import List

import numpy as np
import pytest

from censtab.config import Limits
from censtab.core.categories import PresentedCategory, builtin_category
from censtab.core.categories.families import FICategory
from censtab.core.linalg.ring import RingSpec, ZZ
from censtab.core.modules.presentation import ModulePresentation, relation

SAMPLE_DATA = Path(__file__).resolve().parent.parent / "data" / "sample_data"


def random_fi_presentations(count: int, seed: int = 2024) -> List[ModulePresentation]:
    """Random FI-modules over ℤ: ≤ 3 generators of degree ≤ 2, ≤ 3 relations of degree ≤ 3."""
    rng = np.random.default_rng(seed)
    fi = FICategory()
    presentations = []
    while len(presentations) < count:
        generators = tuple(int(x) for x in rng.integers(0, 3, size=int(rng.integers(1, 4))))
        relations = []
        for _ in range(int(rng.integers(0, 4))):
            degree = int(rng.integers(0, 4))
            slots = [i for i, a in enumerate(generators) if a <= degree]
            if not slots:
                continue
            terms = []
            for _ in range(int(rng.integers(1, 4))):
                slot = int(rng.choice(slots))
                homset = fi.hom(generators[slot], degree)
                morphism = homset[int(rng.integers(0, len(homset)))]
                coeff = int(rng.integers(-2, 3))
                if coeff:
                    terms.append((coeff, slot, morphism))
            if terms:
                relations.append(relation(degree, terms))
        presentations.append(
            ModulePresentation(fi, ZZ, generators, tuple(relations), name=f"random-{len(presentations)}")
        )
    return presentations


@pytest.fixture
def fi():
    return FICategory()


@pytest.fixture
def counterexample():
    return builtin_category("counterexample")


@pytest.fixture
def z2_module(fi):
    """V_0 = ℤ and V_n = ℤ/2 for n ≥ 1."""
    return ModulePresentation(fi, ZZ, (0,), (relation(1, [(2, 0, fi.hom(0, 1)[0])]),), name="z2")


@pytest.fixture
def f2():
    return RingSpec.prime_field(2)


@pytest.fixture
def small_limits():
    return Limits(hom_cap=50, ambient_cap=200)


@pytest.fixture
def sample_data():
    return SAMPLE_DATA


@pytest.fixture
def free_binary():
    """Two arrows k → k+1 for k < 3 and no relations."""
    generators = [(f"{letter}{k}", k, k + 1) for k in range(3) for letter in "ab"]
    return PresentedCategory(generators, [], 3, name="free-binary")
