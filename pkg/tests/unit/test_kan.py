import pytest

from censtab.core.categories import ColoredInjectionCategory, FICategory
from censtab.core.exceptions import PreconditionError
from censtab.core.kan import (
    TruncationRange,
    canonical_map,
    comma_category,
    compare_values,
    fi_subset_colimit_oracle,
    kan_value_colimit,
    kan_value_tensor,
    oracle_to_colimit,
    restriction_map,
    tensor_to_colimit,
    window_generators,
)
from censtab.core.linalg import ZZ, invariant_factors, is_isomorphism
from censtab.core.modules import free_module


class TestCommaCategory:
    """Objects and arrows of the comma category over n."""

    def setup_method(self):
        self.fi = FICategory()

    def test_truncation_range(self):
        window = TruncationRange(1, 3)
        assert list(window.degrees(2)) == [1, 2]
        assert list(window.degrees(5)) == [1, 2, 3]
        with pytest.raises(PreconditionError):
            TruncationRange(3, 1)

    def test_sizes(self):
        diagram = comma_category(self.fi, 0, 1, 2)
        assert len(diagram.objects) == 3
        assert len(diagram.arrows) == 5

    def test_arrows_factor(self):
        diagram = comma_category(self.fi, 0, 2, 3)
        for arrow in diagram.arrows:
            source = diagram.objects[arrow.source]
            target = diagram.objects[arrow.target]
            assert self.fi.compose(target.alpha, arrow.phi) == source.alpha

    def test_window_generators(self):
        generators = window_generators(self.fi, TruncationRange(0, 2), 2)
        assert len(generators) == 4
        assert all(g.target - g.source <= 1 for g in generators)


class TestKanValues:
    """Colimit, tensor and subset-oracle constructions."""

    def setup_method(self):
        self.fi = FICategory()

    def test_free_module_is_its_own_extension(self):
        free = free_module(self.fi, ZZ, 1)
        value = kan_value_colimit(free, 0, 1, 2)
        assert invariant_factors(value.module) == [0, 0]
        assert is_isomorphism(canonical_map(free, 0, 1, 2)).is_iso

    def test_window_below_generators_is_zero(self):
        free = free_module(self.fi, ZZ, 2)
        value = kan_value_colimit(free, 0, 1, 3)
        assert invariant_factors(value.module) == []
        verdict = is_isomorphism(canonical_map(free, 0, 1, 3))
        assert verdict.cokernel_invariants == [0, 0, 0, 0, 0, 0]

    def test_z2_fails_below_relation_degree(self, z2_module):
        verdict = is_isomorphism(canonical_map(z2_module, 0, 0, 1))
        assert not verdict.is_iso
        assert verdict.kernel_invariants == [0]
        assert verdict.cokernel_invariants == []

    def test_constructions_agree(self, z2_module):
        for n in range(4):
            assert is_isomorphism(tensor_to_colimit(z2_module, 0, 2, n)).is_iso
            assert is_isomorphism(canonical_map(z2_module, 0, 1, n, via="tensor")).is_iso

    def test_unknown_construction(self, z2_module):
        with pytest.raises(PreconditionError):
            canonical_map(z2_module, 0, 1, 2, via="direct")

    def test_cocone_maps_into_value(self, z2_module):
        value = kan_value_colimit(z2_module, 0, 1, 2)
        cocone = value.cocone(0)
        assert cocone.codomain is value.module
        assert cocone.is_well_defined()

    def test_subset_oracle(self, z2_module):
        for n in range(4):
            assert is_isomorphism(oracle_to_colimit(z2_module, 1, n)).is_iso
        oracle = fi_subset_colimit_oracle(z2_module, 1, 3)
        colimit = kan_value_colimit(z2_module, 0, 1, 3)
        assert invariant_factors(oracle.module) == invariant_factors(colimit.module) == [2]
        assert is_isomorphism(compare_values(oracle, colimit)).is_iso

    def test_subset_oracle_needs_fi(self):
        free = free_module(ColoredInjectionCategory(2), ZZ, 0)
        with pytest.raises(PreconditionError):
            fi_subset_colimit_oracle(free, 1, 2)

    def test_restriction_map(self, z2_module):
        small, large, phi = restriction_map(z2_module, 0, 3, 4)
        assert is_isomorphism(phi).is_iso
        assert small.module.rank >= 1
        with pytest.raises(PreconditionError):
            restriction_map(z2_module, 3, 3, 4)
