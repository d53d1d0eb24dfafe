import pytest

from censtab.core.categories import FICategory, Morphism, PlacticCategory, builtin_category
from censtab.core.exceptions import PreconditionError, ResourceLimitError
from censtab.core.linalg import RingSpec, ZZ
from censtab.core.relations import (
    a_tilde,
    chain_tower,
    check_condition_i,
    check_condition_ii,
    check_degree_generation,
    compare_rings,
    fibres,
    i_tilde,
    relation_translates,
    unhit_morphisms,
)

F2 = RingSpec.prime_field(2)
F3 = RingSpec.prime_field(3)


class TestTensorChains:
    """Ã(m,n), its composition map and Ĩ(m,n)."""

    def setup_method(self):
        self.fi = FICategory()

    def test_diagonal_is_endomorphism_algebra(self):
        tensor, pi = a_tilde(self.fi, ZZ, 2, 2)
        assert tensor.rank == 2
        assert i_tilde(self.fi, ZZ, 2, 2) == []

    def test_one_step_is_hom_module(self):
        tensor, _ = a_tilde(self.fi, ZZ, 1, 2)
        assert tensor.rank == 2
        assert sorted(tensor.composites) == list(self.fi.hom(1, 2))

    def test_two_steps(self):
        tensor, pi = a_tilde(self.fi, ZZ, 0, 2)
        assert tensor.rank == 2
        assert all(len(tensor.chain(c)) == 2 for c in range(tensor.rank))
        assert list(fibres(tensor).values()) == [[0, 1]]
        assert i_tilde(self.fi, ZZ, 0, 2) == [((0, 1), (1, -1))]
        assert i_tilde(self.fi, F2, 0, 2) == [((0, 1), (1, 1))]

    def test_balancing_over_endomorphisms(self):
        # A(1,2) is a free A(2,2)-module of rank one, so Ã(1,3) ≅ A(2,3)
        tensor, _ = a_tilde(self.fi, ZZ, 1, 3)
        assert tensor.rank == 6
        assert unhit_morphisms(self.fi, tensor) == []
        assert len(i_tilde(self.fi, ZZ, 1, 3)) == 3

    def test_class_of_recovers_chain(self):
        tensor, _ = a_tilde(self.fi, ZZ, 0, 3)
        for c in range(tensor.rank):
            assert tensor.class_of(tensor.chain(c)) == c

    def test_pair_order(self):
        with pytest.raises(PreconditionError):
            a_tilde(self.fi, ZZ, 3, 2)


class TestGeneration:
    """Degree-d generation of the ideal of relations."""

    def setup_method(self):
        self.fi = FICategory()

    @pytest.mark.parametrize("ring", [ZZ, F2, F3])
    def test_fi_is_quadratic(self, ring):
        for m, n in [(0, 2), (0, 3), (1, 3), (1, 4)]:
            verdict = check_degree_generation(self.fi, ring, 2, m, n)
            assert verdict.passed, (m, n, ring)
            assert verdict.rhs_contained

    def test_translates_lie_in_the_kernel(self):
        tensor, _ = a_tilde(self.fi, ZZ, 0, 3)
        translates = relation_translates(self.fi, ZZ, 2, tensor)
        assert translates
        for vector in translates:
            image = {}
            for c, coeff in vector:
                image[tensor.composites[c]] = image.get(tensor.composites[c], 0) + coeff
            assert not any(image.values())

    def test_plactic_is_not_quadratic(self):
        plactic = PlacticCategory("12")
        verdict = check_degree_generation(plactic, ZZ, 2, 0, 3)
        assert not verdict.passed
        assert verdict.surjective
        assert verdict.rhs_generators == 0
        assert verdict.lhs_generators == 2
        assert verdict.witness is not None
        assert check_degree_generation(plactic, ZZ, 3, 0, 3).passed

    def test_below_d_asks_for_zero_kernel(self):
        plactic = PlacticCategory("12")
        assert check_degree_generation(plactic, ZZ, 3, 0, 2).passed
        assert not check_degree_generation(plactic, ZZ, 4, 0, 3).passed

    def test_counterexample_generation_passes(self, counterexample):
        for ring in (ZZ, F2):
            assert check_degree_generation(counterexample, ring, 2, 0, 3).passed

    def test_compare_rings(self):
        comparison = compare_rings(self.fi, [F2, F3, ZZ], 2, 0, 3)
        assert set(comparison.verdicts) == {"F2", "F3", "Z"}
        assert comparison.passed
        assert not comparison.ring_sensitive

    def test_invalid_arguments(self):
        with pytest.raises(PreconditionError):
            check_degree_generation(self.fi, ZZ, 0, 0, 2)
        with pytest.raises(PreconditionError):
            check_degree_generation(self.fi, ZZ, 2, 3, 2)


class TestFactorizationConditions:
    """Conditions (i) and (ii)."""

    def test_condition_i_on_fi(self):
        verdicts = check_condition_i(FICategory(), 2, 4)
        assert verdicts
        assert all(v.passed for v in verdicts)
        assert {(v.m, v.l, v.n) for v in verdicts} >= {(0, 1, 2), (1, 2, 4), (2, 3, 4)}

    def test_condition_i_on_surjections(self):
        fs = builtin_category("fs_op")
        assert all(v.passed for v in check_condition_i(fs, 1, 4))

    def test_condition_ii_on_fi(self):
        for m, n in [(0, 3), (0, 4), (1, 4)]:
            verdict = check_condition_ii(FICategory(), 2, m, n)
            assert verdict.passed
            assert verdict.quadruples_checked > 0

    def test_counterexample_witness(self, counterexample):
        verdict = check_condition_ii(counterexample, 2, 0, 3)
        assert not verdict.passed
        witness = verdict.witness
        assert counterexample.describe(witness.alpha1) == "b1'' b1'"
        assert counterexample.describe(witness.alpha2) == "b2'' b2'"
        assert counterexample.describe(witness.beta1) == "b1"
        assert counterexample.describe(witness.beta2) == "b2"
        assert counterexample.compose(witness.alpha1, witness.beta1) == counterexample.compose(
            witness.alpha2, witness.beta2
        )

    def test_condition_ii_preconditions(self):
        with pytest.raises(PreconditionError):
            check_condition_ii(FICategory(), 1, 0, 3)
        with pytest.raises(PreconditionError):
            check_condition_ii(FICategory(), 2, 0, 2)

    def test_other_families_are_quadratic(self):
        for category in (builtin_category("fi_a", {"a": 2}), builtin_category("oi_a", {"a": 2})):
            assert check_condition_ii(category, 2, 0, 3).passed
        assert check_condition_ii(builtin_category("vi", {"q": 2}), 2, 0, 3).passed

    def test_surjections_need_three_steps_for_condition_ii(self):
        fs = builtin_category("fs_op")
        verdict = check_condition_ii(fs, 2, 1, 4)
        assert not verdict.passed
        assert verdict.witness is not None
        assert check_condition_ii(fs, 3, 1, 5).passed


class TestChainTowerCache:
    """Cached towers are keyed on the hom-set cap."""

    def test_tower_cache_respects_cap(self):
        assert chain_tower(FICategory(), 3).level(0).size > 0
        tower = chain_tower(FICategory(hom_cap=2), 3)
        assert tower.category.hom_cap == 2
        with pytest.raises(ResourceLimitError):
            tower.level(2)


class TestConditionsAndGeneration:
    """Conditions (i) and (ii) against degree-d generation."""

    def test_free_category_is_generated_in_degree_one(self, free_binary):
        for m, n in [(0, 2), (0, 3), (1, 3)]:
            assert check_degree_generation(free_binary, ZZ, 1, m, n).passed
        assert not check_degree_generation(FICategory(), ZZ, 1, 0, 2).passed

    def test_colored_injections(self):
        fi2 = builtin_category("fi_a", {"a": 2})
        assert all(v.passed for v in check_condition_i(fi2, 1, 4))
        for m, n in [(0, 3), (1, 4)]:
            assert check_condition_ii(fi2, 2, m, n).passed
            assert check_degree_generation(fi2, ZZ, 2, m, n).passed
