"""Property suites over the built-in categories and randomized FI-modules."""

from itertools import product

import pytest

from censtab.core.categories import (
    ColoredInjectionCategory,
    FICategory,
    LinearInjectionCategory,
    MonoidCategory,
    OppositeSurjectionCategory,
    OrderedColoredInjectionCategory,
    PlacticCategory,
    builtin_category,
    check_category_laws,
    knuth_relations,
    rsk_normal_form,
)
from censtab.core.kan import oracle_to_colimit
from censtab.core.linalg import RingSpec, ZZ
from censtab.core.linalg.modules import is_isomorphism
from censtab.core.modules.presentation import free_module
from censtab.core.relations import check_condition_i, check_condition_ii, check_degree_generation
from censtab.core.stability import (
    check_central_stability,
    check_d_step,
    check_reducing_idempotent,
    empirical_prd,
)
from tests.conftest import random_fi_presentations

pytestmark = pytest.mark.slow

RINGS = [RingSpec.parse("F2"), RingSpec.parse("F3"), ZZ]
RANDOM_SUITE = random_fi_presentations(50)


class TestQuadraticCategories:
    """FI and its relatives have quadratic ideals of relations."""

    def setup_method(self):
        self.fi = FICategory()

    def test_fi_condition_i(self):
        verdicts = check_condition_i(self.fi, 5, 6)
        assert verdicts
        assert all(v.passed for v in verdicts)

    def test_fi_condition_ii(self):
        for m in range(4):
            for n in range(m + 3, 7):
                assert check_condition_ii(self.fi, 2, m, n).passed, (m, n)

    @pytest.mark.parametrize("ring", RINGS, ids=lambda r: r.label)
    def test_fi_generation(self, ring):
        for m in range(3):
            for n in range(m + 2, m + 5):
                assert check_degree_generation(self.fi, ring, 2, m, n).passed, (m, n)


class TestCounterexampleCategory:
    """Generation holds without the factorization condition."""

    def test_exact_verdict_pair(self, counterexample):
        for ring in RINGS:
            assert check_degree_generation(counterexample, ring, 2, 0, 3).passed
        verdict = check_condition_ii(counterexample, 2, 0, 3)
        assert not verdict.passed
        witness = verdict.witness
        assert counterexample.describe(witness.alpha1) == "b1'' b1'"
        assert counterexample.describe(witness.alpha2) == "b2'' b2'"


class TestPlacticCategories:
    """Knuth relations live in degree three."""

    @pytest.mark.parametrize("alphabet", ["12", "123"])
    def test_cubic_not_quadratic(self, alphabet):
        plactic = PlacticCategory(alphabet)
        for m in range(2):
            assert not check_degree_generation(plactic, ZZ, 2, m, m + 3).passed
            for n in range(m + 2, m + 5):
                assert check_degree_generation(plactic, ZZ, 3, m, n).passed, (m, n)

    def test_insertion_matches_congruence_closure(self):
        alphabet = "123"
        closure = MonoidCategory(alphabet, knuth_relations(alphabet))
        for length in range(1, 5):
            words = list(product(alphabet, repeat=length))
            closure_classes = {w: closure.normal_form(w) for w in words}
            insertion_classes = {w: tuple(rsk_normal_form(w, alphabet)) for w in words}
            for u in words:
                for v in words:
                    assert (closure_classes[u] == closure_classes[v]) == (
                        insertion_classes[u] == insertion_classes[v]
                    )


class TestCentralStability:
    """Stability thresholds on randomized and hand-made FI-modules."""

    @pytest.mark.parametrize("presentation", RANDOM_SUITE, ids=lambda p: p.name)
    def test_stable_at_presentation_degree(self, presentation):
        report = check_central_stability(presentation, presentation.prd_bound, n_max=6, cross_check=True)
        assert report.coverage_complete
        assert report.failures == []
        assert all(v.constructions_agree for v in report.verdicts)

    @pytest.mark.parametrize("k", [0, 1, 2, 3])
    def test_free_module_threshold(self, fi, k):
        prd, report = empirical_prd(free_module(fi, ZZ, k), k + 1, n_max=k + 2, cross_check=True)
        assert prd == k
        for N in range(k):
            assert report.failing_degree(N) is not None
        assert all(v.constructions_agree for run in report.runs for v in run.verdicts)

    def test_torsion_module_threshold(self, z2_module):
        prd, report = empirical_prd(z2_module, 2, n_max=4, cross_check=True)
        assert prd == 1
        assert report.failing_degree(0).n == 1
        assert all(v.constructions_agree for run in report.runs for v in run.verdicts)

    @pytest.mark.parametrize("presentation", RANDOM_SUITE, ids=lambda p: p.name)
    def test_two_step(self, presentation):
        prd, _ = empirical_prd(presentation, presentation.prd_bound, n_max=6)
        assert prd is not None
        N = prd + 1
        report = check_d_step(presentation, 2, N, n_max=6, cross_check=True)
        assert report.passed
        assert all(v.is_iso for v in report.verdicts if v.n <= N)

    @pytest.mark.parametrize("presentation", RANDOM_SUITE[:10], ids=lambda p: p.name)
    def test_reducing_idempotent(self, presentation):
        for n in (4, 5):
            verdict = check_reducing_idempotent(presentation, 0, 3, n, 2, cross_check=True)
            assert verdict.is_iso
            assert verdict.constructions_agree

    def test_reducing_idempotent_on_torsion_module(self, z2_module):
        for n in (4, 5):
            verdict = check_reducing_idempotent(z2_module, 0, 3, n, 2, cross_check=True)
            assert verdict.is_iso
            assert verdict.constructions_agree


class TestSubsetOracle:
    """Colimits over subsets agree with comma-category colimits on FI."""

    @pytest.mark.parametrize("presentation", RANDOM_SUITE, ids=lambda p: p.name)
    def test_oracle_agrees(self, presentation):
        for N in range(3):
            for n in range(6):
                assert is_isomorphism(oracle_to_colimit(presentation, N, n)).is_iso, (N, n)


class TestCategoryLawsToDegreeFive:
    """Exhaustive law checks at the full bounds."""

    @pytest.mark.parametrize(
        "category,bound",
        [
            (FICategory(), 5),
            (ColoredInjectionCategory(2), 5),
            (OrderedColoredInjectionCategory(2), 5),
            (OppositeSurjectionCategory(), 5),
            (LinearInjectionCategory(2), 3),
            (PlacticCategory("12"), 5),
            (builtin_category("counterexample"), 5),
        ],
        ids=lambda value: getattr(value, "identifier", str(value)),
    )
    def test_laws(self, category, bound):
        assert check_category_laws(category, bound) == []
