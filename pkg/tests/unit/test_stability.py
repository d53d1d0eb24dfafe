import pytest

from censtab.config import Limits
from censtab.core.categories import FICategory, plactic_presentation
from censtab.core.exceptions import InvalidPresentationError, PreconditionError
from censtab.core.linalg import ZZ
from censtab.core.modules import GradedElement, ModulePresentation, Term, free_module, relation
from censtab.core.categories import Morphism
from censtab.core.utils.file_handler import load_category
from censtab.core.stability import (
    check_central_stability,
    check_d_step,
    check_reducing_idempotent,
    check_reduction_chain,
    empirical_prd,
    stability_cell,
)


class TestCentralStability:
    """Test the canonical map Ae ⊗ eV → V degree by degree."""

    def setup_method(self):
        self.fi = FICategory()

    def test_z2_stable_at_one(self, z2_module):
        report = check_central_stability(z2_module, 1, n_max=4)
        assert report.passed
        assert report.coverage_complete
        assert [v.n for v in report.verdicts] == [0, 1, 2, 3, 4]
        assert report.parameters == {"N": 1, "n_max": 4}

    def test_z2_unstable_at_zero(self, z2_module):
        report = check_central_stability(z2_module, 0, n_max=3)
        assert not report.passed
        failure = report.failures[0]
        assert failure.n == 1
        assert failure.kernel_invariants == [0]
        assert failure.cokernel_invariants == []

    def test_free_module_below_its_degree(self):
        report = check_central_stability(free_module(self.fi, ZZ, 1), 0, n_max=2)
        failure = report.failures[0]
        assert failure.n == 1
        assert failure.cokernel_invariants == [0]

    def test_default_degree_range(self, z2_module):
        report = check_central_stability(z2_module, 1)
        assert report.parameters["n_max"] == z2_module.prd_bound + 4

    def test_cross_check(self, z2_module):
        report = check_central_stability(z2_module, 1, n_max=3, cross_check=True)
        assert all(v.constructions_agree for v in report.verdicts)

    def test_resource_cap_marks_partial_coverage(self):
        report = check_central_stability(
            free_module(self.fi, ZZ, 2), 2, n_max=6, limits=Limits(ambient_cap=30)
        )
        assert not report.coverage_complete
        assert "cap" in report.resource_error
        assert [v.n for v in report.verdicts] == [0, 1, 2, 3, 4]
        assert all(v.passed for v in report.verdicts)
        assert not report.passed

    def test_invalid_presentation_rejected(self):
        bad = ModulePresentation(self.fi, ZZ, (1,), (GradedElement(2, (Term(1, 0, Morphism(0, 2, ())),)),))
        with pytest.raises(InvalidPresentationError):
            check_central_stability(bad, 1, n_max=2)

    def test_single_cell(self, z2_module):
        verdict = stability_cell(z2_module, 0, 1, 3)
        assert verdict.passed
        assert (verdict.M, verdict.N, verdict.n) == (0, 1, 3)


class TestDStep:
    """d-step central stability on the window [N-(d-1), N]."""

    def test_passes_one_above_prd(self, z2_module):
        report = check_d_step(z2_module, 2, 2, n_max=5)
        assert report.passed
        assert [v.n for v in report.verdicts] == [1, 2, 3, 4, 5]
        assert all(v.M == 1 for v in report.verdicts)

    def test_identity_window_is_iso(self, z2_module):
        report = check_d_step(z2_module, 2, 1, n_max=1)
        assert report.passed

    def test_invalid_d(self, z2_module):
        with pytest.raises(PreconditionError):
            check_d_step(z2_module, 0, 2, n_max=3)


class TestPresentationDegree:
    """Least N with central stability."""

    def setup_method(self):
        self.fi = FICategory()

    @pytest.mark.parametrize("k", [0, 1, 2])
    def test_free_modules(self, k):
        prd, report = empirical_prd(free_module(self.fi, ZZ, k), k + 1, n_max=k + 2)
        assert prd == k
        assert len(report.runs) == k + 1
        for N in range(k):
            assert report.failing_degree(N) is not None

    def test_z2(self, z2_module):
        prd, report = empirical_prd(z2_module, 2, n_max=3)
        assert prd == 1
        assert report.failing_degree(0).n == 1
        assert report.passed

    def test_cross_check(self, z2_module):
        prd, report = empirical_prd(z2_module, 2, n_max=3, cross_check=True)
        assert prd == 1
        assert all(v.constructions_agree for run in report.runs for v in run.verdicts)


class TestReducingIdempotents:
    """e_nAf ⊗ fV → e_nAe ⊗ eV for f = e_{m+1,N}, e = e_{m,N}."""

    def test_z2(self, z2_module):
        for n in (4, 5):
            assert check_reducing_idempotent(z2_module, 0, 3, n).is_iso

    def test_cross_check(self, z2_module):
        verdict = check_reducing_idempotent(z2_module, 1, 3, 4, cross_check=True)
        assert verdict.passed
        assert verdict.constructions_agree
        report = check_reduction_chain(z2_module, 2, 3, 4, cross_check=True)
        assert all(v.constructions_agree for v in report.verdicts)

    def test_precondition(self, z2_module):
        with pytest.raises(PreconditionError):
            check_reducing_idempotent(z2_module, 0, 3, 3)
        with pytest.raises(PreconditionError):
            check_reducing_idempotent(z2_module, 2, 3, 4)

    def test_chain(self, z2_module):
        report = check_reduction_chain(z2_module, 2, 3, 4)
        assert report.kind == "reducing_idempotent"
        assert [v.M for v in report.verdicts] == [0, 1]
        assert report.passed


class TestPlacticWindows:
    """Plactic monoid on {1, 2}: relations of degree three need three-step windows."""

    @pytest.fixture(params=["json", "presented"])
    def plactic_free(self, request, sample_data):
        if request.param == "json":
            category = load_category(sample_data / "categories" / "plactic_12.json")
        else:
            category = plactic_presentation("12", 5)
        return free_module(category, ZZ, 0)

    def test_two_step_window_misses_knuth_relations(self, plactic_free):
        report = check_d_step(plactic_free, 2, 2, n_max=3)
        assert not report.passed
        failure = report.failures[0]
        # 8 words of length three against 6 plactic classes
        assert failure.n == 3
        assert failure.kernel_invariants == [0, 0]
        assert failure.cokernel_invariants == []

    def test_two_step_window_misses_a_degree_three_relation(self, plactic_free):
        category = plactic_free.category
        cut = ModulePresentation(
            category, ZZ, (0,), (relation(3, [(1, 0, category.hom(0, 3)[0])]),), name="plactic-cut"
        )
        failure = check_d_step(cut, 2, 2, n_max=3).failures[0]
        assert failure.n == 3
        assert failure.kernel_invariants == [0, 0, 0]
        assert check_central_stability(cut, 3, n_max=4).passed

    def test_three_step_window(self, plactic_free):
        report = check_d_step(plactic_free, 3, 3, n_max=5, cross_check=True)
        assert report.passed
        assert all(v.M == 1 for v in report.verdicts)
        assert all(v.constructions_agree for v in report.verdicts)

    def test_reducing_idempotent(self, plactic_free):
        verdict = check_reducing_idempotent(plactic_free, 0, 2, 3, d=2, cross_check=True)
        assert not verdict.is_iso
        assert verdict.constructions_agree
        for n in (4, 5):
            assert check_reducing_idempotent(plactic_free, 0, 3, n, d=3).is_iso


class TestOneStep:
    """d = 1 compares V_n with Hom(N, n) ⊗_{End(N)} V_N."""

    def test_free_category(self, free_binary):
        report = check_d_step(free_module(free_binary, ZZ, 0), 1, 1, n_max=3, cross_check=True)
        assert report.passed
        assert all(v.M == 1 and v.constructions_agree for v in report.verdicts)

    def test_fi_needs_two_steps(self):
        presentation = free_module(FICategory(), ZZ, 0)
        failure = check_d_step(presentation, 1, 1, n_max=2).failures[0]
        assert failure.n == 2
        assert failure.kernel_invariants == [0]
        assert failure.cokernel_invariants == []
        assert check_d_step(presentation, 2, 1, n_max=3).passed

    def test_matches_single_object_window(self, z2_module):
        report = check_d_step(z2_module, 1, 2, n_max=4)
        assert [v.n for v in report.verdicts] == [2, 3, 4]
        for verdict in report.verdicts:
            assert verdict.is_iso == stability_cell(z2_module, 2, 2, verdict.n).is_iso
