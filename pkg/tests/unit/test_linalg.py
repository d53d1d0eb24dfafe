import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from censtab.core.exceptions import DimensionMismatchError, IllDefinedMapError, InvalidInputError, RingMismatchError
from censtab.core.linalg import (
    ExactMatrix,
    ModuleMap,
    PresentationBuilder,
    PresentedModule,
    RingSpec,
    ZZ,
    cokernel,
    hermite_normal_form,
    invariant_factors,
    is_isomorphism,
    kernel_generators,
    rank,
    smith_normal_form,
    submodule_equal,
)
from censtab.core.linalg.sparse import LatticeSpan

F2 = RingSpec.prime_field(2)
F3 = RingSpec.prime_field(3)

matrices = st.integers(1, 8).flatmap(
    lambda r: st.integers(1, 8).flatmap(
        lambda c: st.lists(st.lists(st.integers(-9, 9), min_size=c, max_size=c), min_size=r, max_size=r)
    )
)


def _module(rank_, relations, ring=ZZ):
    return PresentedModule.build(ring, range(rank_), relations)


class TestRingSpec:
    """Test coefficient ring parsing."""

    def test_parse_forms(self):
        assert RingSpec.parse("Z") == ZZ
        assert RingSpec.parse("F3") == F3
        assert RingSpec.parse("Fp:3") == F3
        assert RingSpec.parse({"Fp": 2}) == F2
        assert F3.label == "F3"

    def test_rejects_composite_modulus(self):
        with pytest.raises(InvalidInputError):
            RingSpec.parse("F4")
        with pytest.raises(InvalidInputError):
            RingSpec.parse("Q")

    def test_field_arithmetic(self):
        assert F3.reduce(-1) == 2
        assert F3.inverse(2) == 2
        assert ZZ.is_unit(-1)
        assert not ZZ.is_unit(2)


class TestNormalForms:
    """Smith and Hermite normal form contracts."""

    @settings(max_examples=200, deadline=None)
    @given(matrices)
    def test_smith_contract(self, rows):
        m = ExactMatrix.from_rows(rows)
        u, d, v = smith_normal_form(m)

        assert u @ m @ v == d
        assert abs(u.determinant()) == 1
        assert abs(v.determinant()) == 1

        for i in range(d.nrows):
            for j in range(d.ncols):
                if i != j:
                    assert d.entries[i][j] == 0
        diagonal = [d.entries[i][i] for i in range(min(d.nrows, d.ncols))]
        assert all(x >= 0 for x in diagonal)
        nonzero = [x for x in diagonal if x]
        assert diagonal[: len(nonzero)] == nonzero
        for a, b in zip(nonzero, nonzero[1:]):
            assert b % a == 0

    @settings(max_examples=200, deadline=None)
    @given(matrices)
    def test_hermite_preserves_row_lattice(self, rows):
        m = ExactMatrix.from_rows(rows)
        h = hermite_normal_form(m)
        ncols = m.ncols

        def as_vector(row):
            return {j: x for j, x in enumerate(row) if x}

        original = LatticeSpan(ZZ, [as_vector(r) for r in m.entries], ncols)
        reduced = LatticeSpan(ZZ, [as_vector(r) for r in h.entries], ncols)
        assert all(original.contains(as_vector(r)) for r in h.entries)
        assert all(reduced.contains(as_vector(r)) for r in m.entries)

        # Leading entries are positive and move strictly right
        leads = []
        for row in h.entries:
            nonzero = [j for j, x in enumerate(row) if x]
            if nonzero:
                assert row[nonzero[0]] > 0
                leads.append(nonzero[0])
        assert leads == sorted(set(leads))

    def test_smith_example(self):
        _, d, _ = smith_normal_form(ExactMatrix.from_rows([[2, 4], [6, 8]]))
        assert d.tolist() == [[2, 0], [0, 4]]

    def test_smith_needs_integers(self):
        with pytest.raises(RingMismatchError):
            smith_normal_form(ExactMatrix.from_rows([[1, 1]], F2))

    def test_rank_over_rings(self):
        rows = [[2, 0], [0, 3]]
        assert rank(ExactMatrix.from_rows(rows)) == 2
        assert rank(ExactMatrix.from_rows(rows, F2)) == 1
        assert rank(ExactMatrix.from_rows(rows, F3)) == 1

    def test_ragged_rows_rejected(self):
        with pytest.raises(DimensionMismatchError):
            ExactMatrix.from_rows([[1, 2], [3]], ZZ, 2)


class TestPresentedModules:
    """Invariant factors, kernels, cokernels and isomorphism tests."""

    def test_invariant_factors_distinguish_torsion(self):
        z2_z4 = _module(2, [{0: 2}, {1: 4}])
        z8 = _module(1, [{0: 8}])
        assert invariant_factors(z2_z4) == [2, 4]
        assert invariant_factors(z8) == [8]

    def test_free_rank_and_zero_module(self):
        assert invariant_factors(_module(3, [{0: 1}])) == [0, 0]
        assert invariant_factors(_module(2, [{0: 1}, {1: -1}])) == []
        assert _module(1, [{0: 1}]).is_zero()

    def test_field_invariants_are_dimensions(self):
        assert invariant_factors(_module(2, [{0: 2}], F2)) == [0, 0]
        assert invariant_factors(_module(2, [{0: 2}], F3)) == [0]

    @settings(max_examples=50, deadline=None)
    @given(st.lists(st.lists(st.integers(-4, 4), min_size=3, max_size=3), min_size=1, max_size=4), st.randoms())
    def test_invariants_ignore_relation_order(self, rows, random):
        relations = [{j: x for j, x in enumerate(row) if x} for row in rows]
        shuffled = list(relations)
        random.shuffle(shuffled)
        assert invariant_factors(_module(3, relations)) == invariant_factors(_module(3, shuffled))

    def test_multiplication_by_two_on_z(self):
        z = PresentedModule.free(ZZ, ["x"])
        double = ModuleMap.build(z, z, [{0: 2}])
        verdict = is_isomorphism(double)
        assert not verdict.is_iso
        assert verdict.kernel_invariants == []
        assert verdict.cokernel_invariants == [2]
        assert invariant_factors(cokernel(double)) == [2]

    def test_projection_kernel(self):
        z2 = PresentedModule.free(ZZ, ["a", "b"])
        z = PresentedModule.free(ZZ, ["x"])
        summed = ModuleMap.build(z2, z, [{0: 1}, {0: 1}])
        verdict = is_isomorphism(summed)
        assert verdict.kernel_invariants == [0]
        assert verdict.cokernel_invariants == []
        kernel = kernel_generators(summed)
        assert len(kernel) == 1
        assert summed.apply(dict(kernel[0])) == {}

    def test_quotient_map_is_iso_when_relations_match(self):
        source = _module(2, [{0: 1, 1: -1}])
        target = PresentedModule.free(ZZ, ["x"])
        verdict = is_isomorphism(ModuleMap.build(source, target, [{0: 1}, {0: 1}]))
        assert verdict.is_iso

    def test_ill_defined_map_raises(self):
        z2 = _module(1, [{0: 2}])
        z = PresentedModule.free(ZZ, ["x"])
        with pytest.raises(IllDefinedMapError):
            is_isomorphism(ModuleMap.build(z2, z, [{0: 1}]))

    def test_ring_mismatch(self):
        with pytest.raises(RingMismatchError):
            ModuleMap.build(PresentedModule.free(ZZ, ["x"]), PresentedModule.free(F2, ["y"]), [{0: 1}])

    def test_submodule_equal(self):
        ambient = PresentedModule.free(ZZ, range(2))
        assert submodule_equal([{0: 2}, {1: 2}], [{0: 2, 1: 2}, {1: 2}], ambient)
        assert not submodule_equal([{0: 2}], [{0: 1}], ambient)


class TestPresentationBuilder:
    """Union-find quotients of generator sets."""

    def test_identifications_merge_classes(self):
        builder = PresentationBuilder(ZZ)
        for label in "abcd":
            builder.add_generator(label)
        builder.identify(builder.index_of("a"), builder.index_of("c"))
        builder.add_relation({builder.index_of("b"): 3})
        module, classes = builder.build()

        assert module.basis == ("a", "b", "d")
        assert classes == [0, 1, 0, 2]
        assert invariant_factors(module) == [3, 0, 0]

    def test_add_difference_with_unit_identifies(self):
        builder = PresentationBuilder(ZZ)
        x, y = builder.add_generator("x"), builder.add_generator("y")
        builder.add_difference({y: 1}, x)
        module, _ = builder.build()
        assert module.rank == 1
