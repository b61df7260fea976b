"""
Tests for uniserial Hom/Ext arithmetic and the linear-algebra oracle.
"""

import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from nakayama_tau.algebra import Ind, NakayamaAlgebra
from nakayama_tau.errors import UsageError
from nakayama_tau.homcalc import (
    composition_factors,
    ell_gt,
    ext1_nonzero,
    f_of,
    gen_member,
    hom_nonzero,
    hom_overlap,
    projective_cover,
    quotient_top,
    radk,
    stable_ext1_nonzero,
    submodule,
    tau,
    trace_len,
)
from nakayama_tau.homcalc.representations import (
    ext1_dimension,
    hom_dimension,
    representation,
)


def M(top: int, length: int, comp: int = 0) -> Ind:
    return Ind(comp, top, length)


def pairs(alg: NakayamaAlgebra):
    return itertools.product(alg.indecomposables(), repeat=2)


class TestHomOverlap:
    def test_examples(self, c6: NakayamaAlgebra) -> None:
        assert hom_overlap(c6, M(3, 3), M(5, 4)) == 2
        assert hom_overlap(c6, M(3, 1), M(3, 6)) == 0

    @pytest.mark.parametrize("n", [2, 3, 6])
    def test_projective_onto_simple(self, n: int) -> None:
        alg = NakayamaAlgebra.cyclic(n)
        for i in range(n):
            assert hom_overlap(alg, alg.projective(0, i), M(i, 1)) == 1

    def test_components_do_not_talk(self) -> None:
        alg = NakayamaAlgebra.product(NakayamaAlgebra.cyclic(2), NakayamaAlgebra.cyclic(2))
        assert hom_overlap(alg, M(0, 2, 0), M(0, 2, 1)) == 0

    def test_rejects_foreign_modules(self, c2: NakayamaAlgebra) -> None:
        with pytest.raises(UsageError):
            hom_overlap(c2, M(0, 3), M(0, 1))


class TestTauAndRadicals:
    def test_tau(self, c2: NakayamaAlgebra, c6: NakayamaAlgebra) -> None:
        assert tau(c6, M(3, 3)) == M(2, 3)
        assert tau(c6, M(4, 6)) is None
        assert tau(c2, M(0, 1)) == M(1, 1)

    def test_radk(self, c2: NakayamaAlgebra, c6: NakayamaAlgebra) -> None:
        assert radk(c6, M(3, 3), 1) == M(2, 2)
        assert radk(c6, M(3, 3), 3) is None
        assert radk(c6, M(3, 3), 0) == M(3, 3)
        assert radk(c2, M(0, 2), 1) == M(1, 1)
        with pytest.raises(UsageError):
            radk(c6, M(3, 3), -1)

    def test_quotient_top(self, c2: NakayamaAlgebra, c3: NakayamaAlgebra, c6: NakayamaAlgebra) -> None:
        assert quotient_top(c2, M(0, 2), 1) == M(0, 1)
        assert quotient_top(c6, M(3, 6), 6) == M(3, 6)
        assert quotient_top(c3, M(1, 2), 1) == M(1, 1)
        assert quotient_top(c3, M(1, 2), 0) is None
        with pytest.raises(UsageError):
            quotient_top(c3, M(1, 2), 3)

    def test_submodule_and_factors(self, c6: NakayamaAlgebra) -> None:
        assert submodule(c6, M(3, 3), 1) == M(1, 1)
        assert submodule(c6, M(3, 6), 6) == M(3, 6)
        assert composition_factors(c6, M(1, 3)) == (1, 0, 5)
        assert projective_cover(c6, M(1, 3)) == M(1, 6)

    @given(st.integers(2, 7), st.data())
    def test_tau_commutes_with_radicals(self, n: int, data: st.DataObject) -> None:
        """rad^i(tau X) = tau(rad^i X) for non-projective X over C_n."""
        alg = NakayamaAlgebra.cyclic(n)
        x = data.draw(st.sampled_from([y for y in alg.indecomposables() if y.length < n]))
        i = data.draw(st.integers(0, x.length - 1))
        assert radk(alg, tau(alg, x), i) == tau(alg, radk(alg, x, i))

    @pytest.mark.parametrize(
        "alg",
        [NakayamaAlgebra.cyclic(n) for n in range(1, 7)]
        + [NakayamaAlgebra.linear(m) for m in range(1, 5)],
        ids=str,
    )
    def test_indecomposables_are_tau_rigid(self, alg: NakayamaAlgebra) -> None:
        for x in alg.indecomposables():
            t = tau(alg, x)
            assert t is None or not hom_nonzero(alg, x, t)


class TestTraces:
    def test_trace_examples(self, c2: NakayamaAlgebra, c6: NakayamaAlgebra) -> None:
        assert trace_len(c2, (M(1, 2),), M(0, 2)) == 1
        assert trace_len(c6, (M(3, 3),), M(3, 6)) == 0
        assert trace_len(c6, (M(2, 2), M(3, 3)), M(3, 3)) == 3

    def test_f_examples(self, c2: NakayamaAlgebra, c6: NakayamaAlgebra) -> None:
        assert f_of(c2, (M(1, 2),), M(0, 2)) == M(0, 1)
        assert f_of(c6, (M(3, 3),), M(3, 6)) == M(3, 6)
        assert f_of(c6, (M(3, 3), M(1, 1)), M(1, 1)) is None

    def test_gen_member(self, c2: NakayamaAlgebra, c3: NakayamaAlgebra) -> None:
        assert gen_member(c2, M(0, 1), (M(0, 2),))
        assert not gen_member(c2, M(0, 2), (M(0, 1),))
        assert not gen_member(c3, M(1, 2), (M(1, 1),))

    def test_generated_modules_are_their_own_trace(self) -> None:
        alg = NakayamaAlgebra.cyclic(4)
        inds = alg.indecomposables()
        for x in inds:
            for m in itertools.combinations(inds, 2):
                if gen_member(alg, x, m):
                    assert trace_len(alg, m, x) == x.length

    def test_ell_gt(self, c6: NakayamaAlgebra) -> None:
        assert ell_gt(c6, 3, M(3, 6)) == 6
        assert ell_gt(c6, 3, M(2, 2)) == 0
        assert ell_gt(c6, 3, M(3, 4)) == 4

    def test_ell_gt_needs_cyclic_component(self) -> None:
        with pytest.raises(UsageError):
            ell_gt(NakayamaAlgebra.linear(3), 1, M(2, 2))


class TestExt:
    def test_examples(self, c2: NakayamaAlgebra, c6: NakayamaAlgebra) -> None:
        assert ext1_nonzero(c2, M(0, 1), M(1, 1))
        assert not ext1_nonzero(c2, M(0, 1), M(0, 1))
        assert not ext1_nonzero(c6, M(3, 3), M(3, 3))

    def test_projectives_have_no_extensions(self, c6: NakayamaAlgebra) -> None:
        for p in c6.projectives():
            assert not any(ext1_nonzero(c6, p, y) for y in c6.indecomposables())

    def test_linear_simple_extension(self) -> None:
        """0 -> S0 -> P1 -> S1 -> 0 does not split over A2."""
        alg = NakayamaAlgebra.linear(2)
        assert ext1_nonzero(alg, M(1, 1), M(0, 1))
        assert not ext1_nonzero(alg, M(0, 1), M(1, 1))

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_stable_hom_formula_agrees(self, n: int) -> None:
        alg = NakayamaAlgebra.cyclic(n)
        for x, y in pairs(alg):
            assert stable_ext1_nonzero(alg, x, y) == ext1_nonzero(alg, x, y), (x, y)

    @pytest.mark.parametrize(
        "alg",
        [NakayamaAlgebra.cyclic(n) for n in (2, 3)] + [NakayamaAlgebra.linear(3)],
        ids=str,
    )
    def test_hom_ext_link(self, alg: NakayamaAlgebra) -> None:
        """Ext^1(N, Gen M) = 0 exactly when Hom(M, tau N) = 0."""
        inds = alg.indecomposables()
        for m, n in itertools.product(inds, repeat=2):
            gen = [z for z in inds if gen_member(alg, z, (m,))]
            no_ext = not any(ext1_nonzero(alg, n, z) for z in gen)
            t = tau(alg, n)
            no_hom = t is None or not hom_nonzero(alg, m, t)
            assert no_ext == no_hom, (m, n)


class TestRepresentationOracle:
    def test_representation_of_projective(self, c2: NakayamaAlgebra) -> None:
        rep = representation(c2, M(0, 2))
        assert rep.dims == (1, 1)
        assert rep.arrows[0].tolist() == [[1.0]]
        assert rep.arrows[1].tolist() == [[0.0]]

    @pytest.mark.parametrize(
        "alg",
        [NakayamaAlgebra.cyclic(4), NakayamaAlgebra.linear(4)],
        ids=str,
    )
    def test_hom_overlap_matches_oracle(self, alg: NakayamaAlgebra) -> None:
        """Hom spaces are at most one-dimensional and non-zero exactly on overlap."""
        for x, y in pairs(alg):
            assert hom_dimension(alg, x, y) == int(hom_nonzero(alg, x, y)), (x, y)

    @pytest.mark.parametrize(
        "alg",
        [NakayamaAlgebra.cyclic(2), NakayamaAlgebra.cyclic(3), NakayamaAlgebra.linear(3)],
        ids=str,
    )
    def test_ext_matches_oracle(self, alg: NakayamaAlgebra) -> None:
        for x, y in pairs(alg):
            dim = ext1_dimension(alg, x, y)
            assert dim in (0, 1)
            assert (dim == 1) == ext1_nonzero(alg, x, y), (x, y)

    def test_oracle_across_components(self) -> None:
        alg = NakayamaAlgebra.product(NakayamaAlgebra.linear(2), NakayamaAlgebra.cyclic(2))
        assert hom_dimension(alg, M(1, 2, 0), M(0, 1, 1)) == 0
        assert ext1_dimension(alg, M(1, 1, 0), M(0, 1, 1)) == 0
