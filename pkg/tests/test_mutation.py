"""
Tests for pair mutation, the action on complete sequences and braid verification.
"""

import pytest

from nakayama_tau.algebra import Ind, NakayamaAlgebra, parse_algebra
from nakayama_tau.errors import LiteralError, UsageError
from nakayama_tau.mutation import (
    Case,
    Letter,
    MutationWord,
    Orbit,
    apply_word,
    braid_relations,
    classify_case,
    mutate_at,
    mutate_at_inverse,
    mutate_pair,
    mutate_pair_inverse,
    mutate_sequence_pair,
    orbits,
    tf_pairs,
    verify_b1,
    verify_b2,
    verify_braid,
)
from nakayama_tau.reduction import build_context, perpendicular_members, whole_category
from nakayama_tau.sequences import enumerate_complete, enumerate_sequences
from nakayama_tau.taurigid import bongartz, cobongartz


def M(top: int, length: int, comp: int = 0) -> Ind:
    return Ind(comp, top, length)


S0, S1, P0, P1 = M(0, 1), M(1, 1), M(0, 2), M(1, 2)

CYCLIC = [NakayamaAlgebra.cyclic(n) for n in (2, 3, 4)]


def contexts(alg: NakayamaAlgebra):
    yield whole_category(alg)
    for x in alg.indecomposables():
        yield build_context(alg, (x,))


def sequence_pairs(ctx):
    for head in enumerate_sequences(ctx.abstract, 2):
        yield tuple(ctx.to_ambient[a] for a in head)


class TestClassify:
    def test_examples(self, c2: NakayamaAlgebra, c3: NakayamaAlgebra) -> None:
        assert classify_case(whole_category(c2), P0, P1).case is Case.TF_1B
        assert classify_case(whole_category(c2), P0, S0).case is Case.TF_2B
        whole = whole_category(c3)
        assert classify_case(whole, M(2, 1), M(0, 3)).case is Case.TF_1A
        assert classify_case(whole, M(1, 2), M(1, 1)).case is Case.TF_2A
        assert classify_case(whole, M(1, 1), M(2, 2)).case is Case.TF_3

    def test_irregular_case(self, c3: NakayamaAlgebra) -> None:
        tag = classify_case(whole_category(c3), M(1, 2), M(0, 1))
        assert tag.case is Case.TF_4
        assert not tag.left_regular
        assert str(tag) == "TF-4 (irregular)"

    def test_rejects_non_tf_pair(self, c2: NakayamaAlgebra) -> None:
        with pytest.raises(UsageError, match="not a TF-ordered"):
            classify_case(whole_category(c2), S0, P0)

    @pytest.mark.parametrize("alg", CYCLIC, ids=str)
    def test_cases_partition_pairs(self, alg: NakayamaAlgebra) -> None:
        whole = whole_category(alg)
        for b, c in tf_pairs(alg):
            projective = alg.is_projective(c)
            quotient = c in cobongartz(alg, b)
            complement = c in bongartz(alg, b) and not projective
            assert projective + quotient + complement <= 1
            tag = classify_case(whole, b, c)
            assert (tag.case in (Case.TF_1A, Case.TF_1B)) == projective
            assert (tag.case in (Case.TF_2A, Case.TF_2B)) == quotient
            assert (tag.case is Case.TF_4) == complement
            assert tag.left_regular == (tag.case is not Case.TF_4)


class TestPairMutation:
    def test_examples(self, c2: NakayamaAlgebra, c3: NakayamaAlgebra) -> None:
        assert mutate_pair(whole_category(c2), P0, P1) == (P0, S0)
        assert mutate_pair(whole_category(c2), P0, S0) == (P1, P0)
        whole = whole_category(c3)
        assert mutate_pair(whole, M(1, 2), M(0, 1)) == (M(1, 2), M(1, 1))
        assert mutate_pair(whole, M(1, 1), M(2, 2)) == (M(2, 2), M(1, 1))
        assert mutate_pair(whole, M(1, 2), M(1, 1)) == (M(0, 1), M(1, 2))

    def test_inverse_examples(self, c2: NakayamaAlgebra) -> None:
        whole = whole_category(c2)
        assert mutate_pair_inverse(whole, P0, S0) == (P0, P1)
        assert mutate_pair_inverse(whole, P1, P0) == (P0, S0)

    @pytest.mark.parametrize("alg", CYCLIC + [NakayamaAlgebra.linear(3)], ids=str)
    def test_inverse_undoes_mutation(self, alg: NakayamaAlgebra) -> None:
        whole = whole_category(alg)
        for b, c in tf_pairs(alg):
            assert mutate_pair_inverse(whole, *mutate_pair(whole, b, c)) == (b, c)

    @pytest.mark.parametrize("alg", CYCLIC, ids=str)
    def test_mutation_preserves_perpendicular_category(self, alg: NakayamaAlgebra) -> None:
        whole = whole_category(alg)
        for b, c in tf_pairs(alg):
            image = mutate_pair(whole, b, c)
            assert perpendicular_members(alg, image) == perpendicular_members(alg, (b, c))


class TestSequencePairs:
    @pytest.mark.parametrize("alg", CYCLIC, ids=str)
    def test_first_entry_moves_to_second(self, alg: NakayamaAlgebra) -> None:
        """phi(B, C) = (?, B) in every context."""
        for ctx in contexts(alg):
            for b, c in sequence_pairs(ctx):
                assert mutate_sequence_pair(ctx, b, c)[1] == b, (ctx.reducer, b, c)

    @pytest.mark.parametrize("alg", CYCLIC, ids=str)
    def test_reduction_agrees_with_ambient(self, alg: NakayamaAlgebra) -> None:
        whole = whole_category(alg)
        for x in alg.indecomposables():
            ctx = build_context(alg, (x,))
            for b, c in sequence_pairs(ctx):
                assert mutate_sequence_pair(ctx, b, c) == mutate_sequence_pair(whole, b, c)

    def test_different_components_swap(self) -> None:
        alg = parse_algebra("A2xC2")
        whole = whole_category(alg)
        crossing = [(b, c) for b, c in sequence_pairs(whole) if b.comp != c.comp]
        assert crossing
        for b, c in crossing:
            assert mutate_sequence_pair(whole, b, c) == (c, b)

    def test_different_components_swap_in_reduction(self, c6: NakayamaAlgebra) -> None:
        ctx = build_context(c6, (M(3, 3),))
        crossing = [
            (b, c)
            for b, c in sequence_pairs(ctx)
            if ctx.component_of(b).index != ctx.component_of(c).index
        ]
        assert crossing
        for b, c in crossing:
            assert mutate_sequence_pair(ctx, b, c) == (c, b)


class TestMutationWord:
    def test_parse(self) -> None:
        word = MutationWord.parse("r1 r2 r1'")
        assert word.letters == (Letter(1), Letter(2), Letter(1, inverse=True))
        assert str(word) == "r1 r2 r1'"
        assert MutationWord.parse("ρ1 r_2^-1").letters == (Letter(1), Letter(2, True))
        assert MutationWord.parse("").letters == ()

    def test_inverse(self) -> None:
        word = MutationWord.parse("r1 r2'")
        assert str(word.inverse()) == "r2 r1'"

    @pytest.mark.parametrize("text", ["x1", "r0", "r", "r1 s2"])
    def test_parse_errors(self, text: str) -> None:
        with pytest.raises(LiteralError):
            MutationWord.parse(text)

    def test_range_check(self) -> None:
        with pytest.raises(UsageError, match="out of range"):
            MutationWord.parse("r2").check(2)


class TestSequenceMutation:
    def test_four_cycle_on_c2(self, c2: NakayamaAlgebra) -> None:
        cycle = [(S0, P1), (P0, S0), (S1, P0), (P1, S1)]
        for seq, image in zip(cycle, cycle[1:] + cycle[:1]):
            assert mutate_at(c2, 1, seq) == image
            assert mutate_at_inverse(c2, 1, image) == seq

    def test_c3_pair_with_empty_tail(self, c3: NakayamaAlgebra) -> None:
        assert mutate_at(c3, 1, (M(1, 1), M(2, 2))) == (M(2, 1), M(1, 1))

    def test_entries_outside_the_pair_are_kept(self, c3: NakayamaAlgebra) -> None:
        for seq in enumerate_complete(c3):
            assert mutate_at(c3, 1, seq)[2] == seq[2]
            assert mutate_at(c3, 2, seq)[0] == seq[0]

    def test_index_out_of_range(self, c2: NakayamaAlgebra) -> None:
        with pytest.raises(UsageError, match="out of range"):
            mutate_at(c2, 2, (S0, P1))

    def test_words(self, c2: NakayamaAlgebra) -> None:
        seq = (S0, P1)
        assert apply_word(c2, MutationWord(), seq) == seq
        assert apply_word(c2, MutationWord.parse("r1 r1 r1 r1"), seq) == seq
        assert apply_word(c2, MutationWord.parse("r1 r1'"), seq) == seq
        assert apply_word(c2, MutationWord.parse("r1 r1"), seq) == (S1, P0)

    def test_words_act_right_to_left(self, c3: NakayamaAlgebra) -> None:
        seq = enumerate_complete(c3)[0]
        expected = mutate_at(c3, 1, mutate_at(c3, 2, seq))
        assert apply_word(c3, MutationWord.parse("r1 r2"), seq) == expected

    @pytest.mark.parametrize("alg", CYCLIC, ids=str)
    def test_generators_are_bijections(self, alg: NakayamaAlgebra) -> None:
        for seq in enumerate_complete(alg):
            for i in range(1, alg.rank):
                assert mutate_at_inverse(alg, i, mutate_at(alg, i, seq)) == seq
                assert mutate_at(alg, i, mutate_at_inverse(alg, i, seq)) == seq


class TestBraidRelations:
    def test_relation_labels(self) -> None:
        assert [r.label for r in braid_relations(3)] == ["B2:i=1"]
        assert [r.label for r in braid_relations(4)] == ["B1:i=1,j=3", "B2:i=1", "B2:i=2"]
        assert [r.label for r in braid_relations(5, "b1")] == [
            "B1:i=1,j=3",
            "B1:i=1,j=4",
            "B1:i=2,j=4",
        ]
        with pytest.raises(UsageError):
            braid_relations(4, "b3")

    def test_c2_is_vacuous(self, c2: NakayamaAlgebra) -> None:
        report = verify_b2(c2)
        assert report.ok
        assert report.relations == ()
        assert report.checked_sequences == 4

    def test_c3(self, c3: NakayamaAlgebra) -> None:
        report = verify_braid(c3)
        assert report.ok
        assert report.relations == ("B2:i=1",)
        assert report.checked_sequences == report.total_sequences == 27

    def test_c4(self) -> None:
        report = verify_braid(NakayamaAlgebra.cyclic(4))
        assert report.ok
        assert report.checked_sequences == 256

    def test_parallel_run_matches(self, c3: NakayamaAlgebra) -> None:
        assert verify_braid(c3, jobs=2) == verify_braid(c3)

    def test_capped_run_reports_the_cap(self, c3: NakayamaAlgebra) -> None:
        """A capped run says how much of the algebra it left unchecked."""
        report = verify_braid(c3, max_seqs=5)
        assert report.ok
        assert report.checked_sequences == 5
        assert report.total_sequences == 27
        assert report.max_seqs == 5

    def test_rejects_bad_engine_options(self, c3: NakayamaAlgebra) -> None:
        with pytest.raises(UsageError, match="max_seqs"):
            verify_braid(c3, max_seqs=-26)
        with pytest.raises(UsageError, match="jobs"):
            verify_braid(c3, jobs=0)

    @pytest.mark.slow
    def test_c5_commutation(self) -> None:
        assert verify_b1(NakayamaAlgebra.cyclic(5)).ok

    def test_first_counterexample_stops_the_run(self, c3: NakayamaAlgebra, mocker) -> None:
        """A failing relation is reported with the first sequence as witness."""

        def broken(alg, word, seq):
            return tuple(seq) if str(word) == "r1 r2 r1" else tuple(reversed(seq))

        mocker.patch("nakayama_tau.mutation.verify.apply_word", side_effect=broken)
        first = enumerate_complete(c3)[0]

        report = verify_braid(c3)
        assert not report.ok
        assert report.checked_sequences == 1
        assert len(report.counterexamples) == 1
        witness = report.counterexamples[0]
        assert witness.relation == "B2:i=1"
        assert witness.sequence == first
        assert witness.left == first
        assert witness.right == tuple(reversed(first))

        exhaustive = verify_braid(c3, exhaustive=True)
        assert len(exhaustive.counterexamples) == 27
        assert exhaustive.checked_sequences == 27


class TestOrbits:
    def test_c2_single_cycle(self, c2: NakayamaAlgebra) -> None:
        assert orbits(c2) == [Orbit((S0, P1), 4)]

    def test_c1(self) -> None:
        assert orbits(NakayamaAlgebra.cyclic(1)) == [Orbit((M(0, 1),), 1)]

    def test_left_and_both_agree(self, c3: NakayamaAlgebra) -> None:
        left = orbits(c3, "left")
        assert left == orbits(c3, "both")
        assert sum(o.size for o in left) == 27

    def test_unknown_generators(self, c2: NakayamaAlgebra) -> None:
        with pytest.raises(UsageError):
            orbits(c2, "right")


def test_tf_pair_count_matches_sequences() -> None:
    for alg in CYCLIC:
        assert len(tf_pairs(alg)) == len(enumerate_sequences(alg, 2))
