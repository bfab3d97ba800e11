from itertools import permutations

import pytest

from kronkit import (
    Partition,
    SizeMismatchError,
    dimension,
    inner_product,
    irreducible_character,
    kostka,
    lr_coeff,
    lr_pair_count,
    multitableau_count,
    perm_character_decomp,
    permutation_character,
    skew,
)
from kronkit.partitions import partitions_of
from oracles import brute_lr_count, brute_ssyt_count


class TestLrCoeff:
    def test_straight_shape_examples(self):
        assert lr_coeff(skew((2, 1), ()), (2, 1)) == 1
        assert lr_coeff(skew((2, 1), ()), (1, 1, 1)) == 0

    def test_skew_example(self):
        assert lr_coeff(skew((2, 2), (1,)), (2, 1)) == 1

    def test_size_mismatch(self):
        with pytest.raises(SizeMismatchError):
            lr_coeff(skew((2, 2), (1,)), (2, 2))

    def test_straight_shape_rule(self):
        # on a straight shape the count is 1 when content equals the shape, else 0
        for m in range(7):
            for lam in partitions_of(m):
                shape = skew(lam, ())
                for rho in partitions_of(m):
                    assert lr_coeff(shape, rho) == (1 if rho == lam else 0)

    def test_against_brute_force(self):
        for outer_size in range(1, 6):
            for outer in partitions_of(outer_size):
                for inner_size in range(outer_size + 1):
                    for inner in partitions_of(inner_size):
                        if not outer.contains(inner):
                            continue
                        shape = skew(outer, inner)
                        for content in partitions_of(shape.size):
                            assert lr_coeff(shape, content) == brute_lr_count(
                                tuple(outer), tuple(inner), tuple(content)
                            )


class TestMultitableau:
    def test_single_boxes_count_standard_tableaux(self):
        assert multitableau_count((2, 1), [(1,), (1,), (1,)]) == 2
        for m in range(1, 6):
            ones = [(1,)] * m
            for lam in partitions_of(m):
                assert multitableau_count(lam, ones) == dimension(lam)

    def test_whole_partition_content(self):
        for lam in [(3,), (2, 2), (3, 2, 1)]:
            assert multitableau_count(lam, [lam]) == 1

    def test_two_layer_example(self):
        assert multitableau_count((2, 2), [(2,), (2,)]) == 1

    def test_single_layer_reduces_to_lr(self):
        for m in range(6):
            for lam in partitions_of(m):
                for rho in partitions_of(m):
                    assert multitableau_count(lam, [rho]) == lr_coeff(skew(lam, ()), rho)

    def test_size_mismatch(self):
        with pytest.raises(SizeMismatchError):
            multitableau_count((2, 1), [(1,), (1,)])


class TestLrPairCount:
    def test_examples(self):
        assert lr_pair_count((2, 1), (2, 1), (1, 1, 1)) == 4
        assert lr_pair_count((4,), (4,), (4,)) == 1
        assert lr_pair_count((2, 1), (2, 1), (3,)) == 1

    def test_symmetric_in_lam_mu(self):
        for m in range(1, 6):
            parts = list(partitions_of(m))
            for lam in parts:
                for mu in parts:
                    for pi in parts:
                        assert lr_pair_count(lam, mu, pi) == lr_pair_count(mu, lam, pi)

    def test_composition_order_irrelevant(self):
        assert lr_pair_count((3, 1), (2, 2), (1, 3)) == lr_pair_count((3, 1), (2, 2), (3, 1))

    def test_matches_character_inner_product(self):
        # pair counts with shared content realize <chi x chi, perm character>
        for m in range(1, 5):
            parts = list(partitions_of(m))
            for lam in parts:
                for mu in parts:
                    tensor = irreducible_character(lam).tensor(irreducible_character(mu))
                    for pi in parts:
                        want = inner_product(tensor, permutation_character(pi))
                        assert lr_pair_count(lam, mu, pi) == want


class TestKostka:
    def test_examples(self):
        assert kostka((2, 1), (2, 1)) == 1
        assert kostka((2, 1), (1, 1, 1)) == 2
        assert kostka((1, 1), (2,)) == 0

    def test_diagonal_is_one(self):
        for m in range(7):
            for nu in partitions_of(m):
                assert kostka(nu, tuple(nu)) == 1

    def test_against_brute_force(self):
        for m in range(1, 6):
            for nu in partitions_of(m):
                for pi in partitions_of(m):
                    assert kostka(nu, tuple(pi)) == brute_ssyt_count(tuple(nu), tuple(pi))

    def test_invariant_under_permuting_content(self):
        for m in range(1, 7):
            for nu in partitions_of(m):
                for pi in partitions_of(m):
                    base = kostka(nu, tuple(pi))
                    for perm in set(permutations(tuple(pi))):
                        assert kostka(nu, perm) == base


class TestPermCharacterDecomp:
    def test_trivial(self):
        assert perm_character_decomp((5,)) == {Partition((5,)): 1}

    def test_regular_character(self):
        assert perm_character_decomp((1, 1, 1)) == {
            Partition((3,)): 1,
            Partition((2, 1)): 2,
            Partition((1, 1, 1)): 1,
        }

    def test_two_one(self):
        assert perm_character_decomp((2, 1)) == {Partition((3,)): 1, Partition((2, 1)): 1}
