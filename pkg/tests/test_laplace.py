"""Block expansion, row-blocks, and the determinant oracles."""

import itertools
import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cvforms import (
    BlockFactorization,
    CvForm,
    Polynomial,
    RowBlock,
    build_decoding_table,
    characteristic_monomial,
    compare_rowblocks,
    derivative_oracle,
    diagonal_rowblock,
    evaluate,
    expand_rowblocks,
    leading_rowblock,
    naive_oracle,
    permutation_sign,
    rowblock_value,
    shuffles,
)


def leibniz_det(form: CvForm) -> Polynomial:
    """Permutation-sum determinant, independent of every package route."""
    n = form.N
    acc: dict[tuple[int, ...], Fraction] = {}
    for rows in itertools.permutations(range(n)):
        coeff = Fraction(permutation_sign(rows))
        exps = [0] * n
        dead = False
        for col, row in enumerate(rows):
            e = form.entries[col] - row
            if e < 0:
                dead = True
                break
            exps[col] = e
            coeff /= math.factorial(e)
        if dead:
            continue
        key = tuple(exps)
        acc[key] = acc.get(key, Fraction(0)) + coeff
    return Polynomial(n, acc)


class TestShuffles:
    def test_two_two(self):
        got = shuffles((2, 2))
        assert got == [
            (1, 2, 3, 4),
            (1, 3, 2, 4),
            (1, 4, 2, 3),
            (2, 3, 1, 4),
            (2, 4, 1, 3),
            (3, 4, 1, 2),
        ]
        assert [permutation_sign(s) for s in got] == [1, -1, 1, 1, -1, 1]

    def test_one_three(self):
        got = shuffles((1, 3))
        assert got == [(1, 2, 3, 4), (2, 1, 3, 4), (3, 1, 2, 4), (4, 1, 2, 3)]
        assert [permutation_sign(s) for s in got] == [1, -1, 1, -1]

    def test_identity_composition(self):
        assert shuffles((4,)) == [(1, 2, 3, 4)]

    @pytest.mark.parametrize("comp", [(1, 1), (2, 1), (1, 2, 1), (2, 2, 2)])
    def test_multinomial_count(self, comp):
        n = sum(comp)
        expect = math.factorial(n)
        for m in comp:
            expect //= math.factorial(m)
        got = shuffles(comp)
        assert len(got) == expect
        assert len(set(got)) == expect
        for s in got:
            assert sorted(s) == list(range(1, n + 1))

    def test_rejects_bad_composition(self):
        with pytest.raises(ValueError):
            shuffles((2, 0, 2))
        with pytest.raises(ValueError):
            shuffles(())


class TestDecodingTable:
    def test_small(self):
        t = build_decoding_table(CvForm((2, 2, 3, 3)))
        assert t.values == (2, 3)
        assert t.blocks == ((1, 2), (3, 4))
        assert t.multiplicities == (2, 2)
        assert t.row(0) == (2, 1, 0)
        assert t.row(1) == (3, 2, 1, 0)

    def test_six_variables(self):
        t = build_decoding_table(CvForm((2, 2, 4, 4, 5, 5)))
        assert t.values == (2, 4, 5)
        assert t.blocks == ((1, 2), (3, 4), (5, 6))
        assert t.render().splitlines() == [
            "t1 t2 | t3 t4 | t5 t6",
            "2 1 0",
            "4 3 2 1 0",
            "5 4 3 2 1 0",
        ]

    def test_relabeled_columns(self):
        t = build_decoding_table(CvForm((1, 2, 2, 3)), variables=(4, 2, 3, 1))
        assert t.blocks == ((4,), (2, 3), (1,))

    def test_rejects_unsorted(self):
        with pytest.raises(ValueError):
            build_decoding_table(CvForm((3, 2, 2, 3)))

    def test_rejects_zero_entries(self):
        with pytest.raises(ValueError):
            build_decoding_table(CvForm((0, 1, 2, 3)))

    def test_rejects_bad_labels(self):
        with pytest.raises(ValueError):
            build_decoding_table(CvForm((2, 2, 3, 3)), variables=(1, 1, 2, 3))


FULL_SIX = [
    "+|2 1|2 1|1 0|",
    "-|2 1|2 0|2 0|",
    "+|2 1|1 0|3 0|",
    "-|2 0|3 1|1 0|",
    "+|1 0|4 1|1 0|",
    "+|2 0|3 0|2 0|",
    "-|2 0|1 0|4 0|",
    "-|1 0|4 0|2 0|",
    "+|1 0|1 0|5 0|",
]


class TestExpansion:
    def test_four_variable_golden(self):
        factor, terms = expand_rowblocks(CvForm((2, 2, 3, 3)))
        assert factor.vandermonde_blocks == ((1, 2), (3, 4))
        assert [str(t) for t in terms] == ["+|2 1|1 0|", "-|2 0|2 0|", "+|1 0|3 0|"]

    def test_pair_golden(self):
        _, terms = expand_rowblocks(CvForm((1, 3, 3, 3)))
        assert [str(t) for t in terms] == ["+|1|2 1 0|", "-|0|3 1 0|"]

    def test_six_variable_golden(self):
        factor, terms = expand_rowblocks(CvForm((2, 2, 4, 4, 5, 5)))
        assert factor.vandermonde_blocks == ((1, 2), (3, 4), (5, 6))
        assert [str(t) for t in terms] == FULL_SIX

    def test_zero_form_is_empty(self):
        factor, terms = expand_rowblocks(CvForm((0, 0, 2, 3)))
        assert terms == []

    def test_constant_form(self):
        factor, terms = expand_rowblocks(CvForm((1, 0, 2, 3)))
        assert len(terms) == 1
        assert terms[0].total_sign == -1
        assert terms[0].entries() == (0, 0, 0, 0)
        assert rowblock_value(terms[0], factor) == Polynomial.constant(4, 1)

    def test_powers_strictly_decreasing(self):
        for entries in itertools.product(range(4), repeat=4):
            _, terms = expand_rowblocks(CvForm(entries))
            for rb in terms:
                for blk in rb.blocks:
                    assert all(a > b for a, b in zip(blk, blk[1:]))
                assert rb.total_sign in (-1, 1)

    def test_unsorted_input_folds_sort_sign(self):
        # sorting columns relabels variables and contributes its sign:
        # [3 2 2 1] sorts to [1 2 2 3] by the odd permutation (4 2 3 1)
        f = CvForm((3, 2, 2, 1))
        sf, perm, sign = f.sort_entries()
        relabeled = {}
        for exps, coeff in evaluate(sf).terms.items():
            new = [0] * f.N
            for slot, e in enumerate(exps):
                new[perm[slot] - 1] = e
            relabeled[tuple(new)] = sign * coeff
        assert evaluate(f) == Polynomial(f.N, relabeled)


class TestRowBlockValue:
    def test_single_vandermonde_block(self):
        factor, terms = expand_rowblocks(CvForm((1, 1)))
        (rb,) = terms
        assert str(rb) == "+|1 0|"
        assert rowblock_value(rb, factor).canonical_text() == "t1 - t2"

    def test_value_is_unsigned(self):
        factor, terms = expand_rowblocks(CvForm((2, 2, 3, 3)))
        total = Polynomial.zero(4)
        for rb in terms:
            total = total + rb.total_sign * rowblock_value(rb, factor)
        assert total == evaluate(CvForm((2, 2, 3, 3)))

    def test_partition_must_cover(self):
        rb = RowBlock(((1, 0),), ((1, 2),), 1)
        with pytest.raises(ValueError):
            rowblock_value(rb, BlockFactorization(((1, 2), (3,)), 3))


class TestEvaluate:
    def test_linear_difference(self):
        assert evaluate(CvForm((0, 1, 3, 3))).canonical_text() == "t3 - t4"

    def test_quadratic_value(self):
        assert (
            evaluate(CvForm((3, 2, 2, 1))).canonical_text()
            == "1/2*t2^2 - t2*t4 - 1/2*t3^2 + t3*t4"
        )

    def test_lowest_form_is_one(self):
        assert evaluate(CvForm((0, 1, 2, 3))) == Polynomial.constant(4, 1)

    def test_top_form_is_normalized_vandermonde(self):
        got = evaluate(CvForm((2, 2, 2)))
        t = [Polynomial.variable(3, i) for i in range(3)]
        prod = (t[0] - t[1]) * (t[0] - t[2]) * (t[1] - t[2])
        # divide by (j - i) over i < j: 1 * 2 * 1
        assert got == prod * Fraction(1, 2)

    def test_degree_matches(self):
        for entries in itertools.product(range(4), repeat=4):
            f = CvForm(entries)
            v = evaluate(f)
            if not v.is_zero():
                assert v.total_degree() == f.degree()
                homogeneous = {sum(e) for e in v.terms}
                assert homogeneous == {f.degree()}


class TestOracleAgreement:
    def test_exhaustive_three(self):
        for entries in itertools.product(range(3), repeat=3):
            f = CvForm(entries)
            v = evaluate(f)
            assert v == naive_oracle(f)
            assert v == derivative_oracle(f)
            assert v == leibniz_det(f)

    def test_sampled_four(self):
        rng = random.Random(7)
        seen = {tuple(rng.randrange(4) for _ in range(4)) for _ in range(40)}
        for entries in seen:
            f = CvForm(entries)
            v = evaluate(f)
            assert v == naive_oracle(f)
            assert v == derivative_oracle(f)
            assert v == leibniz_det(f)

    def test_sampled_five(self):
        rng = random.Random(11)
        for _ in range(12):
            f = CvForm(tuple(rng.randrange(5) for _ in range(5)))
            assert evaluate(f) == naive_oracle(f) == leibniz_det(f)


def _blocks_from_entries(entries, shape):
    out = []
    pos = 0
    for size in shape:
        out.append(tuple(entries[pos : pos + size]))
        pos += size
    return tuple(out)


class TestRowBlockOrder:
    def test_comparison_is_sign_of_difference(self):
        _, terms = expand_rowblocks(CvForm((2, 2, 4, 4, 5, 5)))
        for i, a in enumerate(terms):
            for j, b in enumerate(terms):
                expect = 0 if i == j else (1 if i < j else -1)
                assert compare_rowblocks(a, b) == expect

    def test_fewer_small_values_wins(self):
        a = RowBlock(((2, 1), (1, 0)), ((1, 2), (3, 4)), 1)
        b = RowBlock(((2, 0), (2, 0)), ((1, 2), (3, 4)), 1)
        # a has one zero, b has two: a is greater
        assert compare_rowblocks(a, b) == 1
        assert compare_rowblocks(b, a) == -1

    def test_lex_tie_break(self):
        a = RowBlock(((3, 1), (2, 0)), ((1, 2), (3, 4)), 1)
        b = RowBlock(((3, 2), (1, 0)), ((1, 2), (3, 4)), 1)
        # same multiset of entries, compare flattened sequences
        assert compare_rowblocks(b, a) == 1

    def test_size_mismatch_rejected(self):
        a = RowBlock(((1, 0),), ((1, 2),), 1)
        b = RowBlock(((1, 0), (1, 0)), ((1, 2), (3, 4)), 1)
        with pytest.raises(ValueError):
            compare_rowblocks(a, b)


class TestLeadingRowBlock:
    def test_golden(self):
        rb = leading_rowblock((2, 1, 1, 0))
        assert str(rb) == "+|2 1|1 0|"
        assert rb.var_partition == ((1, 2), (3, 4))

    def test_splits_between_equal_adjacent_entries(self):
        rb = leading_rowblock((2, 2, 1, 1, 1, 0))
        assert rb.blocks == ((2,), (2, 1), (1,), (1, 0))
        assert rb.var_partition == ((1,), (2, 3), (4,), (5, 6))
        assert rb.total_sign == 1

    def test_leading_is_maximum_exhaustive(self):
        # over all sorted regular zero-free forms at N <= 5
        for n in range(2, 6):
            for entries in itertools.combinations_with_replacement(range(1, n), n):
                f = CvForm(entries)
                if not f.is_regular():
                    continue
                _, terms = expand_rowblocks(f)
                if not terms:
                    continue
                lead = leading_rowblock(f.class_of())
                assert terms[0].blocks == lead.blocks
                assert all(
                    compare_rowblocks(lead, rb) == 1
                    for rb in terms
                    if rb.blocks != lead.blocks
                )

    def test_leading_matches_six_variable_table(self):
        assert str(leading_rowblock((2, 2, 1, 1, 1, 0))) == "+|2|2 1|1|1 0|"


class TestDiagonalRowBlock:
    def test_matches_leading_for_sorted_regular(self):
        f = CvForm((2, 2, 3, 3))
        assert diagonal_rowblock(f).blocks == leading_rowblock(f.class_of()).blocks

    def test_vanishing_pick_rejected(self):
        with pytest.raises(ValueError):
            diagonal_rowblock(CvForm((0, 0, 2, 3)))

    def test_characteristic_monomial_is_type(self):
        # for sorted regular forms the diagonal exponents read off the type
        for entries in itertools.combinations_with_replacement(range(1, 4), 4):
            f = CvForm(entries)
            if not f.is_regular():
                continue
            _, terms = expand_rowblocks(f)
            if not terms:
                continue
            assert characteristic_monomial(diagonal_rowblock(f)) == f.type_of()

    def test_six_variable_example(self):
        f = CvForm((2, 2, 4, 4, 5, 5))
        assert characteristic_monomial(diagonal_rowblock(f)) == (2, 1, 2, 1, 1, 0)
