"""Maximal gapped repeats and palindromes vs the definitional brute force."""

import itertools
import random
from fractions import Fraction

import pytest

from patvars import (
    Word,
    find_maximal_gapped_palindromes,
    find_maximal_gapped_repeats,
    parse_word,
)

import oracles


def triples(occurrences):
    return {(o.start, o.arm_length, o.gap_length) for o in occurrences}


class TestExamples:
    def test_repeat_example(self):
        got = triples(find_maximal_gapped_repeats(parse_word("abcab"), 2))
        assert (1, 2, 1) in got

    def test_no_repeat(self):
        assert find_maximal_gapped_repeats(parse_word("ab"), 1) == []

    def test_unary_squares(self):
        got = triples(find_maximal_gapped_repeats(parse_word("aaaa"), 1))
        assert got == oracles.gapped_brute(b"\0\0\0\0", Fraction(1), "repeat")

    def test_palindrome_example(self):
        got = triples(find_maximal_gapped_palindromes(parse_word("abxba"), 2))
        assert (1, 2, 1) in got

    def test_short_palindrome(self):
        assert triples(find_maximal_gapped_palindromes(parse_word("aa"), 1)) == {(1, 1, 0)}
        assert find_maximal_gapped_palindromes(parse_word("abc"), 1) == []

    def test_alpha_validation(self):
        with pytest.raises(ValueError):
            find_maximal_gapped_repeats(parse_word("ab"), Fraction(1, 2))


class TestOracleAgreement:
    @pytest.mark.parametrize("alpha", [Fraction(1), Fraction(3, 2), Fraction(2)])
    def test_exhaustive_binary_up_to_10(self, alpha):
        for n in range(2, 11):
            for tup in itertools.product((0, 1), repeat=n):
                w = Word(bytes(tup))
                assert triples(find_maximal_gapped_repeats(w, alpha)) == oracles.gapped_brute(
                    w.letters, alpha, "repeat"
                )
                assert triples(
                    find_maximal_gapped_palindromes(w, alpha)
                ) == oracles.gapped_brute(w.letters, alpha, "palindrome")

    def test_random_larger_alphabets(self):
        rng = random.Random(8)
        for _ in range(300):
            n = rng.randint(2, 12)
            w = Word(bytes(rng.randint(0, 3) for _ in range(n)))
            for alpha in (Fraction(1), Fraction(3, 2), Fraction(2)):
                assert triples(find_maximal_gapped_repeats(w, alpha)) == oracles.gapped_brute(
                    w.letters, alpha, "repeat"
                )
                assert triples(
                    find_maximal_gapped_palindromes(w, alpha)
                ) == oracles.gapped_brute(w.letters, alpha, "palindrome")


class TestInvariants:
    def test_occurrences_verify_their_own_structure(self):
        rng = random.Random(9)
        for _ in range(200):
            n = rng.randint(2, 30)
            letters = bytes(rng.randint(0, 2) for _ in range(n))
            w = Word(letters)
            alpha = rng.choice((Fraction(1), Fraction(3, 2), Fraction(2)))
            for o in find_maximal_gapped_repeats(w, alpha):
                s = o.start - 1
                left = letters[s : s + o.arm_length]
                right = letters[
                    s + o.arm_length + o.gap_length : s + 2 * o.arm_length + o.gap_length
                ]
                assert left == right
                assert (o.arm_length + o.gap_length) * alpha.denominator <= (
                    alpha.numerator * o.arm_length
                )
            for o in find_maximal_gapped_palindromes(w, alpha):
                s = o.start - 1
                left = letters[s : s + o.arm_length]
                right = letters[
                    s + o.arm_length + o.gap_length : s + 2 * o.arm_length + o.gap_length
                ]
                assert left == right[::-1]

    def test_output_sorted_and_duplicate_free(self):
        rng = random.Random(10)
        for _ in range(100):
            n = rng.randint(2, 25)
            w = Word(bytes(rng.randint(0, 1) for _ in range(n)))
            for finder in (find_maximal_gapped_repeats, find_maximal_gapped_palindromes):
                out = finder(w, 2)
                keys = [(o.start, o.arm_length, o.gap_length) for o in out]
                assert keys == sorted(keys) and len(keys) == len(set(keys))

    def test_count_bound_sample(self):
        rng = random.Random(11)
        for _ in range(200):
            n = rng.randint(2, 120)
            w = Word(bytes(rng.randint(0, rng.choice((1, 2, 3))) for _ in range(n)))
            for alpha in (1, 2):
                count = len(find_maximal_gapped_repeats(w, alpha))
                assert count <= 18 * alpha * n
