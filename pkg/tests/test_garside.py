"""
Tests for the left-greedy normal form and the equality oracle.
"""

from __future__ import annotations

import itertools
import random

import pytest

from braid_service.braid import (
    delta_word,
    divides,
    equals,
    is_left_weighted,
    multiply,
    normal_form,
    permutation_image,
    to_word,
)
from braid_service.errors import InvalidWordError
from braid_service.models import ArtinWord, DivisionSide


def w(n, *letters):
    return ArtinWord(n, tuple(letters))


class TestArtinWord:
    def test_index_out_of_range(self):
        with pytest.raises(InvalidWordError):
            w(3, 3)

    def test_zero_letter_rejected(self):
        with pytest.raises(InvalidWordError):
            w(3, 0)

    @pytest.mark.parametrize("strands", [0, 1])
    def test_needs_two_strands(self, strands):
        with pytest.raises(InvalidWordError, match="at least 2 strands"):
            ArtinWord(strands)

    def test_inverse(self):
        assert w(3, 1, -2).inverse() == w(3, 2, -1)

    def test_exponent_sum(self):
        assert w(4, 1, 2, -3, 1).exponent_sum == 2

    def test_str(self):
        assert str(w(3, 1, -2)) == "s1 s2'"


class TestNormalForm:
    def test_empty_word(self):
        nf = normal_form(w(3))
        assert nf.infimum == 0
        assert nf.factors == ()

    def test_delta(self):
        nf = normal_form(w(3, 1, 2, 1))
        assert nf.infimum == 1
        assert nf.canonical_length == 0

    def test_delta_word(self):
        assert delta_word(3) == w(3, 1, 2, 1)
        assert len(delta_word(5)) == 10
        assert normal_form(delta_word(5)).infimum == 1

    def test_inverse_generator(self):
        nf = normal_form(w(3, -1))
        assert nf.infimum == -1
        assert nf.to_dict()["factors"] == [[2, 3, 1]]

    def test_free_cancellation(self):
        assert normal_form(w(3, 1, -1)) == normal_form(w(3))
        assert normal_form(w(4, 2, 3, -3, -2)) == normal_form(w(4))

    @pytest.mark.parametrize(
        "letters",
        [(1, 2, -1, 3), (-2, -2, 1, 3, -1), (1, 1, 1), (3, -1, 2, -3, 1, 2)],
    )
    def test_left_weighted(self, letters):
        assert is_left_weighted(normal_form(w(4, *letters)))

    @pytest.mark.parametrize("letters", [(1, 2, -1, 3), (-2, -2, 1, 3, -1), (2, -3, -3, 1)])
    def test_to_word_represents_the_braid(self, letters):
        word = w(4, *letters)
        assert equals(to_word(normal_form(word)), word)

    def test_multiply_matches_concatenation(self):
        a, b = w(4, 1, -3, 2), w(4, 2, 2, -1)
        assert multiply(normal_form(a), b) == normal_form(a * b)

    def test_multiply_strand_mismatch(self):
        with pytest.raises(InvalidWordError):
            multiply(normal_form(w(3, 1)), w(4, 1))


class TestEquals:
    def test_braid_relation(self):
        assert equals(w(3, 1, 2, 1), w(3, 2, 1, 2))

    def test_far_commutation(self):
        assert equals(w(4, 1, 3), w(4, 3, 1))

    def test_adjacent_generators_do_not_commute(self):
        assert not equals(w(3, 1, 2), w(3, 2, 1))

    def test_delta_conjugation(self):
        # Δ σ_1 Δ⁻¹ = σ_{n-1}
        delta = delta_word(4)
        assert equals(delta * w(4, 1) * delta.inverse(), w(4, 3))

    def test_same_permutation_different_braid(self):
        assert permutation_image(w(3, 1, 1)) == permutation_image(w(3))
        assert not equals(w(3, 1, 1), w(3))

    def test_strand_mismatch(self):
        with pytest.raises(InvalidWordError):
            equals(w(3, 1), w(4, 1))


class TestDivides:
    def test_left_divisor(self):
        assert divides(w(3, 1), w(3, 1, 2))

    def test_not_a_left_divisor(self):
        assert not divides(w(3, 2), w(3, 1, 2))

    def test_right_divisor(self):
        assert divides(w(3, 2), w(3, 1, 2), DivisionSide.RIGHT)
        assert not divides(w(3, 1), w(3, 1, 2), DivisionSide.RIGHT)

    def test_every_generator_divides_delta(self):
        delta = delta_word(4)
        for i in (1, 2, 3):
            assert divides(w(4, i), delta)
            assert divides(w(4, i), delta, DivisionSide.RIGHT)


def random_word(rng: random.Random, n: int, length: int) -> ArtinWord:
    letters = [rng.choice([1, -1]) * rng.randint(1, n - 1) for _ in range(length)]
    return ArtinWord(n, tuple(letters))


class TestOracleProperties:
    @pytest.mark.parametrize("n", [3, 4])
    def test_idempotent(self, n):
        rng = random.Random(n)
        for _ in range(1000):
            word = random_word(rng, n, rng.randint(0, 12))
            nf = normal_form(word)
            assert normal_form(to_word(nf)) == nf

    @pytest.mark.parametrize("n", [3, 4])
    def test_delta_squared_is_central(self, n):
        rng = random.Random(10 + n)
        delta2 = delta_word(n) * delta_word(n)
        for _ in range(1000):
            word = random_word(rng, n, rng.randint(0, 10))
            assert equals(delta2 * word, word * delta2)

    def test_congruence(self):
        rng = random.Random(42)
        for _ in range(1000):
            a, c, x = (random_word(rng, 4, rng.randint(0, 6)) for _ in range(3))
            b = a * x * x.inverse()
            assert equals(a, b)
            assert equals(c * a, c * b)
            assert equals(a * c, b * c)

    def test_divides_matches_positive_words(self):
        # d left-divides a positive word w iff w = d·P for some positive P
        rng = random.Random(7)
        for _ in range(100):
            d = ArtinWord(4, tuple(rng.randint(1, 3) for _ in range(rng.randint(0, 3))))
            p = ArtinWord(4, tuple(rng.randint(1, 3) for _ in range(rng.randint(0, 4))))
            assert divides(d, d * p)
            assert divides(p, d * p, DivisionSide.RIGHT)

    def test_divides_matches_brute_force(self):
        # d divides positive w on the left iff d·P = w for some positive P of the remaining length
        rng = random.Random(11)
        for _ in range(100):
            w_ = ArtinWord(4, tuple(rng.randint(1, 3) for _ in range(rng.randint(0, 6))))
            d = ArtinWord(4, tuple(rng.randint(1, 3) for _ in range(rng.randint(0, min(3, len(w_))))))
            brute = any(
                equals(d * ArtinWord(4, rest), w_)
                for rest in itertools.product((1, 2, 3), repeat=len(w_) - len(d))
            )
            assert divides(d, w_) == brute, (d, w_)

    def test_non_divisor_by_exponent_sum(self):
        assert not divides(w(4, 1, 2, 3), w(4, 1, 2))
