"""
Tests for brute-force positive expressions.
"""

from __future__ import annotations

import pytest

from braid_service.braid import delta_word, normal_form
from braid_service.errors import InvalidWordError, SearchCapExceeded
from braid_service.models import ArtinWord, Chord
from braid_service.monoid import nf_exponent_sum, positive_expressions

ARTIN = {"s1": ArtinWord(3, (1,)), "s2": ArtinWord(3, (2,))}


class TestPositiveExpressions:
    def test_single_expression(self):
        assert positive_expressions(ArtinWord(3, (1, 2)), ARTIN, 2) == [("s1", "s2")]

    def test_delta_has_two(self):
        assert positive_expressions(delta_word(3), ARTIN, 3) == [("s1", "s2", "s1"), ("s2", "s1", "s2")]

    def test_negative_braid(self):
        assert positive_expressions(ArtinWord(3, (-1,)), ARTIN, 1) == []

    def test_wrong_length(self):
        assert positive_expressions(ArtinWord(3, (1, 2)), ARTIN, 3) == []

    def test_identity(self):
        assert positive_expressions(ArtinWord(3), ARTIN, 0) == [()]

    def test_band_generators(self):
        gens = {"x": Chord(1, 2), "y": Chord(2, 3), "z": Chord(1, 3)}
        found = positive_expressions(ArtinWord(3, (2, 1)), gens, 2)
        # a32 a21 = a31 a32 = a21 a31
        assert found == [("x", "z"), ("y", "x"), ("z", "y")]

    def test_negative_length(self):
        with pytest.raises(ValueError):
            positive_expressions(ArtinWord(3, (1,)), ARTIN, -1)

    def test_generator_must_be_a_twist(self):
        with pytest.raises(InvalidWordError):
            positive_expressions(ArtinWord(3, (1,)), {"bad": ArtinWord(3, (1, 2))}, 1)

    def test_cap(self):
        with pytest.raises(SearchCapExceeded):
            positive_expressions(delta_word(3), ARTIN, 3, cap=1)


class TestExponentSum:
    @pytest.mark.parametrize("letters", [(), (1, 2), (-1, 2, 2), (1, 2, 1, -2)])
    def test_matches_word(self, letters):
        word = ArtinWord(3, letters)
        assert nf_exponent_sum(normal_form(word)) == word.exponent_sum
