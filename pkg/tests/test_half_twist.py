"""
Tests for chords as half twists and chord conjugation.
"""

from __future__ import annotations

import pytest

from braid_service.braid import (
    chord_element,
    conjugate_edge,
    equals,
    eval_positive_word,
    find_chord,
    half_twist_word,
    normal_form,
)
from braid_service.errors import InvalidChordError, InvalidWordError
from braid_service.models import ArtinWord, Chord, Orientation, Side


def ht(u, v, side=Side.ABOVE, n=4):
    return half_twist_word(Chord(u, v, side), n)


class TestHalfTwistWord:
    def test_short_chord_is_artin_generator(self):
        assert ht(2, 3) == ArtinWord(4, (2,))

    def test_above_chord(self):
        assert ht(1, 3, n=3) == ArtinWord(3, (2, 1, -2))

    def test_below_chord_is_mirror(self):
        assert ht(1, 3, Side.BELOW, n=3) == ArtinWord(3, (-2, 1, 2))

    def test_level_does_not_change_the_braid(self):
        assert half_twist_word(Chord(1, 4, Side.BELOW, 2), 4) == ht(1, 4, Side.BELOW)

    def test_chord_too_long_for_strands(self):
        with pytest.raises(InvalidChordError):
            half_twist_word(Chord(2, 4), 3)

    def test_above_and_below_differ(self):
        assert not equals(ht(1, 3), ht(1, 3, Side.BELOW))

    def test_band_triangle_relation(self):
        # a_ts a_sr = a_tr a_ts = a_sr a_tr for r < s < t
        for r, s, t in [(1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4)]:
            left = ht(s, t) * ht(r, s)
            assert equals(left, ht(r, t) * ht(s, t))
            assert equals(left, ht(r, s) * ht(r, t))

    def test_nested_chords_commute(self):
        assert equals(ht(1, 4) * ht(2, 3), ht(2, 3) * ht(1, 4))

    def test_crossing_chords_do_not_commute(self):
        assert not equals(ht(1, 3) * ht(2, 4), ht(2, 4) * ht(1, 3))


class TestFindChord:
    def test_recovers_each_chord(self):
        for u, v in [(1, 2), (1, 3), (2, 4), (1, 4)]:
            for side in Side:
                chord = Chord(u, v, side)
                found = find_chord(chord_element(chord, 4), 4)
                if v - u == 1:
                    assert found == Chord(u, v)
                else:
                    assert found == chord

    def test_non_chord(self):
        assert find_chord(normal_form(ArtinWord(4, (1, 2))), 4) is None


class TestConjugateEdge:
    def test_disjoint_chords_unchanged(self):
        assert conjugate_edge(Chord(1, 2), Chord(3, 4)) == Chord(3, 4)

    def test_adjacent_chords(self):
        ccw = conjugate_edge(Chord(1, 2), Chord(2, 3), Orientation.CCW)
        cw = conjugate_edge(Chord(1, 2), Chord(2, 3), Orientation.CW)
        assert {ccw, cw} == {Chord(1, 3), Chord(1, 3, Side.BELOW)}
        assert ccw == Chord(1, 3, Side.BELOW)

    def test_conjugate_matches_word(self):
        a, b = Chord(2, 4), Chord(1, 2)
        result = conjugate_edge(a, b, Orientation.CCW, n=4)
        wa, wb = half_twist_word(a, 4), half_twist_word(b, 4)
        assert equals(wa * wb * wa.inverse(), half_twist_word(result, 4))

    def test_crossing_chords_rejected(self):
        with pytest.raises(InvalidChordError):
            conjugate_edge(Chord(1, 3), Chord(2, 4))


class TestEvalPositiveWord:
    def test_concatenates_half_twists(self):
        gens = {"x": Chord(1, 2), "y": Chord(1, 3)}
        assert eval_positive_word(["x", "y"], gens, 3) == ArtinWord(3, (1, 2, 1, -2))

    def test_unknown_generator(self):
        with pytest.raises(InvalidWordError):
            eval_positive_word(["z"], {"x": Chord(1, 2)}, 3)
