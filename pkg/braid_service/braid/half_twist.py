"""
Chords as braids: half twists along semicircular arcs.

An Above chord (s, t) is the band generator
a_{ts} = σ_{t-1}⋯σ_{s+1} σ_s σ_{s+1}⁻¹⋯σ_{t-1}⁻¹; a Below chord is the mirror
word σ_{t-1}⁻¹⋯σ_{s+1}⁻¹ σ_s σ_{s+1}⋯σ_{t-1}. The level of a chord never
changes its braid.
"""

from __future__ import annotations

import logging
from typing import Mapping, Sequence

from braid_service.braid.garside import normal_form
from braid_service.errors import InvalidChordError, InvalidWordError, NotRepresentableError
from braid_service.graphs.crossings import chords_cross
from braid_service.models import ArtinWord, Chord, GarsideNF, Orientation, Side

logger = logging.getLogger(__name__)


def half_twist_word(c: Chord, n: int) -> ArtinWord:
    """Braid word of the counterclockwise half twist along ``c``.

    Raises:
        InvalidChordError: If the chord does not fit on n strands.
    """
    if c.v > n:
        raise InvalidChordError(f"Chord {c.label} needs at least {c.v} strands, got {n}")
    s, t = c.u, c.v
    outer = list(range(t - 1, s, -1))
    sign = 1 if c.side is Side.ABOVE else -1
    letters = [sign * i for i in outer] + [s] + [-sign * i for i in reversed(outer)]
    return ArtinWord(n, tuple(letters))


def chord_element(c: Chord, n: int) -> GarsideNF:
    return normal_form(half_twist_word(c, n))


def all_chords(n: int) -> list[Chord]:
    """Every level-0 chord on n vertices, both sides."""
    return [
        Chord(u, v, side)
        for u in range(1, n + 1)
        for v in range(u + 1, n + 1)
        for side in (Side.ABOVE, Side.BELOW)
    ]


def find_chord(element: GarsideNF, n: int) -> Chord | None:
    """The level-0 chord whose half twist is ``element``, Above preferred."""
    for chord in all_chords(n):
        if chord_element(chord, n) == element:
            return chord
    return None


def conjugate_edge(a: Chord, b: Chord, orientation: Orientation = Orientation.CCW, n: int | None = None) -> Chord:
    """Chord of A·B·A⁻¹ (CCW) or A⁻¹·B·A (CW).

    Raises:
        InvalidChordError: If the chords cross.
        NotRepresentableError: If the conjugated arc is not a chord; the word is attached.
    """
    if chords_cross(a, b):
        raise InvalidChordError(f"Cannot conjugate {b.label} by crossing chord {a.label}")
    if a.shares_vertex(b) is None and a.endpoints != b.endpoints:
        return b
    n = n or max(a.v, b.v)
    wa, wb = half_twist_word(a, n), half_twist_word(b, n)
    word = wa * wb * wa.inverse() if Orientation(orientation) is Orientation.CCW else wa.inverse() * wb * wa
    chord = find_chord(normal_form(word), n)
    if chord is None:
        raise NotRepresentableError(f"Conjugate of {b.label} by {a.label} is not a chord", word=word)
    logger.debug("conjugate %s by %s (%s) -> %s", b.label, a.label, orientation, chord.label)
    return chord


def eval_positive_word(pw: Sequence[str], gens: Mapping[str, Chord], n: int) -> ArtinWord:
    """Concatenate the half-twist words of the letters of ``pw``.

    Raises:
        InvalidWordError: If a letter is not a generator.
    """
    letters: list[int] = []
    for letter in pw:
        if letter not in gens:
            raise InvalidWordError(f"Unknown generator '{letter}'. Available generators: {sorted(gens)}")
        letters.extend(half_twist_word(gens[letter], n).letters)
    return ArtinWord(n, tuple(letters))
