"""
Crossing detection in the two-sided semicircle model.

Two chords cross iff they lie on the same side of the axis and their
endpoints strictly interleave. Crossing abscissae are exact rationals.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

from braid_service.models import Chord, ChordGraph


def chords_cross(a: Chord, b: Chord) -> bool:
    if a.side != b.side:
        return False
    return a.u < b.u < a.v < b.v or b.u < a.u < b.v < a.v


def crossing_pairs(g: ChordGraph) -> set[frozenset[Chord]]:
    """All unordered pairs of crossing chords."""
    return {frozenset((a, b)) for a, b in combinations(g.chords, 2) if chords_cross(a, b)}


def has_crossings(g: ChordGraph) -> bool:
    return any(chords_cross(a, b) for a, b in combinations(g.chords, 2))


def crossing_abscissa(a: Chord, b: Chord) -> Fraction:
    """x-coordinate of the intersection of two crossing semicircles.

    Both circles are centred on the axis, so subtracting their equations
    leaves a linear equation in x.
    """
    ca, cb = Fraction(a.u + a.v, 2), Fraction(b.u + b.v, 2)
    ra2, rb2 = Fraction(a.span, 2) ** 2, Fraction(b.span, 2) ** 2
    return (ra2 - rb2 + cb * cb - ca * ca) / (2 * (cb - ca))
