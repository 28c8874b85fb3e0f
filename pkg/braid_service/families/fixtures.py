"""
Three-vertex graphs whose embedding property is open.

Of the four linearly spanned graphs on three vertices, the path and the
triangle give the Artin and band-generator presentations; the other two
carry a doubled chord 1-3 drawn above and below the axis around vertex 2.
They are shipped as data only. The four-vertex case with neither a triangle
nor a rectangle and no vertex of degree three is not listed: apart from the
Artin graph every such graph has a multiple edge.
"""

from __future__ import annotations

from braid_service.models import Chord, ChordGraph, Presentation, Relation, Side

DOUBLE_CHORD = ChordGraph(3, (Chord(1, 2), Chord(1, 3), Chord(1, 3, Side.BELOW)))

DOUBLE_CHORD_TRIANGLE = ChordGraph(
    3, (Chord(1, 2), Chord(2, 3), Chord(1, 3), Chord(1, 3, Side.BELOW))
)

MULTI_EDGE_GRAPHS = {
    "double-chord": DOUBLE_CHORD,
    "double-chord-triangle": DOUBLE_CHORD_TRIANGLE,
}


def open_three_vertex_presentation() -> Presentation:
    """<a, b, g | aba = bab, gbg = bgb, bbg = abb, bga = gab> on the double chord graph.

    a = 1-3b, b = 1-2a, g = 1-3a. No claim is made about its embedding property.
    """
    a, b, g = Chord(1, 3, Side.BELOW).label, Chord(1, 2).label, Chord(1, 3).label
    relations = [
        Relation((a, b, a), (b, a, b), "given"),
        Relation((g, b, g), (b, g, b), "given"),
        Relation((b, b, g), (a, b, b), "given"),
        Relation((b, g, a), (g, a, b), "given"),
    ]
    return Presentation(graph=DOUBLE_CHORD, relations=relations, vertex_order=(1, 2, 3))
