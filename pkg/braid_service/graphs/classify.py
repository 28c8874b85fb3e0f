"""
Embedding-class classification of linearly spanned chord graphs.

Only the Artin graphs and the inner-complete graphs have the embedding
property; graphs with multiple edges are left open.

Both tests are stated on the drawing itself rather than on a straightened
image. Straightening keeps crossings and vertex degrees, so a tree straightens
to some drawing of a path exactly when it is a crossing-free path; the image
need not use consecutive chords, since it depends on where the outer walk
starts. Likewise a simple graph on all
vertex pairs is inner complete exactly when it has one crossing per four
vertices, the count of the all-Above drawing.
"""

from __future__ import annotations

import logging
from math import comb

from braid_service.errors import NotLinearlySpannedError
from braid_service.graphs.crossings import crossing_pairs, has_crossings
from braid_service.graphs.pseudo_faces import is_linearly_spanned
from braid_service.models import ChordGraph, EmbeddingClass

logger = logging.getLogger(__name__)

ARTIN = EmbeddingClass("has_embedding", "artin")
INNER_COMPLETE = EmbeddingClass("has_embedding", "inner_complete")


def is_artin_graph(g: ChordGraph) -> bool:
    """A crossing-free path: every plane drawing of a path straightens to consecutive chords."""
    if not g.is_tree() or has_crossings(g):
        return False
    return all(g.degree(v) <= 2 for v in range(1, g.n + 1))


def is_inner_complete(g: ChordGraph) -> bool:
    """One chord per vertex pair with the crossing count of the all-Above drawing."""
    if g.has_multiple_edges() or g.edge_count != comb(g.n, 2):
        return False
    return len(crossing_pairs(g)) == comb(g.n, 4)


def classify_graph(g: ChordGraph) -> EmbeddingClass:
    """
    Classify a connected, linearly spanned graph.

    Raises:
        NotLinearlySpannedError: If the graph is outside the classification's scope.
    """
    if not is_linearly_spanned(g):
        raise NotLinearlySpannedError("Classification needs a connected, linearly spanned graph")
    if g.has_multiple_edges():
        return EmbeddingClass("unknown", "multiple edges: embedding property open")
    if is_artin_graph(g):
        return ARTIN
    if is_inner_complete(g):
        return INNER_COMPLETE
    result = EmbeddingClass("no_embedding", "neither an Artin graph nor an inner-complete graph")
    logger.debug("classified %s as %s", [c.label for c in g.chords], result)
    return result
