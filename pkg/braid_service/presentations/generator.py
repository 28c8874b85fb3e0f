"""
Presentation generation and Artin generator expressions.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import combinations

from braid_service.braid.half_twist import conjugate_edge, half_twist_word
from braid_service.errors import (
    InvalidChordError,
    NotLinearlySpannedError,
    NotRepresentableError,
    SearchCapExceeded,
)
from braid_service.graphs.pseudo_faces import pseudo_face_witness
from braid_service.graphs.straighten import insertion_order, straighten_tree
from braid_service.models import ArtinWord, Chord, ChordGraph, Orientation, Presentation, Relation
from braid_service.presentations.circuits import circuit_relation
from braid_service.presentations.oracle import RelationOracle
from braid_service.presentations.spanning import spanning_tree
from braid_service.presentations.tree_relations import tree_relations

logger = logging.getLogger(__name__)


def generate_presentation(g: ChordGraph) -> Presentation:
    """
    Positive presentation with (n-1)(n-2)/2 + k relations for a graph with n + k - 1 edges.

    Raises:
        NotLinearlySpannedError: If the graph is disconnected or has a vertex in a pseudo face.
    """
    if not g.is_connected():
        raise NotLinearlySpannedError("Presentation generation needs a connected graph")
    witness = pseudo_face_witness(g)
    if witness is not None:
        raise NotLinearlySpannedError(f"Vertex {witness.enclosed_vertex} lies in a pseudo face")

    tree = spanning_tree(g)
    order = insertion_order(tree, straighten_tree(tree))
    oracle = RelationOracle(g.generators, g.n)
    relations = tree_relations(tree, order, oracle)
    for extra in g.chords:
        if extra not in tree.chords:
            relations.append(circuit_relation(g, tree, extra, oracle))

    logger.info(
        "Generated %d relations on %d generators (n=%d)",
        len(relations), g.edge_count, g.n,
    )
    return Presentation(graph=g, relations=relations, tree=tree, vertex_order=order)


def artin_presentation(n: int) -> Presentation:
    """Artin's presentation on the path graph."""
    g = ChordGraph.artin_path(n)
    s = [Chord(i, i + 1).label for i in range(1, n)]
    relations = []
    for i in range(n - 2):
        relations.append(Relation((s[i], s[i + 1], s[i]), (s[i + 1], s[i], s[i + 1]), "given"))
    for i, j in combinations(range(n - 1), 2):
        if j - i >= 2:
            relations.append(Relation((s[i], s[j]), (s[j], s[i]), "given"))
    return Presentation(graph=g, relations=relations, vertex_order=tuple(range(1, n + 1)))


def band_presentation(n: int) -> Presentation:
    """Band-generator presentation on the inner-complete graph."""
    g = ChordGraph.inner_complete(n)

    def a(t: int, s: int) -> str:
        return Chord(s, t).label

    relations = []
    for r, s, t in combinations(range(1, n + 1), 3):
        relations.append(Relation((a(t, s), a(s, r)), (a(t, r), a(t, s)), "given"))
        relations.append(Relation((a(t, r), a(t, s)), (a(s, r), a(t, r)), "given"))
    chords = [(c.v, c.u) for c in g.chords]
    for (t, s), (r, q) in combinations(chords, 2):
        if (t - r) * (t - q) * (s - r) * (s - q) > 0:
            relations.append(Relation((a(t, s), a(r, q)), (a(r, q), a(t, s)), "given"))
    return Presentation(graph=g, relations=relations, vertex_order=tuple(range(1, n + 1)))


@dataclass(frozen=True)
class ArtinExpression:
    """σ_i = W·α·W⁻¹ with W a signed word over graph generators."""

    index: int
    conjugator: tuple[tuple[str, int], ...]
    base: str

    def conjugator_word(self, gens: dict[str, Chord], n: int) -> ArtinWord:
        word = ArtinWord(n)
        for label, sign in self.conjugator:
            letter = half_twist_word(gens[label], n)
            word = word * (letter if sign > 0 else letter.inverse())
        return word

    def to_dict(self) -> dict:
        return {
            "index": self.index,
            "conjugator": [f"{label}" + ("" if sign > 0 else "'") for label, sign in self.conjugator],
            "base": self.base,
        }


Conjugator = tuple[tuple[str, int], ...]


def _reduce(letters) -> Conjugator:
    out: list[tuple[str, int]] = []
    for label, sign in letters:
        if out and out[-1] == (label, -sign):
            out.pop()
        else:
            out.append((label, sign))
    return tuple(out)


def _inverse(conjugator: Conjugator) -> Conjugator:
    return tuple((label, -sign) for label, sign in reversed(conjugator))


def express_artin_generator(p: Presentation, i: int, max_depth: int | None = None) -> ArtinExpression:
    """
    σ_i as W·α·W⁻¹ with α a graph generator, found by completing the graph.

    Every known chord x carries (W_x, α_x) with x = W_x·α_x·W_x⁻¹. Each round
    conjugates known chords by known chords, both orientations, and records
    the new chords until chord (i, i+1) appears.

    Raises:
        ValueError: If i is out of range.
        SearchCapExceeded: If completion stalls or every new conjugator is
            longer than ``max_depth``.
    """
    from config import config

    n = p.graph.n
    if not 1 <= i < n:
        raise ValueError(f"Artin generator index {i} out of range 1..{n - 1}")
    max_depth = config.conjugator_depth if max_depth is None else max_depth

    known: dict[Chord, tuple[Conjugator, str]] = {}
    for label in p.generator_ids:
        chord = p.generators[label]
        if chord.endpoints == (i, i + 1):
            return ArtinExpression(i, (), label)
        known.setdefault(chord, ((), label))

    rounds = 0
    while True:
        rounds += 1
        found: dict[Chord, tuple[Conjugator, str]] = {}
        for a, (wa, base_a) in list(known.items()):
            for b, (wb, base_b) in list(known.items()):
                if a == b:
                    continue
                for orientation, sign in ((Orientation.CCW, 1), (Orientation.CW, -1)):
                    try:
                        c = conjugate_edge(a, b, orientation, n)
                    except (InvalidChordError, NotRepresentableError):
                        continue
                    if c in known or c in found:
                        continue
                    conjugator = _reduce(wa + ((base_a, sign),) + _inverse(wa) + wb)
                    if len(conjugator) > max_depth:
                        continue
                    if c.endpoints == (i, i + 1):
                        logger.debug("sigma_%d = conjugate of %s by %s after %d rounds", i, base_b, conjugator, rounds)
                        return ArtinExpression(i, conjugator, base_b)
                    found[c] = (conjugator, base_b)
        if not found:
            raise SearchCapExceeded(
                f"No conjugate expression for sigma_{i} within depth {max_depth}", explored=len(known)
            )
        known.update(found)
