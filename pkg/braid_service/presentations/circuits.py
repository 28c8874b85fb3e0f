"""
Circuit relations for edges outside the spanning tree.
"""

from __future__ import annotations

import logging
from typing import Optional

from braid_service.graphs.arrangement import build_arrangement
from braid_service.graphs.crossings import chords_cross
from braid_service.models import Chord, ChordGraph, Relation
from braid_service.presentations.oracle import RelationOracle
from braid_service.presentations.spanning import tree_graph, tree_path
from braid_service.presentations.templates import TemplateContext, template_registry
from braid_service.presentations.tree_relations import searched_relation

logger = logging.getLogger(__name__)


def _face_paths(t: ChordGraph, extra: Chord) -> list[tuple[str, ...]]:
    """Boundary walks of the two faces beside ``extra``, cut open at inner edges.

    A walk turns at every crossing, so a label repeats back to back only where
    it bounces off a leaf; the enclosed edge is then kept twice.
    """
    closed = t.with_chords(t.chords + (extra,))
    arrangement = build_arrangement(closed)
    paths = []
    for arc in arrangement.arcs:
        if arc.chord != extra:
            continue
        for forward in (True, False):
            start = (arc.index, forward)
            labels: list[str] = []
            dart = arrangement.next_in_face(start)
            while dart != start:
                label = arrangement.arcs[dart[0]].chord.label
                labels.append(label)
                dart = arrangement.next_in_face(dart)
            if labels and extra.label not in labels:
                paths.append(tuple(labels))
                paths.append(tuple(reversed(labels)))
        break
    return paths


def circuit_relation(
    g: ChordGraph, t: ChordGraph, extra: Chord, oracle: Optional[RelationOracle] = None
) -> Relation:
    """
    Relation contributed by the circuit that ``extra`` closes in ``t``.

    Candidate paths are both traversals of the tree path and the face walks
    beside ``extra``, with enclosed edges cut open. Within the first template
    that has a sound instance, un-mirrored instances are preferred; ties go to
    the shortest and then lexicographically smallest.

    Raises:
        ValueError: If ``extra`` is already a tree edge.
        NoSoundRelationError: If no candidate is sound.
    """
    if extra in t.chords:
        raise ValueError(f"Chord {extra.label} is already in the spanning tree")
    oracle = oracle or RelationOracle(g.generators, g.n)
    path = tree_path(tree_graph(t.chords), extra.u, extra.v)
    forward = tuple(c.label for c in path)
    candidates = [tuple(reversed(forward)), forward]
    walks = _face_paths(t, extra)
    for walk in walks:
        if walk not in candidates:
            candidates.append(walk)

    ctx = TemplateContext(alpha=extra.label, circuit_paths=tuple(candidates))
    for template in template_registry.suitable(ctx, "circuit"):
        sound = [
            r for r in template.instantiate(ctx)
            if r.is_homogeneous and oracle.is_sound(r.lhs, r.rhs)
        ]
        if sound:
            direct = [r for r in sound if "mirrored" not in r.notes]
            return min(direct or sound, key=lambda r: (r.length, r.lhs, r.rhs))

    crossing = {c.label for c in t.chords if any(chords_cross(c, p) for p in path + [extra])}
    enclosed = {label for walk in walks for label in walk}
    alphabet = sorted({extra.label} | set(forward) | crossing | enclosed)
    logger.debug("no circuit template sound for %s; searching over %s", extra.label, alphabet)
    return searched_relation(
        oracle, "Circuit2", alphabet, (extra.label,),
        {"alpha": extra.label, "circuit": list(forward)},
    )
