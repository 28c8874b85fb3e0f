"""
Straightening a linearly spanned tree onto the inner-complete graph.

Vertices are re-placed on a new axis in the order in which their outer-face
corners are met walking the outer face from the west corner of vertex 1.
Each vertex uses its downward corner when that corner is on the outer face,
so trees drawn with Above chords only keep their labels.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

from braid_service.errors import NotLinearlySpannedError
from braid_service.graphs.arrangement import build_arrangement, vertex_node
from braid_service.graphs.pseudo_faces import pseudo_face_witness
from braid_service.models import Chord, ChordGraph

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class StraightenedTree:
    tree: ChordGraph
    # order[i] is the original vertex placed at position i + 1
    order: tuple[int, ...]
    image: ChordGraph

    @property
    def relabeling(self) -> dict[int, int]:
        return {old: new for new, old in enumerate(self.order, start=1)}

    def to_dict(self) -> dict:
        return {
            "relabeling": {str(k): v for k, v in self.relabeling.items()},
            "image": [c.label for c in self.image.chords],
        }


def straighten_tree(t: ChordGraph) -> StraightenedTree:
    """Relabel the vertices of a linearly spanned tree so every edge becomes an Above chord.

    Raises:
        ValueError: If ``t`` is not a tree.
        NotLinearlySpannedError: If some vertex lies in a pseudo face.
    """
    if not t.is_tree():
        raise ValueError(f"Straightening needs a tree, got {t.edge_count} chords on {t.n} vertices")
    witness = pseudo_face_witness(t)
    if witness is not None:
        raise NotLinearlySpannedError(f"Vertex {witness.enclosed_vertex} lies in a pseudo face")

    if t.n == 1:
        return StraightenedTree(t, (1,), t)

    arrangement = build_arrangement(t)
    start = arrangement.west_corner(1)
    outer_index = arrangement.face_of(start)
    face = arrangement.faces[outer_index]
    offset = face.index(start)
    walk = face[offset:] + face[:offset]
    position = {dart: i for i, dart in enumerate(walk)}

    chosen: dict[int, int] = {}
    for k in range(1, t.n + 1):
        down = arrangement.down_corner(k)
        if down in position:
            chosen[k] = position[down]
        else:
            chosen[k] = min(i for i, d in enumerate(walk) if arrangement.tail(d) == vertex_node(k))

    order = tuple(sorted(chosen, key=chosen.get))
    relabel = {old: new for new, old in enumerate(order, start=1)}
    image = ChordGraph(
        t.n,
        tuple(Chord(min(relabel[c.u], relabel[c.v]), max(relabel[c.u], relabel[c.v])) for c in t.chords),
    )
    logger.debug("straightened order %s", order)
    return StraightenedTree(t, order, image)


def insertion_order(t: ChordGraph, straightened: StraightenedTree) -> tuple[int, ...]:
    """Grow the tree one leaf at a time, always taking the earliest straightened vertex."""
    rank = {v: i for i, v in enumerate(straightened.order)}
    order = [straightened.order[0]]
    placed = {order[0]}
    while len(order) < t.n:
        frontier = {
            c.other_end(v)
            for v in placed
            for c in t.chords_at(v)
            if c.other_end(v) not in placed
        }
        nxt = min(frontier, key=rank.get)
        order.append(nxt)
        placed.add(nxt)
    return tuple(order)
