"""
Pseudo faces and the linearly-spanned test.

A vertex lies in a pseudo face when some simple cycle of the arrangement
through a crossing point strictly encloses it. For a fixed vertex k such a
cycle exists iff some 2-connected block of the arrangement minus k contains
a crossing and has k inside one of its facial cycles: inside a block that
encloses k, every node lies on an enclosing cycle.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterator, Optional

import networkx as nx

from braid_service.errors import SearchCapExceeded
from braid_service.graphs.arrangement import (
    Arrangement,
    Node,
    _node_label,
    build_arrangement,
    is_crossing,
    restrict,
    vertex_node,
)
from braid_service.models import ChordGraph, Side

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PseudoFaceWitness:
    enclosed_vertex: int
    boundary_cycle: tuple[str, ...]
    crossing_node: str
    arcs: tuple[int, ...] = ()

    def to_dict(self) -> dict:
        return {
            "enclosed_vertex": self.enclosed_vertex,
            "boundary_cycle": list(self.boundary_cycle),
            "crossing_node": self.crossing_node,
        }


def encloses(arrangement: Arrangement, cycle_arcs, k: int) -> bool:
    """Exact point-in-region test for axis vertex k against a closed arc path.

    Casts the vertical ray just right of k upwards; only Above arcs can meet
    it, and each arc is x-monotone with rational end abscissae.
    """
    hits = 0
    for index in cycle_arcs:
        arc = arrangement.arcs[index]
        if arc.chord.side is not Side.ABOVE:
            continue
        low, high = sorted((arc.x_start, arc.x_end))
        if low <= k < high:
            hits += 1
    return hits % 2 == 1


def _blocks_without(arrangement: Arrangement, k: int) -> list[set[int]]:
    """Arc sets of the 2-connected blocks of the arrangement with vertex k removed."""
    removed = vertex_node(k)
    graph = nx.Graph()
    for arc in arrangement.arcs:
        if removed in (arc.start, arc.end):
            continue
        mid = ("m", arc.index)
        graph.add_edge(arc.start, mid)
        graph.add_edge(mid, arc.end)
    blocks = []
    for edges in nx.biconnected_component_edges(graph):
        arcs = {n[1] for e in edges for n in e if n[0] == "m"}
        if len(edges) > 1:
            blocks.append(arcs)
    return sorted(blocks, key=min)


def _cycle_nodes(arrangement: Arrangement, darts) -> list[Node]:
    return [arrangement.tail(d) for d in darts]


def _cycles_through(
    arrangement: Arrangement, arcs: set[int], start: Node, cap: int
) -> Iterator[list[tuple[int, bool]]]:
    """Simple cycles (as dart lists) through ``start`` using only ``arcs``."""
    adjacency: dict[Node, list[tuple[int, bool]]] = {}
    for index in sorted(arcs):
        arc = arrangement.arcs[index]
        adjacency.setdefault(arc.start, []).append((index, True))
        adjacency.setdefault(arc.end, []).append((index, False))
    explored = 0
    stack = [(start, [], {start})]
    while stack:
        node, path, visited = stack.pop()
        for dart in reversed(adjacency.get(node, [])):
            if path and dart[0] == path[-1][0]:
                continue
            explored += 1
            if explored > cap:
                raise SearchCapExceeded(f"Cycle enumeration exceeded cap {cap}", explored=explored)
            head = arrangement.head(dart)
            if head == start and path:
                yield path + [dart]
            elif head not in visited:
                stack.append((head, path + [dart], visited | {head}))


def pseudo_face_witness(g: ChordGraph, cap: Optional[int] = None) -> Optional[PseudoFaceWitness]:
    """Return a vertex enclosed by a cycle through a crossing, or None.

    Raises:
        SearchCapExceeded: If the witness cycle search hits ``cap``.
    """
    from config import config

    cap = cap or config.cycle_cap
    arrangement = build_arrangement(g)
    if not any(is_crossing(n) for n in arrangement.nodes):
        return None

    for k in range(1, g.n + 1):
        for block in _blocks_without(arrangement, k):
            crossings = sorted(
                {n for i in block for n in (arrangement.arcs[i].start, arrangement.arcs[i].end) if is_crossing(n)}
            )
            if not crossings:
                continue
            sub = restrict(arrangement, block)
            facial = [f for f in sub.faces if encloses(arrangement, [d[0] for d in f], k)]
            if not facial:
                continue
            for face in facial:
                nodes = _cycle_nodes(arrangement, face)
                through = [n for n in nodes if is_crossing(n)]
                if through:
                    return _witness(arrangement, k, face, through[0])
            for cycle in _cycles_through(arrangement, block, crossings[0], cap):
                if encloses(arrangement, [d[0] for d in cycle], k):
                    return _witness(arrangement, k, cycle, crossings[0])
    return None


def _witness(arrangement: Arrangement, k: int, darts, crossing: Node) -> PseudoFaceWitness:
    nodes = _cycle_nodes(arrangement, darts)
    labels = tuple(_node_label(arrangement.graph, n) for n in nodes + nodes[:1])
    logger.info("vertex %d lies in a pseudo face bounded by %s", k, " -> ".join(labels))
    return PseudoFaceWitness(
        enclosed_vertex=k,
        boundary_cycle=labels,
        crossing_node=_node_label(arrangement.graph, crossing),
        arcs=tuple(d[0] for d in darts),
    )


def is_linearly_spanned(g: ChordGraph, cap: Optional[int] = None) -> bool:
    """Connected with no vertex in any pseudo face."""
    if not g.is_connected():
        return False
    return pseudo_face_witness(g, cap) is None
