"""
Deterministic spanning trees and tree paths.
"""

from __future__ import annotations

import networkx as nx
from networkx.utils import UnionFind

from braid_service.errors import NotLinearlySpannedError
from braid_service.models import Chord, ChordGraph


def spanning_tree(g: ChordGraph) -> ChordGraph:
    """Greedy spanning tree over chords ordered by (span, u, Above first, level).

    Raises:
        NotLinearlySpannedError: If the graph is disconnected.
    """
    components = UnionFind(range(1, g.n + 1))
    kept: list[Chord] = []
    for chord in g.chords:
        if components[chord.u] != components[chord.v]:
            components.union(chord.u, chord.v)
            kept.append(chord)
    if len(kept) != g.n - 1:
        raise NotLinearlySpannedError(f"Graph is disconnected: spanning forest has {len(kept)} of {g.n - 1} edges")
    return g.with_chords(kept)


def tree_graph(chords) -> nx.Graph:
    graph = nx.Graph()
    for chord in chords:
        graph.add_edge(chord.u, chord.v, chord=chord)
    return graph


def tree_path(graph: nx.Graph, start: int, end: int) -> list[Chord]:
    """Chords along the unique path from ``start`` to ``end``."""
    vertices = nx.shortest_path(graph, start, end)
    return [graph.edges[a, b]["chord"] for a, b in zip(vertices, vertices[1:])]
