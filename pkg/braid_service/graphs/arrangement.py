"""
Planar arrangement of a chord graph.

Crossing points become degree-4 nodes, chords are cut into arcs between
consecutive nodes, and faces are traced from the rotation system. Parallel
duplicates (level > 0) are drawn just inside their level-0 twin.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional

import networkx as nx

from braid_service.graphs.crossings import chords_cross, crossing_abscissa
from braid_service.models import Chord, ChordGraph, Side

logger = logging.getLogger(__name__)

# ("v", k) for axis vertex k; ("x", i, j) for the crossing of chords i < j.
Node = tuple
# (arc index, forward); a forward dart runs from arc.start to arc.end.
Dart = tuple[int, bool]


def vertex_node(k: int) -> Node:
    return ("v", k)


def is_crossing(node: Node) -> bool:
    return node[0] == "x"


@dataclass(frozen=True)
class Arc:
    """Maximal piece of a chord between consecutive nodes, oriented from u towards v."""

    index: int
    chord_index: int
    chord: Chord
    start: Node
    end: Node
    x_start: Fraction
    x_end: Fraction


@dataclass
class Arrangement:
    graph: ChordGraph
    nodes: list[Node]
    arcs: list[Arc]
    node_x: dict[Node, Fraction]
    rotation: dict[Node, list[Dart]]
    faces: list[list[Dart]] = field(default_factory=list)
    # Faces of vertices with no arcs, one per isolated vertex.
    isolated_faces: int = 0

    @property
    def face_count(self) -> int:
        return len(self.faces) + self.isolated_faces

    def tail(self, dart: Dart) -> Node:
        arc = self.arcs[dart[0]]
        return arc.start if dart[1] else arc.end

    def head(self, dart: Dart) -> Node:
        arc = self.arcs[dart[0]]
        return arc.end if dart[1] else arc.start

    def next_in_face(self, dart: Dart) -> Dart:
        reverse = (dart[0], not dart[1])
        around = self.rotation[self.head(dart)]
        return around[(around.index(reverse) + 1) % len(around)]

    def components(self) -> list[set[Node]]:
        graph = nx.MultiGraph()
        graph.add_nodes_from(self.nodes)
        graph.add_edges_from((a.start, a.end, a.index) for a in self.arcs)
        return [set(c) for c in nx.connected_components(graph)]

    def euler_holds(self) -> bool:
        """V − E + F = 2 on every connected component."""
        for component in self.components():
            arcs = [a for a in self.arcs if a.start in component]
            if not arcs:
                continue
            darts = {(a.index, d) for a in arcs for d in (True, False)}
            faces = sum(1 for face in self.faces if face[0] in darts)
            if len(component) - len(arcs) + faces != 2:
                return False
        return True

    def west_corner(self, k: int) -> Dart:
        """Leaving dart of the corner at vertex k that faces the negative x direction."""
        around = self.rotation[vertex_node(k)]
        upper = sum(1 for d in around if self._dart_chord(d).side is Side.ABOVE)
        return around[upper % len(around)]

    def down_corner(self, k: int) -> Dart:
        """Leaving dart of the corner at vertex k that faces straight down."""
        around = self.rotation[vertex_node(k)]
        before = sum(
            1 for d in around
            if self._dart_chord(d).side is Side.ABOVE or self._leaves_left(vertex_node(k), d)
        )
        return around[before % len(around)]

    def face_of(self, dart: Dart) -> int:
        for index, face in enumerate(self.faces):
            if dart in face:
                return index
        raise KeyError(f"Dart {dart} belongs to no face")

    def _dart_chord(self, dart: Dart) -> Chord:
        return self.arcs[dart[0]].chord

    def _leaves_left(self, node: Node, dart: Dart) -> bool:
        chord = self._dart_chord(dart)
        return node == vertex_node(chord.v)

    def to_dict(self) -> dict:
        return {
            "nodes": [_node_label(self.graph, n) for n in self.nodes],
            "arcs": [
                {
                    "chord": a.chord.label,
                    "start": _node_label(self.graph, a.start),
                    "end": _node_label(self.graph, a.end),
                }
                for a in self.arcs
            ],
            "faces": self.face_count,
        }


def _node_label(g: ChordGraph, node: Node) -> str:
    if node[0] == "v":
        return str(node[1])
    return f"x({g.chords[node[1]].label},{g.chords[node[2]].label})"


def _crossing_order_key(along: Chord, other: Chord, other_index: int, x: Fraction) -> tuple:
    # Duplicates of one chord meet ``along`` at the same abscissa; enter the
    # outer copy first when moving into it, the inner copy first when leaving.
    entering = along.u < other.u
    return (x, other.level if entering else -other.level, other_index)


def _vertex_rotation_key(chord: Chord, k: int) -> tuple:
    # Counterclockwise from due east: above-right (inner first),
    # above-left (outer first), below-left (inner first), below-right (outer first).
    right = chord.u == k
    if chord.side is Side.ABOVE:
        return (0, chord.span, -chord.level) if right else (1, -chord.span, chord.level)
    return (3, -chord.span, chord.level) if right else (2, chord.span, -chord.level)


def build_arrangement(g: ChordGraph) -> Arrangement:
    """Cut the chords at their crossings and trace faces from the rotation system."""
    chords = list(g.chords)
    node_x: dict[Node, Fraction] = {vertex_node(k): Fraction(k) for k in range(1, g.n + 1)}
    on_chord: dict[int, list[tuple[tuple, Node]]] = {i: [] for i in range(len(chords))}

    for i, a in enumerate(chords):
        for j in range(i + 1, len(chords)):
            b = chords[j]
            if not chords_cross(a, b):
                continue
            x = crossing_abscissa(a, b)
            node: Node = ("x", i, j)
            node_x[node] = x
            on_chord[i].append((_crossing_order_key(a, b, j, x), node))
            on_chord[j].append((_crossing_order_key(b, a, i, x), node))

    arcs: list[Arc] = []
    # Per crossing node and chord: (dart towards u, dart towards v).
    crossing_darts: dict[tuple[Node, int], list[Dart]] = {}
    vertex_darts: dict[int, list[tuple[tuple, Dart]]] = {k: [] for k in range(1, g.n + 1)}

    for i, chord in enumerate(chords):
        path = [vertex_node(chord.u)] + [n for _, n in sorted(on_chord[i])] + [vertex_node(chord.v)]
        for start, end in zip(path, path[1:]):
            arc = Arc(len(arcs), i, chord, start, end, node_x[start], node_x[end])
            arcs.append(arc)
            if is_crossing(start):
                crossing_darts.setdefault((start, i), [None, None])[1] = (arc.index, True)
            if is_crossing(end):
                crossing_darts.setdefault((end, i), [None, None])[0] = (arc.index, False)
        first, last = arcs[-(len(path) - 1)], arcs[-1]
        vertex_darts[chord.u].append((_vertex_rotation_key(chord, chord.u), (first.index, True)))
        vertex_darts[chord.v].append((_vertex_rotation_key(chord, chord.v), (last.index, False)))

    rotation: dict[Node, list[Dart]] = {}
    for k, entries in vertex_darts.items():
        rotation[vertex_node(k)] = [d for _, d in sorted(entries)]
    for node in node_x:
        if not is_crossing(node):
            continue
        _, i, j = node
        a_u, a_v = crossing_darts[(node, i)]
        b_u, b_v = crossing_darts[(node, j)]
        if chords[i].u > chords[j].u:
            a_u, a_v, b_u, b_v = b_u, b_v, a_u, a_v
        if chords[i].side is Side.ABOVE:
            rotation[node] = [a_v, b_v, a_u, b_u]
        else:
            rotation[node] = [a_v, b_u, a_u, b_v]

    nodes = sorted(node_x, key=lambda n: (n[0], n[1:]))
    arrangement = Arrangement(g, nodes, arcs, node_x, rotation)
    arrangement.faces = trace_faces(arrangement)
    arrangement.isolated_faces = sum(1 for k in range(1, g.n + 1) if not rotation[vertex_node(k)])
    logger.debug(
        "arrangement: %d nodes, %d arcs, %d faces",
        len(nodes), len(arcs), arrangement.face_count,
    )
    return arrangement


def trace_faces(arrangement: Arrangement, darts: Optional[Iterable[Dart]] = None) -> list[list[Dart]]:
    """Face boundary walks, each starting at its smallest dart."""
    pending = sorted(darts) if darts is not None else sorted(
        (a.index, d) for a in arrangement.arcs for d in (False, True)
    )
    seen: set[Dart] = set()
    faces: list[list[Dart]] = []
    for start in pending:
        if start in seen:
            continue
        face = []
        dart = start
        while dart not in seen:
            seen.add(dart)
            face.append(dart)
            dart = arrangement.next_in_face(dart)
        faces.append(face)
    return faces


def restrict(arrangement: Arrangement, arc_indices: set[int]) -> Arrangement:
    """Sub-arrangement on a set of arcs, keeping the inherited rotation order."""
    rotation = {
        node: [d for d in around if d[0] in arc_indices]
        for node, around in arrangement.rotation.items()
    }
    rotation = {node: around for node, around in rotation.items() if around}
    sub = Arrangement(
        arrangement.graph,
        sorted(rotation, key=lambda n: (n[0], n[1:])),
        arrangement.arcs,
        arrangement.node_x,
        rotation,
    )
    sub.faces = trace_faces(sub, [(i, d) for i in arc_indices for d in (False, True)])
    return sub
