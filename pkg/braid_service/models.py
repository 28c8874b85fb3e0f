"""
Data models for the braid service.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

import networkx as nx

from braid_service.errors import InvalidChordError, InvalidWordError

PositiveWord = tuple[str, ...]

_LABEL_RE = re.compile(r"^(\d+)-(\d+)([ab])(?:\.(\d+))?$")


class Side(str, Enum):
    ABOVE = "above"
    BELOW = "below"


class Orientation(str, Enum):
    CCW = "ccw"
    CW = "cw"


class DivisionSide(str, Enum):
    LEFT = "left"
    RIGHT = "right"


@dataclass(frozen=True)
class Chord:
    """A semicircular edge between axis vertices u < v on one side of the axis."""

    u: int
    v: int
    side: Side = Side.ABOVE
    level: int = 0

    def __post_init__(self) -> None:
        if not 1 <= self.u < self.v:
            raise InvalidChordError(f"Chord endpoints must satisfy 1 <= u < v, got ({self.u}, {self.v})")
        if self.level < 0:
            raise InvalidChordError(f"Chord level must be non-negative, got {self.level}")
        object.__setattr__(self, "side", Side(self.side))

    @property
    def span(self) -> int:
        return self.v - self.u

    @property
    def endpoints(self) -> tuple[int, int]:
        return (self.u, self.v)

    @property
    def label(self) -> str:
        """Generator identifier, e.g. ``1-3a`` or ``2-4b.1``."""
        suffix = f".{self.level}" if self.level else ""
        return f"{self.u}-{self.v}{self.side.value[0]}{suffix}"

    @property
    def sort_key(self) -> tuple[int, int, int, int]:
        return (self.span, self.u, 0 if self.side is Side.ABOVE else 1, self.level)

    def shares_vertex(self, other: Chord) -> Optional[int]:
        """Return the common endpoint with ``other`` or None."""
        common = set(self.endpoints) & set(other.endpoints)
        if len(common) == 1:
            return common.pop()
        return None

    def other_end(self, vertex: int) -> int:
        if vertex == self.u:
            return self.v
        if vertex == self.v:
            return self.u
        raise ValueError(f"Vertex {vertex} is not an endpoint of {self.label}")

    @classmethod
    def from_label(cls, label: str) -> Chord:
        match = _LABEL_RE.match(label.strip())
        if not match:
            raise InvalidChordError(f"Not a chord identifier: '{label}'")
        u, v, side, level = match.groups()
        return cls(int(u), int(v), Side.ABOVE if side == "a" else Side.BELOW, int(level or 0))

    def to_dict(self) -> dict:
        return {"u": self.u, "v": self.v, "side": self.side.value, "level": self.level}

    @classmethod
    def from_dict(cls, data: dict) -> Chord:
        return cls(int(data["u"]), int(data["v"]), Side(data.get("side", "above")), int(data.get("level", 0)))

    def __str__(self) -> str:
        return self.label


@dataclass(frozen=True)
class ChordGraph:
    """Vertices 1..n on a horizontal axis joined by chords."""

    n: int
    chords: tuple[Chord, ...] = ()

    def __post_init__(self) -> None:
        if self.n < 1:
            raise InvalidChordError(f"A graph needs at least one vertex, got n={self.n}")
        ordered = tuple(sorted(set(self.chords), key=lambda c: c.sort_key))
        if len(ordered) != len(self.chords):
            raise InvalidChordError("Duplicate chord (u, v, side, level) in graph")
        for chord in ordered:
            if chord.v > self.n:
                raise InvalidChordError(f"Chord {chord.label} leaves the vertex range 1..{self.n}")
        object.__setattr__(self, "chords", ordered)

    @classmethod
    def artin_path(cls, n: int) -> ChordGraph:
        return cls(n, tuple(Chord(i, i + 1) for i in range(1, n)))

    @classmethod
    def inner_complete(cls, n: int) -> ChordGraph:
        return cls(n, tuple(Chord(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)))

    @property
    def edge_count(self) -> int:
        return len(self.chords)

    @property
    def generators(self) -> dict[str, Chord]:
        return {c.label: c for c in self.chords}

    def has_multiple_edges(self) -> bool:
        pairs = [c.endpoints for c in self.chords]
        return len(pairs) != len(set(pairs))

    def to_nx(self) -> nx.MultiGraph:
        graph = nx.MultiGraph()
        graph.add_nodes_from(range(1, self.n + 1))
        for chord in self.chords:
            graph.add_edge(chord.u, chord.v, key=chord.label, chord=chord)
        return graph

    def is_connected(self) -> bool:
        return nx.is_connected(self.to_nx())

    def is_tree(self) -> bool:
        return self.edge_count == self.n - 1 and self.is_connected()

    def degree(self, vertex: int) -> int:
        return sum(1 for c in self.chords if vertex in c.endpoints)

    def chords_at(self, vertex: int) -> list[Chord]:
        return [c for c in self.chords if vertex in c.endpoints]

    def with_chords(self, chords) -> ChordGraph:
        return ChordGraph(self.n, tuple(chords))

    def to_dict(self) -> dict:
        return {"n": self.n, "chords": [c.to_dict() for c in self.chords]}

    @classmethod
    def from_dict(cls, data: dict) -> ChordGraph:
        return cls(int(data["n"]), tuple(Chord.from_dict(c) for c in data.get("chords", [])))


@dataclass(frozen=True)
class ArtinWord:
    """A braid word: signed Artin generator indices, ``+i`` for σ_i and ``-i`` for σ_i⁻¹."""

    strands: int
    letters: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.strands < 2:
            raise InvalidWordError(f"A braid word needs at least 2 strands, got {self.strands}")
        object.__setattr__(self, "letters", tuple(self.letters))
        for letter in self.letters:
            if letter == 0 or abs(letter) >= self.strands:
                raise InvalidWordError(f"Generator index {abs(letter)} out of range 1..{self.strands - 1}")

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: ArtinWord) -> ArtinWord:
        if other.strands != self.strands:
            raise InvalidWordError(f"Strand count mismatch: {self.strands} vs {other.strands}")
        return ArtinWord(self.strands, self.letters + other.letters)

    def inverse(self) -> ArtinWord:
        return ArtinWord(self.strands, tuple(-x for x in reversed(self.letters)))

    @property
    def exponent_sum(self) -> int:
        return sum(1 if x > 0 else -1 for x in self.letters)

    def __str__(self) -> str:
        return " ".join(f"s{abs(x)}" + ("'" if x < 0 else "") for x in self.letters)


@dataclass(frozen=True)
class GarsideNF:
    """Left-greedy normal form Δ^infimum · A_1 ⋯ A_r; factors are permutations of 0..n-1."""

    strands: int
    infimum: int
    factors: tuple[tuple[int, ...], ...] = ()

    @property
    def canonical_length(self) -> int:
        return len(self.factors)

    def to_dict(self) -> dict:
        return {
            "strands": self.strands,
            "infimum": self.infimum,
            "factors": [[i + 1 for i in f] for f in self.factors],
        }


@dataclass(frozen=True)
class Relation:
    """A positive relation lhs = rhs with the template and chain that produced it."""

    lhs: PositiveWord
    rhs: PositiveWord
    template: str
    chain: tuple[str, ...] = ()
    notes: tuple[str, ...] = ()
    provenance: str = "template"

    @property
    def length(self) -> int:
        return max(len(self.lhs), len(self.rhs))

    @property
    def is_homogeneous(self) -> bool:
        return len(self.lhs) == len(self.rhs)

    def key(self) -> frozenset:
        """Unordered pair of sides, for comparing relation sets."""
        return frozenset((self.lhs, self.rhs))

    def to_dict(self) -> dict:
        return {
            "lhs": list(self.lhs),
            "rhs": list(self.rhs),
            "template": self.template,
            "chain": list(self.chain),
            "notes": list(self.notes),
            "provenance": self.provenance,
        }

    @classmethod
    def from_dict(cls, data: dict) -> Relation:
        return cls(
            lhs=tuple(data["lhs"]),
            rhs=tuple(data["rhs"]),
            template=data.get("template", "given"),
            chain=tuple(data.get("chain", ())),
            notes=tuple(data.get("notes", ())),
            provenance=data.get("provenance", "template"),
        )

    def __str__(self) -> str:
        return f"{' '.join(self.lhs) or '1'} = {' '.join(self.rhs) or '1'}"


@dataclass
class Presentation:
    """Generators (chords of the graph) and positive relations."""

    graph: ChordGraph
    relations: list[Relation] = field(default_factory=list)
    tree: Optional[ChordGraph] = None
    vertex_order: tuple[int, ...] = ()

    @property
    def generators(self) -> dict[str, Chord]:
        return self.graph.generators

    @property
    def generator_ids(self) -> list[str]:
        return [c.label for c in self.graph.chords]

    @property
    def max_relation_length(self) -> int:
        return max((r.length for r in self.relations), default=0)

    def to_dict(self) -> dict:
        return {
            "graph": self.graph.to_dict(),
            "generators": self.generator_ids,
            "relations": [r.to_dict() for r in self.relations],
            "tree": self.tree.to_dict() if self.tree else None,
            "vertex_order": list(self.vertex_order),
        }


@dataclass(frozen=True)
class EmbeddingClass:
    """Result of classify_graph: ``has_embedding`` / ``no_embedding`` / ``unknown``."""

    kind: str
    detail: str

    @property
    def has_embedding(self) -> bool:
        return self.kind == "has_embedding"

    def __str__(self) -> str:
        return f"{self.kind}({self.detail})"
