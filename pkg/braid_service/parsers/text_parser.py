"""
Plain text graph format.

    n 4
    chord 1 3 above
    chord 2 4 below 1

Blank lines and lines starting with ``#`` are ignored.
"""

from __future__ import annotations

import logging
from typing import Optional, Union

from braid_service.errors import GraphFormatError, InvalidChordError
from braid_service.models import Chord, ChordGraph, Side
from braid_service.parsers.base import BaseGraphParser

logger = logging.getLogger(__name__)


class TextGraphParser(BaseGraphParser):
    name = "text"
    supported_extensions = [".graph", ".txt"]

    def can_handle(self, raw_input: Union[str, bytes], filename: Optional[str] = None) -> bool:
        if super().can_handle(raw_input, filename):
            return True
        # Fallback for any string input.
        return filename is None and isinstance(raw_input, str)

    def parse(self, raw_input: Union[str, bytes], filename: Optional[str] = None) -> ChordGraph:
        n: Optional[int] = None
        chords: list[Chord] = []
        for number, line in enumerate(self._as_text(raw_input).splitlines(), start=1):
            tokens = line.split("#", 1)[0].split()
            if not tokens:
                continue
            keyword = tokens[0].lower()
            if keyword == "n":
                if n is not None or len(tokens) != 2:
                    raise GraphFormatError(f"line {number}: expected a single 'n <count>' line")
                n = self._int(tokens[1], number)
            elif keyword == "chord":
                if n is None:
                    raise GraphFormatError(f"line {number}: 'chord' before 'n <count>'")
                chords.append(self._chord(tokens, number))
            else:
                raise GraphFormatError(f"line {number}: unknown keyword '{tokens[0]}'")
        if n is None:
            raise GraphFormatError("missing 'n <count>' line")
        try:
            graph = ChordGraph(n, tuple(chords))
        except InvalidChordError as exc:
            raise GraphFormatError(str(exc)) from exc
        logger.debug("parsed graph with n=%d and %d chords", n, graph.edge_count)
        return graph

    def _chord(self, tokens: list[str], number: int) -> Chord:
        if len(tokens) not in (4, 5):
            raise GraphFormatError(f"line {number}: expected 'chord <u> <v> <above|below> [level]'")
        u, v = self._int(tokens[1], number), self._int(tokens[2], number)
        try:
            side = Side(tokens[3].lower())
        except ValueError:
            raise GraphFormatError(f"line {number}: side must be 'above' or 'below', got '{tokens[3]}'") from None
        level = self._int(tokens[4], number) if len(tokens) == 5 else 0
        try:
            return Chord(min(u, v), max(u, v), side, level)
        except InvalidChordError as exc:
            raise GraphFormatError(f"line {number}: {exc}") from exc

    @staticmethod
    def _int(token: str, number: int) -> int:
        try:
            return int(token)
        except ValueError:
            raise GraphFormatError(f"line {number}: expected an integer, got '{token}'") from None


def format_graph(g: ChordGraph) -> str:
    """Inverse of TextGraphParser.parse."""
    lines = [f"n {g.n}"]
    for c in g.chords:
        level = f" {c.level}" if c.level else ""
        lines.append(f"chord {c.u} {c.v} {c.side.value}{level}")
    return "\n".join(lines) + "\n"
