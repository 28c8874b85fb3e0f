"""
Word token formats.

Artin words are whitespace-separated ``s<i>`` / ``s<i>'`` tokens. Positive words
over graph generators are whitespace-separated chord identifiers such as
``1-3a`` or ``2-4b.1``. Presentations are written as ``n``, ``gen`` and ``rel`` lines.
"""

from __future__ import annotations

import re
from typing import Iterable, Optional

from braid_service.errors import GraphFormatError, InvalidChordError, InvalidWordError
from braid_service.models import ArtinWord, Chord, ChordGraph, PositiveWord, Presentation, Relation

_ARTIN_TOKEN_RE = re.compile(r"^s(\d+)('?)$")


def parse_artin_word(text: str, strands: int) -> ArtinWord:
    """
    Parse ``s1 s2' s1`` into an ArtinWord on ``strands`` strands.

    Raises:
        InvalidWordError: On an unknown token or an index out of range.
    """
    letters = []
    for token in text.replace(",", " ").split():
        match = _ARTIN_TOKEN_RE.match(token)
        if not match:
            raise InvalidWordError(f"Not an Artin generator token: '{token}'")
        index = int(match.group(1))
        letters.append(-index if match.group(2) else index)
    return ArtinWord(strands, tuple(letters))


def parse_positive_word(text: str, generators: Optional[Iterable[str]] = None) -> PositiveWord:
    """
    Parse chord identifiers into a positive word.

    Raises:
        InvalidWordError: If a token is not a chord identifier, or not one of ``generators``.
    """
    allowed = set(generators) if generators is not None else None
    word = []
    for token in text.replace(",", " ").split():
        try:
            label = Chord.from_label(token).label
        except InvalidChordError as exc:
            raise InvalidWordError(str(exc)) from exc
        if allowed is not None and label not in allowed:
            raise InvalidWordError(f"Unknown generator '{token}'. Available generators: {sorted(allowed)}")
        word.append(label)
    return tuple(word)


def format_positive_word(word: PositiveWord) -> str:
    return " ".join(word)


def parse_presentation_text(text: str) -> Presentation:
    """
    Read the text written by the presentation exporter.

    Raises:
        GraphFormatError: On a malformed line.
    """
    n: Optional[int] = None
    chords: list[Chord] = []
    relations: list[Relation] = []
    for number, line in enumerate(text.splitlines(), start=1):
        body = line.split("#", 1)[0].strip()
        if not body:
            continue
        keyword, _, rest = body.partition(" ")
        try:
            if keyword == "n":
                n = int(rest)
            elif keyword == "gen":
                chords.append(Chord.from_label(rest))
            elif keyword == "rel":
                lhs, sep, rhs = rest.partition("=")
                if not sep:
                    raise GraphFormatError(f"line {number}: relation without '='")
                relations.append(Relation(parse_positive_word(lhs), parse_positive_word(rhs), "given"))
            else:
                raise GraphFormatError(f"line {number}: unknown keyword '{keyword}'")
        except (InvalidChordError, InvalidWordError, ValueError) as exc:
            if isinstance(exc, GraphFormatError):
                raise
            raise GraphFormatError(f"line {number}: {exc}") from exc
    if n is None:
        n = max((c.v for c in chords), default=1)
    try:
        graph = ChordGraph(n, tuple(chords))
    except InvalidChordError as exc:
        raise GraphFormatError(str(exc)) from exc
    known = set(graph.generators)
    for relation in relations:
        unknown = set(relation.lhs + relation.rhs) - known
        if unknown:
            raise GraphFormatError(f"relation {relation} uses undeclared generators {sorted(unknown)}")
    return Presentation(graph=graph, relations=relations)
