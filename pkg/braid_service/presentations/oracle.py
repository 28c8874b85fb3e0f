"""
Soundness oracle for positive relations over chord generators.
"""

from __future__ import annotations

import logging
from typing import Mapping, Sequence

from braid_service.braid.garside import multiply, normal_form
from braid_service.braid.half_twist import half_twist_word
from braid_service.errors import InvalidWordError, SearchCapExceeded
from braid_service.models import ArtinWord, Chord, GarsideNF, PositiveWord

logger = logging.getLogger(__name__)


class RelationOracle:
    """Evaluates positive words over chord generators with cached normal forms."""

    def __init__(self, gens: Mapping[str, Chord], n: int) -> None:
        self.gens = dict(gens)
        self.n = n
        self._words: dict[str, ArtinWord] = {
            label: half_twist_word(chord, n) for label, chord in self.gens.items()
        }
        self._cache: dict[PositiveWord, GarsideNF] = {(): normal_form(ArtinWord(n))}

    def letter_word(self, label: str) -> ArtinWord:
        try:
            return self._words[label]
        except KeyError:
            raise InvalidWordError(
                f"Unknown generator '{label}'. Available generators: {sorted(self._words)}"
            ) from None

    def evaluate(self, word: Sequence[str]) -> GarsideNF:
        word = tuple(word)
        if word in self._cache:
            return self._cache[word]
        result = multiply(self.evaluate(word[:-1]), self.letter_word(word[-1]))
        self._cache[word] = result
        return result

    def is_sound(self, lhs: Sequence[str], rhs: Sequence[str]) -> bool:
        return self.evaluate(lhs) == self.evaluate(rhs)


def search_relation(
    oracle: RelationOracle,
    alphabet: Sequence[str],
    required: Sequence[str],
    max_length: int,
    cap: int,
) -> tuple[PositiveWord, PositiveWord] | None:
    """Shortest sound homogeneous relation U = V over ``alphabet``.

    U and V differ in their first and in their last letter, and every
    required letter occurs in U or V. Words are visited in lexicographic
    order so the answer is deterministic.

    Raises:
        SearchCapExceeded: If more than ``cap`` words are evaluated.
    """
    letters = sorted(set(alphabet))
    explored = 0
    for length in range(2, max_length + 1):
        buckets: dict[GarsideNF, list[PositiveWord]] = {}
        stack: list[tuple[PositiveWord, GarsideNF]] = [((), oracle.evaluate(()))]
        while stack:
            word, nf = stack.pop()
            if len(word) == length:
                for partner in buckets.get(nf, []):
                    if partner[0] != word[0] and partner[-1] != word[-1]:
                        if all(r in partner or r in word for r in required):
                            logger.info("relation search found %s = %s", " ".join(partner), " ".join(word))
                            return partner, word
                buckets.setdefault(nf, []).append(word)
                continue
            for letter in reversed(letters):
                explored += 1
                if explored > cap:
                    raise SearchCapExceeded(f"Relation search exceeded cap {cap}", explored=explored)
                stack.append((word + (letter,), multiply(nf, oracle.letter_word(letter))))
    return None
