"""
Brute-force positive expressions of a braid over a generator set.
"""

from __future__ import annotations

import logging
from typing import Mapping, Optional, Union

from braid_service.braid import permutations as perms
from braid_service.braid.garside import normal_form, to_word
from braid_service.braid.half_twist import half_twist_word
from braid_service.errors import InvalidWordError, SearchCapExceeded
from braid_service.models import ArtinWord, Chord, GarsideNF, PositiveWord

logger = logging.getLogger(__name__)

Generator = Union[Chord, ArtinWord]


def nf_exponent_sum(nf: GarsideNF) -> int:
    """Exponent sum of the braid, read off its normal form."""
    n = nf.strands
    return nf.infimum * n * (n - 1) // 2 + sum(perms.inversions(f) for f in nf.factors)


def _generator_words(gens: Mapping[str, Generator], n: int) -> dict[str, ArtinWord]:
    words = {}
    for label, gen in gens.items():
        word = half_twist_word(gen, n) if isinstance(gen, Chord) else gen
        if word.strands != n:
            raise InvalidWordError(f"Generator {label} has {word.strands} strands, expected {n}")
        if word.exponent_sum != 1:
            raise InvalidWordError(f"Generator {label} is not a conjugate of an Artin generator")
        words[label] = word
    return words


def positive_expressions(
    target: ArtinWord,
    gens: Mapping[str, Generator],
    length: int,
    cap: Optional[int] = None,
) -> list[PositiveWord]:
    """
    All positive words of exactly ``length`` letters over ``gens`` equal to ``target``.

    Letters are peeled off the left of the target. What is left after each
    letter must be reachable by the remaining letters: its infimum and
    supremum lie within the sums of the generators' infima and suprema.
    Subproblems are memoized on the normal form of the remainder.

    Args:
        target: The braid to express.
        gens: Generator label to chord (or to an Artin word for a conjugate of σ_i).
        length: Word length L >= 0.
        cap: Limit on quotient evaluations.

    Returns:
        The words in lexicographic order; an empty list certifies that none exists.

    Raises:
        ValueError: If length is negative.
        SearchCapExceeded: If the search is cut off.
    """
    from config import config

    if length < 0:
        raise ValueError(f"Word length must be non-negative, got {length}")
    cap = cap or config.search_cap
    n = target.strands
    words = _generator_words(gens, n)
    inverses = {label: w.inverse() for label, w in words.items()}
    labels = sorted(words)
    forms = [normal_form(w) for w in words.values()]
    lowest = min((f.infimum for f in forms), default=0)
    highest = max((_supremum(f) for f in forms), default=0)
    memo: dict[tuple[GarsideNF, int], list[PositiveWord]] = {}
    explored = 0

    def reachable(nf: GarsideNF, left: int) -> bool:
        # inf is superadditive and sup subadditive under multiplication
        return nf.infimum >= left * lowest and _supremum(nf) <= left * highest

    def expand(remainder: GarsideNF, left: int) -> list[PositiveWord]:
        nonlocal explored
        key = (remainder, left)
        if key in memo:
            return memo[key]
        if left == 0:
            found = [()] if remainder.infimum == 0 and not remainder.factors else []
            memo[key] = found
            return found
        found = []
        rest = to_word(remainder)
        for label in labels:
            explored += 1
            if explored > cap:
                raise SearchCapExceeded(f"Positive expression search exceeded cap {cap}", explored=explored)
            quotient = normal_form(inverses[label] * rest)
            if not reachable(quotient, left - 1):
                continue
            found.extend((label,) + tail for tail in expand(quotient, left - 1))
        memo[key] = found
        return found

    start = normal_form(target)
    if nf_exponent_sum(start) != length or not reachable(start, length):
        return []
    result = sorted(expand(start, length))
    logger.debug("positive expressions of length %d: %d found, %d checks", length, len(result), explored)
    return result


def _supremum(nf: GarsideNF) -> int:
    return nf.infimum + nf.canonical_length
