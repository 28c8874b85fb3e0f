"""
Positive equivalence by exhaustive rewriting over homogeneous relations.

Two positive words are positively equivalent when one is obtained from the
other by a finite sequence of single relation applications. Relations are
used in both directions at every position; since every relation is
homogeneous, a class lives inside the finite set of words of one length and
its closure terminates.
"""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterator, Optional, Sequence

from braid_service.models import PositiveWord, Relation

logger = logging.getLogger(__name__)

_PROGRESS_EVERY = 100_000


class Verdict(str, Enum):
    EQUIVALENT = "equivalent"
    NOT_EQUIVALENT = "not_equivalent"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class RewriteStep:
    """One relation application: ``before`` becomes ``after`` by replacing at ``position``."""

    before: PositiveWord
    after: PositiveWord
    relation: Relation
    position: int
    forward: bool

    def to_dict(self) -> dict:
        return {
            "before": list(self.before),
            "after": list(self.after),
            "relation": str(self.relation),
            "position": self.position,
            "direction": "lhs->rhs" if self.forward else "rhs->lhs",
        }


@dataclass
class RewriteClass:
    """Positive equivalence class of ``seed``, possibly truncated at the cap."""

    seed: PositiveWord
    relations: list[Relation]
    members: list[PositiveWord] = field(default_factory=list)
    traces: dict[PositiveWord, Optional[RewriteStep]] = field(default_factory=dict)
    closed: bool = True

    def __contains__(self, word) -> bool:
        return tuple(word) in self.traces

    def __len__(self) -> int:
        return len(self.members)

    @property
    def member_set(self) -> frozenset[PositiveWord]:
        return frozenset(self.members)

    def path_to(self, word: Sequence[str]) -> list[RewriteStep]:
        """Rewrite steps leading from the seed to ``word``.

        Raises:
            KeyError: If ``word`` is not a member.
        """
        word = tuple(word)
        if word not in self.traces:
            raise KeyError(f"{' '.join(word)} is not in the class of {' '.join(self.seed)}")
        steps: list[RewriteStep] = []
        step = self.traces[word]
        while step is not None:
            steps.append(step)
            step = self.traces[step.before]
        return list(reversed(steps))


def _check_homogeneous(relations: Sequence[Relation]) -> None:
    for relation in relations:
        if not relation.is_homogeneous:
            raise ValueError(f"Relation {relation} is not homogeneous")


def single_rewrites(word: PositiveWord, relations: Sequence[Relation]) -> Iterator[RewriteStep]:
    """All words one relation application away, in relation, direction, position order."""
    for relation in relations:
        for forward in (True, False):
            old, new = (relation.lhs, relation.rhs) if forward else (relation.rhs, relation.lhs)
            width = len(old)
            if width == 0 or old == new:
                continue
            for position in range(len(word) - width + 1):
                if word[position:position + width] == old:
                    after = word[:position] + new + word[position + width:]
                    yield RewriteStep(word, after, relation, position, forward)


def rewrite_class(
    w: Sequence[str],
    relations: Sequence[Relation],
    cap: Optional[int] = None,
    target: Optional[Sequence[str]] = None,
    depth_first: bool = False,
) -> RewriteClass:
    """
    Closure of ``w`` under single relation applications.

    Args:
        w: Seed word.
        relations: Homogeneous relations.
        cap: Member limit; the class is returned with ``closed=False`` when reached.
        target: Stop as soon as this word is reached.
        depth_first: Use a stack instead of a queue; the closed member set is the same.

    Raises:
        ValueError: If a relation is not homogeneous.
    """
    from config import config

    _check_homogeneous(relations)
    cap = cap or config.rewrite_cap
    seed = tuple(w)
    target = tuple(target) if target is not None else None
    result = RewriteClass(seed=seed, relations=list(relations))
    result.members.append(seed)
    result.traces[seed] = None
    if seed == target:
        return result

    pending: deque[PositiveWord] = deque([seed])
    while pending:
        word = pending.pop() if depth_first else pending.popleft()
        for step in single_rewrites(word, relations):
            if step.after in result.traces:
                continue
            if len(result.members) >= cap:
                result.closed = False
                logger.info("rewrite class of length %d truncated at %d members", len(seed), cap)
                return result
            result.traces[step.after] = step
            result.members.append(step.after)
            if len(result.members) % _PROGRESS_EVERY == 0:
                logger.info("rewrite class: %d members, %d pending", len(result.members), len(pending))
            if step.after == target:
                return result
            pending.append(step.after)
    return result


@dataclass
class PositiveVerdict:
    status: Verdict
    trace: list[RewriteStep] = field(default_factory=list)
    explored: int = 0

    def to_dict(self) -> dict:
        return {
            "status": self.status.value,
            "trace": [s.to_dict() for s in self.trace],
            "explored": self.explored,
        }


def pos_equiv(
    w1: Sequence[str],
    w2: Sequence[str],
    relations: Sequence[Relation],
    cap: Optional[int] = None,
) -> PositiveVerdict:
    """
    Decide w1 ≐ w2 under homogeneous ``relations``.

    NOT_EQUIVALENT is only returned from a closed class; a truncated search gives INCONCLUSIVE.
    """
    _check_homogeneous(relations)
    w1, w2 = tuple(w1), tuple(w2)
    if len(w1) != len(w2):
        return PositiveVerdict(Verdict.NOT_EQUIVALENT)
    found = rewrite_class(w1, relations, cap=cap, target=w2)
    if w2 in found:
        return PositiveVerdict(Verdict.EQUIVALENT, found.path_to(w2), len(found))
    if not found.closed:
        return PositiveVerdict(Verdict.INCONCLUSIVE, explored=len(found))
    return PositiveVerdict(Verdict.NOT_EQUIVALENT, explored=len(found))
