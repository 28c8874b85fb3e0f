"""
Mechanical checks of counterexample family instances.
"""

from __future__ import annotations

import logging
import time
from dataclasses import dataclass, field
from typing import Optional, Sequence

from braid_service.braid.garside import equals
from braid_service.braid.half_twist import eval_positive_word
from braid_service.errors import SearchCapExceeded
from braid_service.families.base import FamilyInstance
from braid_service.models import ArtinWord, PositiveWord, Relation
from braid_service.monoid.expressions import positive_expressions
from braid_service.monoid.rewriting import PositiveVerdict, pos_equiv

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ChainStep:
    index: int
    word: str
    equal_to_w: bool

    def to_dict(self) -> dict:
        return {"index": self.index, "word": self.word, "equal_to_W": self.equal_to_w}


def _evaluate(inst: FamilyInstance, word: Sequence[str]) -> ArtinWord:
    return eval_positive_word(word, inst.all_generators(), inst.n)


def replay_chain(inst: FamilyInstance) -> list[ChainStep]:
    """Check every word of the derivation chain against W."""
    w = _evaluate(inst, inst.w)
    return [
        ChainStep(i, inst.render(step), equals(w, _evaluate(inst, step)))
        for i, step in enumerate(inst.chain)
    ]


def verify_group_equality(inst: FamilyInstance) -> bool:
    """W = W' in the braid group, with every chain word equal to W as well."""
    if not equals(_evaluate(inst, inst.w), _evaluate(inst, inst.w_prime)):
        return False
    steps = replay_chain(inst)
    for step in steps:
        if not step.equal_to_w:
            logger.warning("%s k=%d: chain word %d (%s) differs from W", inst.family, inst.k, step.index, step.word)
    return all(step.equal_to_w for step in steps)


@dataclass
class NonEquivalenceReport:
    family: str
    k: int
    word_length: int
    max_relation_length: int
    verdict: PositiveVerdict
    elapsed: float = 0.0

    @property
    def precondition_met(self) -> bool:
        """|W| is longer than every relation."""
        return self.word_length > self.max_relation_length

    def to_dict(self) -> dict:
        return {
            "family": self.family,
            "k": self.k,
            "word_length": self.word_length,
            "max_relation_length": self.max_relation_length,
            "precondition_met": self.precondition_met,
            "verdict": self.verdict.to_dict(),
            "elapsed_seconds": round(self.elapsed, 3),
        }


def verify_non_positive_equivalence(
    inst: FamilyInstance,
    relations: Optional[Sequence[Relation]] = None,
    cap: Optional[int] = None,
) -> NonEquivalenceReport:
    """
    Decide W ≐ W' under ``relations`` (the generated presentation by default).

    A truncated search is reported as inconclusive.
    """
    if relations is None:
        from braid_service.presentations.generator import generate_presentation

        relations = generate_presentation(inst.graph).relations
    relations = list(relations)
    started = time.perf_counter()
    verdict = pos_equiv(inst.w, inst.w_prime, relations, cap=cap)
    report = NonEquivalenceReport(
        family=inst.family,
        k=inst.k,
        word_length=inst.length,
        max_relation_length=max((r.length for r in relations), default=0),
        verdict=verdict,
        elapsed=time.perf_counter() - started,
    )
    if not report.precondition_met:
        logger.info(
            "%s k=%d: |W|=%d does not exceed the longest relation (%d)",
            inst.family, inst.k, report.word_length, report.max_relation_length,
        )
    logger.info("%s k=%d: W vs W' is %s (%d words explored)", inst.family, inst.k, verdict.status.value, verdict.explored)
    return report


@dataclass
class LengthLemmaReport:
    """
    Hypotheses of the length lemma for W = aVb and W' = a'V'b'.

    ``prefix_obstructed`` is "aV != a'P for all positive P" and
    ``prefix_obstructed_swapped`` the same with W and W' exchanged;
    likewise for suffixes. Item (iii) holds when one reading of each side does.
    """

    family: str
    k: int
    group_equal: bool
    length: int
    k_plus_c: int
    prefix_obstructed: Optional[bool] = None
    prefix_obstructed_swapped: Optional[bool] = None
    suffix_obstructed: Optional[bool] = None
    suffix_obstructed_swapped: Optional[bool] = None
    notes: list[str] = field(default_factory=list)

    @property
    def length_ok(self) -> bool:
        return self.length == self.k_plus_c

    @property
    def inconclusive(self) -> bool:
        return None in (
            self.prefix_obstructed,
            self.prefix_obstructed_swapped,
            self.suffix_obstructed,
            self.suffix_obstructed_swapped,
        )

    @property
    def obstructions_hold(self) -> bool:
        prefix = bool(self.prefix_obstructed) or bool(self.prefix_obstructed_swapped)
        suffix = bool(self.suffix_obstructed) or bool(self.suffix_obstructed_swapped)
        return prefix and suffix

    @property
    def holds(self) -> bool:
        return self.group_equal and self.length_ok and self.obstructions_hold

    def to_dict(self) -> dict:
        return {
            "family": self.family,
            "k": self.k,
            "i_group_equal": self.group_equal,
            "ii_length": {"W": self.length, "k_plus_c": self.k_plus_c, "ok": self.length_ok},
            "iii": {
                "prefix": self.prefix_obstructed,
                "prefix_swapped": self.prefix_obstructed_swapped,
                "suffix": self.suffix_obstructed,
                "suffix_swapped": self.suffix_obstructed_swapped,
                "ok": self.obstructions_hold,
            },
            "holds": self.holds,
            "notes": list(self.notes),
        }


def _no_prefix_cofactor(inst: FamilyInstance, head: PositiveWord, first: str, cap: Optional[int]) -> bool:
    """True iff no positive P has ``head`` = first · P."""
    target = _evaluate(inst, (first,)).inverse() * _evaluate(inst, head)
    return not positive_expressions(target, inst.generators, len(head) - 1, cap)


def _no_suffix_cofactor(inst: FamilyInstance, tail: PositiveWord, last: str, cap: Optional[int]) -> bool:
    """True iff no positive Q has ``tail`` = Q · last."""
    target = _evaluate(inst, tail) * _evaluate(inst, (last,)).inverse()
    return not positive_expressions(target, inst.generators, len(tail) - 1, cap)


def check_length_lemma_hypotheses(inst: FamilyInstance, cap: Optional[int] = None) -> LengthLemmaReport:
    """Evaluate items (i), (ii) and (iii) of the length lemma for one instance."""
    w, wp = inst.w, inst.w_prime
    report = LengthLemmaReport(
        family=inst.family,
        k=inst.k,
        group_equal=verify_group_equality(inst),
        length=len(w),
        k_plus_c=inst.k + inst.c,
    )
    if len(wp) != len(w):
        report.notes.append(f"|W'| = {len(wp)} differs from |W| = {len(w)}")
    try:
        report.prefix_obstructed = _no_prefix_cofactor(inst, w[:-1], wp[0], cap)
        report.prefix_obstructed_swapped = _no_prefix_cofactor(inst, wp[:-1], w[0], cap)
        report.suffix_obstructed = _no_suffix_cofactor(inst, w[1:], wp[-1], cap)
        report.suffix_obstructed_swapped = _no_suffix_cofactor(inst, wp[1:], w[-1], cap)
    except SearchCapExceeded as exc:
        report.notes.append(f"inconclusive: {exc}")
        logger.info("%s k=%d: length lemma check stopped at the search cap", inst.family, inst.k)
    return report
