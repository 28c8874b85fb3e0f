"""
Base relation template interface.
"""

from __future__ import annotations

from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Optional

from braid_service.models import PositiveWord, Relation

Chain = tuple[str, ...]


@dataclass(frozen=True)
class TemplateContext:
    """Configuration of a new edge against the existing part of the graph.

    ``chains`` lists candidate tree paths β_1..β_m, β_1 next to β and β_m next
    to α; ``splits`` lists (β-chain, γ-chain) pairs cut from those paths.
    ``circuit_paths`` lists the circuit's tree edges read from one end of the
    closing edge to the other.
    """

    alpha: str
    beta: Optional[str] = None
    pivot: Optional[str] = None
    crossing: bool = False
    chains: tuple[Chain, ...] = ()
    splits: tuple[tuple[Chain, Chain], ...] = ()
    circuit_paths: tuple[Chain, ...] = ()


class RelationTemplate(ABC):
    """Abstract base class for positive relation templates."""

    name: str = "base"
    display_name: str = "Base Template"
    kind: str = "tree"

    @abstractmethod
    def is_suitable_for(self, ctx: TemplateContext) -> bool:
        """Check if this template applies to the configuration."""
        ...

    @abstractmethod
    def instantiate(self, ctx: TemplateContext) -> list[Relation]:
        """Candidate relations, not yet checked for soundness."""
        ...

    def _relation(self, lhs, rhs, chain=(), notes=()) -> Relation:
        return Relation(tuple(lhs), tuple(rhs), self.name, tuple(chain), tuple(notes))

    def _with_mirrors(self, candidates: list[Relation]) -> list[Relation]:
        """Append the word-reversed variant of each candidate."""
        mirrored = [
            Relation(
                tuple(reversed(r.lhs)),
                tuple(reversed(r.rhs)),
                r.template,
                r.chain,
                r.notes + ("mirrored",),
            )
            for r in candidates
        ]
        return candidates + mirrored


def join(*parts) -> PositiveWord:
    word: list[str] = []
    for part in parts:
        if isinstance(part, str):
            word.append(part)
        else:
            word.extend(part)
    return tuple(word)
