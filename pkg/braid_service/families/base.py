"""
Base counterexample family interface.
"""

from __future__ import annotations

from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Optional, Sequence

from braid_service.models import Chord, ChordGraph, PositiveWord


@dataclass(frozen=True)
class FamilyInstance:
    """
    One member of a counterexample family.

    Words are stored over chord labels; ``names`` and ``supplementary`` map the
    figure names (a1, a2, ..., lam, mu, ...) to chords so words can be rendered back.
    ``chain`` is the derivation W = ... = W' through the supplementary chords.
    """

    family: str
    k: int
    graph: ChordGraph
    names: dict[str, Chord]
    w: PositiveWord
    w_prime: PositiveWord
    c: int
    supplementary: dict[str, Chord] = field(default_factory=dict)
    chain: tuple[PositiveWord, ...] = ()
    m: Optional[int] = None

    @property
    def generators(self) -> dict[str, Chord]:
        return self.graph.generators

    @property
    def length(self) -> int:
        return len(self.w)

    @property
    def n(self) -> int:
        return self.graph.n

    def all_generators(self) -> dict[str, Chord]:
        gens = dict(self.generators)
        gens.update({c.label: c for c in self.supplementary.values()})
        return gens

    def render(self, word: Sequence[str]) -> str:
        """Word in figure names, e.g. ``a1 a2 a3 a3 a1``."""
        by_label = {c.label: name for name, c in {**self.names, **self.supplementary}.items()}
        return " ".join(by_label.get(label, label) for label in word)

    def to_dict(self) -> dict:
        return {
            "family": self.family,
            "k": self.k,
            "m": self.m,
            "graph": self.graph.to_dict(),
            "names": {name: c.label for name, c in self.names.items()},
            "supplementary": {name: c.label for name, c in self.supplementary.items()},
            "W": self.render(self.w),
            "W_prime": self.render(self.w_prime),
            "c": self.c,
            "chain": [self.render(step) for step in self.chain],
        }


class Family(ABC):
    """Abstract base class for counterexample families."""

    name: str = "base"
    display_name: str = "Base Family"
    parametric: bool = False

    def instance(self, k: int, m: Optional[int] = None) -> FamilyInstance:
        """
        Build the instance for growth parameter k (and polygon size m).

        Raises:
            ValueError: If k < 1, or m is missing or below 4 for a parametric family.
        """
        if k < 1:
            raise ValueError(f"Growth parameter k must be at least 1, got {k}")
        if self.parametric:
            if m is None or m < 4:
                raise ValueError(f"Family {self.name} needs m >= 4, got {m}")
        return self.build(k, m)

    @abstractmethod
    def build(self, k: int, m: Optional[int]) -> FamilyInstance:
        ...

    def _instance(
        self,
        k: int,
        n: int,
        names: dict[str, Chord],
        supplementary: dict[str, Chord],
        w: list[str],
        w_prime: list[str],
        c: int,
        chain: list[list[str]],
        m: Optional[int] = None,
    ) -> FamilyInstance:
        """Translate words over figure names into chord labels."""
        every = {**names, **supplementary}

        def labels(word: list[str]) -> PositiveWord:
            return tuple(every[x].label for x in word)

        return FamilyInstance(
            family=self.name if m is None else f"{self.name}({m})",
            k=k,
            graph=ChordGraph(n, tuple(names.values())),
            names=dict(names),
            w=labels(w),
            w_prime=labels(w_prime),
            c=c,
            supplementary=dict(supplementary),
            chain=tuple(labels(step) for step in [w] + chain + [w_prime]),
            m=m,
        )


def power(name: str, k: int) -> list[str]:
    return [name] * k
