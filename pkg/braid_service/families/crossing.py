"""
Four-vertex families with one crossing.

The crossing edges a1 and a3 are the two diagonals 1-3 and 2-4 of the
inner-complete graph; the families differ in how many of its other four
edges are missing.
"""

from __future__ import annotations

from typing import Optional

from braid_service.families.base import Family, FamilyInstance, power as p
from braid_service.models import Chord


class Crossing3MissingFamily(Family):
    """W = a3 a1 a2^k a3 a1 a2, W' = a2 a3 a1 a2^k a3 a1."""

    name = "Crossing3Missing"
    display_name = "One crossing, three edges missing"

    def build(self, k: int, m: Optional[int]) -> FamilyInstance:
        names = {"a1": Chord(1, 3), "a2": Chord(2, 3), "a3": Chord(2, 4)}
        supplementary = {"lam": Chord(1, 2), "mu": Chord(1, 4), "nu": Chord(3, 4)}
        a2k = p("a2", k)
        w = ["a3", "a1"] + a2k + ["a3", "a1", "a2"]
        w_prime = ["a2", "a3", "a1"] + a2k + ["a3", "a1"]
        chain = [
            ["a3", "a1"] + a2k + ["a3", "lam", "a1"],
            ["a3", "a1"] + a2k + ["mu", "a3", "a1"],
            ["a3", "a1", "mu"] + a2k + ["a3", "a1"],
            ["a3", "nu", "a1"] + a2k + ["a3", "a1"],
        ]
        return self._instance(k, 4, names, supplementary, w, w_prime, 5, chain)


class Crossing2MissingAFamily(Family):
    """W = a4 a3 a2^(k+1) a3, W' = a1 a2^2 a1^k a4."""

    name = "Crossing2MissingA"
    display_name = "One crossing, two edges missing (cycle)"

    def build(self, k: int, m: Optional[int]) -> FamilyInstance:
        names = {"a1": Chord(1, 3), "a2": Chord(2, 3), "a3": Chord(2, 4), "a4": Chord(1, 4)}
        supplementary = {"lam": Chord(1, 2), "nu": Chord(3, 4)}
        a2k = p("a2", k)
        w = ["a4", "a3"] + p("a2", k + 1) + ["a3"]
        w_prime = ["a1", "a2", "a2"] + p("a1", k) + ["a4"]
        chain = [
            ["lam", "a4"] + p("a2", k + 1) + ["a3"],
            ["lam"] + a2k + ["a4", "a2", "a3"],
            ["lam"] + a2k + ["a4", "nu", "a2"],
            ["lam"] + a2k + ["a1", "a4", "a2"],
            ["lam"] + a2k + ["a1", "a2", "a4"],
            ["lam", "a1", "a2"] + p("a1", k) + ["a4"],
        ]
        return self._instance(k, 4, names, supplementary, w, w_prime, 4, chain)


class Crossing2MissingBFamily(Family):
    """W = a2 a3 a4^k a2, W' = a3 a4^k a2 a3."""

    name = "Crossing2MissingB"
    display_name = "One crossing, two edges missing (star)"

    def build(self, k: int, m: Optional[int]) -> FamilyInstance:
        names = {"a1": Chord(2, 4), "a2": Chord(1, 2), "a3": Chord(1, 3), "a4": Chord(1, 4)}
        supplementary = {"lam": Chord(2, 3), "nu": Chord(3, 4)}
        a4k = p("a4", k)
        w = ["a2", "a3"] + a4k + ["a2"]
        w_prime = ["a3"] + a4k + ["a2", "a3"]
        chain = [
            ["a3", "lam"] + a4k + ["a2"],
            ["a3"] + a4k + ["lam", "a2"],
        ]
        return self._instance(k, 4, names, supplementary, w, w_prime, 3, chain)


class Crossing1MissingFamily(Family):
    """W = a4 a5^k a2 a3, W' = a1 a4 a5^k a2."""

    name = "Crossing1Missing"
    display_name = "One crossing, one edge missing"

    def build(self, k: int, m: Optional[int]) -> FamilyInstance:
        names = {
            "a1": Chord(1, 3),
            "a2": Chord(1, 4),
            "a3": Chord(2, 4),
            "a4": Chord(2, 3),
            "a5": Chord(3, 4),
        }
        # The single missing edge plays the part of both lam and nu.
        supplementary = {"lam": Chord(1, 2)}
        a5k = p("a5", k)
        w = ["a4"] + a5k + ["a2", "a3"]
        w_prime = ["a1", "a4"] + a5k + ["a2"]
        chain = [
            ["a4"] + a5k + ["lam", "a2"],
            ["a4", "lam"] + a5k + ["a2"],
        ]
        return self._instance(k, 4, names, supplementary, w, w_prime, 3, chain)
