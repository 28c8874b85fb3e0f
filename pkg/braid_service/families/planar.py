"""
Planar four-vertex families.

All chords lie above the axis, so every supplementary chord is a band
generator and each chain step is a triangle, commutation or braid relation.
"""

from __future__ import annotations

from typing import Optional

from braid_service.families.base import Family, FamilyInstance, power as p
from braid_service.models import Chord


class StarFanFamily(Family):
    """A vertex adjacent to the three others: W = a1 a2 a3^k a1, W' = a2 a3^k a1 a2."""

    name = "StarFan"
    display_name = "Star"

    def build(self, k: int, m: Optional[int]) -> FamilyInstance:
        names = {"a1": Chord(1, 4), "a2": Chord(2, 4), "a3": Chord(3, 4)}
        supplementary = {"lam": Chord(1, 2), "mu": Chord(1, 3), "nu": Chord(2, 3)}
        w = ["a1", "a2"] + p("a3", k) + ["a1"]
        w_prime = ["a2"] + p("a3", k) + ["a1", "a2"]
        chain = [
            ["a2", "lam"] + p("a3", k) + ["a1"],
            ["a2"] + p("a3", k) + ["lam", "a1"],
        ]
        return self._instance(k, 4, names, supplementary, w, w_prime, 3, chain)


class RectangleFamily(Family):
    """A four-cycle: W = a1 a2^k a3, W' = a3 a4^k a1."""

    name = "Rectangle"
    display_name = "Rectangle"

    def build(self, k: int, m: Optional[int]) -> FamilyInstance:
        names = {"a1": Chord(1, 4), "a2": Chord(3, 4), "a3": Chord(2, 3), "a4": Chord(1, 2)}
        supplementary = {"lam": Chord(2, 4), "mu": Chord(1, 3)}
        w = ["a1"] + p("a2", k) + ["a3"]
        w_prime = ["a3"] + p("a4", k) + ["a1"]
        chain = [
            ["a1"] + p("a2", k - 1) + ["a3", "lam"],
            ["a1", "a3"] + p("lam", k),
            ["a3", "a1"] + p("lam", k),
            ["a3", "a4", "a1"] + p("lam", k - 1),
        ]
        return self._instance(k, 4, names, supplementary, w, w_prime, 2, chain)


class OneTriangleFamily(Family):
    """A triangle with a pendant edge."""

    name = "OneTriangle"
    display_name = "One triangle"

    def build(self, k: int, m: Optional[int]) -> FamilyInstance:
        names = {"a1": Chord(1, 2), "a2": Chord(2, 3), "a3": Chord(3, 4), "a4": Chord(2, 4)}
        supplementary = {"lam": Chord(1, 3), "mu": Chord(1, 4)}
        a2k, a3k = p("a2", k), p("a3", k)
        w = ["a1", "a2", "a3", "a4", "a1"] + a2k + ["a3", "a4"]
        w_prime = ["a2"] + a3k + ["a4", "a1", "a2", "a3", "a4", "a1"]
        chain = [
            ["a1", "a2", "a3", "a1", "mu"] + a2k + ["a3", "a4"],
            ["a1", "a2", "a1", "a3", "mu"] + a2k + ["a3", "a4"],
            ["a2", "a1", "a2", "a3", "mu"] + a2k + ["a3", "a4"],
            ["a2", "a1", "a2", "a3"] + a2k + ["mu", "a3", "a4"],
            ["a2", "a1"] + a3k + ["a2", "a3", "mu", "a3", "a4"],
            ["a2", "a1"] + a3k + ["a2", "mu", "a3", "mu", "a4"],
            ["a2", "a1"] + a3k + ["mu", "a2", "a3", "mu", "a4"],
            ["a2", "a1"] + a3k + ["mu", "a2", "a3", "a4", "a1"],
            ["a2"] + a3k + ["a1", "mu", "a2", "a3", "a4", "a1"],
        ]
        return self._instance(k, 4, names, supplementary, w, w_prime, 7, chain)


class TwoTrianglesFamily(Family):
    """Two triangles sharing an edge: W = a2 a3^k a5 a2 a3, W' = a4 a1^k a5 a4 a1."""

    name = "TwoTriangles"
    display_name = "Two triangles"

    def build(self, k: int, m: Optional[int]) -> FamilyInstance:
        names = {
            "a1": Chord(3, 4),
            "a2": Chord(2, 3),
            "a3": Chord(1, 2),
            "a4": Chord(1, 4),
            "a5": Chord(2, 4),
        }
        supplementary = {"lam": Chord(1, 3)}
        lk, a1k = p("lam", k), p("a1", k)
        w = ["a2"] + p("a3", k) + ["a5", "a2", "a3"]
        w_prime = ["a4"] + a1k + ["a5", "a4", "a1"]
        chain = [
            lk + ["a2", "a5", "a2", "a3"],
            lk + ["a2", "a5", "a3", "lam"],
            lk + ["a2", "a4", "a5", "lam"],
            lk + ["a4", "a2", "a5", "lam"],
            ["a4"] + a1k + ["a2", "a5", "lam"],
            ["a4"] + a1k + ["a5", "a1", "lam"],
        ]
        return self._instance(k, 4, names, supplementary, w, w_prime, 4, chain)
