"""
Parametric polygon families on m and m + 1 vertices.
"""

from __future__ import annotations

from typing import Optional

from braid_service.families.base import Family, FamilyInstance, power as p
from braid_service.models import Chord


def _run(first: int, last: int) -> list[str]:
    return [f"a{j}" for j in range(first, last + 1)]


class MGonFamily(Family):
    """
    An m-cycle: a1 = 1-m, a_j = (m+1-j)-(m+2-j) for j >= 2.

    With i = m - 2, W = a1 ... a_i^k ... a_(m-1) and W' = a_(i+1) ... a_(m-1) a_m^k a1 ... a_(i-1).
    Both read through lam = 1-3 as lam^(k-1) times the cyclic product of m - 1
    consecutive edges. For m = 4 this is the rectangle pair.
    """

    name = "MGon"
    display_name = "m-gon"
    parametric = True

    def build(self, k: int, m: Optional[int]) -> FamilyInstance:
        i = m - 2
        names = {"a1": Chord(1, m)}
        for j in range(2, m + 1):
            names[f"a{j}"] = Chord(m + 1 - j, m + 2 - j)
        supplementary = {"lam": Chord(1, 3)}
        w = _run(1, i - 1) + p(f"a{i}", k) + _run(i + 1, m - 1)
        w_prime = _run(i + 1, m - 1) + p(f"a{m}", k) + _run(1, i - 1)
        lam = p("lam", k - 1)
        chain = [
            lam + _run(1, m - 1),
            lam + _run(i + 1, m) + _run(1, i - 1),
        ]
        return self._instance(k, m, names, supplementary, w, w_prime, m - 2, chain, m=m)


class PseudoMGonFamily(Family):
    """
    An m-cycle with one edge swapped for a chord crossing a1, on m + 1 vertices.

    a1 = 1-m, a_j = (m+1-j)-(m+2-j) for 2 <= j <= m-1, a_m = 2-(m+1).
    """

    name = "PseudoMGon"
    display_name = "Pseudo m-gon"
    parametric = True

    def build(self, k: int, m: Optional[int]) -> FamilyInstance:
        names = {"a1": Chord(1, m)}
        for j in range(2, m):
            names[f"a{j}"] = Chord(m + 1 - j, m + 2 - j)
        names[f"a{m}"] = Chord(2, m + 1)
        supplementary = {
            "lam": Chord(m, m + 1),
            "mu": Chord(1, m + 1),
            "nu": Chord(1, 2),
            "a'": Chord(3, m + 1),
            "tau": Chord(2, 4),
        }
        am = f"a{m}"
        a2k = p("a2", k)
        middle = a2k + _run(3, m - 1)
        w = _run(2, m) + ["a1"] + middle + [am, "a1"] + _run(2, m - 2)
        w_prime = _run(3, m) + ["a1"] + middle + [am, "a1"] + _run(2, m - 1)
        chain = [
            _run(3, m) + ["lam", "a1"] + middle + [am, "a1"] + _run(2, m - 2),
            _run(3, m) + ["a1", "mu"] + middle + [am, "a1"] + _run(2, m - 2),
            _run(3, m) + ["a1"] + middle + ["mu", am, "a1"] + _run(2, m - 2),
            _run(3, m) + ["a1"] + middle + [am, "nu", "a1"] + _run(2, m - 2),
        ]
        return self._instance(k, m + 1, names, supplementary, w, w_prime, 3 * m - 4, chain, m=m)
