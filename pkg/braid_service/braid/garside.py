"""
Left-greedy Garside normal form for braid words.

Each braid is Δ^p · A_1 ⋯ A_r with simple factors A_i that are neither the
identity nor Δ, and consecutive pairs left-weighted: L(A_{i+1}) ⊆ R(A_i).
Two words represent the same braid iff their normal forms coincide, which
makes this module the equality oracle of the whole service.
"""

from __future__ import annotations

from typing import Iterable

from braid_service.braid import permutations as perms
from braid_service.errors import InvalidWordError
from braid_service.models import ArtinWord, DivisionSide, GarsideNF

Perm = perms.Perm


def _normalize_pair(a: Perm, b: Perm) -> tuple[Perm, Perm]:
    """Move letters from the front of ``b`` to the back of ``a`` until the pair is left-weighted."""
    while True:
        movable = _movable_letter(a, b)
        if movable is None:
            return a, b
        a = perms.swap_positions(a, movable)
        b = perms.swap_values(b, movable)


def _movable_letter(a: Perm, b: Perm):
    """Smallest generator starting b that a can absorb, or None."""
    candidates = perms.left_descents(b) - perms.right_descents(a)
    return min(candidates) if candidates else None


class _NormalFormBuilder:
    """Mutable accumulator; right multiplication keeps the factor list left-weighted."""

    def __init__(self, n: int, infimum: int = 0, factors: Iterable[Perm] = ()) -> None:
        self.n = n
        self.infimum = infimum
        self.factors: list[Perm] = list(factors)
        self._identity = perms.identity(n)
        self._delta = perms.half_twist(n)

    def multiply_delta_inverse(self) -> None:
        # X·Δ⁻¹ = Δ⁻¹·τ(X)
        self.infimum -= 1
        self.factors = [perms.tau(f) for f in self.factors]

    def multiply_simple(self, x: Perm) -> None:
        self.factors.append(x)
        self._renormalize()

    def multiply_letter(self, letter: int) -> None:
        i = abs(letter) - 1
        if letter > 0:
            self.multiply_simple(perms.generator(self.n, i))
        else:
            # σ_i⁻¹ = Δ⁻¹ · (Δ σ_i⁻¹)
            self.multiply_delta_inverse()
            self.multiply_simple(perms.swap_positions(self._delta, i))

    def _renormalize(self) -> None:
        factors = self.factors
        changed = True
        while changed:
            changed = False
            for j in range(len(factors) - 2, -1, -1):
                a, b = _normalize_pair(factors[j], factors[j + 1])
                if a != factors[j]:
                    factors[j], factors[j + 1] = a, b
                    changed = True
        lead = 0
        while lead < len(factors) and factors[lead] == self._delta:
            lead += 1
        tail = len(factors)
        while tail > lead and factors[tail - 1] == self._identity:
            tail -= 1
        self.infimum += lead
        self.factors = factors[lead:tail]

    def freeze(self) -> GarsideNF:
        return GarsideNF(self.n, self.infimum, tuple(self.factors))


def normal_form(word: ArtinWord) -> GarsideNF:
    """Return the left-greedy normal form of ``word``."""
    builder = _NormalFormBuilder(word.strands)
    for letter in word.letters:
        builder.multiply_letter(letter)
    return builder.freeze()


def multiply(nf: GarsideNF, word: ArtinWord) -> GarsideNF:
    """Normal form of ``nf · word``, computed incrementally."""
    if word.strands != nf.strands:
        raise InvalidWordError(f"Strand count mismatch: {nf.strands} vs {word.strands}")
    builder = _NormalFormBuilder(nf.strands, nf.infimum, nf.factors)
    for letter in word.letters:
        builder.multiply_letter(letter)
    return builder.freeze()


def delta_word(n: int) -> ArtinWord:
    """Positive word for Δ: (σ1)(σ2σ1)⋯(σ_{n-1}⋯σ1)."""
    letters: list[int] = []
    for top in range(1, n):
        letters.extend(range(top, 0, -1))
    return ArtinWord(n, tuple(letters))


def to_word(nf: GarsideNF) -> ArtinWord:
    """An Artin word representing a normal form (Δ powers expanded)."""
    delta = delta_word(nf.strands)
    power = delta if nf.infimum >= 0 else delta.inverse()
    letters: list[int] = list(power.letters) * abs(nf.infimum)
    for factor in nf.factors:
        letters.extend(perms.reduced_word(factor))
    return ArtinWord(nf.strands, tuple(letters))


def is_left_weighted(nf: GarsideNF) -> bool:
    identity = perms.identity(nf.strands)
    delta = perms.half_twist(nf.strands)
    if any(f in (identity, delta) for f in nf.factors):
        return False
    return all(
        perms.left_descents(b) <= perms.right_descents(a)
        for a, b in zip(nf.factors, nf.factors[1:])
    )


def permutation_image(word: ArtinWord) -> Perm:
    """Image of the braid in the symmetric group."""
    p = perms.identity(word.strands)
    for letter in word.letters:
        p = perms.swap_positions(p, abs(letter) - 1)
    return p


def _check_strands(w1: ArtinWord, w2: ArtinWord) -> None:
    if w1.strands != w2.strands:
        raise InvalidWordError(f"Strand count mismatch: {w1.strands} vs {w2.strands}")


def equals(w1: ArtinWord, w2: ArtinWord) -> bool:
    """True iff both words represent the same braid."""
    _check_strands(w1, w2)
    return normal_form(w1) == normal_form(w2)


def divides(d: ArtinWord, w: ArtinWord, side: DivisionSide = DivisionSide.LEFT) -> bool:
    """True iff d⁻¹·w (Left) or w·d⁻¹ (Right) is a positive braid."""
    _check_strands(d, w)
    quotient = d.inverse() * w if DivisionSide(side) is DivisionSide.LEFT else w * d.inverse()
    return normal_form(quotient).infimum >= 0
