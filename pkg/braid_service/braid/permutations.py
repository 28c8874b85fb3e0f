"""
Permutation braids (simple elements) as tuples.

A permutation p of 0..n-1 stands for the positive braid in which each pair of
strands crosses at most once. Products follow braid order: the word
σ_{i1}⋯σ_{ik} corresponds to s_{i1}∘⋯∘s_{ik} with (p∘q)(x) = p(q(x)).
Descent sets use 0-based generator indices (σ_{i+1} ↔ i).
"""

from __future__ import annotations

from functools import lru_cache

Perm = tuple[int, ...]


@lru_cache(maxsize=None)
def identity(n: int) -> Perm:
    return tuple(range(n))


@lru_cache(maxsize=None)
def half_twist(n: int) -> Perm:
    return tuple(range(n - 1, -1, -1))


def compose(p: Perm, q: Perm) -> Perm:
    return tuple(p[x] for x in q)


def inverse(p: Perm) -> Perm:
    inv = [0] * len(p)
    for i, x in enumerate(p):
        inv[x] = i
    return tuple(inv)


def swap_positions(p: Perm, i: int) -> Perm:
    """p ∘ s_i."""
    q = list(p)
    q[i], q[i + 1] = q[i + 1], q[i]
    return tuple(q)


def swap_values(p: Perm, i: int) -> Perm:
    """s_i ∘ p."""
    return tuple(i + 1 if x == i else i if x == i + 1 else x for x in p)


@lru_cache(maxsize=None)
def right_descents(p: Perm) -> frozenset[int]:
    """Finishing set: generators that right-divide the permutation braid."""
    return frozenset(i for i in range(len(p) - 1) if p[i] > p[i + 1])


@lru_cache(maxsize=None)
def left_descents(p: Perm) -> frozenset[int]:
    """Starting set: generators that left-divide the permutation braid."""
    return right_descents(inverse(p))


def tau(p: Perm) -> Perm:
    """Conjugation by Δ: Δ·p·Δ⁻¹."""
    n = len(p)
    return tuple(n - 1 - p[n - 1 - x] for x in range(n))


def generator(n: int, i: int) -> Perm:
    return swap_positions(identity(n), i)


def from_positive_letters(n: int, letters) -> Perm:
    """Permutation image of a positive word given as 1-based indices."""
    p = identity(n)
    for letter in letters:
        p = swap_positions(p, letter - 1)
    return p


def reduced_word(p: Perm) -> list[int]:
    """A reduced positive word (1-based indices) for a permutation braid."""
    word: list[int] = []
    q = p
    while True:
        descents = right_descents(q)
        if not descents:
            break
        i = min(descents)
        word.append(i + 1)
        q = swap_positions(q, i)
    word.reverse()
    return word


def inversions(p: Perm) -> int:
    n = len(p)
    return sum(1 for i in range(n) for j in range(i + 1, n) if p[i] > p[j])
