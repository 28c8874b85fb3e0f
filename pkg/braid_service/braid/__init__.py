"""
Braid words, the Garside normal form oracle and chord half twists.
"""

from braid_service.braid.garside import (
    delta_word,
    divides,
    equals,
    is_left_weighted,
    multiply,
    normal_form,
    permutation_image,
    to_word,
)
from braid_service.braid.half_twist import (
    chord_element,
    conjugate_edge,
    eval_positive_word,
    find_chord,
    half_twist_word,
)

__all__ = [
    "chord_element",
    "conjugate_edge",
    "delta_word",
    "divides",
    "equals",
    "eval_positive_word",
    "find_chord",
    "half_twist_word",
    "is_left_weighted",
    "multiply",
    "normal_form",
    "permutation_image",
    "to_word",
]
