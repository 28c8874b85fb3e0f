"""
Chord graphs: crossings, arrangements, pseudo faces, straightening and classification.
"""

from braid_service.graphs.arrangement import Arrangement, build_arrangement
from braid_service.graphs.classify import classify_graph, is_artin_graph, is_inner_complete
from braid_service.graphs.crossings import chords_cross, crossing_pairs, has_crossings
from braid_service.graphs.pseudo_faces import PseudoFaceWitness, is_linearly_spanned, pseudo_face_witness
from braid_service.graphs.straighten import StraightenedTree, insertion_order, straighten_tree

__all__ = [
    "Arrangement",
    "PseudoFaceWitness",
    "StraightenedTree",
    "build_arrangement",
    "chords_cross",
    "classify_graph",
    "crossing_pairs",
    "has_crossings",
    "insertion_order",
    "is_artin_graph",
    "is_inner_complete",
    "is_linearly_spanned",
    "pseudo_face_witness",
    "straighten_tree",
]
