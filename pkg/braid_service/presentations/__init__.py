"""
Positive presentations of the braid group from chord graphs.
"""

from braid_service.presentations.circuits import circuit_relation
from braid_service.presentations.generator import (
    ArtinExpression,
    artin_presentation,
    band_presentation,
    express_artin_generator,
    generate_presentation,
)
from braid_service.presentations.oracle import RelationOracle, search_relation
from braid_service.presentations.spanning import spanning_tree, tree_path
from braid_service.presentations.tree_relations import tree_relations

__all__ = [
    "ArtinExpression",
    "RelationOracle",
    "artin_presentation",
    "band_presentation",
    "circuit_relation",
    "express_artin_generator",
    "generate_presentation",
    "search_relation",
    "spanning_tree",
    "tree_path",
    "tree_relations",
]
