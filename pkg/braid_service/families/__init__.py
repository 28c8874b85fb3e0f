"""
Counterexample family registry initialization.

All families are registered here on import.
"""

from braid_service.families.base import Family, FamilyInstance
from braid_service.families.crossing import (
    Crossing1MissingFamily,
    Crossing2MissingAFamily,
    Crossing2MissingBFamily,
    Crossing3MissingFamily,
)
from braid_service.families.fixtures import MULTI_EDGE_GRAPHS, open_three_vertex_presentation
from braid_service.families.planar import (
    OneTriangleFamily,
    RectangleFamily,
    StarFanFamily,
    TwoTrianglesFamily,
)
from braid_service.families.polygons import MGonFamily, PseudoMGonFamily
from braid_service.families.registry import FamilyRegistry
from braid_service.families.verify import (
    LengthLemmaReport,
    NonEquivalenceReport,
    check_length_lemma_hypotheses,
    replay_chain,
    verify_group_equality,
    verify_non_positive_equivalence,
)

# Create and populate the global family registry
family_registry = FamilyRegistry()
family_registry.register(StarFanFamily())
family_registry.register(RectangleFamily())
family_registry.register(OneTriangleFamily())
family_registry.register(TwoTrianglesFamily())
family_registry.register(Crossing3MissingFamily())
family_registry.register(Crossing2MissingAFamily())
family_registry.register(Crossing2MissingBFamily())
family_registry.register(Crossing1MissingFamily())
family_registry.register(MGonFamily())
family_registry.register(PseudoMGonFamily())


def family_instance(family: str, k: int, m: int | None = None) -> FamilyInstance:
    """Build an instance of a registered family, e.g. ``family_instance("MGon", 2, m=5)``."""
    return family_registry.instance(family, k, m)


__all__ = [
    "family_registry",
    "family_instance",
    "FamilyRegistry",
    "Family",
    "FamilyInstance",
    "LengthLemmaReport",
    "NonEquivalenceReport",
    "MULTI_EDGE_GRAPHS",
    "open_three_vertex_presentation",
    "check_length_lemma_hypotheses",
    "replay_chain",
    "verify_group_equality",
    "verify_non_positive_equivalence",
]
