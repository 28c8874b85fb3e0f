"""
Relation template registry initialization.

All templates are registered here on import, in preference order.
"""

from braid_service.presentations.templates.base import RelationTemplate, TemplateContext
from braid_service.presentations.templates.circuit import CrossedCircuitTemplate, PolygonTemplate
from braid_service.presentations.templates.registry import TemplateRegistry
from braid_service.presentations.templates.tree import (
    CommuteTemplate,
    CrossingBraidTemplate,
    CrossingCommuteTemplate,
    CrossingPairTemplate,
    FanTemplate,
)

# Create and populate the global template registry
template_registry = TemplateRegistry()
template_registry.register(CommuteTemplate())
template_registry.register(FanTemplate())
template_registry.register(CrossingBraidTemplate())
template_registry.register(CrossingCommuteTemplate())
template_registry.register(CrossingPairTemplate())
template_registry.register(PolygonTemplate())
template_registry.register(CrossedCircuitTemplate())

__all__ = [
    "template_registry",
    "TemplateRegistry",
    "RelationTemplate",
    "TemplateContext",
    "CommuteTemplate",
    "FanTemplate",
    "CrossingBraidTemplate",
    "CrossingCommuteTemplate",
    "CrossingPairTemplate",
    "PolygonTemplate",
    "CrossedCircuitTemplate",
]
