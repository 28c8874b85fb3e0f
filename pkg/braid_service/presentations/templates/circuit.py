"""
Relation templates for closing a circuit with an edge α outside the spanning tree.
"""

from __future__ import annotations

from braid_service.models import Relation
from braid_service.presentations.templates.base import RelationTemplate, TemplateContext, join


class PolygonTemplate(RelationTemplate):
    """The circuit bounds a polygonal disk: αβ_1⋯β_{ℓ-1} = β_1⋯β_ℓ."""

    name = "Circuit1"
    display_name = "Circuit without crossings"
    kind = "circuit"

    def is_suitable_for(self, ctx: TemplateContext) -> bool:
        return bool(ctx.circuit_paths)

    def instantiate(self, ctx: TemplateContext) -> list[Relation]:
        out = []
        for path in ctx.circuit_paths:
            out.append(self._relation(join(ctx.alpha, path[:-1]), path, chain=path))
        return self._with_mirrors(out)


class CrossedCircuitTemplate(RelationTemplate):
    """The circuit meets other edges; the path splits into chains β_1* and β_2*.

    β_11⋯β_1l₁ β_2l₂ α β_2(l₂-1)⋯β_22 = β_12⋯β_1l₁ β_2l₂ α β_2(l₂-1)⋯β_22 β_21
    """

    name = "Circuit2"
    display_name = "Circuit with crossings"
    kind = "circuit"

    def is_suitable_for(self, ctx: TemplateContext) -> bool:
        return bool(ctx.circuit_paths)

    def instantiate(self, ctx: TemplateContext) -> list[Relation]:
        out = []
        for path in ctx.circuit_paths:
            for cut in range(1, len(path)):
                first = path[:cut]
                second = tuple(reversed(path[cut:]))
                top, middle = second[-1], tuple(reversed(second[1:-1]))
                lhs = join(first, top, ctx.alpha, middle)
                rhs = join(first[1:], top, ctx.alpha, middle, second[0])
                out.append(self._relation(lhs, rhs, chain=first + second))
        return self._with_mirrors(out)
