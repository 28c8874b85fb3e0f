"""
Relation templates for adding a leaf edge α to a linearly spanned tree.
"""

from __future__ import annotations

from braid_service.models import Relation
from braid_service.presentations.templates.base import RelationTemplate, TemplateContext, join


class CommuteTemplate(RelationTemplate):
    """α and β have no point in common: αβ = βα."""

    name = "Tree1"
    display_name = "Disjoint edges commute"

    def is_suitable_for(self, ctx: TemplateContext) -> bool:
        return ctx.beta is not None and ctx.pivot is None and not ctx.crossing

    def instantiate(self, ctx: TemplateContext) -> list[Relation]:
        return [self._relation((ctx.alpha, ctx.beta), (ctx.beta, ctx.alpha))]


class FanTemplate(RelationTemplate):
    """β_1..β_m meet α at one vertex; β_m is the pivot of the fan.

    αβ_mα = β_mαβ_m and αβ_jβ_mα = β_mαβ_jβ_m for j < m.
    """

    name = "Tree2"
    display_name = "Fan at a shared vertex"

    def is_suitable_for(self, ctx: TemplateContext) -> bool:
        return ctx.beta is not None and ctx.pivot is not None

    def instantiate(self, ctx: TemplateContext) -> list[Relation]:
        a, b, p = ctx.alpha, ctx.beta, ctx.pivot
        if b == p:
            return [self._relation((a, p, a), (p, a, p), chain=(p,))]
        return self._with_mirrors([self._relation((a, b, p, a), (p, a, b, p), chain=(b, p))])


class CrossingBraidTemplate(RelationTemplate):
    """α crosses β and the conjugate λ of α along β_1..β_m is adjacent to β (βλβ = λβλ)."""

    name = "Tree3"
    display_name = "Crossing, braid relation through λ"

    def is_suitable_for(self, ctx: TemplateContext) -> bool:
        return ctx.crossing and bool(ctx.chains)

    def instantiate(self, ctx: TemplateContext) -> list[Relation]:
        a, b = ctx.alpha, ctx.beta
        out = []
        for chain in ctx.chains:
            first, rest = chain[0], chain[1:]
            lhs = join(chain, a, b, first, chain, a, b, chain[:-1])
            rhs = join(rest, a, b, first, chain, a, b, chain)
            out.append(self._relation(lhs, rhs, chain=chain, notes=("eliminated λ",)))
        return self._with_mirrors(out)


class CrossingCommuteTemplate(RelationTemplate):
    """α crosses β and the conjugate λ of α commutes with β (βλ = λβ)."""

    name = "Tree4"
    display_name = "Crossing, commutation through λ"

    def is_suitable_for(self, ctx: TemplateContext) -> bool:
        return ctx.crossing and bool(ctx.chains)

    def instantiate(self, ctx: TemplateContext) -> list[Relation]:
        a, b = ctx.alpha, ctx.beta
        out = []
        for chain in ctx.chains:
            lhs = join(chain, a, b, chain)
            rhs = join(chain[1:], a, b, chain, a)
            out.append(self._relation(lhs, rhs, chain=chain, notes=("eliminated λ",)))
        return self._with_mirrors(out)


class CrossingPairTemplate(RelationTemplate):
    """α crosses β; conjugates λ of β and μ of α along two chains commute (λμ = μλ)."""

    name = "Tree5"
    display_name = "Crossing, two conjugates commute"

    def is_suitable_for(self, ctx: TemplateContext) -> bool:
        return ctx.crossing and bool(ctx.splits)

    def instantiate(self, ctx: TemplateContext) -> list[Relation]:
        a, b = ctx.alpha, ctx.beta
        out = []
        for betas, gammas in ctx.splits:
            lhs = join(gammas[1:], a, b, betas, gammas, a, b, betas[:-1])
            rhs = join(betas, gammas, a, b, betas, gammas)
            out.append(
                self._relation(lhs, rhs, chain=betas + gammas, notes=("eliminated λ", "eliminated μ"))
            )
        return self._with_mirrors(out)
