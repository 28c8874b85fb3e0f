"""
Positive relations for a linearly spanned tree, one new leaf edge at a time.
"""

from __future__ import annotations

import logging
from typing import Optional, Sequence

from braid_service.errors import NoSoundRelationError
from braid_service.graphs.arrangement import build_arrangement, vertex_node
from braid_service.graphs.crossings import chords_cross
from braid_service.models import Chord, ChordGraph, Relation
from braid_service.presentations.oracle import RelationOracle, search_relation
from braid_service.presentations.spanning import tree_graph, tree_path
from braid_service.presentations.templates import TemplateContext, template_registry

logger = logging.getLogger(__name__)


def first_sound(oracle: RelationOracle, candidates: Sequence[Relation]) -> Optional[Relation]:
    for relation in candidates:
        if relation.is_homogeneous and oracle.is_sound(relation.lhs, relation.rhs):
            return relation
    return None


def searched_relation(
    oracle: RelationOracle,
    template: str,
    alphabet: Sequence[str],
    required: Sequence[str],
    configuration: dict,
) -> Relation:
    """Fall back to the bounded relation search.

    Raises:
        NoSoundRelationError: If the search finds nothing up to the configured length.
    """
    from config import config

    found = search_relation(oracle, alphabet, required, config.fallback_relation_length, config.search_cap)
    if found is None:
        raise NoSoundRelationError(
            f"No sound relation for {template} configuration {configuration}",
            configuration=configuration,
        )
    logger.info("%s: no template instance was sound, using searched relation", template)
    return Relation(found[0], found[1], template, tuple(sorted(set(alphabet))), ("bounded search",), "search")


def _crossing_chains(placed: list[Chord], w: int, beta: Chord) -> list[tuple[str, ...]]:
    """Tree paths from an endpoint of β to w, read β_1 (at β) .. β_m (at w)."""
    graph = tree_graph(placed)
    chains = []
    for end in beta.endpoints:
        if end == w or end not in graph or w not in graph:
            continue
        path = tree_path(graph, w, end)
        if beta in path or not path:
            continue
        chain = tuple(c.label for c in reversed(path))
        if chain not in chains:
            chains.append(chain)
    return chains


def _fan_relations(
    oracle: RelationOracle, alpha: Chord, fan_ordered: list[Chord]
) -> list[Relation]:
    fan_template = template_registry.get("Tree2")
    pivots = [fan_ordered[-1], fan_ordered[0]] + fan_ordered[1:-1]
    readings = ["angular", "reversed"] + ["alternate"] * (len(fan_ordered) - 2)
    seen = set()
    for pivot, reading in zip(pivots, readings):
        if pivot in seen:
            continue
        seen.add(pivot)
        emitted = []
        for beta in [pivot] + [b for b in fan_ordered if b != pivot]:
            ctx = TemplateContext(alpha=alpha.label, beta=beta.label, pivot=pivot.label)
            relation = first_sound(oracle, fan_template.instantiate(ctx))
            if relation is None:
                break
            emitted.append(
                Relation(relation.lhs, relation.rhs, relation.template, relation.chain,
                         relation.notes + (f"fan order {reading}",))
            )
        else:
            return emitted
    logger.warning("fan at %s: no pivot reading is sound, searching per edge", alpha.label)
    return [
        searched_relation(
            oracle, "Tree2", (alpha.label, beta.label), (alpha.label, beta.label),
            {"alpha": alpha.label, "beta": beta.label},
        )
        for beta in fan_ordered
    ]


def tree_relations(
    t: ChordGraph, order: Sequence[int], oracle: Optional[RelationOracle] = None
) -> list[Relation]:
    """
    One relation per (new edge, existing edge) pair while the tree grows leaf by leaf.

    Args:
        t: A linearly spanned tree.
        order: Vertex insertion order; each vertex after the first is a leaf of the placed part.

    Returns:
        (n-1)(n-2)/2 sound homogeneous relations.

    Raises:
        NoSoundRelationError: If a configuration admits no sound relation.
    """
    oracle = oracle or RelationOracle(t.generators, t.n)
    arrangement = build_arrangement(t)
    rotation = {
        v: [arrangement.arcs[d[0]].chord for d in arrangement.rotation[vertex_node(v)]]
        for v in range(1, t.n + 1)
    }

    placed_vertices = {order[0]}
    placed: list[Chord] = []
    relations: list[Relation] = []

    for v in order[1:]:
        joining = [c for c in t.chords_at(v) if c.other_end(v) in placed_vertices]
        if len(joining) != 1:
            raise ValueError(f"Vertex {v} is not a leaf of the placed tree in order {tuple(order)}")
        alpha = joining[0]
        w = alpha.other_end(v)

        around = rotation[w]
        start = around.index(alpha)
        ccw = around[start + 1:] + around[:start]
        fan = [c for c in ccw if c in placed]
        if fan:
            relations.extend(_fan_relations(oracle, alpha, fan))

        for beta in placed:
            if beta in fan:
                continue
            if not chords_cross(alpha, beta):
                ctx = TemplateContext(alpha=alpha.label, beta=beta.label)
                relation = first_sound(oracle, template_registry.get("Tree1").instantiate(ctx))
                if relation is None:
                    relation = searched_relation(
                        oracle, "Tree1", (alpha.label, beta.label), (alpha.label, beta.label),
                        {"alpha": alpha.label, "beta": beta.label},
                    )
                relations.append(relation)
                continue

            chains = _crossing_chains(placed, w, beta)
            splits = tuple(
                (chain[:s], chain[s:]) for chain in chains for s in range(1, len(chain))
            )
            ctx = TemplateContext(
                alpha=alpha.label, beta=beta.label, crossing=True,
                chains=tuple(chains), splits=splits,
            )
            relation = None
            for template in template_registry.suitable(ctx, "tree"):
                relation = first_sound(oracle, template.instantiate(ctx))
                if relation is not None:
                    break
            if relation is None:
                alphabet = {alpha.label, beta.label} | {x for chain in chains for x in chain}
                relation = searched_relation(
                    oracle, "Tree3", sorted(alphabet), (alpha.label, beta.label),
                    {"alpha": alpha.label, "beta": beta.label, "chains": chains},
                )
            relations.append(relation)

        placed.append(alpha)
        placed_vertices.add(v)

    logger.debug("tree relations: %d for %d vertices", len(relations), t.n)
    return relations
