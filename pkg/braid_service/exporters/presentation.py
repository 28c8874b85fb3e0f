"""
Presentation exporter: plain text and JSON.
"""

from __future__ import annotations

import json

from braid_service.models import Presentation


class PresentationExporter:
    """Export generated presentations."""

    @staticmethod
    def to_text(p: Presentation, with_provenance: bool = False) -> str:
        """
        One ``gen`` line per generator and one ``rel`` line per relation.

        The output is read back by ``parse_presentation_text``.
        """
        lines = [f"n {p.graph.n}"]
        lines.extend(f"gen {label}" for label in p.generator_ids)
        for relation in p.relations:
            line = f"rel {relation}"
            if with_provenance:
                notes = ", ".join(relation.notes)
                line += f"  # {relation.template} {relation.provenance}" + (f" ({notes})" if notes else "")
            lines.append(line)
        return "\n".join(lines) + "\n"

    @staticmethod
    def to_json(p: Presentation) -> str:
        payload = p.to_dict()
        payload["relation_count"] = len(p.relations)
        payload["max_relation_length"] = p.max_relation_length
        return json.dumps(payload, indent=2, sort_keys=True)
