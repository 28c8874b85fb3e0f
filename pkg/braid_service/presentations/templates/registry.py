"""
Relation template registry.
"""

from __future__ import annotations

from braid_service.presentations.templates.base import RelationTemplate, TemplateContext


class TemplateRegistry:
    """Registry of relation templates in preference order."""

    def __init__(self) -> None:
        self._templates: dict[str, RelationTemplate] = {}

    def register(self, template: RelationTemplate) -> None:
        """Register a template."""
        self._templates[template.name] = template

    def get(self, name: str) -> RelationTemplate:
        """
        Get a template by name.

        Raises:
            KeyError: If the template is not registered.
        """
        if name not in self._templates:
            raise KeyError(
                f"Template '{name}' not found. "
                f"Available templates: {self.list_templates()}"
            )
        return self._templates[name]

    def list_templates(self) -> list[str]:
        """Return list of registered template names."""
        return list(self._templates.keys())

    def suitable(self, ctx: TemplateContext, kind: str) -> list[RelationTemplate]:
        """Templates of the given kind that apply to ``ctx``, in registration order."""
        return [t for t in self._templates.values() if t.kind == kind and t.is_suitable_for(ctx)]
