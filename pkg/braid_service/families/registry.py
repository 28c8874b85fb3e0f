"""
Counterexample family registry.
"""

from __future__ import annotations

import re
from typing import Optional

from braid_service.families.base import Family, FamilyInstance

_PARAMETRIC_RE = re.compile(r"^(\w+)\((\d+)\)$")


class FamilyRegistry:
    """Registry of counterexample families."""

    def __init__(self) -> None:
        self._families: dict[str, Family] = {}

    def register(self, family: Family) -> None:
        """Register a family."""
        self._families[family.name] = family

    def get(self, name: str) -> Family:
        """
        Get a family by name.

        Raises:
            KeyError: If the family is not registered.
        """
        if name not in self._families:
            raise KeyError(
                f"Family '{name}' not found. "
                f"Available families: {self.list_families()}"
            )
        return self._families[name]

    def list_families(self) -> list[str]:
        """Return list of registered family names."""
        return list(self._families.keys())

    def instance(self, name: str, k: int, m: Optional[int] = None) -> FamilyInstance:
        """Build an instance; ``name`` may carry the size inline, e.g. ``MGon(5)``."""
        match = _PARAMETRIC_RE.match(name)
        if match:
            name, m = match.group(1), int(match.group(2))
        return self.get(name).instance(k, m)
