"""
JSON graph format, as written by ``ChordGraph.to_dict``.
"""

from __future__ import annotations

import json
from typing import Optional, Union

from braid_service.errors import GraphFormatError, InvalidChordError
from braid_service.models import ChordGraph
from braid_service.parsers.base import BaseGraphParser


class JsonGraphParser(BaseGraphParser):
    name = "json"
    supported_extensions = [".json"]

    def can_handle(self, raw_input: Union[str, bytes], filename: Optional[str] = None) -> bool:
        if super().can_handle(raw_input, filename):
            return True
        return filename is None and self._as_text(raw_input).lstrip().startswith("{")

    def parse(self, raw_input: Union[str, bytes], filename: Optional[str] = None) -> ChordGraph:
        try:
            data = json.loads(self._as_text(raw_input))
        except json.JSONDecodeError as exc:
            raise GraphFormatError(f"invalid JSON: {exc}") from exc
        if not isinstance(data, dict) or "n" not in data:
            raise GraphFormatError("JSON graph must be an object with an 'n' field")
        try:
            return ChordGraph.from_dict(data)
        except (InvalidChordError, KeyError, TypeError, ValueError) as exc:
            raise GraphFormatError(f"invalid chord data: {exc}") from exc
