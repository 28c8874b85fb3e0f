"""
Parser registry: manages graph parsers and dispatches to the right one.
"""

from __future__ import annotations

import logging
from typing import Optional, Union

from braid_service.errors import GraphFormatError
from braid_service.models import ChordGraph
from braid_service.parsers.base import BaseGraphParser

logger = logging.getLogger(__name__)


class ParserRegistry:
    """Registry of graph parsers. Finds the right parser for a given input."""

    def __init__(self) -> None:
        self._parsers: dict[str, BaseGraphParser] = {}

    def register(self, parser: BaseGraphParser) -> None:
        """Register a parser instance."""
        self._parsers[parser.name] = parser

    def get(self, name: str) -> BaseGraphParser:
        """
        Raises:
            KeyError: If the parser is not registered.
        """
        if name not in self._parsers:
            raise KeyError(f"Parser '{name}' not found. Available parsers: {self.list_parsers()}")
        return self._parsers[name]

    def get_parser_for(self, raw_input: Union[str, bytes], filename: Optional[str] = None) -> BaseGraphParser:
        """
        First registered parser that can handle the input.

        Raises:
            GraphFormatError: If no parser can handle the input.
        """
        for parser in self._parsers.values():
            if parser.can_handle(raw_input, filename):
                logger.debug("parser selected: %s (filename=%s)", parser.name, filename)
                return parser
        raise GraphFormatError(
            f"No parser found for input (filename={filename}). "
            f"Available parsers: {self.list_parsers()}"
        )

    def parse(self, raw_input: Union[str, bytes], filename: Optional[str] = None) -> ChordGraph:
        return self.get_parser_for(raw_input, filename).parse(raw_input, filename)

    def list_parsers(self) -> list[str]:
        """Return list of registered parser names."""
        return list(self._parsers.keys())
