"""
Parser registry initialization.

All graph parsers are registered here on import.
"""

from braid_service.parsers.base import BaseGraphParser
from braid_service.parsers.json_parser import JsonGraphParser
from braid_service.parsers.registry import ParserRegistry
from braid_service.parsers.text_parser import TextGraphParser, format_graph
from braid_service.parsers.words import (
    format_positive_word,
    parse_artin_word,
    parse_positive_word,
    parse_presentation_text,
)

# Create and populate the global parser registry
parser_registry = ParserRegistry()
parser_registry.register(JsonGraphParser())
parser_registry.register(TextGraphParser())  # Text last: it's the fallback for string input

__all__ = [
    "parser_registry",
    "ParserRegistry",
    "BaseGraphParser",
    "JsonGraphParser",
    "TextGraphParser",
    "format_graph",
    "format_positive_word",
    "parse_artin_word",
    "parse_positive_word",
    "parse_presentation_text",
]
