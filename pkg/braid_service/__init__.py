"""
Braid Workbench: Braid Service Core

Provides the Garside normal form oracle, chord graph geometry, presentation
generation, positive rewriting and the counterexample family registry.
"""

from __future__ import annotations

import logging
from typing import Optional, Union

from braid_service.models import ChordGraph

__version__ = "0.1.0"

logger = logging.getLogger(__name__)


def load_graph(raw_input: Union[str, bytes], filename: Optional[str] = None) -> ChordGraph:
    """
    Parse a chord graph from text or JSON, picking the parser from the filename or content.

    Raises:
        GraphFormatError: If the input cannot be parsed.
    """
    from braid_service.parsers import parser_registry

    parser = parser_registry.get_parser_for(raw_input, filename)
    graph = parser.parse(raw_input, filename)
    logger.info("loaded graph with %s parser: n=%d, %d chords", parser.name, graph.n, graph.edge_count)
    return graph
