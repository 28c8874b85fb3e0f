"""
Base parser interface for the graph parser registry.
"""

from __future__ import annotations

import os
from abc import ABC, abstractmethod
from typing import Optional, Union

from braid_service.errors import GraphFormatError
from braid_service.models import ChordGraph


class BaseGraphParser(ABC):
    """Abstract base class for chord graph parsers."""

    name: str = "base"
    supported_extensions: list[str] = []

    def can_handle(self, raw_input: Union[str, bytes], filename: Optional[str] = None) -> bool:
        """
        Check if this parser can handle the given input.

        Default implementation checks the file extension if a filename is provided.
        """
        if filename:
            return self._get_extension(filename) in self.supported_extensions
        return False

    @abstractmethod
    def parse(self, raw_input: Union[str, bytes], filename: Optional[str] = None) -> ChordGraph:
        """
        Parse raw input into a chord graph.

        Raises:
            GraphFormatError: If the input is malformed.
        """
        ...

    @staticmethod
    def _get_extension(filename: str) -> str:
        _, ext = os.path.splitext(filename)
        return ext.lower()

    @staticmethod
    def _as_text(raw_input: Union[str, bytes]) -> str:
        """
        Raises:
            GraphFormatError: If bytes are not valid UTF-8.
        """
        if isinstance(raw_input, bytes):
            try:
                return raw_input.decode("utf-8")
            except UnicodeDecodeError as exc:
                raise GraphFormatError(f"input is not valid UTF-8: {exc}") from exc
        return raw_input
