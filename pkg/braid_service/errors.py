"""
Exception hierarchy for the braid service.
"""

from __future__ import annotations

from typing import Optional


class BraidServiceError(Exception):
    """Base class for all service errors."""


class InvalidWordError(BraidServiceError, ValueError):
    """A braid or positive word is malformed for its strand count or alphabet."""


class InvalidChordError(BraidServiceError, ValueError):
    """A chord is out of range or duplicated."""


class GraphFormatError(BraidServiceError, ValueError):
    """A graph file could not be parsed."""


class NotLinearlySpannedError(BraidServiceError):
    """The operation needs a connected, linearly spanned graph."""


class NotRepresentableError(BraidServiceError):
    """A conjugated arc is not one of the chords of the two-sided model."""

    def __init__(self, message: str, word: Optional[object] = None) -> None:
        super().__init__(message)
        self.word = word


class NoSoundRelationError(BraidServiceError):
    """No relation candidate for a configuration passed the soundness check."""

    def __init__(self, message: str, configuration: Optional[dict] = None) -> None:
        super().__init__(message)
        self.configuration = configuration or {}


class SearchCapExceeded(BraidServiceError):
    """A bounded search stopped before closing."""

    def __init__(self, message: str, explored: int = 0) -> None:
        super().__init__(message)
        self.explored = explored
