"""
Pydantic report models for the CLI's ``--report json`` mode.
"""

from __future__ import annotations

from typing import Any, Optional

from pydantic import BaseModel, Field


class CheckReport(BaseModel):
    """Linearly-spanned verdict."""

    linearly_spanned: bool
    connected: bool
    witness: Optional[dict[str, Any]] = None
    arrangement: Optional[dict[str, Any]] = None


class NormalFormReport(BaseModel):
    word: str
    strands: int
    infimum: int
    factors: list[list[int]]
    canonical_length: int


class EqualityReport(BaseModel):
    left: str
    right: str
    strands: int
    equal: bool


class PositiveEquivalenceReport(BaseModel):
    left: list[str]
    right: list[str]
    relation_count: int
    status: str
    explored: int
    trace: list[dict[str, Any]] = Field(default_factory=list)


class ExpressionReport(BaseModel):
    """sigma_i = W a W^-1 over the graph generators."""

    index: int
    base: str
    conjugator: list[str]


class FamilyReport(BaseModel):
    instance: dict[str, Any]
    group_equal: bool
    chain: list[dict[str, Any]]
    non_equivalence: Optional[dict[str, Any]] = None
    length_lemma: Optional[dict[str, Any]] = None


class FamilySweepReport(BaseModel):
    """One family verified for k = 1..k_max."""

    family: str
    k_max: int
    reports: list[FamilyReport]


class ClassifyReport(BaseModel):
    kind: str
    detail: str
    has_embedding: bool
