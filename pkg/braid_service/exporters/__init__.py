"""
Exporters: presentation text/JSON and structured reports.
"""

from braid_service.exporters.presentation import PresentationExporter
from braid_service.exporters.reports import (
    CheckReport,
    ClassifyReport,
    EqualityReport,
    ExpressionReport,
    FamilyReport,
    FamilySweepReport,
    NormalFormReport,
    PositiveEquivalenceReport,
)

__all__ = [
    "PresentationExporter",
    "CheckReport",
    "ClassifyReport",
    "EqualityReport",
    "ExpressionReport",
    "FamilyReport",
    "FamilySweepReport",
    "NormalFormReport",
    "PositiveEquivalenceReport",
]
