"""
Tests for the presentation exporter and report models.
"""

from __future__ import annotations

import json

from braid_service.exporters import CheckReport, FamilyReport, PresentationExporter
from braid_service.models import ChordGraph
from braid_service.parsers import parse_presentation_text
from braid_service.presentations import artin_presentation, band_presentation, generate_presentation


class TestPresentationText:
    def test_artin_text(self):
        text = PresentationExporter.to_text(artin_presentation(3))
        assert text == "n 3\ngen 1-2a\ngen 2-3a\nrel 1-2a 2-3a 1-2a = 2-3a 1-2a 2-3a\n"

    def test_reads_back(self):
        p = band_presentation(4)
        parsed = parse_presentation_text(PresentationExporter.to_text(p))
        assert parsed.graph == p.graph
        assert [r.key() for r in parsed.relations] == [r.key() for r in p.relations]

    def test_provenance_comments(self):
        p = generate_presentation(ChordGraph.artin_path(3))
        text = PresentationExporter.to_text(p, with_provenance=True)
        assert "# Tree2 template" in text
        # comments are ignored when reading back
        assert len(parse_presentation_text(text).relations) == 1


class TestPresentationJson:
    def test_fields(self):
        data = json.loads(PresentationExporter.to_json(artin_presentation(4)))
        assert data["relation_count"] == 3
        assert data["max_relation_length"] == 3
        assert data["generators"] == ["1-2a", "2-3a", "3-4a"]
        assert data["relations"][0]["template"] == "given"

    def test_generated_includes_tree(self):
        data = json.loads(PresentationExporter.to_json(generate_presentation(ChordGraph.artin_path(3))))
        assert data["tree"]["n"] == 3
        assert data["vertex_order"] == [1, 2, 3]


class TestReports:
    def test_check_report_json(self):
        report = CheckReport(linearly_spanned=True, connected=True)
        data = json.loads(report.model_dump_json())
        assert data == {"linearly_spanned": True, "connected": True, "witness": None, "arrangement": None}

    def test_family_report_defaults(self):
        report = FamilyReport(instance={"family": "StarFan"}, group_equal=True, chain=[])
        assert report.non_equivalence is None
        assert report.length_lemma is None
