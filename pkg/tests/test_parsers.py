"""
Tests for graph parsers, the parser registry and word formats.
"""

from __future__ import annotations

from pathlib import Path

import pytest

from braid_service import load_graph
from braid_service.errors import GraphFormatError, InvalidWordError
from braid_service.models import ArtinWord, Chord, ChordGraph, Side
from braid_service.parsers import (
    JsonGraphParser,
    TextGraphParser,
    format_graph,
    parse_artin_word,
    parse_positive_word,
    parse_presentation_text,
    parser_registry,
)

FIXTURES = Path(__file__).resolve().parent / "fixtures"


class TestTextGraphParser:
    def test_parse(self):
        graph = TextGraphParser().parse("n 4\nchord 1 3 above\nchord 2 4 below 1\n")
        assert graph.n == 4
        assert set(graph.chords) == {Chord(1, 3), Chord(2, 4, Side.BELOW, 1)}

    def test_comments_and_blank_lines(self):
        graph = TextGraphParser().parse("# star\n\nn 3  # vertices\nchord 3 1 above\n")
        assert graph.chords == (Chord(1, 3),)

    def test_fixture(self):
        graph = load_graph((FIXTURES / "artin4.graph").read_text(), "artin4.graph")
        assert graph == ChordGraph.artin_path(4)

    @pytest.mark.parametrize(
        "text, fragment",
        [
            ("chord 1 2 above\n", "line 1"),
            ("n 3\nedge 1 2\n", "unknown keyword"),
            ("n 3\nchord 1 2 sideways\n", "side must be"),
            ("n 3\nchord 1 x above\n", "expected an integer"),
            ("n 3\nchord 1 4 above\n", "vertex range"),
            ("n 3\nchord 2 2 above\n", "line 2"),
            ("chord\n", "line 1"),
            ("# nothing\n", "missing"),
            ("n 3\nn 4\n", "line 2"),
        ],
    )
    def test_errors(self, text, fragment):
        with pytest.raises(GraphFormatError, match=fragment):
            TextGraphParser().parse(text)

    def test_duplicate_chord(self):
        with pytest.raises(GraphFormatError):
            TextGraphParser().parse("n 3\nchord 1 2 above\nchord 1 2 above\n")

    def test_format_round_trip(self):
        graph = ChordGraph(4, (Chord(1, 3), Chord(2, 4, Side.BELOW), Chord(2, 4, Side.BELOW, 1)))
        assert TextGraphParser().parse(format_graph(graph)) == graph


class TestJsonGraphParser:
    def test_fixture(self):
        graph = load_graph((FIXTURES / "k4.json").read_text(), "k4.json")
        assert graph == ChordGraph.inner_complete(4)

    def test_invalid_json(self):
        with pytest.raises(GraphFormatError, match="invalid JSON"):
            JsonGraphParser().parse("{not json", "g.json")

    def test_missing_n(self):
        with pytest.raises(GraphFormatError):
            JsonGraphParser().parse('{"chords": []}')

    def test_bad_chord(self):
        with pytest.raises(GraphFormatError, match="invalid chord data"):
            JsonGraphParser().parse('{"n": 3, "chords": [{"u": 3, "v": 1}]}')


class TestParserRegistry:
    def test_registered_parsers(self):
        assert parser_registry.list_parsers() == ["json", "text"]

    def test_dispatch_by_extension(self):
        assert parser_registry.get_parser_for("n 3", "g.graph").name == "text"
        assert parser_registry.get_parser_for("{}", "g.json").name == "json"

    def test_dispatch_by_content(self):
        assert parser_registry.get_parser_for('{"n": 2}').name == "json"
        assert parser_registry.get_parser_for("n 2").name == "text"

    def test_bytes_input(self):
        assert load_graph(b"n 2\nchord 1 2 above\n", "g.txt") == ChordGraph.artin_path(2)

    def test_unknown_extension(self):
        with pytest.raises(GraphFormatError, match="No parser found"):
            parser_registry.get_parser_for("n 2", "g.csv")

    def test_unknown_parser(self):
        with pytest.raises(KeyError, match="Available parsers"):
            parser_registry.get("yaml")


class TestWordFormats:
    def test_artin_word(self):
        assert parse_artin_word("s1 s2' s1", 3) == ArtinWord(3, (1, -2, 1))

    def test_artin_word_commas(self):
        assert parse_artin_word("s1,s3", 4) == ArtinWord(4, (1, 3))

    def test_artin_word_bad_token(self):
        with pytest.raises(InvalidWordError):
            parse_artin_word("s1 t2", 3)

    def test_artin_word_out_of_range(self):
        with pytest.raises(InvalidWordError):
            parse_artin_word("s3", 3)

    def test_positive_word(self):
        assert parse_positive_word("1-3a 2-4b.1") == ("1-3a", "2-4b.1")

    def test_positive_word_unknown_generator(self):
        with pytest.raises(InvalidWordError, match="Available generators"):
            parse_positive_word("1-3a", ["1-2a"])

    def test_positive_word_bad_token(self):
        with pytest.raises(InvalidWordError):
            parse_positive_word("a1")

    def test_presentation_fixture(self):
        p = parse_presentation_text((FIXTURES / "artin3.pres").read_text())
        assert p.graph == ChordGraph.artin_path(3)
        assert len(p.relations) == 1
        assert p.relations[0].lhs == ("1-2a", "2-3a", "1-2a")

    def test_presentation_undeclared_generator(self):
        with pytest.raises(GraphFormatError, match="undeclared"):
            parse_presentation_text("n 3\ngen 1-2a\nrel 1-2a 2-3a = 2-3a 1-2a\n")

    def test_presentation_missing_equals(self):
        with pytest.raises(GraphFormatError, match="line 3"):
            parse_presentation_text("n 3\ngen 1-2a\nrel 1-2a 1-2a\n")
