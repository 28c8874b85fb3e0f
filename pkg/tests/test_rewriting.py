"""
Tests for rewrite classes and positive equivalence.
"""

from __future__ import annotations

from itertools import product

import pytest

from braid_service.models import Relation
from braid_service.monoid import Verdict, pos_equiv, rewrite_class, single_rewrites
from braid_service.presentations import RelationOracle, artin_presentation, band_presentation

S1, S2, S3 = "1-2a", "2-3a", "3-4a"
ARTIN3 = artin_presentation(3).relations
ARTIN4 = artin_presentation(4).relations
DELTA4 = (S1, S2, S1, S3, S2, S1)


class TestSingleRewrites:
    def test_both_directions(self):
        steps = list(single_rewrites((S1, S2, S1), ARTIN3))
        assert [s.after for s in steps] == [(S2, S1, S2)]
        assert steps[0].forward
        assert steps[0].position == 0

    def test_every_position(self):
        steps = list(single_rewrites((S1, S3, S1, S3), ARTIN4))
        assert {(s.position, s.after) for s in steps} == {
            (0, (S3, S1, S1, S3)),
            (1, (S1, S1, S3, S3)),
            (2, (S1, S3, S3, S1)),
        }

    def test_step_to_dict(self):
        [step] = list(single_rewrites((S2, S1, S2), ARTIN3))
        data = step.to_dict()
        assert data["direction"] == "rhs->lhs"
        assert data["after"] == [S1, S2, S1]


class TestRewriteClass:
    def test_braid_relation_class(self):
        found = rewrite_class((S1, S2, S1), ARTIN3)
        assert found.closed
        assert found.member_set == {(S1, S2, S1), (S2, S1, S2)}
        assert found.members[0] == (S1, S2, S1)

    def test_singleton_class(self):
        found = rewrite_class((S1, S2), ARTIN3)
        assert found.closed
        assert len(found) == 1

    def test_delta_has_sixteen_words(self):
        assert len(rewrite_class(DELTA4, ARTIN4)) == 16

    def test_breadth_and_depth_first_agree(self):
        bfs = rewrite_class(DELTA4, ARTIN4)
        dfs = rewrite_class(DELTA4, ARTIN4, depth_first=True)
        assert bfs.member_set == dfs.member_set

    def test_cap_truncates(self):
        found = rewrite_class(DELTA4, ARTIN4, cap=5)
        assert not found.closed
        assert len(found) == 5

    def test_path_to(self):
        found = rewrite_class(DELTA4, ARTIN4)
        target = (S3, S2, S3, S1, S2, S3)
        path = found.path_to(target)
        assert path[0].before == DELTA4
        assert path[-1].after == target
        for a, b in zip(path, path[1:]):
            assert a.after == b.before

    def test_path_to_non_member(self):
        found = rewrite_class((S1, S2), ARTIN3)
        with pytest.raises(KeyError):
            found.path_to((S2, S1))

    def test_inhomogeneous_relation_rejected(self):
        with pytest.raises(ValueError):
            rewrite_class((S1,), [Relation((S1, S1), (S2,), "given")])


class TestPosEquiv:
    def test_equivalent_with_trace(self):
        verdict = pos_equiv((S1, S2, S1), (S2, S1, S2), ARTIN3)
        assert verdict.status is Verdict.EQUIVALENT
        assert len(verdict.trace) == 1

    def test_identical_words(self):
        verdict = pos_equiv((S1, S2), (S1, S2), ARTIN3)
        assert verdict.status is Verdict.EQUIVALENT
        assert verdict.trace == []

    def test_not_equivalent(self):
        verdict = pos_equiv((S1, S2), (S2, S1), ARTIN3)
        assert verdict.status is Verdict.NOT_EQUIVALENT
        assert verdict.explored == 1

    def test_length_mismatch(self):
        assert pos_equiv((S1,), (S1, S1), ARTIN3).status is Verdict.NOT_EQUIVALENT

    def test_inconclusive_at_cap(self):
        verdict = pos_equiv(DELTA4, (S3, S2, S3, S1, S2, S3), ARTIN4, cap=1)
        assert verdict.status is Verdict.INCONCLUSIVE

    def test_long_trace(self):
        target = (S3, S2, S3, S1, S2, S3)
        verdict = pos_equiv(DELTA4, target, ARTIN4)
        assert verdict.status is Verdict.EQUIVALENT
        assert verdict.trace[-1].after == target
        assert verdict.to_dict()["status"] == "equivalent"


@pytest.mark.slow
class TestEmbeddingProperty:
    """Rewrite classes coincide with group equality for presentations known to embed."""

    @staticmethod
    def _agrees(presentation, max_length):
        oracle = RelationOracle(presentation.generators, presentation.graph.n)
        letters = presentation.generator_ids
        for length in range(1, max_length + 1):
            by_braid: dict = {}
            for word in product(letters, repeat=length):
                by_braid.setdefault(oracle.evaluate(word), set()).add(word)
            for words in by_braid.values():
                seed = min(words)
                assert rewrite_class(seed, presentation.relations).member_set == words

    def test_artin(self):
        self._agrees(artin_presentation(3), 7)

    def test_band(self):
        self._agrees(band_presentation(3), 6)

    def test_members_equal_seed_in_group(self):
        oracle = RelationOracle(artin_presentation(4).generators, 4)
        found = rewrite_class(DELTA4, ARTIN4)
        assert {oracle.evaluate(word) for word in found.members} == {oracle.evaluate(DELTA4)}
