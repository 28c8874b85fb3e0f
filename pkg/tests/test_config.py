"""
Tests for AppConfig: loading from environment variables.
"""

from __future__ import annotations

import os
from unittest.mock import patch

import pytest

from config import AppConfig


class TestAppConfigDefaults:
    def test_default_values(self):
        with patch.dict(os.environ, {}, clear=True):
            config = AppConfig.from_env()
            assert config.rewrite_cap == 10_000_000
            assert config.search_cap == 100_000_000
            assert config.cycle_cap == 1_000_000
            assert config.fallback_relation_length == 8
            assert config.conjugator_depth == 6
            assert config.k_max == 4
            assert config.log_level == "INFO"


class TestAppConfigFromEnv:
    def test_rewrite_cap(self):
        with patch.dict(os.environ, {"BRAID_REWRITE_CAP": "500"}, clear=True):
            assert AppConfig.from_env().rewrite_cap == 500

    def test_search_cap(self):
        with patch.dict(os.environ, {"BRAID_SEARCH_CAP": "1234"}, clear=True):
            assert AppConfig.from_env().search_cap == 1234

    def test_conjugator_depth(self):
        with patch.dict(os.environ, {"BRAID_CONJUGATOR_DEPTH": "2"}, clear=True):
            assert AppConfig.from_env().conjugator_depth == 2

    def test_k_max(self):
        with patch.dict(os.environ, {"BRAID_K_MAX": "7"}, clear=True):
            assert AppConfig.from_env().k_max == 7

    def test_log_level_uppercased(self):
        with patch.dict(os.environ, {"LOG_LEVEL": "debug"}, clear=True):
            assert AppConfig.from_env().log_level == "DEBUG"

    def test_invalid_integer(self):
        with patch.dict(os.environ, {"BRAID_REWRITE_CAP": "lots"}, clear=True):
            with pytest.raises(ValueError):
                AppConfig.from_env()
