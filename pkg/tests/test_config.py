"""Tests for configuration loading."""

from __future__ import annotations

from pathlib import Path

import pytest

from hetcat.config import config_from_dict, load_config
from hetcat.core import HetcatParameterError
from hetcat.models import HetcatConfig

SHIPPED_CONFIG = Path(__file__).resolve().parent.parent / "config" / "configuration.yaml"


def test_defaults():
    assert config_from_dict(None) == HetcatConfig()
    assert load_config(None) == HetcatConfig()


def test_shipped_configuration():
    config = load_config(SHIPPED_CONFIG, required=True)
    assert config.workers == 1
    assert config.log_levels["hetcat.core.adjoint"] == "info"


def test_values_are_normalized():
    config = config_from_dict(
        {"logger": {"default": "DEBUG"}, "hetcat": {"workers": "4", "dot_rankdir": "tb"}}
    )
    assert (config.log_level, config.workers, config.dot_rankdir) == ("debug", 4, "TB")


@pytest.mark.parametrize(
    "raw",
    [
        {"hetcat": {"workers": 0}},
        {"hetcat": {"dot_rankdir": "diagonal"}},
        {"logger": {"default": "loud"}},
        {"logger": {"logs": {"hetcat.core": "verbose"}}},
    ],
)
def test_invalid_values(raw):
    with pytest.raises(HetcatParameterError, match="Invalid configuration"):
        config_from_dict(raw)


def test_unrelated_sections_are_ignored():
    assert config_from_dict({"editor": {"theme": "dark"}}) == HetcatConfig()


def test_missing_optional_file(tmp_path):
    assert load_config(tmp_path / "absent.yaml") == HetcatConfig()


def test_missing_required_file(tmp_path):
    with pytest.raises(HetcatParameterError, match="does not exist"):
        load_config(tmp_path / "absent.yaml", required=True)


def test_file_must_hold_a_mapping(tmp_path):
    path = tmp_path / "list.yaml"
    path.write_text("- workers\n- 2\n", "utf-8")
    with pytest.raises(HetcatParameterError, match="mapping"):
        load_config(path)


def test_yaml_syntax_error(tmp_path):
    path = tmp_path / "broken.yaml"
    path.write_text("hetcat: [unclosed\n", "utf-8")
    with pytest.raises(HetcatParameterError, match="Cannot read"):
        load_config(path)


def test_empty_file_means_defaults(tmp_path):
    path = tmp_path / "empty.yaml"
    path.write_text("", "utf-8")
    assert load_config(path) == HetcatConfig()
