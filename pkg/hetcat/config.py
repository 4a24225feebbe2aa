"""Configuration loading for the hetcat command line."""

from __future__ import annotations

from pathlib import Path
import logging
from typing import Any

import voluptuous as vol
import yaml

from .const import (
    CONF_DEFAULT,
    CONF_DOT_RANKDIR,
    CONF_LOGGER,
    CONF_LOGS,
    CONF_WORKERS,
    DEFAULT_DOT_RANKDIR,
    DEFAULT_LOG_LEVEL,
    DEFAULT_WORKERS,
    DOMAIN,
    DOT_RANKDIRS,
    LOG_LEVELS,
)
from .core import HetcatParameterError
from .models import HetcatConfig

_LOGGER = logging.getLogger(__name__)

_LEVEL = vol.All(str, vol.Lower, vol.In(LOG_LEVELS))

CONFIG_SCHEMA = vol.Schema(
    {
        vol.Optional(CONF_LOGGER, default={}): vol.Schema(
            {
                vol.Optional(CONF_DEFAULT, default=DEFAULT_LOG_LEVEL): _LEVEL,
                vol.Optional(CONF_LOGS, default={}): {str: _LEVEL},
            }
        ),
        vol.Optional(DOMAIN, default={}): vol.Schema(
            {
                vol.Optional(CONF_WORKERS, default=DEFAULT_WORKERS): vol.All(
                    vol.Coerce(int), vol.Range(min=1, max=64)
                ),
                vol.Optional(CONF_DOT_RANKDIR, default=DEFAULT_DOT_RANKDIR): vol.All(
                    str, vol.Upper, vol.In(DOT_RANKDIRS)
                ),
            }
        ),
    },
    extra=vol.ALLOW_EXTRA,
)


def config_from_dict(raw: dict[str, Any] | None) -> HetcatConfig:
    """Validate a raw mapping and return the typed configuration."""
    try:
        data = CONFIG_SCHEMA(raw or {})
    except vol.Invalid as err:
        raise HetcatParameterError(f"Invalid configuration: {err}") from err
    return HetcatConfig(
        log_level=data[CONF_LOGGER][CONF_DEFAULT],
        log_levels=dict(data[CONF_LOGGER][CONF_LOGS]),
        workers=data[DOMAIN][CONF_WORKERS],
        dot_rankdir=data[DOMAIN][CONF_DOT_RANKDIR],
    )


def load_config(path: str | Path | None, *, required: bool = False) -> HetcatConfig:
    """Read a YAML configuration file; a missing optional file means defaults."""
    if path is None:
        return config_from_dict(None)
    config_path = Path(path)
    if not config_path.exists():
        if required:
            raise HetcatParameterError(f"Configuration file {config_path} does not exist")
        _LOGGER.debug("No configuration at %s, using defaults", config_path)
        return config_from_dict(None)
    try:
        raw = yaml.safe_load(config_path.read_text("utf-8"))
    except yaml.YAMLError as err:
        raise HetcatParameterError(f"Cannot read {config_path}: {err}") from err
    if raw is not None and not isinstance(raw, dict):
        raise HetcatParameterError(f"{config_path} must hold a mapping")
    return config_from_dict(raw)
