"""User-facing strings, loaded once from translations/en.json."""

from __future__ import annotations

import json
import logging
from pathlib import Path
from typing import Any

_LOGGER = logging.getLogger(__name__)
_TRANSLATIONS_CACHE: dict[str, Any] | None = None


def _load_translations_cache() -> dict[str, Any]:
    global _TRANSLATIONS_CACHE

    if _TRANSLATIONS_CACHE is not None:
        return _TRANSLATIONS_CACHE

    strings_path = Path(__file__).parent / "translations" / "en.json"
    try:
        _TRANSLATIONS_CACHE = json.loads(strings_path.read_text("utf-8"))
        _LOGGER.debug("Loaded translations from %s", strings_path)
    except (FileNotFoundError, json.JSONDecodeError) as ex:
        _LOGGER.error("Failed to load translations: %s", ex)
        _TRANSLATIONS_CACHE = {}
    return _TRANSLATIONS_CACHE


def translate(key: str, **values: Any) -> str:
    """Look up a dotted key such as "cli.brain" and fill in its placeholders.

    A missing key falls back to the key itself so output never breaks.
    """
    node: Any = _load_translations_cache()
    for part in key.split("."):
        if not isinstance(node, dict) or part not in node:
            _LOGGER.warning("Missing translation for %s", key)
            return key
        node = node[part]
    return node.format(**values)
