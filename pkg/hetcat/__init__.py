"""The hetcat finite category toolkit."""

from __future__ import annotations

import json
from pathlib import Path

_MANIFEST = json.loads((Path(__file__).parent / "manifest.json").read_text("utf-8"))

__version__: str = _MANIFEST["version"]
