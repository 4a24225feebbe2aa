"""Models for the hetcat command line."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class HetcatConfig:
    """Validated settings from config/configuration.yaml."""

    log_level: str = "warning"
    log_levels: dict[str, str] = field(default_factory=dict)
    workers: int = 1
    dot_rankdir: str = "LR"
