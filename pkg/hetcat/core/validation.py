"""Validation reports shared by every law checker."""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass


@dataclass(frozen=True)
class Violation:
    """One broken law together with the names that witness it."""

    law: str
    witness: tuple[str, ...]

    def __str__(self) -> str:
        return f"{self.law}: {', '.join(self.witness)}"


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of an exhaustive law check; ok iff there are no violations."""

    violations: tuple[Violation, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    @classmethod
    def of(cls, violations: Iterable[Violation]) -> ValidationReport:
        return cls(tuple(violations))

    def laws(self) -> set[str]:
        return {violation.law for violation in self.violations}

    def witnesses(self, law: str) -> list[tuple[str, ...]]:
        return [v.witness for v in self.violations if v.law == law]

    def render(self) -> str:
        if self.ok:
            return "ok"
        return "\n".join(str(violation) for violation in self.violations)
