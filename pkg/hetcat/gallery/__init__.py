"""Canonical finite fixtures and the checks that recompute their expected tables."""

from __future__ import annotations

from collections.abc import Mapping
import logging

import voluptuous as vol

from ..core import (
    HetcatError,
    HetcatNegativeResult,
    HetcatParameterError,
    Side,
    ValidationReport,
    Violation,
    assemble_adjunction,
    brain_from_adjoints,
    build_left_semiadjunction,
    build_right_semiadjunction,
    check_brain,
    find_left_representation,
    find_right_representation,
    verify_all_wings,
)
from .chain import CHAIN_FIXTURES
from .coordinate import COORDINATE_FIXTURES
from .fixture_description import (
    ExpectedAdjunction,
    ExpectedBrain,
    ExpectedRepresentation,
    Expectation,
    Fixture,
    FixtureDescription,
)
from .free import FREE_FIXTURES
from .hom import HOM_FIXTURES
from .powerset import POWERSET_FIXTURES
from .report import instruction_report, selection_report

_LOGGER = logging.getLogger(__name__)

LAW_EXPECTATION = "expected table mismatch"

FIXTURES: dict[str, FixtureDescription] = {
    description.key: description
    for description in (
        *CHAIN_FIXTURES,
        *POWERSET_FIXTURES,
        *FREE_FIXTURES,
        *COORDINATE_FIXTURES,
        *HOM_FIXTURES,
    )
}


def _params_schema(description: FixtureDescription) -> vol.Schema:
    return vol.Schema(
        {
            vol.Optional(param.key, default=param.default): vol.All(
                vol.Coerce(int), vol.Range(min=param.minimum, max=param.maximum)
            )
            for param in description.params
        }
    )


def build_fixture(name: str, params: Mapping[str, int | str] | None = None) -> Fixture:
    """Build a named fixture, checking its parameters against the supported ranges."""
    description = FIXTURES.get(name)
    if description is None:
        raise HetcatParameterError(
            f"Unknown fixture '{name}', expected one of: {', '.join(FIXTURES)}"
        )
    try:
        values = _params_schema(description)(dict(params or {}))
    except vol.Invalid as err:
        raise HetcatParameterError(f"Invalid parameters for {name}: {err}") from err
    _LOGGER.debug("Building fixture %s with %s", name, values)
    return description.build(**values)


def _check_representation(
    fixture: Fixture, expected: ExpectedRepresentation, workers: int
) -> list[Violation]:
    het = fixture.hets[expected.het]
    find = find_left_representation if expected.side is Side.LEFT else find_right_representation
    violations = []
    for base, rep in expected.object_map.items():
        arrow = find(het, base, workers=workers)
        found = None if arrow is None else arrow.rep
        if found != rep:
            violations.append(Violation(LAW_EXPECTATION, (expected.key, base, str(rep), str(found))))
    return violations


def _check_adjunction(
    fixture: Fixture, expected: ExpectedAdjunction, workers: int
) -> list[Violation]:
    het = fixture.hets[expected.het]
    try:
        adjunction = assemble_adjunction(
            build_left_semiadjunction(het, workers=workers),
            build_right_semiadjunction(het, workers=workers),
        )
    except HetcatNegativeResult as err:
        _LOGGER.debug("Expected adjunction %s does not hold: %s", expected.key, err)
        return [Violation(LAW_EXPECTATION, (expected.key, "no adjunction"))]
    violations = []
    checks = (
        ("left", adjunction.left_adjoint, expected.left_map, expected.left_functor),
        ("right", adjunction.right_adjoint, expected.right_map, expected.right_functor),
    )
    for side, functor, object_map, functor_name in checks:
        if dict(functor.obj_map) != dict(object_map):
            violations.append(Violation(LAW_EXPECTATION, (expected.key, f"{side} object map")))
        if functor_name is not None and functor != fixture.functors[functor_name]:
            violations.append(Violation(LAW_EXPECTATION, (expected.key, functor_name)))
    return violations


def _check_brain(fixture: Fixture, expected: ExpectedBrain) -> list[Violation]:
    functor = fixture.functors[expected.functor]
    try:
        if expected.het_out is not None and expected.het_in is not None:
            brain = check_brain(
                functor, fixture.hets[expected.het_out], fixture.hets[expected.het_in]
            )
        else:
            brain = brain_from_adjoints(
                fixture.functors[expected.left_adjoint],
                functor,
                fixture.functors[expected.right_adjoint],
            )
    except HetcatNegativeResult as err:
        _LOGGER.debug("Expected brain functor %s fails: %s", expected.key, err)
        return [Violation(LAW_EXPECTATION, (expected.key, "not a brain functor"))]
    if not verify_all_wings(brain).ok:
        return [Violation(LAW_EXPECTATION, (expected.key, "wings"))]
    return []


def _check(fixture: Fixture, expected: Expectation, workers: int) -> list[Violation]:
    if isinstance(expected, ExpectedRepresentation):
        return _check_representation(fixture, expected, workers)
    if isinstance(expected, ExpectedAdjunction):
        return _check_adjunction(fixture, expected, workers)
    return _check_brain(fixture, expected)


def verify_fixture(fixture: Fixture, *, workers: int = 1) -> ValidationReport:
    """Recompute every expected table of a fixture from scratch and compare."""
    violations: list[Violation] = []
    for key, expected in fixture.expected.items():
        try:
            found = _check(fixture, expected, workers)
        except HetcatError as err:
            _LOGGER.error("Checking %s of %s raised: %s", key, fixture.name, err)
            found = [Violation(LAW_EXPECTATION, (key, type(err).__name__))]
        if found:
            _LOGGER.warning("Fixture %s: %s does not match", fixture.name, key)
        else:
            _LOGGER.debug("Fixture %s: %s matches", fixture.name, key)
        violations.extend(found)
    return ValidationReport.of(violations)


__all__ = [
    "FIXTURES",
    "Fixture",
    "build_fixture",
    "instruction_report",
    "selection_report",
    "verify_fixture",
]
