"""Coordinate coding: points of a w×h grid coded as (x,y) and plotted back."""

from __future__ import annotations

from ..const import FIXTURE_COORDINATE_CODING
from ..core import Side, discrete, make_functor, relation_het
from .fixture_description import (
    ExpectedBrain,
    ExpectedRepresentation,
    Fixture,
    FixtureDescription,
    FixtureParam,
)


def point_name(index: int) -> str:
    return f"P{index}"


def code_name(x: int, y: int) -> str:
    return f"({x},{y})"


def build_coordinate_coding(w: int = 2, h: int = 2) -> Fixture:
    """Points P1.. in row-major order, with P1 at (0,0) and P2 at (1,0)."""
    coding = {
        point_name(y * w + x + 1): code_name(x, y) for y in range(h) for x in range(w)
    }
    points = discrete("Points", coding)
    codes = discrete("Codes", coding.values())
    code = make_functor("code", points, codes, coding, {})
    het_out = relation_het(
        "coding",
        points,
        codes,
        coding.items(),
        element_name=lambda point, _: f"code_{point}",
    )
    het_in = relation_het(
        "plotting",
        codes,
        points,
        [(c, p) for p, c in coding.items()],
        element_name=lambda c, _: f"plot_{c}",
    )
    return Fixture(
        name=FIXTURE_COORDINATE_CODING,
        params={"w": w, "h": h},
        categories={"Points": points, "Codes": codes},
        functors={"code": code},
        hets={"coding": het_out, "plotting": het_in},
        expected={
            "coding": ExpectedRepresentation("coding", "coding", Side.LEFT, coding),
            "plotting": ExpectedRepresentation("plotting", "plotting", Side.RIGHT, coding),
            "coding-brain": ExpectedBrain(
                "coding-brain", "code", het_out="coding", het_in="plotting"
            ),
        },
    )


COORDINATE_FIXTURES: tuple[FixtureDescription, ...] = (
    FixtureDescription(
        key=FIXTURE_COORDINATE_CODING,
        build=build_coordinate_coding,
        params=(
            FixtureParam(key="w", default=2, minimum=1, maximum=4),
            FixtureParam(key="h", default=2, minimum=1, maximum=4),
        ),
    ),
)
