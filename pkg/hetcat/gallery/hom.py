"""The hom bifunctor of a chain, represented on both sides by the identity."""

from __future__ import annotations

from ..const import FIXTURE_HOM_IDENTITY
from ..core import Side, chain, hom_bifunctor, identity_functor
from .fixture_description import (
    ExpectedAdjunction,
    ExpectedBrain,
    ExpectedRepresentation,
    Fixture,
    FixtureDescription,
    FixtureParam,
)


def build_hom_identity(n: int = 3) -> Fixture:
    cat = chain(n, name=f"C{n}")
    identity = {obj: obj for obj in cat.objects}
    return Fixture(
        name=FIXTURE_HOM_IDENTITY,
        params={"n": n},
        categories={cat.name: cat},
        functors={"id": identity_functor(cat, name="id")},
        hets={"Hom": hom_bifunctor(cat, name="Hom")},
        expected={
            "left": ExpectedRepresentation("left", "Hom", Side.LEFT, identity),
            "right": ExpectedRepresentation("right", "Hom", Side.RIGHT, identity),
            "identity": ExpectedAdjunction(
                "identity",
                "Hom",
                identity,
                identity,
                left_functor="id",
                right_functor="id",
            ),
            "identity-brain": ExpectedBrain(
                "identity-brain", "id", left_adjoint="id", right_adjoint="id"
            ),
        },
    )


HOM_FIXTURES: tuple[FixtureDescription, ...] = (
    FixtureDescription(
        key=FIXTURE_HOM_IDENTITY,
        build=build_hom_identity,
        params=(FixtureParam(key="n", default=3, minimum=1, maximum=6),),
    ),
)
