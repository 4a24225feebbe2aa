"""Fixture descriptions for the hetcat gallery."""

from __future__ import annotations

from collections.abc import Callable, Mapping
from dataclasses import dataclass, field

from ..core import FinCategory, FinFunctor, HetBifunctor, ObjectId, Side


@dataclass(frozen=True)
class ExpectedRepresentation:
    """Representing objects per base; None where the base is not representable."""

    key: str
    het: str
    side: Side
    object_map: Mapping[ObjectId, ObjectId | None]


@dataclass(frozen=True)
class ExpectedAdjunction:
    """A left and right semiadjunction over het that assemble into an adjunction."""

    key: str
    het: str
    left_map: Mapping[ObjectId, ObjectId]
    right_map: Mapping[ObjectId, ObjectId]
    left_functor: str | None = None
    right_functor: str | None = None


@dataclass(frozen=True)
class ExpectedBrain:
    """Either explicit hets (het_out, het_in) or an adjoint triple around functor."""

    key: str
    functor: str
    het_out: str | None = None
    het_in: str | None = None
    left_adjoint: str | None = None
    right_adjoint: str | None = None


type Expectation = ExpectedRepresentation | ExpectedAdjunction | ExpectedBrain


@dataclass(frozen=True)
class Fixture:
    """A named finite scenario and the results it is expected to produce."""

    name: str
    params: Mapping[str, int]
    categories: Mapping[str, FinCategory]
    functors: Mapping[str, FinFunctor] = field(default_factory=dict)
    hets: Mapping[str, HetBifunctor] = field(default_factory=dict)
    expected: Mapping[str, Expectation] = field(default_factory=dict)


@dataclass(frozen=True)
class FixtureParam:
    """An integer parameter with its supported range."""

    key: str
    default: int
    minimum: int
    maximum: int


@dataclass(frozen=True)
class FixtureDescription:
    """Describes a gallery fixture."""

    key: str
    build: Callable[..., Fixture]
    params: tuple[FixtureParam, ...] = ()
