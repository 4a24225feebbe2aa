"""Powerset fixtures: join ⊣ Δ ⊣ meet on the subsets of {1..k}."""

from __future__ import annotations

from ..const import FIXTURE_POWERSET_DIAGONAL
from ..core import (
    induced_het_left,
    induced_het_right,
    make_functor,
    pair_name,
    powerset,
    product,
    subset_name,
)
from .fixture_description import (
    ExpectedAdjunction,
    ExpectedBrain,
    Fixture,
    FixtureDescription,
    FixtureParam,
)


def _parse_subset(name: str) -> frozenset[int]:
    inner = name.strip("{}")
    return frozenset(int(part) for part in inner.split(",")) if inner else frozenset()


def build_powerset_diagonal(k: int = 2) -> Fixture:
    """P_k, P_k × P_k, the diagonal and its two adjoints, with the diagonal's hets."""
    lattice = powerset(k, name=f"P{k}")
    square = product(lattice, lattice, name=f"P{k}xP{k}")
    subsets = {name: _parse_subset(name) for name in lattice.objects}
    pairs = {pair_name(s, t): (s, t) for s in lattice.objects for t in lattice.objects}

    # Every category here is thin, so the morphism maps are forced.
    diag = make_functor(
        "diag", lattice, square, {s: pair_name(s, s) for s in lattice.objects}, {}
    )
    join = make_functor(
        "join",
        square,
        lattice,
        {p: subset_name(subsets[s] | subsets[t]) for p, (s, t) in pairs.items()},
        {},
    )
    meet = make_functor(
        "meet",
        square,
        lattice,
        {p: subset_name(subsets[s] & subsets[t]) for p, (s, t) in pairs.items()},
        {},
    )
    diag_out = induced_het_left(diag, name="diag-out")
    diag_in = induced_het_right(diag, name="diag-in")
    return Fixture(
        name=FIXTURE_POWERSET_DIAGONAL,
        params={"k": k},
        categories={lattice.name: lattice, square.name: square},
        functors={"diag": diag, "join": join, "meet": meet},
        hets={"diag-out": diag_out, "diag-in": diag_in},
        expected={
            "diag-meet": ExpectedAdjunction(
                "diag-meet",
                "diag-out",
                dict(diag.obj_map),
                dict(meet.obj_map),
                left_functor="diag",
                right_functor="meet",
            ),
            "join-diag": ExpectedAdjunction(
                "join-diag",
                "diag-in",
                dict(join.obj_map),
                dict(diag.obj_map),
                left_functor="join",
                right_functor="diag",
            ),
            "diag-brain": ExpectedBrain(
                "diag-brain", "diag", het_out="diag-out", het_in="diag-in"
            ),
            "diag-adjoints": ExpectedBrain(
                "diag-adjoints", "diag", left_adjoint="join", right_adjoint="meet"
            ),
        },
    )


POWERSET_FIXTURES: tuple[FixtureDescription, ...] = (
    FixtureDescription(
        key=FIXTURE_POWERSET_DIAGONAL,
        build=build_powerset_diagonal,
        params=(FixtureParam(key="k", default=2, minimum=1, maximum=3),),
    ),
)
