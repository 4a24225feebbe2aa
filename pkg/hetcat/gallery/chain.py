"""Chain fixtures: the ceiling/doubling Galois connection between two chains."""

from __future__ import annotations

from ..const import FIXTURE_CHAIN_GALOIS
from ..core import Side, chain, relation_het
from .fixture_description import (
    ExpectedAdjunction,
    ExpectedRepresentation,
    Fixture,
    FixtureDescription,
    FixtureParam,
)


def ceiling_half(x: int, m: int) -> int | None:
    """Least a ≤ m with x ≤ 2a."""
    a = (x + 1) // 2
    return a if a <= m else None


def build_chain_galois(n: int = 4, m: int = 2) -> Fixture:
    """Het u_x_a: x ⇢ a exactly when x ≤ 2a, from the chain 0..n to the chain 0..m."""
    sending = chain(n + 1, name="X")
    receiving = chain(m + 1, name="A")
    ceil = relation_het(
        "ceil",
        sending,
        receiving,
        [(str(x), str(a)) for x in range(n + 1) for a in range(m + 1) if x <= 2 * a],
    )
    left_map = {str(x): _str_or_none(ceiling_half(x, m)) for x in range(n + 1)}
    right_map = {str(a): str(min(2 * a, n)) for a in range(m + 1)}
    expected = {
        "F": ExpectedRepresentation("F", "ceil", Side.LEFT, left_map),
        "G": ExpectedRepresentation("G", "ceil", Side.RIGHT, right_map),
    }
    if n <= 2 * m:
        expected["galois"] = ExpectedAdjunction("galois", "ceil", left_map, right_map)
    return Fixture(
        name=FIXTURE_CHAIN_GALOIS,
        params={"n": n, "m": m},
        categories={"X": sending, "A": receiving},
        hets={"ceil": ceil},
        expected=expected,
    )


def _str_or_none(value: int | None) -> str | None:
    return None if value is None else str(value)


CHAIN_FIXTURES: tuple[FixtureDescription, ...] = (
    FixtureDescription(
        key=FIXTURE_CHAIN_GALOIS,
        build=build_chain_galois,
        params=(
            FixtureParam(key="n", default=4, minimum=0, maximum=12),
            FixtureParam(key="m", default=2, minimum=0, maximum=6),
        ),
    ),
)
