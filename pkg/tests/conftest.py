"""Shared fixtures for the hetcat tests."""

from __future__ import annotations

from pathlib import Path

from hypothesis import HealthCheck, settings
import pytest

from hetcat.core import (
    FinCategory,
    HetBifunctor,
    chain,
    hom_bifunctor,
    relation_het,
)
from hetcat.gallery import Fixture, build_fixture

SPECS_DIR = Path(__file__).resolve().parent.parent / "specs"

settings.register_profile(
    "hetcat",
    deadline=None,
    max_examples=40,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("hetcat")


def ceiling(n: int = 4, m: int = 2) -> HetBifunctor:
    """u_x_a: x ⇢ a exactly when x ≤ 2a, between the chains 0..n and 0..m."""
    return relation_het(
        "ceil",
        chain(n + 1, name="X"),
        chain(m + 1, name="A"),
        [(str(x), str(a)) for x in range(n + 1) for a in range(m + 1) if x <= 2 * a],
    )


@pytest.fixture(scope="session")
def specs_dir() -> Path:
    return SPECS_DIR


@pytest.fixture(scope="session")
def c3() -> FinCategory:
    return chain(3)


@pytest.fixture(scope="session")
def hom_c3(c3: FinCategory) -> HetBifunctor:
    return hom_bifunctor(c3, name="Hom")


@pytest.fixture(scope="session")
def ceil() -> HetBifunctor:
    return ceiling()


@pytest.fixture(scope="session")
def truncated_ceil() -> HetBifunctor:
    return ceiling(4, 1)


@pytest.fixture(scope="session")
def powerset2() -> Fixture:
    return build_fixture("powerset-diagonal", {"k": 2})


@pytest.fixture(scope="session")
def free2() -> Fixture:
    return build_fixture("free-discrete-preorder", {"n": 2})


@pytest.fixture(scope="session")
def coordinates() -> Fixture:
    return build_fixture("coordinate-coding", {"w": 2, "h": 2})
