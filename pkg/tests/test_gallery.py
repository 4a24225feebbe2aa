"""Tests for the fixture gallery and its narrative reports."""

from __future__ import annotations

import dataclasses

from hypothesis import given, strategies as st
import pytest

from hetcat.core import (
    HetcatParameterError,
    Side,
    build_left_semiadjunction,
    build_right_semiadjunction,
    validate_category,
    validate_functor,
    validate_het,
)
from hetcat.gallery import (
    FIXTURES,
    LAW_EXPECTATION,
    build_fixture,
    instruction_report,
    selection_report,
    verify_fixture,
)
from hetcat.gallery.fixture_description import ExpectedRepresentation

from .oracle import ceiling_oracle


@pytest.mark.parametrize("name", sorted(FIXTURES))
def test_every_fixture_verifies_with_its_defaults(name):
    fixture = build_fixture(name)
    assert fixture.name == name
    report = verify_fixture(fixture)
    assert report.ok, report.render()


@pytest.mark.parametrize("name", sorted(FIXTURES))
def test_every_part_passes_its_laws(name):
    fixture = build_fixture(name)
    for cat in fixture.categories.values():
        assert validate_category(cat.objects, cat.morphisms, cat.identities, cat.table).ok
    for functor in fixture.functors.values():
        assert validate_functor(
            functor.source, functor.target, functor.obj_map, functor.mor_map
        ).ok
    for het in fixture.hets.values():
        assert validate_het(
            het.sending, het.receiving, het.elements, het.left_action, het.right_action
        ).ok


@pytest.mark.parametrize("name", sorted(FIXTURES))
def test_builds_are_deterministic(name):
    assert build_fixture(name) == build_fixture(name)


@given(st.integers(min_value=0, max_value=8), st.integers(min_value=0, max_value=4))
def test_chain_galois_matches_brute_force(n, m):
    fixture = build_fixture("chain-galois", {"n": n, "m": m})
    left, right = ceiling_oracle(n, m)
    expected = fixture.expected
    assert dict(expected["F"].object_map) == {
        str(x): None if a is None else str(a) for x, a in left.items()
    }
    assert dict(expected["G"].object_map) == {str(a): str(x) for a, x in right.items()}
    assert ("galois" in expected) == (n <= 2 * m)
    assert verify_fixture(fixture).ok


def test_parallel_verification(free2):
    assert verify_fixture(free2, workers=3).ok


@pytest.mark.parametrize("k", [1, 3])
def test_powerset_sizes(k):
    assert verify_fixture(build_fixture("powerset-diagonal", {"k": k})).ok


def test_parameters_are_coerced():
    assert build_fixture("chain-galois", {"n": "6", "m": "3"}).params == {"n": 6, "m": 3}


@pytest.mark.parametrize(
    ("name", "params"),
    [
        ("no-such-fixture", {}),
        ("chain-galois", {"n": 13}),
        ("chain-galois", {"m": -1}),
        ("powerset-diagonal", {"k": 0}),
        ("powerset-diagonal", {"k": "two"}),
        ("hom-identity", {"size": 3}),
    ],
)
def test_bad_fixture_requests(name, params):
    with pytest.raises(HetcatParameterError):
        build_fixture(name, params)


def test_tampered_expectation_is_reported():
    fixture = build_fixture("chain-galois")
    tampered_map = {**fixture.expected["F"].object_map, "3": "1"}
    tampered = dataclasses.replace(
        fixture,
        expected={
            **fixture.expected,
            "F": ExpectedRepresentation("F", "ceil", Side.LEFT, tampered_map),
        },
    )
    report = verify_fixture(tampered)
    assert report.witnesses(LAW_EXPECTATION) == [("F", "3", "1", "2")]


def test_selection_report_through_the_unit(ceil):
    text = selection_report(build_left_semiadjunction(ceil), "u_3_2")
    lines = text.splitlines()
    assert "Generator of diversity: F(3) = 2" in lines
    assert "Polling interface (universal het): u_3_2: 3 ⇢ 2" in lines
    assert "Differential amplification: id_2: 2 → 2" in lines
    assert "u_3_2 = id_2·u_3_2" in lines
    assert lines[-1].startswith("The amplification hom is the identity")


def test_selection_report_with_a_proper_amplification(ceil):
    text = selection_report(build_left_semiadjunction(ceil), "u_1_2")
    assert "Differential amplification: le_1_2: 1 → 2" in text
    assert "identity" not in text


def test_selection_report_for_free_preorders(free2):
    semi = build_left_semiadjunction(free2.hets["fun"])
    text = selection_report(semi, "fun_S2_K2_[1,1]")
    assert "Generator of diversity: F(S2) = D2" in text
    assert "fun_S2_D2_[0,1]: S2 ⇢ D2" in text
    assert "Differential amplification: mono_D2_K2_[1,1]: D2 → K2" in text


def test_instruction_report(ceil):
    text = instruction_report(build_right_semiadjunction(ceil), "u_1_1")
    lines = text.splitlines()
    assert "Sending object: G(1) = 2" in lines
    assert "Output interface (universal het): u_2_1: 2 ⇢ 1" in lines
    assert "Internal action: le_1_2: 1 → 2" in lines
    assert "u_1_1 = u_2_1·le_1_2" in lines


def test_reports_check_their_side(ceil):
    with pytest.raises(HetcatParameterError):
        selection_report(build_right_semiadjunction(ceil), "u_1_1")
    with pytest.raises(HetcatParameterError):
        instruction_report(build_left_semiadjunction(ceil), "u_1_1")


def test_reports_reject_unknown_elements(ceil):
    with pytest.raises(HetcatParameterError):
        selection_report(build_left_semiadjunction(ceil), "u_4_0")
