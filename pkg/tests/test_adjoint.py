"""Tests for adjunctions, adjunctive squares and brain functors."""

from __future__ import annotations

import dataclasses

import pytest

from hetcat.core import (
    Adjunction,
    HetcatNegativeResult,
    HetcatParameterError,
    assemble_adjunction,
    brain_from_adjoints,
    build_left_semiadjunction,
    build_right_semiadjunction,
    check_brain,
    hom_bifunctor,
    identity_functor,
    induced_het_left,
    make_functor,
    verify_adjunctive_square,
    verify_all_squares,
    verify_all_wings,
    verify_butterfly,
)
from hetcat.core.adjoint import (
    LAW_LEFT_ADJUNCTION,
    LAW_LOWER_TRIANGLE,
    LAW_RECEIVING_SIDE,
    LAW_SENDING_SIDE,
    LAW_UPPER_TRIANGLE,
    LAW_UPPER_WING,
)
from hetcat.gallery import build_fixture


def _adjunction(het) -> Adjunction:
    return assemble_adjunction(build_left_semiadjunction(het), build_right_semiadjunction(het))


def _without(semi, x, a):
    """Drop the stored bijection at (x, a)."""
    bijections = {key: dict(table) for key, table in semi.bijections.items()}
    bijections[(x, a)] = {}
    return dataclasses.replace(semi, bijections=bijections)


def test_galois_connection(ceil):
    adj = _adjunction(ceil)
    assert dict(adj.left_adjoint.obj_map) == {"0": "0", "1": "1", "2": "1", "3": "2", "4": "2"}
    assert dict(adj.right_adjoint.obj_map) == {"0": "0", "1": "2", "2": "4"}
    assert adj.unit("3") == "u_3_2"
    assert adj.counit("1") == "u_2_1"
    assert adj.composite[("1", "2")] == {"le_1_2": "le_1_4"}


def test_identity_adjunction(c3, hom_c3):
    adj = _adjunction(hom_c3)
    assert adj.left_adjoint == identity_functor(c3)
    assert adj.right_adjoint == identity_functor(c3)
    assert adj.unit("1") == "id_1"


def test_het_mismatch(ceil, hom_c3):
    with pytest.raises(HetcatParameterError, match="het mismatch"):
        assemble_adjunction(build_left_semiadjunction(ceil), build_right_semiadjunction(hom_c3))


def test_sides_must_differ(ceil):
    left = build_left_semiadjunction(ceil)
    with pytest.raises(HetcatParameterError):
        assemble_adjunction(left, left)


def test_adjunctive_square(ceil):
    adj = _adjunction(ceil)
    report = verify_adjunctive_square(adj, "u_1_2")
    assert report.ok
    assert (report.unit, report.f) == ("u_1_1", "le_1_2")
    assert (report.counit, report.g) == ("u_4_2", "le_1_4")
    assert report.render().splitlines()[0] == "u_1_2: 1 ⇢ 2"


def test_square_of_the_unit_factors_through_the_identity(ceil):
    adj = _adjunction(ceil)
    assert verify_adjunctive_square(adj, adj.unit("3")).f == "id_2"


def test_corrupted_psi_breaks_the_upper_triangle(ceil):
    adj = _adjunction(ceil)
    corrupted = dataclasses.replace(adj, left=_without(adj.left, "1", "2"))
    report = verify_adjunctive_square(corrupted, "u_1_2")
    assert not report.upper_ok
    assert report.lower_ok
    assert report.failures() == ["upper triangle fails at u_1_2"]
    assert verify_all_squares(corrupted).witnesses(LAW_UPPER_TRIANGLE) == [("u_1_2",)]
    with pytest.raises(HetcatNegativeResult):
        assemble_adjunction(corrupted.left, adj.right)


def test_corrupted_phi_breaks_the_lower_triangle(ceil):
    adj = _adjunction(ceil)
    corrupted = dataclasses.replace(adj, right=_without(adj.right, "1", "2"))
    assert verify_all_squares(corrupted).witnesses(LAW_LOWER_TRIANGLE) == [("u_1_2",)]


@pytest.mark.parametrize(
    ("name", "het"),
    [
        ("chain-galois", "ceil"),
        ("powerset-diagonal", "diag-out"),
        ("powerset-diagonal", "diag-in"),
        ("free-discrete-preorder", "fun"),
        ("hom-identity", "Hom"),
    ],
)
def test_every_square_commutes(name, het):
    adj = _adjunction(build_fixture(name).hets[het])
    assert verify_all_squares(adj).ok
    for (x, a), theta in adj.composite.items():
        for f, g in theta.items():
            assert adj.right.hom_to_het(x, a, g) == adj.left.hom_to_het(x, a, f)


def test_coordinate_brain(coordinates):
    brain = check_brain(
        coordinates.functors["code"], coordinates.hets["coding"], coordinates.hets["plotting"]
    )
    assert verify_all_wings(brain).ok
    report = verify_butterfly(brain, "code_P1", "plot_(0,0)")
    assert report.ok
    assert report.f == "id_(0,0)"
    assert report.g == "id_(0,0)"


def test_diagonal_brain_from_its_own_hets(powerset2):
    brain = check_brain(
        powerset2.functors["diag"], powerset2.hets["diag-out"], powerset2.hets["diag-in"]
    )
    d_in = "(le_{1}_{1,2},le_{2}_{1,2})"
    report = verify_butterfly(brain, "(id_{},id_{})", d_in)
    assert (report.a_in, report.x_in) == ("({1},{2})", "{1,2}")
    assert report.counit == "(id_{1,2},id_{1,2})"
    assert report.g == d_in
    assert report.ok


def test_constant_functor_fails_on_the_sending_side(c3, hom_c3):
    constant = make_functor("const", c3, c3, dict.fromkeys(c3.objects, "2"), {})
    with pytest.raises(HetcatNegativeResult) as err:
        check_brain(constant, induced_het_left(constant), hom_c3)
    report = err.value.report
    assert report.laws() == {LAW_SENDING_SIDE}
    assert report.witnesses(LAW_SENDING_SIDE) == [("0", "2"), ("1", "2")]


def test_constant_functor_fails_on_both_sides_with_hom(c3, hom_c3):
    constant = make_functor("const", c3, c3, dict.fromkeys(c3.objects, "2"), {})
    with pytest.raises(HetcatNegativeResult) as err:
        check_brain(constant, hom_c3, hom_c3)
    assert err.value.report.laws() == {LAW_RECEIVING_SIDE, LAW_SENDING_SIDE}


def test_brain_shapes_are_checked(powerset2):
    with pytest.raises(HetcatParameterError):
        check_brain(
            powerset2.functors["diag"], powerset2.hets["diag-in"], powerset2.hets["diag-out"]
        )


@pytest.mark.parametrize("k", [1, 2, 3])
def test_functors_with_both_adjoints_are_brain_functors(k):
    fixture = build_fixture("powerset-diagonal", {"k": k})
    brain = brain_from_adjoints(
        fixture.functors["join"], fixture.functors["diag"], fixture.functors["meet"]
    )
    assert brain.functor == fixture.functors["diag"]
    assert verify_all_wings(brain).ok
    assert check_brain(brain.functor, brain.het_out, brain.het_in).functor == brain.functor


def test_identity_triple(c3):
    identity = identity_functor(c3)
    brain = brain_from_adjoints(identity, identity, identity)
    assert brain.het_out == hom_bifunctor(c3)
    assert verify_all_wings(brain).ok


def test_meet_is_not_left_adjoint_to_the_diagonal(powerset2):
    meet = powerset2.functors["meet"]
    with pytest.raises(HetcatNegativeResult) as err:
        brain_from_adjoints(meet, powerset2.functors["diag"], meet)
    assert LAW_LEFT_ADJUNCTION in err.value.report.laws()


def test_butterfly_boundary(coordinates):
    brain = check_brain(
        coordinates.functors["code"], coordinates.hets["coding"], coordinates.hets["plotting"]
    )
    with pytest.raises(HetcatParameterError):
        verify_butterfly(brain, "plot_(0,0)", "code_P1")


def test_corrupted_brain_breaks_the_upper_wing(coordinates):
    brain = check_brain(
        coordinates.functors["code"], coordinates.hets["coding"], coordinates.hets["plotting"]
    )
    corrupted = dataclasses.replace(brain, left=_without(brain.left, "P2", "(1,0)"))
    report = verify_butterfly(corrupted, "code_P2", "plot_(1,0)")
    assert report.failures() == ["upper wing fails at code_P2"]
    assert verify_all_wings(corrupted).witnesses(LAW_UPPER_WING) == [("code_P2",)]
