"""Tests for functors and the het bifunctors they induce."""

from __future__ import annotations

from hypothesis import assume, given, strategies as st
import pytest

from hetcat.core import (
    HetcatParameterError,
    HetcatValidationError,
    apply,
    chain,
    find_left_representation,
    hom_bifunctor,
    hom_set,
    identity_functor,
    induced_het_left,
    induced_het_right,
    make_functor,
    validate_functor,
)
from hetcat.core.functor import LAW_COD_PRESERVATION

from .oracle import subset_label, subsets


def test_identity_functor_validates(c3):
    functor = make_functor(
        "id",
        c3,
        c3,
        {obj: obj for obj in c3.objects},
        {m.name: m.name for m in c3.morphisms},
    )
    assert functor == identity_functor(c3)
    assert apply(functor, "le_0_2") == "le_0_2"


def test_forced_images_are_filled_in_for_thin_targets(powerset2):
    diag = powerset2.functors["diag"]
    assert apply(diag, "le_{}_{1}") == "(le_{}_{1},le_{}_{1})"
    assert apply(diag, "id_{2}") == "(id_{2},id_{2})"


def test_cod_preservation_violation(c3):
    mor_map = {m.name: m.name for m in c3.morphisms}
    mor_map["le_0_1"] = "id_0"
    with pytest.raises(HetcatValidationError) as err:
        make_functor("bad", c3, c3, {obj: obj for obj in c3.objects}, mor_map)
    assert ("le_0_1", "id_0") in err.value.report.witnesses(LAW_COD_PRESERVATION)


def test_apply_rejects_foreign_morphism(c3, powerset2):
    with pytest.raises(HetcatParameterError):
        apply(powerset2.functors["diag"], "le_0_1")
    with pytest.raises(HetcatParameterError):
        identity_functor(c3)("7")


def test_hom_bifunctor(c3, hom_c3):
    assert hom_c3.het_set("0", "2") == hom_set(c3, "0", "2")
    assert hom_c3.act_left("le_1_2", "le_0_1") == "le_0_2"
    assert hom_c3.act_right("le_1_2", "le_0_1") == "le_0_2"


def test_induced_hets_of_identity_are_hom(c3, hom_c3):
    identity = identity_functor(c3)
    assert induced_het_left(identity) == hom_c3
    assert induced_het_right(identity) == hom_c3


def test_induced_left_of_diagonal(powerset2):
    het = powerset2.hets["diag-out"]
    for x in subsets(2):
        for a1 in subsets(2):
            for a2 in subsets(2):
                pair = f"({subset_label(a1)},{subset_label(a2)})"
                expected = x <= a1 and x <= a2
                assert bool(het.het_set(subset_label(x), pair)) == expected


def test_induced_right_of_meet(powerset2):
    het = induced_het_right(powerset2.functors["meet"])
    for x in subsets(2):
        for a1 in subsets(2):
            for a2 in subsets(2):
                pair = f"({subset_label(a1)},{subset_label(a2)})"
                assert bool(het.het_set(subset_label(x), pair)) == (x <= a1 & a2)


def test_induced_left_is_represented_by_identities(powerset2):
    diag = powerset2.functors["diag"]
    het = powerset2.hets["diag-out"]
    square = diag.target
    for x in diag.source.objects:
        arrow = find_left_representation(het, x)
        assert arrow.rep == diag(x)
        assert arrow.universal.name == square.identities[diag(x)]


def test_qualified_names_when_objects_are_identified(c3):
    constant = make_functor("const", c3, c3, dict.fromkeys(c3.objects, "2"), {})
    het = induced_het_left(constant)
    assert het.het_set("0", "2") == ("0/id_2",)
    assert het.act_right("1/id_2", "le_0_1") == "0/id_2"


C4 = chain(4)
C4_IDENTITY = identity_functor(C4)
C4_NAMES = [m.name for m in C4.morphisms]


@given(st.sampled_from(C4_NAMES), st.sampled_from(C4_NAMES))
def test_any_single_morphism_edit_is_detected(source, replacement):
    assume(source != replacement)
    mor_map = dict(C4_IDENTITY.mor_map)
    mor_map[source] = replacement
    report = validate_functor(C4, C4, C4_IDENTITY.obj_map, mor_map)
    assert not report.ok
