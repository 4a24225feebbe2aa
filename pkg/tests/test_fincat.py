"""Tests for finite categories and their constructions."""

from __future__ import annotations

import itertools

from hypothesis import assume, given, strategies as st
import pytest

from hetcat.core import (
    HetcatParameterError,
    HetcatValidationError,
    MorphismId,
    chain,
    compose,
    discrete,
    hom_set,
    make_category,
    opposite,
    powerset,
    product,
    validate_category,
)
from hetcat.core.fincat import (
    LAW_ASSOCIATIVITY,
    LAW_COD_MISMATCH,
    LAW_MISSING_IDENTITY,
    LAW_NOT_TOTAL,
)


def _chain3_parts():
    objects = ["0", "1", "2"]
    morphisms = [
        MorphismId("id_0", "0", "0"),
        MorphismId("id_1", "1", "1"),
        MorphismId("id_2", "2", "2"),
        MorphismId("le01", "0", "1"),
        MorphismId("le12", "1", "2"),
        MorphismId("le02", "0", "2"),
    ]
    identities = {"0": "id_0", "1": "id_1", "2": "id_2"}
    table = {("le12", "le01"): "le02"}
    return objects, morphisms, identities, table


def test_chain_from_explicit_tables():
    cat = make_category("C3", *_chain3_parts())
    assert len(cat.morphisms) == 6
    assert compose(cat, "le12", "le01") == "le02"
    assert compose(cat, "id_1", "le01") == "le01"
    assert compose(cat, "le01", "id_0") == "le01"


def test_missing_identity_is_reported():
    objects, morphisms, identities, table = _chain3_parts()
    del identities["1"]
    report = validate_category(objects, morphisms, identities, table)
    assert not report.ok
    assert ("1",) in report.witnesses(LAW_MISSING_IDENTITY)


def test_wrong_composite_is_reported_with_every_violation():
    objects, morphisms, identities, table = _chain3_parts()
    table[("le12", "le01")] = "le01"
    with pytest.raises(HetcatValidationError) as err:
        make_category("C3", objects, morphisms, identities, table)
    report = err.value.report
    assert report.laws() == {LAW_COD_MISMATCH, LAW_ASSOCIATIVITY}
    assert report.witnesses(LAW_COD_MISMATCH) == [("le12", "le01", "le01")]
    # id_2 cannot follow the bogus 0 → 1 composite
    assert report.witnesses(LAW_ASSOCIATIVITY) == [("id_2", "le12", "le01")]


def test_partial_table_is_reported():
    objects, morphisms, identities, _ = _chain3_parts()
    report = validate_category(objects, morphisms, identities, {})
    assert report.witnesses(LAW_NOT_TOTAL) == [("le12", "le01")]


def test_associativity_witness():
    objects = ["a", "b", "c", "d"]
    morphisms = [
        *(MorphismId(f"id_{o}", o, o) for o in objects),
        MorphismId("f", "a", "b"),
        MorphismId("g", "b", "c"),
        MorphismId("h", "c", "d"),
        MorphismId("gf", "a", "c"),
        MorphismId("hg", "b", "d"),
        MorphismId("p", "a", "d"),
        MorphismId("q", "a", "d"),
    ]
    table = {
        ("g", "f"): "gf",
        ("h", "g"): "hg",
        ("h", "gf"): "p",
        ("hg", "f"): "q",
    }
    report = validate_category(objects, morphisms, {o: f"id_{o}" for o in objects}, table)
    assert report.witnesses(LAW_ASSOCIATIVITY) == [("h", "g", "f")]


def test_compose_rejects_non_composable_pair(c3):
    with pytest.raises(HetcatParameterError, match="le_0_1.*le_1_2"):
        compose(c3, "le_0_1", "le_1_2")


def test_chain_naming(c3):
    assert c3.objects == ("0", "1", "2")
    assert compose(c3, "le_1_2", "le_0_1") == "le_0_2"
    assert c3.identity("1") == "id_1"


def test_opposite_swaps_and_is_an_involution(c3):
    op = opposite(c3)
    assert op.morphism("le_0_1") == MorphismId("le_0_1", "1", "0")
    assert compose(op, "le_0_1", "le_1_2") == "le_0_2"
    assert opposite(op) == c3
    assert hom_set(op, "2", "0") == hom_set(c3, "0", "2")


def test_opposite_passes_validation(c3):
    op = opposite(c3)
    assert validate_category(op.objects, op.morphisms, op.identities, op.table).ok


def test_product_of_two_chains():
    c2 = chain(2)
    square = product(c2, c2)
    assert len(square.objects) == 4
    assert len(square.morphisms) == 9
    assert {m.name for m in square.morphisms} == {
        f"({f.name},{g.name})" for f, g in itertools.product(c2.morphisms, c2.morphisms)
    }
    assert square.identity("(0,1)") == "(id_0,id_1)"
    assert compose(square, "(id_1,le_0_1)", "(le_0_1,id_0)") == "(le_0_1,le_0_1)"
    assert validate_category(
        square.objects, square.morphisms, square.identities, square.table
    ).ok


def test_hom_sets(c3):
    assert hom_set(c3, "0", "2") == ("le_0_2",)
    assert hom_set(c3, "2", "0") == ()
    p2 = powerset(2)
    assert hom_set(p2, "{1}", "{1,2}") == ("le_{1}_{1,2}",)
    with pytest.raises(HetcatParameterError):
        hom_set(c3, "0", "7")


def test_powerset_order():
    assert powerset(2).objects == ("{}", "{1}", "{2}", "{1,2}")
    assert len(powerset(3).objects) == 8


def test_discrete_has_only_identities():
    cat = discrete("D", ["a", "b"])
    assert [m.name for m in cat.morphisms] == ["id_a", "id_b"]


@given(st.integers(min_value=1, max_value=7))
def test_chain_morphism_count_and_thinness(n):
    cat = chain(n)
    assert len(cat.morphisms) == n * (n + 1) // 2
    assert cat.is_thin()


@given(st.integers(min_value=0, max_value=3))
def test_powerset_is_thin(k):
    assert powerset(k).is_thin()


@given(st.integers(min_value=1, max_value=3), st.integers(min_value=1, max_value=3))
def test_product_morphism_count(n, m):
    left, right = chain(n), chain(m)
    assert len(product(left, right).morphisms) == len(left.morphisms) * len(right.morphisms)


C4 = chain(4)
C4_PAIRS = sorted(C4.table)
C4_NAMES = [m.name for m in C4.morphisms]


@given(st.sampled_from(C4_PAIRS), st.sampled_from(C4_NAMES))
def test_any_single_table_edit_is_detected(pair, replacement):
    assume(C4.table[pair] != replacement)
    table = dict(C4.table)
    table[pair] = replacement
    report = validate_category(C4.objects, C4.morphisms, C4.identities, table)
    assert not report.ok
