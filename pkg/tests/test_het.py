"""Tests for het bifunctors and their action laws."""

from __future__ import annotations

from hypothesis import assume, given, strategies as st
import pytest

from hetcat.core import (
    HetcatParameterError,
    HetcatValidationError,
    HetElement,
    act,
    chain,
    make_het,
    relation_element_name,
    validate_het,
)
from hetcat.core.het import LAW_LEFT_TARGET, LAW_MIXED, LAW_RIGHT_TOTAL

from .conftest import ceiling


def test_ceiling_het_validates(ceil):
    assert ceil.het_set("3", "2") == ("u_3_2",)
    assert ceil.het_set("3", "1") == ()
    assert len(ceil.elements) == 9


def test_actions_are_the_forced_ones(ceil):
    """In a thin het every action is the unique element of its target het-set."""
    for element in ceil.elements:
        for k in ceil.receiving.outgoing(element.dst):
            target = relation_element_name(element.src, ceil.receiving.cod(k))
            assert ceil.act_left(k, element.name) == target
        for h in ceil.sending.incoming(element.src):
            target = relation_element_name(ceil.sending.dom(h), element.dst)
            assert ceil.act_right(element.name, h) == target


def test_empty_het_validates():
    het = make_het("empty", chain(3), chain(2), [], {}, {})
    assert het.het_set("0", "0") == ()


def _mixed_counterexample():
    """Two elements in Het(0,1) let k(dh) and (kd)h land on different ones."""
    x, a = chain(2, name="X"), chain(2, name="A")
    elements = [
        HetElement("d", "1", "0"),
        HetElement("e", "1", "1"),
        HetElement("s", "0", "0"),
        HetElement("t1", "0", "1"),
        HetElement("t2", "0", "1"),
    ]
    left = {("le_0_1", "d"): "e", ("le_0_1", "s"): "t1"}
    right = {("d", "le_0_1"): "s", ("e", "le_0_1"): "t2"}
    return x, a, elements, left, right


def test_mixed_associativity_violation_is_the_only_one():
    report = validate_het(*_mixed_counterexample())
    assert report.laws() == {LAW_MIXED}
    assert report.witnesses(LAW_MIXED) == [("le_0_1", "d", "le_0_1")]
    assert str(report.violations[0]) == "(kd)h=k(dh): le_0_1, d, le_0_1"


def test_make_het_raises_with_report():
    x, a, elements, left, right = _mixed_counterexample()
    with pytest.raises(HetcatValidationError) as err:
        make_het("broken", x, a, elements, left, right)
    assert err.value.report.laws() == {LAW_MIXED}


def test_missing_action_is_reported():
    x, a, elements, left, right = _mixed_counterexample()
    del right[("e", "le_0_1")]
    report = validate_het(x, a, elements, left, right)
    assert ("e", "le_0_1") in report.witnesses(LAW_RIGHT_TOTAL)


def test_act_on_hom(hom_c3):
    assert act(hom_c3, "le_1_2", "le_0_1", "id_0") == "le_0_2"
    assert act(hom_c3, "id_1", "le_0_1", "id_0") == "le_0_1"


def test_act_on_ceiling(ceil):
    assert act(ceil, "le_1_2", "u_2_1", "le_1_2") == "u_1_2"
    assert act(ceil, "id_2", "u_3_2", "id_3") == "u_3_2"


def test_act_boundary_mismatch(ceil):
    with pytest.raises(HetcatParameterError, match="dom"):
        ceil.act_left("le_0_1", "u_3_2")
    with pytest.raises(HetcatParameterError, match="cod"):
        ceil.act_right("u_1_1", "le_2_3")
    with pytest.raises(HetcatParameterError):
        ceil.element("u_4_0")


def test_equality_ignores_element_order(ceil):
    reordered = make_het(
        "ceil",
        ceil.sending,
        ceil.receiving,
        reversed(ceil.elements),
        ceil.left_action,
        ceil.right_action,
    )
    assert reordered == ceil


CEIL = ceiling()
CEIL_LEFT = sorted(CEIL.left_action)
CEIL_NAMES = [element.name for element in CEIL.elements]


@given(st.sampled_from(CEIL_LEFT), st.sampled_from(CEIL_NAMES))
def test_any_single_action_edit_is_detected(key, replacement):
    assume(CEIL.left_action[key] != replacement)
    left = dict(CEIL.left_action)
    left[key] = replacement
    report = validate_het(CEIL.sending, CEIL.receiving, CEIL.elements, left, CEIL.right_action)
    assert not report.ok
    assert LAW_LEFT_TARGET in report.laws()
