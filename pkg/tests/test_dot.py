"""Tests for the DOT diagrams of squares and butterflies."""

from __future__ import annotations

import dataclasses

import pytest

from hetcat.core import (
    HetcatIntegrityError,
    HetcatParameterError,
    assemble_adjunction,
    build_left_semiadjunction,
    build_right_semiadjunction,
    check_brain,
)
from hetcat.dot import KIND_BUTTERFLY, KIND_SQUARE, emit_butterfly, emit_dot, emit_square

SQUARE_U_1_2 = """\
digraph square {
  rankdir=LR;
  label="u_1_2: 1 ⇢ 2";
  node [fontname="Helvetica"];
  edge [fontname="Helvetica"];
  "s:1" [label="1"];
  "r:1" [label="1"];
  "s:4" [label="4"];
  "r:2" [label="2"];
  "s:1" -> "r:1" [label="u_1_1", style=dashed];
  "r:1" -> "r:2" [label="le_1_2", style=solid];
  "s:1" -> "s:4" [label="le_1_4", style=solid];
  "s:4" -> "r:2" [label="u_4_2", style=dashed];
}
"""


@pytest.fixture
def ceil_adjunction(ceil):
    return assemble_adjunction(build_left_semiadjunction(ceil), build_right_semiadjunction(ceil))


@pytest.fixture
def coordinate_brain(coordinates):
    return check_brain(
        coordinates.functors["code"], coordinates.hets["coding"], coordinates.hets["plotting"]
    )


def test_square_text(ceil_adjunction):
    assert emit_square(ceil_adjunction, "u_1_2") == SQUARE_U_1_2


def test_square_is_byte_stable(ceil_adjunction):
    first = emit_dot(KIND_SQUARE, ceil_adjunction, "u_1_2")
    assert first == emit_dot(KIND_SQUARE, ceil_adjunction, "u_1_2")
    assert first.encode() == SQUARE_U_1_2.encode()


def test_square_edge_styles(ceil_adjunction):
    dot = emit_square(ceil_adjunction, "u_0_2", rankdir="TB")
    assert "  rankdir=TB;" in dot.splitlines()
    assert dot.count("style=dashed") == 2
    assert dot.count("style=solid") == 2


def test_butterfly(coordinate_brain):
    dot = emit_butterfly(coordinate_brain, "code_P1", "plot_(0,0)")
    lines = dot.splitlines()
    assert lines[0] == "digraph butterfly {"
    assert '  label="code: code_P1, plot_(0,0)";' in lines
    assert sum("->" in line for line in lines) == 6
    assert '  "x:P1" [label="P1"];' in lines
    assert '  "a:(0,0)" [label="(0,0)"];' in lines
    assert dot.count("style=dashed") == 4


def test_unverified_square_is_refused(ceil_adjunction):
    left = ceil_adjunction.left
    bijections = {key: dict(table) for key, table in left.bijections.items()}
    bijections[("1", "2")] = {}
    corrupted = dataclasses.replace(
        ceil_adjunction, left=dataclasses.replace(left, bijections=bijections)
    )
    with pytest.raises(HetcatIntegrityError, match="upper triangle fails at u_1_2"):
        emit_square(corrupted, "u_1_2")


def test_unverified_butterfly_is_refused(coordinate_brain):
    right = coordinate_brain.right
    bijections = {key: dict(table) for key, table in right.bijections.items()}
    bijections[("(0,0)", "P1")] = {}
    corrupted = dataclasses.replace(
        coordinate_brain, right=dataclasses.replace(right, bijections=bijections)
    )
    with pytest.raises(HetcatIntegrityError, match="lower wing"):
        emit_butterfly(corrupted, "code_P1", "plot_(0,0)")


def test_kind_must_match_the_data(ceil_adjunction, coordinate_brain):
    with pytest.raises(HetcatParameterError):
        emit_dot(KIND_BUTTERFLY, ceil_adjunction, "u_1_2")
    with pytest.raises(HetcatParameterError):
        emit_dot(KIND_SQUARE, coordinate_brain, "code_P1")
    with pytest.raises(HetcatParameterError):
        emit_dot("hexagon", ceil_adjunction, "u_1_2")
