"""Narrative reports contrasting a direct het with its factorization through a universal."""

from __future__ import annotations

from ..core import (
    HetcatParameterError,
    HetElement,
    Semiadjunction,
    Side,
    factor_left,
    factor_right,
)
from ..translation import translate


def _element(semi: Semiadjunction, d: HetElement | str) -> HetElement:
    name = d.name if isinstance(d, HetElement) else d
    if not semi.het.has_element(name):
        raise HetcatParameterError(f"{name} is not a het of {semi.het.name}")
    return semi.het.element(name)


def selection_report(semi: Semiadjunction, d: HetElement | str) -> str:
    """Render d: X ⇢ A against its factorization f(d)·h_X through F(X)."""
    if semi.side is not Side.LEFT:
        raise HetcatParameterError("A selection report needs a left semiadjunction")
    element = _element(semi, d)
    x, a = element.src, element.dst
    arrow = semi.arrows[x]
    f = factor_left(arrow, element)
    values = {
        "d": element.name,
        "x": x,
        "a": a,
        "rep": arrow.rep,
        "unit": arrow.universal.name,
        "f": f,
    }
    lines = [
        translate("report.selection.title"),
        translate("report.selection.direct", **values),
        translate("report.selection.generator", **values),
        translate("report.selection.polling", **values),
        translate("report.selection.amplification", **values),
        translate("report.selection.factorization", **values),
    ]
    if semi.het.receiving.is_identity(f):
        lines.append(translate("report.selection.identity", **values))
    return "\n".join(lines) + "\n"


def instruction_report(semi: Semiadjunction, d: HetElement | str) -> str:
    """Render d: X ⇢ A against its factorization e_A·g(d) through G(A)."""
    if semi.side is not Side.RIGHT:
        raise HetcatParameterError("An instruction report needs a right semiadjunction")
    element = _element(semi, d)
    x, a = element.src, element.dst
    arrow = semi.arrows[a]
    g = factor_right(arrow, element)
    values = {
        "d": element.name,
        "x": x,
        "a": a,
        "rep": arrow.rep,
        "counit": arrow.universal.name,
        "g": g,
    }
    lines = [
        translate("report.instruction.title"),
        translate("report.instruction.direct", **values),
        translate("report.instruction.generator", **values),
        translate("report.instruction.output", **values),
        translate("report.instruction.action", **values),
        translate("report.instruction.factorization", **values),
    ]
    if semi.het.sending.is_identity(g):
        lines.append(translate("report.instruction.identity", **values))
    return "\n".join(lines) + "\n"
