"""Graphviz DOT text for the adjunctive square and the brain-functor butterfly.

Hets are drawn dashed and homs solid. Output depends only on the input, so
the same verified data always yields the same bytes.
"""

from __future__ import annotations

from collections.abc import Iterable
import logging

from .const import DEFAULT_DOT_RANKDIR, DOT_FONT, DOT_HET_STYLE, DOT_HOM_STYLE
from .core import (
    Adjunction,
    BrainFunctor,
    HetcatIntegrityError,
    HetcatParameterError,
    HetElement,
    verify_adjunctive_square,
    verify_butterfly,
)

_LOGGER = logging.getLogger(__name__)

KIND_SQUARE = "square"
KIND_BUTTERFLY = "butterfly"


def _quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def _graph(
    name: str,
    label: str,
    nodes: Iterable[tuple[str, str]],
    edges: Iterable[tuple[str, str, str, str]],
    rankdir: str,
) -> str:
    lines = [
        f"digraph {name} {{",
        f"  rankdir={rankdir};",
        f"  label={_quote(label)};",
        f"  node [fontname={_quote(DOT_FONT)}];",
        f"  edge [fontname={_quote(DOT_FONT)}];",
    ]
    seen: set[str] = set()
    for node_id, node_label in nodes:
        if node_id in seen:
            continue
        seen.add(node_id)
        lines.append(f"  {_quote(node_id)} [label={_quote(node_label)}];")
    for tail, head, edge_label, style in edges:
        lines.append(
            f"  {_quote(tail)} -> {_quote(head)} [label={_quote(edge_label)}, style={style}];"
        )
    lines.append("}")
    return "\n".join(lines) + "\n"


def emit_square(
    adj: Adjunction, d: HetElement | str, rankdir: str = DEFAULT_DOT_RANKDIR
) -> str:
    """Draw X ⇢ F(X) → A over X → G(A) ⇢ A for one het d."""
    report = verify_adjunctive_square(adj, d)
    if not report.ok:
        raise HetcatIntegrityError(
            f"Refusing to draw an unverified square: {'; '.join(report.failures())}"
        )
    x, a = report.x, report.a
    left_rep = adj.left_adjoint(x)
    right_rep = adj.right_adjoint(a)
    # s: sending objects, r: receiving objects
    nodes = [
        (f"s:{x}", x),
        (f"r:{left_rep}", left_rep),
        (f"s:{right_rep}", right_rep),
        (f"r:{a}", a),
    ]
    edges = [
        (f"s:{x}", f"r:{left_rep}", report.unit, DOT_HET_STYLE),
        (f"r:{left_rep}", f"r:{a}", report.f, DOT_HOM_STYLE),
        (f"s:{x}", f"s:{right_rep}", report.g, DOT_HOM_STYLE),
        (f"s:{right_rep}", f"r:{a}", report.counit, DOT_HET_STYLE),
    ]
    return _graph(KIND_SQUARE, f"{report.element}: {x} ⇢ {a}", nodes, edges, rankdir)


def emit_butterfly(
    brain: BrainFunctor,
    d_out: HetElement | str,
    d_in: HetElement | str,
    rankdir: str = DEFAULT_DOT_RANKDIR,
) -> str:
    """Draw the upper wing of d_out and the lower wing of d_in around F(X)."""
    report = verify_butterfly(brain, d_out, d_in)
    if not report.ok:
        raise HetcatIntegrityError(
            f"Refusing to draw an unverified butterfly: {'; '.join(report.failures())}"
        )
    rep_out = brain.functor(report.x)
    rep_in = brain.functor(report.x_in)
    # x: objects of the source of F, a: objects of its target
    nodes = [
        (f"x:{report.x}", report.x),
        (f"a:{rep_out}", rep_out),
        (f"a:{report.a}", report.a),
        (f"a:{report.a_in}", report.a_in),
        (f"a:{rep_in}", rep_in),
        (f"x:{report.x_in}", report.x_in),
    ]
    edges = [
        (f"x:{report.x}", f"a:{rep_out}", report.unit, DOT_HET_STYLE),
        (f"a:{rep_out}", f"a:{report.a}", report.f, DOT_HOM_STYLE),
        (f"x:{report.x}", f"a:{report.a}", report.d_out, DOT_HET_STYLE),
        (f"a:{report.a_in}", f"a:{rep_in}", report.g, DOT_HOM_STYLE),
        (f"a:{rep_in}", f"x:{report.x_in}", report.counit, DOT_HET_STYLE),
        (f"a:{report.a_in}", f"x:{report.x_in}", report.d_in, DOT_HET_STYLE),
    ]
    label = f"{brain.functor.name}: {report.d_out}, {report.d_in}"
    return _graph(KIND_BUTTERFLY, label, nodes, edges, rankdir)


def emit_dot(
    kind: str,
    data: Adjunction | BrainFunctor,
    *elements: HetElement | str,
    rankdir: str = DEFAULT_DOT_RANKDIR,
) -> str:
    """Dispatch on kind: a square takes one het, a butterfly an outgoing and an incoming het."""
    if kind == KIND_SQUARE and isinstance(data, Adjunction) and len(elements) == 1:
        dot = emit_square(data, elements[0], rankdir)
    elif kind == KIND_BUTTERFLY and isinstance(data, BrainFunctor) and len(elements) == 2:
        dot = emit_butterfly(data, elements[0], elements[1], rankdir)
    else:
        raise HetcatParameterError(
            f"Cannot draw a {kind} from {type(data).__name__} with {len(elements)} het(s)"
        )
    _LOGGER.debug("Emitted %s diagram (%d bytes)", kind, len(dot.encode()))
    return dot
