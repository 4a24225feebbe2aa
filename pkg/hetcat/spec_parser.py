"""Line-oriented spec files: parsing into a SpecDocument and serializing back.

A file holds blocks and one-line directives:

    category X
      poset-chain 5
    end
    het ceil : X ~> A
      rel 3 2
    end
    induced-left H = F

Comments start with '#'. Names may hold any non-space characters except
'# : . = > ~' and may not start with '-'.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field
from functools import cache
import logging

from lark import Lark, Token, Tree
from lark.exceptions import (
    UnexpectedCharacters,
    UnexpectedEOF,
    UnexpectedInput,
    UnexpectedToken,
)

from .const import (
    DIRECTIVE_HOM,
    DIRECTIVE_INDUCED_LEFT,
    DIRECTIVE_INDUCED_RIGHT,
    DIRECTIVE_OPPOSITE,
    DIRECTIVE_PRODUCT,
    MAX_CHAIN_SIZE,
    MAX_POWERSET_SIZE,
)
from .core import (
    FinCategory,
    FinFunctor,
    HetBifunctor,
    HetcatParameterError,
    HetElement,
    MorphismId,
    SpecParseError,
    chain,
    hom_bifunctor,
    induced_het_left,
    induced_het_right,
    make_category,
    make_functor,
    make_het,
    opposite,
    powerset,
    product,
    relation_element_name,
)

_LOGGER = logging.getLogger(__name__)

GRAMMAR = r"""
start: _NL? statement*

?statement: category | functor | het | directive

category: "category" NAME _NL cat_line* "end" _NL
?cat_line: objects | arrow | identity | compose | poset_chain | poset_powerset
objects: "objects" NAME+ _NL
arrow: "arrow" NAME ":" NAME "->" NAME _NL
identity: "identity" NAME "=" NAME _NL
compose: "compose" NAME "." NAME "=" NAME _NL
poset_chain: "poset-chain" NAME _NL
poset_powerset: "poset-powerset" NAME _NL

functor: "functor" NAME ":" NAME "->" NAME _NL fun_line* "end" _NL
?fun_line: obj_image | mor_image
obj_image: "obj" NAME "->" NAME _NL
mor_image: "mor" NAME "->" NAME _NL

het: "het" NAME ":" NAME "~>" NAME _NL het_line* "end" _NL
?het_line: element | lact | ract | rel
element: "element" NAME ":" NAME "~>" NAME _NL
lact: "lact" NAME NAME "=" NAME _NL
ract: "ract" NAME NAME "=" NAME _NL
rel: "rel" NAME NAME _NL

?directive: opposite | product | hom | induced_left | induced_right
opposite: "opposite" NAME "=" NAME _NL
product: "product" NAME "=" NAME NAME _NL
hom: "hom" NAME "=" NAME _NL
induced_left: "induced-left" NAME "=" NAME _NL
induced_right: "induced-right" NAME "=" NAME _NL

NAME: /[^\s#:.=>~\-][^\s#:.=>~]*/
COMMENT: /#[^\n]*/
_NL: /(\r?\n[\t ]*(#[^\n]*)?)+/

%import common.WS_INLINE
%ignore WS_INLINE
%ignore COMMENT
"""

KIND_CATEGORY = "category"
KIND_FUNCTOR = "functor"
KIND_HET = "het"

_DIRECTIVES = {
    "opposite": DIRECTIVE_OPPOSITE,
    "product": DIRECTIVE_PRODUCT,
    "hom": DIRECTIVE_HOM,
    "induced_left": DIRECTIVE_INDUCED_LEFT,
    "induced_right": DIRECTIVE_INDUCED_RIGHT,
}


@dataclass(frozen=True)
class Directive:
    """A one-line derivation such as `product N = C D`."""

    keyword: str
    name: str
    args: tuple[str, ...]


@dataclass
class SpecDocument:
    """Categories, functors and hets of one spec file, in declaration order.

    Derived values are materialized next to the explicit ones; directives
    records how they were derived so serialization can write them back.
    """

    categories: dict[str, FinCategory] = field(default_factory=dict)
    functors: dict[str, FinFunctor] = field(default_factory=dict)
    hets: dict[str, HetBifunctor] = field(default_factory=dict)
    directives: dict[str, Directive] = field(default_factory=dict)
    order: list[tuple[str, str]] = field(default_factory=list)

    @classmethod
    def from_parts(
        cls,
        categories: Mapping[str, FinCategory],
        functors: Mapping[str, FinFunctor] | None = None,
        hets: Mapping[str, HetBifunctor] | None = None,
    ) -> SpecDocument:
        """Wrap already-built values as explicit blocks."""
        functors = functors or {}
        hets = hets or {}
        return cls(
            categories=dict(categories),
            functors=dict(functors),
            hets=dict(hets),
            order=[
                *((KIND_CATEGORY, name) for name in categories),
                *((KIND_FUNCTOR, name) for name in functors),
                *((KIND_HET, name) for name in hets),
            ],
        )

    def category(self, name: str) -> FinCategory:
        return _lookup(self.categories, name, KIND_CATEGORY)

    def functor(self, name: str) -> FinFunctor:
        return _lookup(self.functors, name, KIND_FUNCTOR)

    def het(self, name: str) -> HetBifunctor:
        return _lookup(self.hets, name, KIND_HET)


def _lookup(table, name, kind):
    try:
        return table[name]
    except KeyError:
        raise HetcatParameterError(f"No {kind} named '{name}' in the spec file") from None


@cache
def _parser() -> Lark:
    return Lark(GRAMMAR, parser="lalr")


def _syntax_error(err: UnexpectedInput, text: str) -> SpecParseError:
    line, column = err.line, err.column
    if isinstance(err, UnexpectedToken):
        expected = tuple(sorted(err.accepts or err.expected))
        message = f"unexpected {err.token.type} {str(err.token)!r}"
    elif isinstance(err, UnexpectedCharacters):
        expected = tuple(sorted(err.allowed or ()))
        message = f"unexpected character {err.char!r}"
    elif isinstance(err, UnexpectedEOF):
        expected = tuple(sorted(err.expected))
        message = "unexpected end of file"
        line, column = max(text.count("\n"), 1), 1
    else:
        expected = ()
        message = str(err)
    if line is None or line < 1:
        line, column = max(text.count("\n"), 1), 1
    if expected:
        message = f"{message}, expected one of: {', '.join(expected)}"
    return SpecParseError(message, line, column, expected)


def _names(tree: Tree) -> list[Token]:
    return [child for child in tree.children if isinstance(child, Token)]


class _Builder:
    """Walks the parse tree and builds values in declaration order."""

    def __init__(self) -> None:
        self.document = SpecDocument()

    def _declare(self, kind: str, token: Token, table: dict) -> str:
        name = str(token)
        if name in table:
            raise SpecParseError(
                f"{kind} '{name}' is declared twice", token.line, token.column
            )
        return name

    def _resolve(self, table: Mapping, kind: str, token: Token):
        try:
            return table[str(token)]
        except KeyError:
            raise SpecParseError(
                f"undeclared {kind} '{token}'", token.line, token.column
            ) from None

    def statement(self, tree: Tree) -> None:
        handler = getattr(self, f"_{tree.data}")
        handler(tree)

    def _category(self, tree: Tree) -> None:
        head, *lines = tree.children
        name = self._declare(KIND_CATEGORY, head, self.document.categories)
        objects: list[str] = []
        morphisms: list[MorphismId] = []
        identities: dict[str, str] = {}
        table: dict[tuple[str, str], str] = {}
        for line in lines:
            names = [str(token) for token in _names(line)]
            match line.data:
                case "objects":
                    objects.extend(names)
                case "arrow":
                    morphisms.append(MorphismId(*names))
                case "identity":
                    identities[names[0]] = names[1]
                case "compose":
                    table[(names[0], names[1])] = names[2]
                case "poset_chain" | "poset_powerset":
                    if line.data == "poset_chain":
                        sugar = chain(_size(_names(line)[0], MAX_CHAIN_SIZE))
                    else:
                        sugar = powerset(_size(_names(line)[0], MAX_POWERSET_SIZE))
                    objects.extend(sugar.objects)
                    morphisms.extend(sugar.morphisms)
                    identities.update(sugar.identities)
                    table.update(sugar.table)
        declared = {m.name: m for m in morphisms}
        for obj in objects:
            if obj in identities:
                continue
            default = f"id_{obj}"
            if default not in declared:
                morphisms.append(MorphismId(default, obj, obj))
                declared[default] = morphisms[-1]
            identities[obj] = default
        self.document.categories[name] = make_category(
            name, objects, morphisms, identities, table
        )
        self.document.order.append((KIND_CATEGORY, name))

    def _functor(self, tree: Tree) -> None:
        head, source_token, target_token, *lines = tree.children
        name = self._declare(KIND_FUNCTOR, head, self.document.functors)
        source = self._resolve(self.document.categories, KIND_CATEGORY, source_token)
        target = self._resolve(self.document.categories, KIND_CATEGORY, target_token)
        obj_map: dict[str, str] = {}
        mor_map: dict[str, str] = {}
        for line in lines:
            key, value = (str(token) for token in _names(line))
            (obj_map if line.data == "obj_image" else mor_map)[key] = value
        self.document.functors[name] = make_functor(name, source, target, obj_map, mor_map)
        self.document.order.append((KIND_FUNCTOR, name))

    def _het(self, tree: Tree) -> None:
        head, sending_token, receiving_token, *lines = tree.children
        name = self._declare(KIND_HET, head, self.document.hets)
        sending = self._resolve(self.document.categories, KIND_CATEGORY, sending_token)
        receiving = self._resolve(self.document.categories, KIND_CATEGORY, receiving_token)
        elements: list[HetElement] = []
        left: dict[tuple[str, str], str] = {}
        right: dict[tuple[str, str], str] = {}
        related: dict[tuple[str, str], str] = {}
        for line in lines:
            names = [str(token) for token in _names(line)]
            match line.data:
                case "element":
                    elements.append(HetElement(*names))
                case "lact":
                    left[(names[0], names[1])] = names[2]
                case "ract":
                    right[(names[0], names[1])] = names[2]
                case "rel":
                    x, a = names
                    element = relation_element_name(x, a)
                    related[(x, a)] = element
                    elements.append(HetElement(element, x, a))
        _synthesize_relation_actions(sending, receiving, related, left, right)
        self.document.hets[name] = make_het(name, sending, receiving, elements, left, right)
        self.document.order.append((KIND_HET, name))

    def _directive(self, tree: Tree) -> None:
        keyword = _DIRECTIVES[tree.data]
        head, *arg_tokens = _names(tree)
        args = tuple(str(token) for token in arg_tokens)
        document = self.document
        match keyword:
            case "opposite" | "product":
                name = self._declare(KIND_CATEGORY, head, document.categories)
                cats = [
                    self._resolve(document.categories, KIND_CATEGORY, token)
                    for token in arg_tokens
                ]
                document.categories[name] = (
                    opposite(cats[0], name=name)
                    if keyword == DIRECTIVE_OPPOSITE
                    else product(cats[0], cats[1], name=name)
                )
            case "hom":
                name = self._declare(KIND_HET, head, document.hets)
                cat = self._resolve(document.categories, KIND_CATEGORY, arg_tokens[0])
                document.hets[name] = hom_bifunctor(cat, name=name)
            case _:
                name = self._declare(KIND_HET, head, document.hets)
                functor = self._resolve(document.functors, KIND_FUNCTOR, arg_tokens[0])
                induce = (
                    induced_het_left if keyword == DIRECTIVE_INDUCED_LEFT else induced_het_right
                )
                document.hets[name] = induce(functor, name=name)
        document.directives[name] = Directive(keyword, name, args)
        document.order.append((keyword, name))

    _opposite = _product = _hom = _induced_left = _induced_right = _directive


def _integer(token: Token) -> int:
    try:
        return int(str(token))
    except ValueError:
        raise SpecParseError(
            f"expected an integer, got '{token}'", token.line, token.column
        ) from None


def _size(token: Token, maximum: int) -> int:
    size = _integer(token)
    if not 0 <= size <= maximum:
        raise SpecParseError(
            f"size {size} is outside 0..{maximum}", token.line, token.column
        )
    return size


def _synthesize_relation_actions(
    sending: FinCategory,
    receiving: FinCategory,
    related: Mapping[tuple[str, str], str],
    left: dict[tuple[str, str], str],
    right: dict[tuple[str, str], str],
) -> None:
    """Fill in the forced actions between `rel` elements."""
    for (x, a), d in related.items():
        if receiving.has_object(a):
            for k in receiving.outgoing(a):
                target = related.get((x, receiving.cod(k)))
                if target is not None:
                    left.setdefault((k, d), target)
        if sending.has_object(x):
            for h in sending.incoming(x):
                target = related.get((sending.dom(h), a))
                if target is not None:
                    right.setdefault((d, h), target)


def parse_spec(text: str) -> SpecDocument:
    """Parse spec text into a document of validated values.

    Raises SpecParseError for syntax errors and undeclared references, and
    HetcatValidationError when a declared table breaks its laws.
    """
    try:
        tree = _parser().parse(text + "\n")
    except UnexpectedInput as err:
        raise _syntax_error(err, text) from err
    builder = _Builder()
    for statement in tree.children:
        builder.statement(statement)
    document = builder.document
    _LOGGER.debug(
        "Parsed spec: %d categories, %d functors, %d hets",
        len(document.categories),
        len(document.functors),
        len(document.hets),
    )
    return document


def _category_lines(name: str, cat: FinCategory) -> Iterable[str]:
    yield f"category {name}"
    if cat.objects:
        yield "  objects " + " ".join(cat.objects)
    for m in cat.morphisms:
        yield f"  arrow {m.name} : {m.dom} -> {m.cod}"
    for obj in cat.objects:
        if cat.identities[obj] != f"id_{obj}":
            yield f"  identity {obj} = {cat.identities[obj]}"
    for g, f in cat.composable_pairs():
        if not (cat.is_identity(g) or cat.is_identity(f)):
            yield f"  compose {g} . {f} = {cat.table[(g, f)]}"
    yield "end"


def _functor_lines(name: str, functor: FinFunctor) -> Iterable[str]:
    source, target = functor.source, functor.target
    yield f"functor {name} : {source.name} -> {target.name}"
    for obj in source.objects:
        yield f"  obj {obj} -> {functor.obj_map[obj]}"
    for m in source.morphisms:
        image = functor.mor_map[m.name]
        if not (source.is_identity(m.name) and target.is_identity(image)):
            yield f"  mor {m.name} -> {image}"
    yield "end"


def _het_lines(name: str, het: HetBifunctor) -> Iterable[str]:
    sending, receiving = het.sending, het.receiving
    yield f"het {name} : {sending.name} ~> {receiving.name}"
    for element in het.elements:
        yield f"  element {element.name} : {element.src} ~> {element.dst}"
    for element in het.elements:
        for k in receiving.outgoing(element.dst):
            if not receiving.is_identity(k):
                yield f"  lact {k} {element.name} = {het.left_action[(k, element.name)]}"
        for h in sending.incoming(element.src):
            if not sending.is_identity(h):
                yield f"  ract {element.name} {h} = {het.right_action[(element.name, h)]}"
    yield "end"


def serialize_spec(document: SpecDocument) -> str:
    """Write a document back as canonical spec text; parse_spec inverts it."""
    lines: list[str] = []
    for kind, name in document.order:
        if kind == KIND_CATEGORY:
            lines.extend(_category_lines(name, document.categories[name]))
        elif kind == KIND_FUNCTOR:
            lines.extend(_functor_lines(name, document.functors[name]))
        elif kind == KIND_HET:
            lines.extend(_het_lines(name, document.hets[name]))
        else:
            directive = document.directives[name]
            lines.append(
                f"{directive.keyword} {directive.name} = {' '.join(directive.args)}"
            )
    return "\n".join(lines) + "\n"
