"""Heteromorphism bifunctors: het-sets with hom actions on both sides.

A het d: X ⇢ A never composes with another het. It is acted on by receiving
homs k: A → A' on the left (giving kd: X ⇢ A') and by sending homs
h: X' → X on the right (giving dh: X' ⇢ A).
"""

from __future__ import annotations

from collections.abc import Callable, Iterable, Mapping
from dataclasses import dataclass, field
from functools import cached_property
import logging

from .exceptions import HetcatParameterError, HetcatValidationError
from .fincat import FinCategory, ObjectId
from .validation import ValidationReport, Violation

_LOGGER = logging.getLogger(__name__)

LAW_DUPLICATE_ELEMENT = "duplicate element"
LAW_UNKNOWN_ENDPOINT = "unknown object"
LAW_UNKNOWN_NAME = "unknown name"
LAW_LEFT_BOUNDARY = "left action boundary"
LAW_RIGHT_BOUNDARY = "right action boundary"
LAW_LEFT_TARGET = "left action lands outside its het-set"
LAW_RIGHT_TARGET = "right action lands outside its het-set"
LAW_LEFT_TOTAL = "left action not total"
LAW_RIGHT_TOTAL = "right action not total"
LAW_LEFT_IDENTITY = "left identity action"
LAW_RIGHT_IDENTITY = "right identity action"
LAW_LEFT_FUNCTORIAL = "left action functoriality"
LAW_RIGHT_FUNCTORIAL = "right action functoriality"
LAW_MIXED = "(kd)h=k(dh)"


@dataclass(frozen=True)
class HetElement:
    """A het d: src ⇢ dst from a sending object to a receiving object."""

    name: str
    src: ObjectId
    dst: ObjectId


@dataclass(frozen=True, eq=False)
class HetBifunctor:
    """A validated bifunctor Het: sending^op × receiving → finite sets.

    left_action maps (k, d) to kd and right_action maps (d, h) to dh, both by
    element name. Identity actions are always present in the tables. Equality
    compares elements by name, not by position.
    """

    name: str = field(compare=False)
    sending: FinCategory
    receiving: FinCategory
    elements: tuple[HetElement, ...]
    left_action: Mapping[tuple[str, str], str]
    right_action: Mapping[tuple[str, str], str]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, HetBifunctor):
            return NotImplemented
        return (
            self.sending == other.sending
            and self.receiving == other.receiving
            and frozenset(self.elements) == frozenset(other.elements)
            and dict(self.left_action) == dict(other.left_action)
            and dict(self.right_action) == dict(other.right_action)
        )

    __hash__ = None

    @cached_property
    def _by_name(self) -> dict[str, HetElement]:
        return {element.name: element for element in self.elements}

    @cached_property
    def _sets(self) -> dict[tuple[ObjectId, ObjectId], tuple[str, ...]]:
        sets: dict[tuple[ObjectId, ObjectId], list[str]] = {}
        for element in self.elements:
            sets.setdefault((element.src, element.dst), []).append(element.name)
        return {key: tuple(names) for key, names in sets.items()}

    def has_element(self, name: str) -> bool:
        return name in self._by_name

    def element(self, name: str) -> HetElement:
        try:
            return self._by_name[name]
        except KeyError:
            raise HetcatParameterError(
                f"Unknown het element '{name}' in {self.name}"
            ) from None

    def het_set(self, src: ObjectId, dst: ObjectId) -> tuple[str, ...]:
        """Return Het(src, dst) in declaration order."""
        self.sending.require_object(src)
        self.receiving.require_object(dst)
        return self._sets.get((src, dst), ())

    def elements_from(self, src: ObjectId) -> tuple[str, ...]:
        return tuple(e.name for e in self.elements if e.src == src)

    def elements_into(self, dst: ObjectId) -> tuple[str, ...]:
        return tuple(e.name for e in self.elements if e.dst == dst)

    def act_left(self, k: str, d: str) -> str:
        """Return kd for a receiving hom k with dom(k) = dst(d)."""
        element = self.element(d)
        k_dom = self.receiving.dom(k)
        if k_dom != element.dst:
            raise HetcatParameterError(
                f"Cannot act with {k} on {d}: dom({k})={k_dom} ≠ dst({d})={element.dst}"
            )
        return self.left_action[(k, d)]

    def act_right(self, d: str, h: str) -> str:
        """Return dh for a sending hom h with cod(h) = src(d)."""
        element = self.element(d)
        h_cod = self.sending.cod(h)
        if h_cod != element.src:
            raise HetcatParameterError(
                f"Cannot act with {h} on {d}: cod({h})={h_cod} ≠ src({d})={element.src}"
            )
        return self.right_action[(d, h)]


def act(het: HetBifunctor, k: str, d: str, h: str) -> str:
    """Return the composite het k(dh) = (kd)h for X' →h X ⇢d A →k A'."""
    return het.act_left(k, het.act_right(d, h))


def _complete_actions(
    sending: FinCategory,
    receiving: FinCategory,
    elements: Iterable[HetElement],
    left_action: Mapping[tuple[str, str], str],
    right_action: Mapping[tuple[str, str], str],
) -> tuple[dict[tuple[str, str], str], dict[tuple[str, str], str]]:
    """Fill in identity actions that the declaration left out."""
    left = dict(left_action)
    right = dict(right_action)
    for element in elements:
        if receiving.has_object(element.dst):
            left.setdefault((receiving.identities[element.dst], element.name), element.name)
        if sending.has_object(element.src):
            right.setdefault((element.name, sending.identities[element.src]), element.name)
    return left, right


def validate_het(
    sending: FinCategory,
    receiving: FinCategory,
    elements: Iterable[HetElement],
    left_action: Mapping[tuple[str, str], str],
    right_action: Mapping[tuple[str, str], str],
) -> ValidationReport:
    """Check the bifunctor laws, including (kd)h = k(dh), collecting every violation."""
    elements = tuple(elements)
    left, right = _complete_actions(sending, receiving, elements, left_action, right_action)
    violations: list[Violation] = []

    by_name: dict[str, HetElement] = {}
    for element in elements:
        if element.name in by_name:
            violations.append(Violation(LAW_DUPLICATE_ELEMENT, (element.name,)))
        by_name[element.name] = element
        if not sending.has_object(element.src):
            violations.append(Violation(LAW_UNKNOWN_ENDPOINT, (element.name, element.src)))
        if not receiving.has_object(element.dst):
            violations.append(Violation(LAW_UNKNOWN_ENDPOINT, (element.name, element.dst)))
    if violations:
        return ValidationReport.of(violations)

    for (k, d), result in left.items():
        unknown = [n for n in (d, result) if n not in by_name]
        if not receiving.has_morphism(k):
            unknown.insert(0, k)
        if unknown:
            violations.extend(Violation(LAW_UNKNOWN_NAME, (n,)) for n in unknown)
            continue
        if receiving.dom(k) != by_name[d].dst:
            violations.append(Violation(LAW_LEFT_BOUNDARY, (k, d)))
        elif (by_name[result].src, by_name[result].dst) != (by_name[d].src, receiving.cod(k)):
            violations.append(Violation(LAW_LEFT_TARGET, (k, d, result)))

    for (d, h), result in right.items():
        unknown = [n for n in (d, result) if n not in by_name]
        if not sending.has_morphism(h):
            unknown.insert(0, h)
        if unknown:
            violations.extend(Violation(LAW_UNKNOWN_NAME, (n,)) for n in unknown)
            continue
        if sending.cod(h) != by_name[d].src:
            violations.append(Violation(LAW_RIGHT_BOUNDARY, (d, h)))
        elif (by_name[result].src, by_name[result].dst) != (sending.dom(h), by_name[d].dst):
            violations.append(Violation(LAW_RIGHT_TARGET, (d, h, result)))

    for element in elements:
        d = element.name
        for k in receiving.outgoing(element.dst):
            if (k, d) not in left:
                violations.append(Violation(LAW_LEFT_TOTAL, (k, d)))
        for h in sending.incoming(element.src):
            if (d, h) not in right:
                violations.append(Violation(LAW_RIGHT_TOTAL, (d, h)))
        if left.get((receiving.identities[element.dst], d)) != d:
            violations.append(
                Violation(LAW_LEFT_IDENTITY, (receiving.identities[element.dst], d))
            )
        if right.get((d, sending.identities[element.src])) != d:
            violations.append(
                Violation(LAW_RIGHT_IDENTITY, (d, sending.identities[element.src]))
            )
    if violations:
        return ValidationReport.of(violations)

    for element in elements:
        d = element.name
        for k in receiving.outgoing(element.dst):
            kd = left[(k, d)]
            for k2 in receiving.outgoing(receiving.cod(k)):
                if left[(receiving.table[(k2, k)], d)] != left[(k2, kd)]:
                    violations.append(Violation(LAW_LEFT_FUNCTORIAL, (k2, k, d)))
        for h in sending.incoming(element.src):
            dh = right[(d, h)]
            for h2 in sending.incoming(sending.dom(h)):
                if right[(d, sending.table[(h, h2)])] != right[(dh, h2)]:
                    violations.append(Violation(LAW_RIGHT_FUNCTORIAL, (d, h, h2)))
        for k in receiving.outgoing(element.dst):
            kd = left[(k, d)]
            for h in sending.incoming(element.src):
                if left[(k, right[(d, h)])] != right[(kd, h)]:
                    violations.append(Violation(LAW_MIXED, (k, d, h)))

    return ValidationReport.of(violations)


def make_het(
    name: str,
    sending: FinCategory,
    receiving: FinCategory,
    elements: Iterable[HetElement],
    left_action: Mapping[tuple[str, str], str],
    right_action: Mapping[tuple[str, str], str],
) -> HetBifunctor:
    """Validate het-sets and actions and return the bifunctor.

    Raises HetcatValidationError carrying the full report when any law fails.
    """
    elements = tuple(elements)
    report = validate_het(sending, receiving, elements, left_action, right_action)
    if not report.ok:
        _LOGGER.debug("Het %s rejected: %s", name, report.render())
        raise HetcatValidationError(
            f"Het bifunctor {name} violates {len(report.violations)} law(s)", report
        )
    left, right = _complete_actions(sending, receiving, elements, left_action, right_action)
    _LOGGER.debug("Built het bifunctor %s with %d elements", name, len(elements))
    return HetBifunctor(
        name=name,
        sending=sending,
        receiving=receiving,
        elements=elements,
        left_action=left,
        right_action=right,
    )


def relation_element_name(x: ObjectId, a: ObjectId) -> str:
    return f"u_{x}_{a}"


def relation_het(
    name: str,
    sending: FinCategory,
    receiving: FinCategory,
    pairs: Iterable[tuple[ObjectId, ObjectId]],
    element_name: Callable[[ObjectId, ObjectId], str] = relation_element_name,
) -> HetBifunctor:
    """Build a het with at most one element per het-set from a relation.

    Actions are forced by uniqueness; a relation that is not closed under the
    hom actions leaves gaps that validation reports as non-total actions.
    """
    pairs = list(dict.fromkeys(pairs))
    related = {pair: element_name(*pair) for pair in pairs}
    elements = [HetElement(related[(x, a)], x, a) for x, a in pairs]
    left: dict[tuple[str, str], str] = {}
    right: dict[tuple[str, str], str] = {}
    for (x, a), d in related.items():
        if receiving.has_object(a):
            for k in receiving.outgoing(a):
                target = related.get((x, receiving.cod(k)))
                if target is not None:
                    left[(k, d)] = target
        if sending.has_object(x):
            for h in sending.incoming(x):
                target = related.get((sending.dom(h), a))
                if target is not None:
                    right[(d, h)] = target
    return make_het(name, sending, receiving, elements, left, right)
