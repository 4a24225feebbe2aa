"""Functors between finite categories and the het bifunctors they induce."""

from __future__ import annotations

from collections import Counter
from collections.abc import Mapping
from dataclasses import dataclass, field
import logging

from .exceptions import HetcatParameterError, HetcatValidationError
from .fincat import FinCategory, ObjectId
from .het import HetBifunctor, HetElement, make_het
from .validation import ValidationReport, Violation

_LOGGER = logging.getLogger(__name__)

LAW_OBJECT_MAP = "object map not total"
LAW_MORPHISM_MAP = "morphism map not total"
LAW_UNKNOWN_IMAGE = "image not in target"
LAW_DOM_PRESERVATION = "dom preservation"
LAW_COD_PRESERVATION = "cod preservation"
LAW_IDENTITY_PRESERVATION = "identity preservation"
LAW_COMPOSITION_PRESERVATION = "composition preservation"


@dataclass(frozen=True)
class FinFunctor:
    """A validated functor given by its object and morphism tables."""

    name: str = field(compare=False)
    source: FinCategory
    target: FinCategory
    obj_map: Mapping[ObjectId, ObjectId]
    mor_map: Mapping[str, str]

    def __call__(self, obj: ObjectId) -> ObjectId:
        self.source.require_object(obj)
        return self.obj_map[obj]


def _complete_mor_map(
    source: FinCategory,
    target: FinCategory,
    obj_map: Mapping[ObjectId, ObjectId],
    mor_map: Mapping[str, str],
) -> dict[str, str]:
    """Fill in forced images: identities, and homs into a singleton hom-set."""
    completed = dict(mor_map)
    for morphism in source.morphisms:
        if morphism.name in completed:
            continue
        image_dom = obj_map.get(morphism.dom)
        image_cod = obj_map.get(morphism.cod)
        if not (target.has_object(image_dom) and target.has_object(image_cod)):
            continue
        if source.is_identity(morphism.name) and image_dom == image_cod:
            completed[morphism.name] = target.identities[image_dom]
        elif len(candidates := target.hom(image_dom, image_cod)) == 1:
            completed[morphism.name] = candidates[0]
    return completed


def validate_functor(
    source: FinCategory,
    target: FinCategory,
    obj_map: Mapping[ObjectId, ObjectId],
    mor_map: Mapping[str, str],
) -> ValidationReport:
    """Check totality and both preservation laws, collecting every violation."""
    mor_map = _complete_mor_map(source, target, obj_map, mor_map)
    violations: list[Violation] = []
    for obj in source.objects:
        if obj not in obj_map:
            violations.append(Violation(LAW_OBJECT_MAP, (obj,)))
        elif not target.has_object(obj_map[obj]):
            violations.append(Violation(LAW_UNKNOWN_IMAGE, (obj, obj_map[obj])))
    for morphism in source.morphisms:
        if morphism.name not in mor_map:
            violations.append(Violation(LAW_MORPHISM_MAP, (morphism.name,)))
        elif not target.has_morphism(mor_map[morphism.name]):
            violations.append(
                Violation(LAW_UNKNOWN_IMAGE, (morphism.name, mor_map[morphism.name]))
            )
    if violations:
        return ValidationReport.of(violations)

    for morphism in source.morphisms:
        image = target.morphism(mor_map[morphism.name])
        if image.dom != obj_map[morphism.dom]:
            violations.append(Violation(LAW_DOM_PRESERVATION, (morphism.name, image.name)))
        if image.cod != obj_map[morphism.cod]:
            violations.append(Violation(LAW_COD_PRESERVATION, (morphism.name, image.name)))
    for obj in source.objects:
        image = mor_map[source.identities[obj]]
        if image != target.identities[obj_map[obj]]:
            violations.append(
                Violation(LAW_IDENTITY_PRESERVATION, (source.identities[obj], image))
            )
    if violations:
        return ValidationReport.of(violations)

    for (g, f), gf in source.table.items():
        if mor_map[gf] != target.table[(mor_map[g], mor_map[f])]:
            violations.append(Violation(LAW_COMPOSITION_PRESERVATION, (g, f)))
    return ValidationReport.of(violations)


def make_functor(
    name: str,
    source: FinCategory,
    target: FinCategory,
    obj_map: Mapping[ObjectId, ObjectId],
    mor_map: Mapping[str, str],
) -> FinFunctor:
    """Validate object and morphism tables and return the functor.

    Raises HetcatValidationError carrying the full report when any law fails.
    """
    report = validate_functor(source, target, obj_map, mor_map)
    if not report.ok:
        _LOGGER.debug("Functor %s rejected: %s", name, report.render())
        raise HetcatValidationError(
            f"Functor {name} violates {len(report.violations)} law(s)", report
        )
    return FinFunctor(
        name=name,
        source=source,
        target=target,
        obj_map={obj: obj_map[obj] for obj in source.objects},
        mor_map=_complete_mor_map(source, target, obj_map, mor_map),
    )


def identity_functor(cat: FinCategory, name: str | None = None) -> FinFunctor:
    return FinFunctor(
        name=name or f"1_{cat.name}",
        source=cat,
        target=cat,
        obj_map={obj: obj for obj in cat.objects},
        mor_map={m.name: m.name for m in cat.morphisms},
    )


def apply(functor: FinFunctor, f: str) -> str:
    """Return the image of a source morphism."""
    if not functor.source.has_morphism(f):
        raise HetcatParameterError(
            f"Morphism '{f}' is not in {functor.source.name}, the source of {functor.name}"
        )
    return functor.mor_map[f]


def hom_bifunctor(cat: FinCategory, name: str | None = None) -> HetBifunctor:
    """Return Hom: cat^op × cat → Set as a het bifunctor, acting by composition."""
    elements = [HetElement(m.name, m.dom, m.cod) for m in cat.morphisms]
    left = {(g, f): h for (g, f), h in cat.table.items()}
    right = {(g, f): h for (g, f), h in cat.table.items()}
    return make_het(name or f"Hom_{cat.name}", cat, cat, elements, left, right)


def induced_het_left(functor: FinFunctor, name: str | None = None) -> HetBifunctor:
    """Return Het(X, A) := Hom_target(F(X), A), the het that F represents on the left.

    Left action is post-composition; the right action of h: X' → X sends d to
    d∘F(h). Elements reuse the hom names, qualified as X/f when F identifies
    two objects.
    """
    source, target = functor.source, functor.target
    shared = Counter(functor.obj_map.values())

    def element_name(x: ObjectId, f: str) -> str:
        return f if shared[functor.obj_map[x]] == 1 else f"{x}/{f}"

    elements = [
        HetElement(element_name(x, f), x, target.cod(f))
        for x in source.objects
        for f in target.outgoing(functor.obj_map[x])
    ]
    left: dict[tuple[str, str], str] = {}
    right: dict[tuple[str, str], str] = {}
    for x in source.objects:
        for f in target.outgoing(functor.obj_map[x]):
            d = element_name(x, f)
            for k in target.outgoing(target.cod(f)):
                left[(k, d)] = element_name(x, target.table[(k, f)])
            for h in source.incoming(x):
                x_prime = source.dom(h)
                right[(d, h)] = element_name(x_prime, target.table[(f, functor.mor_map[h])])
    return make_het(
        name or f"Hom_{target.name}({functor.name}-,-)", source, target, elements, left, right
    )


def induced_het_right(functor: FinFunctor, name: str | None = None) -> HetBifunctor:
    """Return Het(X, A) := Hom(X, G(A)) for G: A → X, the het that G represents on the right.

    The sending category is the target of G and the receiving category its
    source. The right action is pre-composition; the left action of k: A → A'
    sends d to G(k)∘d. Elements are qualified as f/A when G identifies objects.
    """
    receiving, sending = functor.source, functor.target
    shared = Counter(functor.obj_map.values())

    def element_name(f: str, a: ObjectId) -> str:
        return f if shared[functor.obj_map[a]] == 1 else f"{f}/{a}"

    elements = [
        HetElement(element_name(f, a), sending.dom(f), a)
        for a in receiving.objects
        for f in sending.incoming(functor.obj_map[a])
    ]
    left: dict[tuple[str, str], str] = {}
    right: dict[tuple[str, str], str] = {}
    for a in receiving.objects:
        for f in sending.incoming(functor.obj_map[a]):
            d = element_name(f, a)
            for h in sending.incoming(sending.dom(f)):
                right[(d, h)] = element_name(sending.table[(f, h)], a)
            for k in receiving.outgoing(a):
                a_prime = receiving.cod(k)
                left[(k, d)] = element_name(sending.table[(functor.mor_map[k], f)], a_prime)
    return make_het(
        name or f"Hom_{sending.name}(-,{functor.name}-)", sending, receiving, elements, left, right
    )
