"""Universal arrows, unique factorization and semiadjunctions.

A left universal for X is a receiving object F(X) with a het h_X: X ⇢ F(X)
through which every het out of X factors by a unique hom F(X) → A. A right
universal for A is a sending object G(A) with e_A: G(A) ⇢ A through which every
het into A factors by a unique hom X → G(A).
"""

from __future__ import annotations

from collections.abc import Callable, Iterable, Mapping, Sequence
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from enum import StrEnum
from functools import cached_property
import logging

from .exceptions import (
    HetcatIntegrityError,
    HetcatNegativeResult,
    HetcatParameterError,
    HetcatValidationError,
)
from .fincat import ObjectId
from .functor import FinFunctor, make_functor
from .het import HetBifunctor, HetElement
from .validation import ValidationReport, Violation

_LOGGER = logging.getLogger(__name__)

LAW_NOT_REPRESENTABLE = "not representable"
LAW_EMPTY_HETS = "not representable (no hets at this object)"
LAW_BIJECTION = "bijection"
LAW_NATURAL_IN_X = "naturality in X"
LAW_NATURAL_IN_A = "naturality in A"

type Candidate = tuple[ObjectId, str]


class Side(StrEnum):
    """Which variable a universal represents."""

    LEFT = "left"
    RIGHT = "right"


@dataclass(frozen=True)
class UniversalArrow:
    """A representing object with its universal het.

    For Side.LEFT, base is X and universal is h_X: X ⇢ rep. For Side.RIGHT,
    base is A and universal is e_A: rep ⇢ A.
    """

    side: Side
    base: ObjectId
    rep: ObjectId
    universal: HetElement
    het: HetBifunctor = field(compare=False, repr=False)


def _element_name(d: HetElement | str) -> str:
    return d.name if isinstance(d, HetElement) else d


def is_left_universal(het: HetBifunctor, base: ObjectId, rep: ObjectId, u: str) -> bool:
    """Check that f ↦ f·u is a bijection hom(rep, A) → Het(base, A) for every A."""
    receiving = het.receiving
    for a in receiving.objects:
        homs = receiving.hom(rep, a)
        hets = het.het_set(base, a)
        if len(homs) != len(hets):
            return False
        if len({het.left_action[(f, u)] for f in homs}) != len(hets):
            return False
    return True


def is_right_universal(het: HetBifunctor, base: ObjectId, rep: ObjectId, u: str) -> bool:
    """Check that g ↦ u·g is a bijection hom(X, rep) → Het(X, base) for every X."""
    sending = het.sending
    for x in sending.objects:
        homs = sending.hom(x, rep)
        hets = het.het_set(x, base)
        if len(homs) != len(hets):
            return False
        if len({het.right_action[(u, g)] for g in homs}) != len(hets):
            return False
    return True


def _first_passing(
    candidates: Sequence[Candidate],
    check: Callable[[Candidate], bool],
    workers: int,
) -> Candidate | None:
    """Return the first candidate in declaration order that passes check."""
    if workers <= 1 or len(candidates) <= 1:
        return next((candidate for candidate in candidates if check(candidate)), None)
    with ThreadPoolExecutor(max_workers=workers) as executor:
        for candidate, passed in zip(candidates, executor.map(check, candidates)):
            if passed:
                return candidate
    return None


def _left_candidates(
    het: HetBifunctor, x: ObjectId, candidates: Iterable[ObjectId] | None
) -> list[Candidate]:
    het.sending.require_object(x)
    objects = het.receiving.objects if candidates is None else tuple(candidates)
    return [(r, u) for r in objects for u in het.het_set(x, r)]


def _right_candidates(
    het: HetBifunctor, a: ObjectId, candidates: Iterable[ObjectId] | None
) -> list[Candidate]:
    het.receiving.require_object(a)
    objects = het.sending.objects if candidates is None else tuple(candidates)
    return [(r, u) for r in objects for u in het.het_set(r, a)]


def find_left_representation(
    het: HetBifunctor,
    x: ObjectId,
    *,
    candidates: Iterable[ObjectId] | None = None,
    workers: int = 1,
) -> UniversalArrow | None:
    """Search (R, u ∈ Het(x, R)) in declaration order for a receiving universal.

    candidates restricts the objects R that are tried. Returns None when no
    pair passes the full UMP check.
    """
    pairs = _left_candidates(het, x, candidates)
    found = _first_passing(pairs, lambda c: is_left_universal(het, x, c[0], c[1]), workers)
    if found is None:
        _LOGGER.debug("No receiving universal for %s in %s (%d candidates)", x, het.name, len(pairs))
        return None
    rep, u = found
    _LOGGER.debug("Receiving universal for %s in %s: %s ⇢ %s", x, het.name, u, rep)
    return UniversalArrow(Side.LEFT, x, rep, het.element(u), het)


def find_right_representation(
    het: HetBifunctor,
    a: ObjectId,
    *,
    candidates: Iterable[ObjectId] | None = None,
    workers: int = 1,
) -> UniversalArrow | None:
    """Search (R, u ∈ Het(R, a)) in declaration order for a sending universal."""
    pairs = _right_candidates(het, a, candidates)
    found = _first_passing(pairs, lambda c: is_right_universal(het, a, c[0], c[1]), workers)
    if found is None:
        _LOGGER.debug("No sending universal for %s in %s (%d candidates)", a, het.name, len(pairs))
        return None
    rep, u = found
    _LOGGER.debug("Sending universal for %s in %s: %s ⇢ %s", a, het.name, rep, u)
    return UniversalArrow(Side.RIGHT, a, rep, het.element(u), het)


def all_left_representations(het: HetBifunctor, x: ObjectId) -> list[UniversalArrow]:
    """Return every (R, u) passing the receiving UMP, in declaration order."""
    return [
        UniversalArrow(Side.LEFT, x, r, het.element(u), het)
        for r, u in _left_candidates(het, x, None)
        if is_left_universal(het, x, r, u)
    ]


def all_right_representations(het: HetBifunctor, a: ObjectId) -> list[UniversalArrow]:
    """Return every (R, u) passing the sending UMP, in declaration order."""
    return [
        UniversalArrow(Side.RIGHT, a, r, het.element(u), het)
        for r, u in _right_candidates(het, a, None)
        if is_right_universal(het, a, r, u)
    ]


def check_universal(arrow: UniversalArrow) -> bool:
    """Re-run the full UMP check on a stored arrow."""
    het = arrow.het
    name = arrow.universal.name
    if not het.has_element(name) or het.element(name) != arrow.universal:
        return False
    if arrow.side is Side.LEFT:
        if (arrow.universal.src, arrow.universal.dst) != (arrow.base, arrow.rep):
            return False
        return is_left_universal(het, arrow.base, arrow.rep, arrow.universal.name)
    if (arrow.universal.src, arrow.universal.dst) != (arrow.rep, arrow.base):
        return False
    return is_right_universal(het, arrow.base, arrow.rep, arrow.universal.name)


def _require_universal(arrow: UniversalArrow) -> None:
    if not check_universal(arrow):
        raise HetcatIntegrityError(
            f"{arrow.universal.name} is not a {arrow.side} universal "
            f"from {arrow.base} to {arrow.rep} in {arrow.het.name}"
        )


def factor_left(arrow: UniversalArrow, d: HetElement | str) -> str:
    """Return the unique f: F(X) → A with f·h_X = d."""
    if arrow.side is not Side.LEFT:
        raise HetcatParameterError("factor_left needs a receiving (left) universal")
    het = arrow.het
    name = _element_name(d)
    element = het.element(name)
    if element.src != arrow.base:
        raise HetcatParameterError(
            f"Het {name} starts at {element.src}, not at the universal's base {arrow.base}"
        )
    _require_universal(arrow)
    u = arrow.universal.name
    return next(
        f for f in het.receiving.hom(arrow.rep, element.dst) if het.left_action[(f, u)] == name
    )


def factor_right(arrow: UniversalArrow, d: HetElement | str) -> str:
    """Return the unique g: X → G(A) with e_A·g = d."""
    if arrow.side is not Side.RIGHT:
        raise HetcatParameterError("factor_right needs a sending (right) universal")
    het = arrow.het
    name = _element_name(d)
    element = het.element(name)
    if element.dst != arrow.base:
        raise HetcatParameterError(
            f"Het {name} ends at {element.dst}, not at the universal's base {arrow.base}"
        )
    _require_universal(arrow)
    u = arrow.universal.name
    return next(
        g for g in het.sending.hom(element.src, arrow.rep) if het.right_action[(u, g)] == name
    )


def comparison_homs(first: UniversalArrow, second: UniversalArrow) -> tuple[str, str]:
    """Return the comparison homs between two representations of the same base.

    For left universals these are rep₁ → rep₂ and rep₂ → rep₁; for right
    universals the same pair in the sending category. Both composites must be
    identities, otherwise HetcatIntegrityError is raised.
    """
    if first.side is not second.side or first.base != second.base:
        raise HetcatParameterError("Comparison needs two universals of the same side and base")
    het = first.het
    if first.side is Side.LEFT:
        there = factor_left(first, second.universal)
        back = factor_left(second, first.universal)
        cat = het.receiving
        round_trips = (cat.table[(back, there)], cat.table[(there, back)])
    else:
        there = factor_right(second, first.universal)
        back = factor_right(first, second.universal)
        cat = het.sending
        round_trips = (cat.table[(back, there)], cat.table[(there, back)])
    expected = (cat.identities[first.rep], cat.identities[second.rep])
    if round_trips != expected:
        raise HetcatIntegrityError(
            f"Comparison homs {there}, {back} between {first.rep} and {second.rep} are not inverse"
        )
    return there, back


@dataclass(frozen=True)
class Semiadjunction:
    """A functor together with the stored bijection family of one side.

    Left: bijections[(X, A)] maps f ∈ Hom(F(X), A) to ψ(f) = f·h_X.
    Right: bijections[(X, A)] maps g ∈ Hom(X, G(A)) to φ(g) = e_A·g.
    """

    side: Side
    het: HetBifunctor
    functor: FinFunctor
    arrows: Mapping[ObjectId, UniversalArrow]
    bijections: Mapping[tuple[ObjectId, ObjectId], Mapping[str, str]]

    @cached_property
    def _inverse(self) -> dict[str, str]:
        return {d: hom for table in self.bijections.values() for hom, d in table.items()}

    def universal(self, base: ObjectId) -> str:
        try:
            return self.arrows[base].universal.name
        except KeyError:
            raise HetcatParameterError(f"No universal stored for {base}") from None

    def hom_to_het(self, x: ObjectId, a: ObjectId, hom: str) -> str:
        try:
            return self.bijections[(x, a)][hom]
        except KeyError:
            raise HetcatParameterError(f"{hom} is not in the bijection at ({x}, {a})") from None

    def het_to_hom(self, d: HetElement | str) -> str | None:
        """Invert the stored bijection; None when d has no preimage."""
        return self._inverse.get(_element_name(d))


def _left_bijections(
    het: HetBifunctor, functor: FinFunctor, arrows: Mapping[ObjectId, UniversalArrow]
) -> dict[tuple[ObjectId, ObjectId], dict[str, str]]:
    return {
        (x, a): {
            f: het.left_action[(f, arrows[x].universal.name)]
            for f in het.receiving.hom(functor.obj_map[x], a)
        }
        for x in het.sending.objects
        for a in het.receiving.objects
    }


def _right_bijections(
    het: HetBifunctor, functor: FinFunctor, arrows: Mapping[ObjectId, UniversalArrow]
) -> dict[tuple[ObjectId, ObjectId], dict[str, str]]:
    return {
        (x, a): {
            g: het.right_action[(arrows[a].universal.name, g)]
            for g in het.sending.hom(x, functor.obj_map[a])
        }
        for x in het.sending.objects
        for a in het.receiving.objects
    }


def _bijection_violations(
    het: HetBifunctor, x: ObjectId, a: ObjectId, table: Mapping[str, str]
) -> list[Violation]:
    values = list(table.values())
    if len(set(values)) != len(values) or set(values) != set(het.het_set(x, a)):
        return [Violation(LAW_BIJECTION, (x, a))]
    return []


def check_naturality(semi: Semiadjunction) -> ValidationReport:
    """Check the stored bijections: each is a bijection and natural in both variables."""
    het, functor, table = semi.het, semi.functor, semi.bijections
    sending, receiving = het.sending, het.receiving
    violations: list[Violation] = []
    for x in sending.objects:
        for a in receiving.objects:
            entries = table.get((x, a), {})
            broken = _bijection_violations(het, x, a, entries)
            violations.extend(broken)
            valid = set(het.het_set(x, a))
            for hom, d in entries.items():
                if d not in valid:
                    continue
                if semi.side is Side.LEFT:
                    for k in receiving.outgoing(a):
                        moved = table.get((x, receiving.cod(k)), {}).get(receiving.table[(k, hom)])
                        if moved != het.left_action[(k, d)]:
                            violations.append(Violation(LAW_NATURAL_IN_A, (x, a, hom, k)))
                    for h in sending.incoming(x):
                        image = receiving.table[(hom, functor.mor_map[h])]
                        moved = table.get((sending.dom(h), a), {}).get(image)
                        if moved != het.right_action[(d, h)]:
                            violations.append(Violation(LAW_NATURAL_IN_X, (x, a, hom, h)))
                else:
                    for h in sending.incoming(x):
                        moved = table.get((sending.dom(h), a), {}).get(sending.table[(hom, h)])
                        if moved != het.right_action[(d, h)]:
                            violations.append(Violation(LAW_NATURAL_IN_X, (x, a, hom, h)))
                    for k in receiving.outgoing(a):
                        image = sending.table[(functor.mor_map[k], hom)]
                        moved = table.get((x, receiving.cod(k)), {}).get(image)
                        if moved != het.left_action[(k, d)]:
                            violations.append(Violation(LAW_NATURAL_IN_A, (x, a, hom, k)))
    return ValidationReport.of(violations)


def _induce_functor(name: str, make: Callable[[], FinFunctor]) -> FinFunctor:
    try:
        return make()
    except HetcatValidationError as err:
        raise HetcatIntegrityError(
            f"Induced functor {name} fails its laws: {err.report.render()}"
        ) from err


def left_semiadjunction_from(
    het: HetBifunctor, arrows: Mapping[ObjectId, UniversalArrow], name: str | None = None
) -> Semiadjunction:
    """Assemble a left semiadjunction from one receiving universal per sending object.

    F acts on h: X' → X as the factor of h_X·h through h_X'.
    """
    sending, receiving = het.sending, het.receiving
    obj_map = {x: arrows[x].rep for x in sending.objects}
    mor_map = {
        h.name: factor_left(arrows[h.dom], het.right_action[(arrows[h.cod].universal.name, h.name)])
        for h in sending.morphisms
    }
    name = name or f"F_{het.name}"
    functor = _induce_functor(
        name, lambda: make_functor(name, sending, receiving, obj_map, mor_map)
    )
    semi = Semiadjunction(
        side=Side.LEFT,
        het=het,
        functor=functor,
        arrows=dict(arrows),
        bijections=_left_bijections(het, functor, arrows),
    )
    report = check_naturality(semi)
    if not report.ok:
        raise HetcatIntegrityError(f"ψ for {het.name} is not natural: {report.render()}")
    return semi


def right_semiadjunction_from(
    het: HetBifunctor, arrows: Mapping[ObjectId, UniversalArrow], name: str | None = None
) -> Semiadjunction:
    """Assemble a right semiadjunction from one sending universal per receiving object.

    G acts on k: A → A' as the factor of k·e_A through e_A'.
    """
    sending, receiving = het.sending, het.receiving
    obj_map = {a: arrows[a].rep for a in receiving.objects}
    mor_map = {
        k.name: factor_right(arrows[k.cod], het.left_action[(k.name, arrows[k.dom].universal.name)])
        for k in receiving.morphisms
    }
    name = name or f"G_{het.name}"
    functor = _induce_functor(
        name, lambda: make_functor(name, receiving, sending, obj_map, mor_map)
    )
    semi = Semiadjunction(
        side=Side.RIGHT,
        het=het,
        functor=functor,
        arrows=dict(arrows),
        bijections=_right_bijections(het, functor, arrows),
    )
    report = check_naturality(semi)
    if not report.ok:
        raise HetcatIntegrityError(f"φ for {het.name} is not natural: {report.render()}")
    return semi


def _unrepresentable(het: HetBifunctor, base: ObjectId, side: Side) -> Violation:
    if side is Side.LEFT:
        empty = not het.elements_from(base)
    else:
        empty = not het.elements_into(base)
    return Violation(LAW_EMPTY_HETS if empty else LAW_NOT_REPRESENTABLE, (base,))


def build_left_semiadjunction(het: HetBifunctor, *, workers: int = 1) -> Semiadjunction:
    """Find a receiving universal for every sending object and assemble F with ψ.

    Raises HetcatNegativeResult naming every unrepresentable object.
    """
    arrows: dict[ObjectId, UniversalArrow] = {}
    failures: list[Violation] = []
    for x in het.sending.objects:
        arrow = find_left_representation(het, x, workers=workers)
        if arrow is None:
            failures.append(_unrepresentable(het, x, Side.LEFT))
        else:
            arrows[x] = arrow
    if failures:
        _LOGGER.warning(
            "%s is not representable on the left at %s",
            het.name,
            ", ".join(v.witness[0] for v in failures),
        )
        raise HetcatNegativeResult(
            f"{het.name} is not representable on the left", ValidationReport.of(failures)
        )
    semi = left_semiadjunction_from(het, arrows)
    _LOGGER.info("Built left semiadjunction %s for %s", semi.functor.name, het.name)
    return semi


def build_right_semiadjunction(het: HetBifunctor, *, workers: int = 1) -> Semiadjunction:
    """Find a sending universal for every receiving object and assemble G with φ."""
    arrows: dict[ObjectId, UniversalArrow] = {}
    failures: list[Violation] = []
    for a in het.receiving.objects:
        arrow = find_right_representation(het, a, workers=workers)
        if arrow is None:
            failures.append(_unrepresentable(het, a, Side.RIGHT))
        else:
            arrows[a] = arrow
    if failures:
        _LOGGER.warning(
            "%s is not representable on the right at %s",
            het.name,
            ", ".join(v.witness[0] for v in failures),
        )
        raise HetcatNegativeResult(
            f"{het.name} is not representable on the right", ValidationReport.of(failures)
        )
    semi = right_semiadjunction_from(het, arrows)
    _LOGGER.info("Built right semiadjunction %s for %s", semi.functor.name, het.name)
    return semi
