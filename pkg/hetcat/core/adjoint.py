"""Adjunctions from paired semiadjunctions, and brain functors.

An adjunction is a left and a right semiadjunction over the same het
bifunctor: Hom(F(X), A) ≅ Het(X, A) ≅ Hom(X, G(A)). A brain functor F: X → A
is represented on both sides at once, by F(X) for het_out(X, -) and by F(X)
again for het_in(-, X).
"""

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass
import logging

from .exceptions import (
    HetcatIntegrityError,
    HetcatNegativeResult,
    HetcatParameterError,
)
from .fincat import ObjectId
from .functor import FinFunctor, induced_het_left, induced_het_right
from .het import HetBifunctor, HetElement
from .represent import (
    LAW_NATURAL_IN_A,
    LAW_NATURAL_IN_X,
    Semiadjunction,
    Side,
    UniversalArrow,
    check_naturality,
    is_left_universal,
    is_right_universal,
    left_semiadjunction_from,
    right_semiadjunction_from,
)
from .validation import ValidationReport, Violation

_LOGGER = logging.getLogger(__name__)

LAW_HET_MISMATCH = "het mismatch"
LAW_COMPOSITE_BIJECTION = "composite bijection"
LAW_UPPER_TRIANGLE = "upper triangle"
LAW_LOWER_TRIANGLE = "lower triangle"
LAW_UPPER_WING = "upper wing"
LAW_LOWER_WING = "lower wing"
LAW_RECEIVING_SIDE = "F(X) does not represent het_out(X,-)"
LAW_SENDING_SIDE = "F(X) does not represent het_in(-,X)"
LAW_LEFT_ADJUNCTION = "left adjunction fails"
LAW_RIGHT_ADJUNCTION = "right adjunction fails"


def _element_name(d: HetElement | str) -> str:
    return d.name if isinstance(d, HetElement) else d


@dataclass(frozen=True)
class SquareReport:
    """Both factorizations of one het through the adjunctive square."""

    element: str
    x: ObjectId
    a: ObjectId
    unit: str
    counit: str
    f: str | None
    g: str | None
    upper_ok: bool
    lower_ok: bool

    @property
    def ok(self) -> bool:
        return self.upper_ok and self.lower_ok

    def failures(self) -> list[str]:
        failures = []
        if not self.upper_ok:
            failures.append(f"upper triangle fails at {self.element}")
        if not self.lower_ok:
            failures.append(f"lower triangle fails at {self.element}")
        return failures

    def render(self) -> str:
        lines = [
            f"{self.element}: {self.x} ⇢ {self.a}",
            f"  upper: f({self.element}) = {self.f}, f·{self.unit} = {self.element}",
            f"  lower: g({self.element}) = {self.g}, {self.counit}·g = {self.element}",
        ]
        lines.extend(f"  {failure}" for failure in self.failures())
        return "\n".join(lines)


@dataclass(frozen=True)
class ButterflyReport:
    """The two wings of a brain functor for one outgoing and one incoming het."""

    d_out: str
    x: ObjectId
    a: ObjectId
    unit: str
    f: str | None
    upper_ok: bool
    d_in: str
    a_in: ObjectId
    x_in: ObjectId
    counit: str
    g: str | None
    lower_ok: bool

    @property
    def ok(self) -> bool:
        return self.upper_ok and self.lower_ok

    def failures(self) -> list[str]:
        failures = []
        if not self.upper_ok:
            failures.append(f"upper wing fails at {self.d_out}")
        if not self.lower_ok:
            failures.append(f"lower wing fails at {self.d_in}")
        return failures

    def render(self) -> str:
        lines = [
            f"upper: {self.d_out}: {self.x} ⇢ {self.a} = {self.f}·{self.unit}",
            f"lower: {self.d_in}: {self.a_in} ⇢ {self.x_in} = {self.counit}·{self.g}",
        ]
        lines.extend(self.failures())
        return "\n".join(lines)


@dataclass(frozen=True)
class Adjunction:
    """F ⊣ G over one het, with θ: Hom(F(X), A) → Hom(X, G(A)) materialized."""

    left: Semiadjunction
    right: Semiadjunction
    het: HetBifunctor
    composite: Mapping[tuple[ObjectId, ObjectId], Mapping[str, str]]

    @property
    def left_adjoint(self) -> FinFunctor:
        return self.left.functor

    @property
    def right_adjoint(self) -> FinFunctor:
        return self.right.functor

    def unit(self, x: ObjectId) -> str:
        """h_X, read back through ψ from the identity on F(X)."""
        rep = self.left.functor(x)
        return self.left.hom_to_het(x, rep, self.het.receiving.identities[rep])

    def counit(self, a: ObjectId) -> str:
        """e_A, read back through φ from the identity on G(A)."""
        rep = self.right.functor(a)
        return self.right.hom_to_het(rep, a, self.het.sending.identities[rep])


def _composite(
    left: Semiadjunction, right: Semiadjunction
) -> dict[tuple[ObjectId, ObjectId], dict[str, str]]:
    composite: dict[tuple[ObjectId, ObjectId], dict[str, str]] = {}
    for (x, a), table in left.bijections.items():
        composite[(x, a)] = {}
        for f, d in table.items():
            g = right.het_to_hom(d)
            if g is not None:
                composite[(x, a)][f] = g
    return composite


def _composite_violations(
    het: HetBifunctor,
    left: FinFunctor,
    right: FinFunctor,
    composite: Mapping[tuple[ObjectId, ObjectId], Mapping[str, str]],
) -> list[Violation]:
    sending, receiving = het.sending, het.receiving
    violations: list[Violation] = []
    for x in sending.objects:
        for a in receiving.objects:
            theta = composite.get((x, a), {})
            homs = receiving.hom(left(x), a)
            images = [theta.get(f) for f in homs]
            if None in images or sorted(images) != sorted(sending.hom(x, right(a))):
                violations.append(Violation(LAW_COMPOSITE_BIJECTION, (x, a)))
                continue
            for f in homs:
                for k in receiving.outgoing(a):
                    moved = composite.get((x, receiving.cod(k)), {}).get(receiving.table[(k, f)])
                    if moved != sending.table[(right.mor_map[k], theta[f])]:
                        violations.append(Violation(LAW_NATURAL_IN_A, (x, a, f, k)))
                for h in sending.incoming(x):
                    moved = composite.get((sending.dom(h), a), {}).get(
                        receiving.table[(f, left.mor_map[h])]
                    )
                    if moved != sending.table[(theta[f], h)]:
                        violations.append(Violation(LAW_NATURAL_IN_X, (x, a, f, h)))
    return violations


def assemble_adjunction(left: Semiadjunction, right: Semiadjunction) -> Adjunction:
    """Pair a left and a right semiadjunction over the same het into F ⊣ G.

    Re-checks both stored bijection families, the naturality of the composite
    θ = φ⁻¹∘ψ and the adjunctive square for every het. Raises
    HetcatParameterError when the hets differ and HetcatNegativeResult with the
    witnesses when any check fails.
    """
    if left.side is not Side.LEFT or right.side is not Side.RIGHT:
        raise HetcatParameterError("assemble_adjunction needs a left and a right semiadjunction")
    if left.het != right.het:
        raise HetcatParameterError(
            f"{LAW_HET_MISMATCH}: {left.het.name} is not {right.het.name}"
        )
    het = left.het
    violations = [*check_naturality(left).violations, *check_naturality(right).violations]
    composite = _composite(left, right)
    if not violations:
        violations = _composite_violations(het, left.functor, right.functor, composite)
    if violations:
        raise HetcatNegativeResult(
            f"{left.functor.name} ⊣ {right.functor.name} is not an adjunction",
            ValidationReport.of(violations),
        )
    adjunction = Adjunction(left=left, right=right, het=het, composite=composite)
    squares = verify_all_squares(adjunction)
    if not squares.ok:
        raise HetcatNegativeResult(
            f"Adjunctive square fails for {het.name}", squares
        )
    _LOGGER.info(
        "Assembled adjunction %s ⊣ %s over %s",
        left.functor.name,
        right.functor.name,
        het.name,
    )
    return adjunction


def verify_adjunctive_square(adj: Adjunction, d: HetElement | str) -> SquareReport:
    """Factor d through h_X and through e_A and check both triangles.

    The factors are read from the stored bijections, so a corrupted ψ or φ
    shows up as a failing triangle rather than an exception.
    """
    het = adj.het
    element = het.element(_element_name(d))
    x, a = element.src, element.dst
    unit = adj.left.universal(x)
    counit = adj.right.universal(a)
    f = adj.left.het_to_hom(element.name)
    g = adj.right.het_to_hom(element.name)
    upper_ok = (
        f is not None
        and het.receiving.has_morphism(f)
        and het.receiving.dom(f) == adj.left.functor(x)
        and het.left_action.get((f, unit)) == element.name
    )
    lower_ok = (
        g is not None
        and het.sending.has_morphism(g)
        and het.sending.cod(g) == adj.right.functor(a)
        and het.right_action.get((counit, g)) == element.name
    )
    report = SquareReport(
        element=element.name,
        x=x,
        a=a,
        unit=unit,
        counit=counit,
        f=f,
        g=g,
        upper_ok=upper_ok,
        lower_ok=lower_ok,
    )
    if not report.ok:
        _LOGGER.debug("Square check failed: %s", "; ".join(report.failures()))
    return report


def verify_all_squares(adj: Adjunction) -> ValidationReport:
    """Run the adjunctive square check for every het, in declaration order."""
    violations: list[Violation] = []
    for element in adj.het.elements:
        report = verify_adjunctive_square(adj, element)
        if not report.upper_ok:
            violations.append(Violation(LAW_UPPER_TRIANGLE, (element.name,)))
        if not report.lower_ok:
            violations.append(Violation(LAW_LOWER_TRIANGLE, (element.name,)))
    return ValidationReport.of(violations)


@dataclass(frozen=True)
class BrainFunctor:
    """F: X → A with F(X) universal for both het_out(X, -) and het_in(-, X).

    left is the semiadjunction of het_out and right that of het_in; both carry
    F itself as their representing functor.
    """

    functor: FinFunctor
    het_out: HetBifunctor
    het_in: HetBifunctor
    left: Semiadjunction
    right: Semiadjunction


def _universal_options(
    het: HetBifunctor, side: Side, base: ObjectId, rep: ObjectId
) -> list[UniversalArrow]:
    if side is Side.LEFT:
        return [
            UniversalArrow(side, base, rep, het.element(u), het)
            for u in het.het_set(base, rep)
            if is_left_universal(het, base, rep, u)
        ]
    return [
        UniversalArrow(side, base, rep, het.element(u), het)
        for u in het.het_set(rep, base)
        if is_right_universal(het, base, rep, u)
    ]


def _coheres(
    het: HetBifunctor,
    side: Side,
    functor: FinFunctor,
    chosen: Mapping[ObjectId, UniversalArrow],
    base: ObjectId,
) -> bool:
    """Check the universals chosen so far against every hom touching base."""
    cat = functor.source
    touching = dict.fromkeys((*cat.outgoing(base), *cat.incoming(base)))
    for name in touching:
        dom, cod = cat.dom(name), cat.cod(name)
        if dom not in chosen or cod not in chosen:
            continue
        image = functor.mor_map[name]
        if side is Side.LEFT:
            # F(h)·h_X' = h_X·h for h: X' → X
            moved = het.left_action[(image, chosen[dom].universal.name)]
            expected = het.right_action[(chosen[cod].universal.name, name)]
        else:
            # e_A'·G(k) = k·e_A for k: A → A'
            moved = het.right_action[(chosen[cod].universal.name, image)]
            expected = het.left_action[(name, chosen[dom].universal.name)]
        if moved != expected:
            return False
    return True


def _coherent_universals(
    het: HetBifunctor, side: Side, functor: FinFunctor, law: str
) -> tuple[dict[ObjectId, UniversalArrow] | None, list[Violation]]:
    """Choose one universal at functor(b) per base b so that functor is the induced one.

    Universals are unique only up to automorphism, so the choice at one object
    constrains the others; the search backtracks in declaration order.
    """
    bases = functor.source.objects
    options = {
        base: _universal_options(het, side, base, functor.obj_map[base]) for base in bases
    }
    missing = [
        Violation(law, (base, functor.obj_map[base])) for base in bases if not options[base]
    ]
    if missing:
        return None, missing

    chosen: dict[ObjectId, UniversalArrow] = {}

    def extend(index: int) -> bool:
        if index == len(bases):
            return True
        base = bases[index]
        for arrow in options[base]:
            chosen[base] = arrow
            if _coheres(het, side, functor, chosen, base) and extend(index + 1):
                return True
        del chosen[base]
        return False

    if extend(0):
        return chosen, []
    return None, [Violation(law, (functor.name,))]


def _semiadjunction_for(
    het: HetBifunctor,
    side: Side,
    functor: FinFunctor,
    arrows: Mapping[ObjectId, UniversalArrow],
) -> Semiadjunction:
    if side is Side.LEFT:
        semi = left_semiadjunction_from(het, arrows, name=functor.name)
    else:
        semi = right_semiadjunction_from(het, arrows, name=functor.name)
    if semi.functor != functor:
        raise HetcatIntegrityError(
            f"Universals chosen for {functor.name} induce a different functor on {het.name}"
        )
    return semi


def _require_shapes(
    functor: FinFunctor, het_out: HetBifunctor, het_in: HetBifunctor
) -> None:
    x_cat, a_cat = functor.source, functor.target
    if het_out.sending != x_cat or het_out.receiving != a_cat:
        raise HetcatParameterError(
            f"{het_out.name} must run from {x_cat.name} to {a_cat.name}"
        )
    if het_in.sending != a_cat or het_in.receiving != x_cat:
        raise HetcatParameterError(
            f"{het_in.name} must run from {a_cat.name} to {x_cat.name}"
        )


def check_brain(
    functor: FinFunctor, het_out: HetBifunctor, het_in: HetBifunctor
) -> BrainFunctor:
    """Verify that F(X) represents het_out(X, -) and het_in(-, X) for every X.

    Raises HetcatNegativeResult whose report names the side and the object of
    every failure.
    """
    _require_shapes(functor, het_out, het_in)
    out_arrows, violations = _coherent_universals(
        het_out, Side.LEFT, functor, LAW_RECEIVING_SIDE
    )
    in_arrows, in_violations = _coherent_universals(
        het_in, Side.RIGHT, functor, LAW_SENDING_SIDE
    )
    violations.extend(in_violations)
    if violations:
        _LOGGER.warning("%s is not a brain functor (%d failures)", functor.name, len(violations))
        raise HetcatNegativeResult(
            f"{functor.name} is not a brain functor", ValidationReport.of(violations)
        )
    brain = BrainFunctor(
        functor=functor,
        het_out=het_out,
        het_in=het_in,
        left=_semiadjunction_for(het_out, Side.LEFT, functor, out_arrows),
        right=_semiadjunction_for(het_in, Side.RIGHT, functor, in_arrows),
    )
    _LOGGER.info("Verified brain functor %s", functor.name)
    return brain


def brain_from_adjoints(
    left_adjoint: FinFunctor, functor: FinFunctor, right_adjoint: FinFunctor
) -> BrainFunctor:
    """Check H ⊣ F ⊣ G and return F as a brain functor.

    het_out is Hom(F(X), A) and het_in is Hom(A, F(X)), neither of which
    involves H or G. F ⊣ G holds when G(A) right-represents het_out at every A,
    and H ⊣ F when H(A) left-represents het_in at every A.
    """
    x_cat, a_cat = functor.source, functor.target
    for adjoint in (left_adjoint, right_adjoint):
        if adjoint.source != a_cat or adjoint.target != x_cat:
            raise HetcatParameterError(
                f"{adjoint.name} must run from {a_cat.name} to {x_cat.name}"
            )
    het_out = induced_het_left(functor)
    het_in = induced_het_right(functor)
    _, violations = _coherent_universals(
        het_in, Side.LEFT, left_adjoint, LAW_LEFT_ADJUNCTION
    )
    _, right_violations = _coherent_universals(
        het_out, Side.RIGHT, right_adjoint, LAW_RIGHT_ADJUNCTION
    )
    violations.extend(right_violations)
    if violations:
        _LOGGER.warning(
            "%s ⊣ %s ⊣ %s does not hold (%d failures)",
            left_adjoint.name,
            functor.name,
            right_adjoint.name,
            len(violations),
        )
        raise HetcatNegativeResult(
            f"{left_adjoint.name} ⊣ {functor.name} ⊣ {right_adjoint.name} does not hold",
            ValidationReport.of(violations),
        )
    return check_brain(functor, het_out, het_in)


def _upper_wing(brain: BrainFunctor, d_out: str) -> tuple[HetElement, str, str | None, bool]:
    het = brain.het_out
    element = het.element(d_out)
    unit = brain.left.universal(element.src)
    f = brain.left.het_to_hom(element.name)
    ok = (
        f is not None
        and het.receiving.has_morphism(f)
        and het.receiving.dom(f) == brain.functor(element.src)
        and het.left_action.get((f, unit)) == element.name
    )
    return element, unit, f, ok


def _lower_wing(brain: BrainFunctor, d_in: str) -> tuple[HetElement, str, str | None, bool]:
    het = brain.het_in
    element = het.element(d_in)
    counit = brain.right.universal(element.dst)
    g = brain.right.het_to_hom(element.name)
    ok = (
        g is not None
        and het.sending.has_morphism(g)
        and het.sending.cod(g) == brain.functor(element.dst)
        and het.right_action.get((counit, g)) == element.name
    )
    return element, counit, g, ok


def verify_butterfly(
    brain: BrainFunctor, d_out: HetElement | str, d_in: HetElement | str
) -> ButterflyReport:
    """Factor d_out through h_X (upper wing) and d_in through e_X' (lower wing)."""
    out_element, unit, f, upper_ok = _upper_wing(brain, _element_name(d_out))
    in_element, counit, g, lower_ok = _lower_wing(brain, _element_name(d_in))
    return ButterflyReport(
        d_out=out_element.name,
        x=out_element.src,
        a=out_element.dst,
        unit=unit,
        f=f,
        upper_ok=upper_ok,
        d_in=in_element.name,
        a_in=in_element.src,
        x_in=in_element.dst,
        counit=counit,
        g=g,
        lower_ok=lower_ok,
    )


def verify_all_wings(brain: BrainFunctor) -> ValidationReport:
    """Check the upper wing for every outgoing het and the lower wing for every incoming one."""
    violations: list[Violation] = [
        Violation(LAW_UPPER_WING, (element.name,))
        for element in brain.het_out.elements
        if not _upper_wing(brain, element.name)[3]
    ]
    violations.extend(
        Violation(LAW_LOWER_WING, (element.name,))
        for element in brain.het_in.elements
        if not _lower_wing(brain, element.name)[3]
    )
    return ValidationReport.of(violations)
