"""Finite categories as validated composition tables."""

from __future__ import annotations

from collections.abc import Callable, Iterable, Iterator, Mapping
from dataclasses import dataclass, field
from functools import cached_property
import itertools
import logging

from .exceptions import HetcatParameterError, HetcatValidationError
from .validation import ValidationReport, Violation

_LOGGER = logging.getLogger(__name__)

type ObjectId = str

LAW_DUPLICATE_OBJECT = "duplicate object"
LAW_DUPLICATE_MORPHISM = "duplicate morphism"
LAW_UNKNOWN_OBJECT = "unknown object"
LAW_MISSING_IDENTITY = "missing identity"
LAW_IDENTITY_BOUNDARY = "identity boundary"
LAW_NOT_COMPOSABLE = "composition of non-composable pair"
LAW_UNKNOWN_MORPHISM = "unknown morphism"
LAW_DOM_MISMATCH = "dom mismatch"
LAW_COD_MISMATCH = "cod mismatch"
LAW_NOT_TOTAL = "composition not total"
LAW_LEFT_UNIT = "left unit law"
LAW_RIGHT_UNIT = "right unit law"
LAW_ASSOCIATIVITY = "associativity"


@dataclass(frozen=True)
class MorphismId:
    """A named hom with its domain and codomain."""

    name: str
    dom: ObjectId
    cod: ObjectId


@dataclass(frozen=True)
class FinCategory:
    """A finite category given by ordered objects, morphisms and a composition table.

    The table maps (g, f) to the name of g∘f and is defined exactly on the pairs
    with cod(f) = dom(g). Instances are only produced by make_category and the
    derived constructions below, so they always satisfy the category laws.
    """

    name: str = field(compare=False)
    objects: tuple[ObjectId, ...]
    morphisms: tuple[MorphismId, ...]
    identities: Mapping[ObjectId, str]
    table: Mapping[tuple[str, str], str]

    @cached_property
    def _by_name(self) -> dict[str, MorphismId]:
        return {m.name: m for m in self.morphisms}

    @cached_property
    def _object_set(self) -> frozenset[ObjectId]:
        return frozenset(self.objects)

    @cached_property
    def _homs(self) -> dict[tuple[ObjectId, ObjectId], tuple[str, ...]]:
        homs: dict[tuple[ObjectId, ObjectId], list[str]] = {}
        for morphism in self.morphisms:
            homs.setdefault((morphism.dom, morphism.cod), []).append(morphism.name)
        return {key: tuple(names) for key, names in homs.items()}

    @cached_property
    def _outgoing(self) -> dict[ObjectId, tuple[str, ...]]:
        out: dict[ObjectId, list[str]] = {obj: [] for obj in self.objects}
        for morphism in self.morphisms:
            out[morphism.dom].append(morphism.name)
        return {obj: tuple(names) for obj, names in out.items()}

    @cached_property
    def _incoming(self) -> dict[ObjectId, tuple[str, ...]]:
        inc: dict[ObjectId, list[str]] = {obj: [] for obj in self.objects}
        for morphism in self.morphisms:
            inc[morphism.cod].append(morphism.name)
        return {obj: tuple(names) for obj, names in inc.items()}

    def has_object(self, obj: ObjectId) -> bool:
        return obj in self._object_set

    def has_morphism(self, name: str) -> bool:
        return name in self._by_name

    def morphism(self, name: str) -> MorphismId:
        try:
            return self._by_name[name]
        except KeyError:
            raise HetcatParameterError(
                f"Unknown morphism '{name}' in category {self.name}"
            ) from None

    def dom(self, name: str) -> ObjectId:
        return self.morphism(name).dom

    def cod(self, name: str) -> ObjectId:
        return self.morphism(name).cod

    def identity(self, obj: ObjectId) -> str:
        self.require_object(obj)
        return self.identities[obj]

    def is_identity(self, name: str) -> bool:
        morphism = self.morphism(name)
        return self.identities.get(morphism.dom) == name

    def require_object(self, obj: ObjectId) -> None:
        if obj not in self._object_set:
            raise HetcatParameterError(f"Unknown object '{obj}' in category {self.name}")

    def outgoing(self, obj: ObjectId) -> tuple[str, ...]:
        return self._outgoing[obj]

    def incoming(self, obj: ObjectId) -> tuple[str, ...]:
        return self._incoming[obj]

    def hom(self, source: ObjectId, target: ObjectId) -> tuple[str, ...]:
        """Return hom(source, target) in declaration order, without validation."""
        return self._homs.get((source, target), ())

    def is_thin(self) -> bool:
        return all(len(names) <= 1 for names in self._homs.values())

    def composable_pairs(self) -> Iterator[tuple[str, str]]:
        """Yield every (g, f) with cod(f) = dom(g)."""
        for morphism in self.morphisms:
            for g in self._outgoing[morphism.cod]:
                yield g, morphism.name


def compose(cat: FinCategory, g: str, f: str) -> str:
    """Return g∘f, defined when cod(f) = dom(g)."""
    f_cod = cat.cod(f)
    g_dom = cat.dom(g)
    if f_cod != g_dom:
        raise HetcatParameterError(
            f"Cannot compose {g} after {f}: cod({f})={f_cod} ≠ dom({g})={g_dom}"
        )
    return cat.table[(g, f)]


def hom_set(cat: FinCategory, source: ObjectId, target: ObjectId) -> tuple[str, ...]:
    """Return all morphisms source → target in declaration order."""
    cat.require_object(source)
    cat.require_object(target)
    return cat.hom(source, target)


def _complete_table(
    morphisms: Iterable[MorphismId],
    identities: Mapping[ObjectId, str],
    table: Mapping[tuple[str, str], str],
) -> dict[tuple[str, str], str]:
    """Fill in unit-law entries that the declaration left out."""
    completed = dict(table)
    for morphism in morphisms:
        source_id = identities.get(morphism.dom)
        target_id = identities.get(morphism.cod)
        if source_id is not None:
            completed.setdefault((morphism.name, source_id), morphism.name)
        if target_id is not None:
            completed.setdefault((target_id, morphism.name), morphism.name)
    return completed


def validate_category(
    objects: Iterable[ObjectId],
    morphisms: Iterable[MorphismId],
    identities: Mapping[ObjectId, str],
    table: Mapping[tuple[str, str], str],
) -> ValidationReport:
    """Check every category law and collect all violations."""
    objects = tuple(objects)
    morphisms = tuple(morphisms)
    table = _complete_table(morphisms, identities, table)
    violations: list[Violation] = []

    seen_objects: set[ObjectId] = set()
    for obj in objects:
        if obj in seen_objects:
            violations.append(Violation(LAW_DUPLICATE_OBJECT, (obj,)))
        seen_objects.add(obj)

    by_name: dict[str, MorphismId] = {}
    for morphism in morphisms:
        if morphism.name in by_name:
            violations.append(Violation(LAW_DUPLICATE_MORPHISM, (morphism.name,)))
        by_name[morphism.name] = morphism
        for end in (morphism.dom, morphism.cod):
            if end not in seen_objects:
                violations.append(Violation(LAW_UNKNOWN_OBJECT, (morphism.name, end)))

    for obj in objects:
        identity = identities.get(obj)
        if identity is None:
            violations.append(Violation(LAW_MISSING_IDENTITY, (obj,)))
        elif identity not in by_name:
            violations.append(Violation(LAW_UNKNOWN_MORPHISM, (identity,)))
        elif (by_name[identity].dom, by_name[identity].cod) != (obj, obj):
            violations.append(Violation(LAW_IDENTITY_BOUNDARY, (obj, identity)))

    for (g, f), h in table.items():
        unknown = [name for name in (g, f, h) if name not in by_name]
        if unknown:
            violations.extend(Violation(LAW_UNKNOWN_MORPHISM, (name,)) for name in unknown)
            continue
        if by_name[f].cod != by_name[g].dom:
            violations.append(Violation(LAW_NOT_COMPOSABLE, (g, f)))
            continue
        if by_name[h].dom != by_name[f].dom:
            violations.append(Violation(LAW_DOM_MISMATCH, (g, f, h)))
        if by_name[h].cod != by_name[g].cod:
            violations.append(Violation(LAW_COD_MISMATCH, (g, f, h)))

    outgoing: dict[ObjectId, list[str]] = {}
    for morphism in by_name.values():
        outgoing.setdefault(morphism.dom, []).append(morphism.name)

    for f in by_name.values():
        for g in outgoing.get(f.cod, ()):
            if (g, f.name) not in table:
                violations.append(Violation(LAW_NOT_TOTAL, (g, f.name)))

    for f in by_name.values():
        source_id = identities.get(f.dom)
        target_id = identities.get(f.cod)
        if source_id in by_name and table.get((f.name, source_id)) != f.name:
            violations.append(Violation(LAW_RIGHT_UNIT, (f.name, source_id)))
        if target_id in by_name and table.get((target_id, f.name)) != f.name:
            violations.append(Violation(LAW_LEFT_UNIT, (target_id, f.name)))

    for f in by_name.values():
        for g in outgoing.get(f.cod, ()):
            for h in outgoing.get(by_name[g].cod, ()):
                gf = table.get((g, f.name))
                hg = table.get((h, g))
                if gf is None or hg is None:
                    continue
                left = table.get((h, gf))
                right = table.get((hg, f.name))
                if left is None or left != right:
                    violations.append(Violation(LAW_ASSOCIATIVITY, (h, g, f.name)))

    return ValidationReport.of(violations)


def make_category(
    name: str,
    objects: Iterable[ObjectId],
    morphisms: Iterable[MorphismId],
    identities: Mapping[ObjectId, str],
    table: Mapping[tuple[str, str], str],
) -> FinCategory:
    """Validate a category description and return the category.

    Raises HetcatValidationError carrying the full report when any law fails.
    """
    objects = tuple(objects)
    morphisms = tuple(morphisms)
    report = validate_category(objects, morphisms, identities, table)
    if not report.ok:
        _LOGGER.debug("Category %s rejected: %s", name, report.render())
        raise HetcatValidationError(
            f"Category {name} violates {len(report.violations)} law(s)", report
        )
    category = FinCategory(
        name=name,
        objects=objects,
        morphisms=morphisms,
        identities=dict(identities),
        table=_complete_table(morphisms, identities, table),
    )
    _LOGGER.debug(
        "Built category %s with %d objects and %d morphisms",
        name,
        len(objects),
        len(morphisms),
    )
    return category


def opposite(cat: FinCategory, name: str | None = None) -> FinCategory:
    """Return the opposite category: same names, dom/cod swapped."""
    return FinCategory(
        name=name or f"{cat.name}^op",
        objects=cat.objects,
        morphisms=tuple(MorphismId(m.name, m.cod, m.dom) for m in cat.morphisms),
        identities=dict(cat.identities),
        table={(f, g): h for (g, f), h in cat.table.items()},
    )


def pair_name(left: str, right: str) -> str:
    return f"({left},{right})"


def product(cat_l: FinCategory, cat_r: FinCategory, name: str | None = None) -> FinCategory:
    """Return the product category with componentwise structure."""
    objects = tuple(pair_name(x, a) for x, a in itertools.product(cat_l.objects, cat_r.objects))
    morphisms = tuple(
        MorphismId(pair_name(f.name, g.name), pair_name(f.dom, g.dom), pair_name(f.cod, g.cod))
        for f, g in itertools.product(cat_l.morphisms, cat_r.morphisms)
    )
    identities = {
        pair_name(x, a): pair_name(cat_l.identities[x], cat_r.identities[a])
        for x, a in itertools.product(cat_l.objects, cat_r.objects)
    }
    table = {
        (pair_name(g, g2), pair_name(f, f2)): pair_name(h, h2)
        for ((g, f), h), ((g2, f2), h2) in itertools.product(
            cat_l.table.items(), cat_r.table.items()
        )
    }
    return FinCategory(
        name=name or f"{cat_l.name}x{cat_r.name}",
        objects=objects,
        morphisms=morphisms,
        identities=identities,
        table=table,
    )


def thin_category(
    name: str,
    objects: Iterable[ObjectId],
    relation: Iterable[tuple[ObjectId, ObjectId]],
    arrow_name: Callable[[ObjectId, ObjectId], str] | None = None,
) -> FinCategory:
    """Build the category of a preorder given as a reflexive, transitive relation.

    arrow_name(x, y) names the unique hom x → y; identities come from the same
    function applied to (x, x).
    """
    objects = tuple(objects)
    relation = set(relation)
    if arrow_name is None:
        def arrow_name(x, y):
            return f"id_{x}" if x == y else f"le_{x}_{y}"

    morphisms = [
        MorphismId(arrow_name(x, y), x, y)
        for x in objects
        for y in objects
        if (x, y) in relation
    ]
    identities = {x: arrow_name(x, x) for x in objects}
    table = {
        (arrow_name(y, z), arrow_name(x, y)): arrow_name(x, z)
        for x in objects
        for y in objects
        for z in objects
        if (x, y) in relation and (y, z) in relation
    }
    return make_category(name, objects, morphisms, identities, table)


def chain(n: int, name: str | None = None) -> FinCategory:
    """Return the chain 0 ≤ 1 ≤ … ≤ n-1 as a category."""
    objects = [str(i) for i in range(n)]
    relation = [(str(i), str(j)) for i in range(n) for j in range(i, n)]
    return thin_category(name or f"C{n}", objects, relation)


def subset_name(subset: Iterable[int]) -> str:
    return "{" + ",".join(str(i) for i in sorted(subset)) + "}"


def powerset(k: int, name: str | None = None) -> FinCategory:
    """Return the subsets of {1..k} ordered by inclusion, smallest first."""
    carrier = range(1, k + 1)
    subsets = [
        frozenset(combo)
        for size in range(k + 1)
        for combo in itertools.combinations(carrier, size)
    ]
    names = {subset: subset_name(subset) for subset in subsets}
    relation = [(names[s], names[t]) for s in subsets for t in subsets if s <= t]
    return thin_category(name or f"P{k}", [names[s] for s in subsets], relation)


def discrete(name: str, objects: Iterable[ObjectId]) -> FinCategory:
    """Return the category with only identity morphisms."""
    objects = tuple(objects)
    return thin_category(name, objects, [(x, x) for x in objects])
