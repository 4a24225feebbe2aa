"""Free discrete preorders: free ⊣ forgetful between small sets and small preorders.

A function from a set S into the carrier of a preorder P factors uniquely as
a monotone map after the insertion of S into the discrete preorder on S.
"""

from __future__ import annotations

from collections.abc import Callable, Iterable, Sequence
import itertools

from ..const import FIXTURE_FREE_DISCRETE_PREORDER
from ..core import (
    FinCategory,
    HetElement,
    MorphismId,
    Side,
    make_category,
    make_functor,
    make_het,
)
from .fixture_description import (
    ExpectedAdjunction,
    ExpectedRepresentation,
    Fixture,
    FixtureDescription,
    FixtureParam,
)

type Order = frozenset[tuple[int, int]]


def _images_name(images: Iterable[int]) -> str:
    return "[" + ",".join(str(i) for i in images) + "]"


def map_name(src: str, dst: str, images: Sequence[int]) -> str:
    return f"map_{src}_{dst}_{_images_name(images)}"


def mono_name(src: str, dst: str, images: Sequence[int]) -> str:
    return f"mono_{src}_{dst}_{_images_name(images)}"


def fun_name(src: str, dst: str, images: Sequence[int]) -> str:
    return f"fun_{src}_{dst}_{_images_name(images)}"


def set_name(size: int) -> str:
    return f"S{size}"


def _functions(size: int, codomain: int) -> list[tuple[int, ...]]:
    """All functions {0..size-1} → {0..codomain-1}, identity-like first when sizes agree."""
    functions = list(itertools.product(range(codomain), repeat=size))
    identity = tuple(range(size))
    if size == codomain and identity in functions:
        functions.remove(identity)
        functions.insert(0, identity)
    return functions


def _preorders(n: int) -> dict[str, Order]:
    """Discrete D0..Dn, then the chains L2, L3 and the two-element indiscrete K2."""
    preorders = {
        f"D{size}": frozenset((i, i) for i in range(size)) for size in range(n + 1)
    }
    for size in (2, 3):
        if size <= n:
            preorders[f"L{size}"] = frozenset(
                (i, j) for i in range(size) for j in range(i, size)
            )
    if n >= 2:
        preorders["K2"] = frozenset(itertools.product(range(2), repeat=2))
    return preorders


def _size(order: Order) -> int:
    return len({i for i, _ in order})


def _is_monotone(images: Sequence[int], source: Order, target: Order) -> bool:
    return all((images[i], images[j]) in target for i, j in source)


def _concrete_category(
    name: str,
    carriers: dict[str, int],
    homs: dict[tuple[str, str], list[tuple[int, ...]]],
    naming: Callable[[str, str, Sequence[int]], str],
) -> FinCategory:
    """Category of finite carriers and chosen maps, composed as functions."""
    morphisms = [
        MorphismId(naming(src, dst, images), src, dst)
        for (src, dst), maps in homs.items()
        for images in maps
    ]
    identities = {obj: naming(obj, obj, tuple(range(size))) for obj, size in carriers.items()}
    table = {}
    for (x, y), first in homs.items():
        for z in carriers:
            for f in first:
                for g in homs.get((y, z), ()):
                    gf = tuple(g[i] for i in f)
                    table[(naming(y, z, g), naming(x, y, f))] = naming(x, z, gf)
    return make_category(name, carriers, morphisms, identities, table)


def build_free_discrete_preorder(n: int = 2) -> Fixture:
    """Sets S0..Sn, small preorders, the function het between them and free ⊣ forgetful."""
    set_sizes = {set_name(size): size for size in range(n + 1)}
    preorders = _preorders(n)
    pre_sizes = {name: _size(order) for name, order in preorders.items()}

    sets = _concrete_category(
        "Set",
        set_sizes,
        {
            (src, dst): _functions(set_sizes[src], set_sizes[dst])
            for src in set_sizes
            for dst in set_sizes
        },
        map_name,
    )
    pre = _concrete_category(
        "Pre",
        pre_sizes,
        {
            (src, dst): [
                images
                for images in _functions(pre_sizes[src], pre_sizes[dst])
                if _is_monotone(images, preorders[src], preorders[dst])
            ]
            for src in preorders
            for dst in preorders
        },
        mono_name,
    )

    elements = [
        HetElement(fun_name(s, p, images), s, p)
        for s in set_sizes
        for p in pre_sizes
        for images in sorted(itertools.product(range(pre_sizes[p]), repeat=set_sizes[s]))
    ]
    left_action = {}
    right_action = {}
    for element in elements:
        images = _images_of(element.name)
        for k in pre.outgoing(element.dst):
            k_images = _images_of(k)
            moved = tuple(k_images[i] for i in images)
            left_action[(k, element.name)] = fun_name(element.src, pre.cod(k), moved)
        for h in sets.incoming(element.src):
            h_images = _images_of(h)
            moved = tuple(images[i] for i in h_images)
            right_action[(element.name, h)] = fun_name(sets.dom(h), element.dst, moved)
    fun = make_het("fun", sets, pre, elements, left_action, right_action)

    free_map = {s: f"D{size}" for s, size in set_sizes.items()}
    forgetful_map = {p: set_name(size) for p, size in pre_sizes.items()}
    free = make_functor(
        "free",
        sets,
        pre,
        free_map,
        {
            m.name: mono_name(free_map[m.dom], free_map[m.cod], _images_of(m.name))
            for m in sets.morphisms
        },
    )
    forgetful = make_functor(
        "forgetful",
        pre,
        sets,
        forgetful_map,
        {
            m.name: map_name(forgetful_map[m.dom], forgetful_map[m.cod], _images_of(m.name))
            for m in pre.morphisms
        },
    )
    return Fixture(
        name=FIXTURE_FREE_DISCRETE_PREORDER,
        params={"n": n},
        categories={"Set": sets, "Pre": pre},
        functors={"free": free, "forgetful": forgetful},
        hets={"fun": fun},
        expected={
            "free": ExpectedRepresentation("free", "fun", Side.LEFT, free_map),
            "forgetful": ExpectedRepresentation("forgetful", "fun", Side.RIGHT, forgetful_map),
            "free-forgetful": ExpectedAdjunction(
                "free-forgetful",
                "fun",
                free_map,
                forgetful_map,
                left_functor="free",
                right_functor="forgetful",
            ),
        },
    )


def _images_of(name: str) -> tuple[int, ...]:
    inner = name[name.rindex("[") + 1 : -1]
    return tuple(int(i) for i in inner.split(",")) if inner else ()


FREE_FIXTURES: tuple[FixtureDescription, ...] = (
    FixtureDescription(
        key=FIXTURE_FREE_DISCRETE_PREORDER,
        build=build_free_discrete_preorder,
        params=(FixtureParam(key="n", default=2, minimum=0, maximum=3),),
    ),
)
