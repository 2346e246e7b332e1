"""Finite categories, finite posets, their zeta matrices, and combinators.

A finite category is given by a *total* composition table rather than
generators and relations, which keeps validation decidable: we check the
identity laws, associativity on every composable triple, and that the
table covers exactly the composable pairs.  A composition entry
``(g, f) -> h`` means h = g after f, for f: a -> b and g: b -> c.

Posets are stored with their order relation already closed under
reflexivity and transitivity; ``close_poset`` builds one from generating
pairs and rejects cycles through distinct elements.

The zeta matrix counts hom-sets: Z[i][j] = |Hom(x_i, x_j)| under the
declared object order (0/1 for posets).  Products use first-factor-major
object order so that the zeta matrix of a product is exactly the
Kronecker product of the factors' zeta matrices, entry for entry.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Mapping

from .matrix import Matrix


class CategoryError(ValueError):
    """A finite-category axiom or well-formedness condition failed."""


class PosetError(ValueError):
    """A partial-order axiom or well-formedness condition failed."""


@dataclass(frozen=True)
class Morphism:
    name: str
    src: str
    tgt: str


@dataclass(frozen=True, eq=True)
class FinCategory:
    objects: tuple[str, ...]
    morphisms: tuple[Morphism, ...]
    identities: Mapping[str, str]  # object -> identity morphism name
    composition: Mapping[tuple[str, str], str]  # (g, f) -> g after f

    def morphism(self, name: str) -> Morphism:
        return _by_name(self.morphisms)[name]

    def compose(self, g: str, f: str) -> str:
        return self.composition[(g, f)]


@dataclass(frozen=True, eq=True)
class Poset:
    objects: tuple[str, ...]
    leq: frozenset[tuple[str, str]]  # reflexive-transitive closed

    def holds(self, a: str, b: str) -> bool:
        return (a, b) in self.leq

    def global_min(self) -> str | None:
        """The unique element below everything, if one exists."""
        for a in self.objects:
            if all((a, b) in self.leq for b in self.objects):
                return a
        return None

    def global_max(self) -> str | None:
        for a in self.objects:
            if all((b, a) in self.leq for b in self.objects):
                return a
        return None

    def restrict(self, keep: Iterable[str]) -> "Poset":
        """Full subposet on the given objects (declaration order preserved)."""
        kept = set(keep)
        objects = tuple(x for x in self.objects if x in kept)
        leq = frozenset((a, b) for (a, b) in self.leq if a in kept and b in kept)
        return Poset(objects, leq)

    def covers(self) -> list[tuple[str, str]]:
        """Covering pairs (a, b): a < b with nothing strictly between."""
        index = {x: i for i, x in enumerate(self.objects)}
        strict = {(a, b) for (a, b) in self.leq if a != b}
        result = [
            (a, b)
            for (a, b) in strict
            if not any((a, c) in strict and (c, b) in strict for c in self.objects)
        ]
        result.sort(key=lambda p: (index[p[0]], index[p[1]]))
        return result

    def as_category(self) -> FinCategory:
        """The category with one morphism per related pair; composition is forced."""
        morphisms = tuple(
            Morphism(_leq_name(a, b), a, b)
            for a in self.objects
            for b in self.objects
            if (a, b) in self.leq
        )
        identities = {a: _leq_name(a, a) for a in self.objects}
        composition = {}
        for f in morphisms:
            for g in morphisms:
                if f.tgt == g.src:
                    composition[(g.name, f.name)] = _leq_name(f.src, g.tgt)
        return FinCategory(self.objects, morphisms, identities, composition)


def _leq_name(a: str, b: str) -> str:
    return f"{a}<={b}"


@dataclass(frozen=True)
class ZetaContext:
    object_order: tuple[str, ...]
    matrix: Matrix


def _by_name(morphisms: Iterable[Morphism]) -> dict[str, Morphism]:
    return {m.name: m for m in morphisms}


def validate_category(cat: FinCategory) -> FinCategory:
    """Check all finite-category axioms; return the category unchanged.

    Raises CategoryError naming the offending objects/morphisms on the
    first violated condition.
    """
    if len(set(cat.objects)) != len(cat.objects):
        dupes = sorted({x for x in cat.objects if cat.objects.count(x) > 1})
        raise CategoryError(f"duplicate object names: {dupes}")
    names = [m.name for m in cat.morphisms]
    if len(set(names)) != len(names):
        dupes = sorted({n for n in names if names.count(n) > 1})
        raise CategoryError(f"duplicate morphism names: {dupes}")
    objects = set(cat.objects)
    by_name = _by_name(cat.morphisms)
    for m in cat.morphisms:
        if m.src not in objects or m.tgt not in objects:
            raise CategoryError(f"morphism {m.name!r} references unknown object")

    for obj in cat.objects:
        ident = cat.identities.get(obj)
        if ident is None:
            raise CategoryError(f"missing identity for object {obj!r}")
        im = by_name.get(ident)
        if im is None or im.src != obj or im.tgt != obj:
            raise CategoryError(f"identity {ident!r} of {obj!r} is not an endomorphism of it")
    for obj in cat.identities:
        if obj not in objects:
            raise CategoryError(f"identity listed for unknown object {obj!r}")

    composable = [
        (g.name, f.name) for f in cat.morphisms for g in cat.morphisms if f.tgt == g.src
    ]
    for pair in composable:
        if pair not in cat.composition:
            raise CategoryError(f"missing composite for pair (g={pair[0]!r}, f={pair[1]!r})")
    composable = set(composable)
    for (g, f), h in cat.composition.items():
        if (g, f) not in composable:
            raise CategoryError(f"composition entry for non-composable pair (g={g!r}, f={f!r})")
        hm = by_name.get(h)
        if hm is None:
            raise CategoryError(f"composite {h!r} of (g={g!r}, f={f!r}) is not a morphism")
        fm, gm = by_name[f], by_name[g]
        if hm.src != fm.src or hm.tgt != gm.tgt:
            raise CategoryError(
                f"composite {h!r} of (g={g!r}, f={f!r}) has wrong endpoints: "
                f"expected {fm.src!r}->{gm.tgt!r}, got {hm.src!r}->{hm.tgt!r}"
            )

    for f in cat.morphisms:
        if cat.composition[(f.name, cat.identities[f.src])] != f.name:
            raise CategoryError(f"right identity law fails for {f.name!r}")
        if cat.composition[(cat.identities[f.tgt], f.name)] != f.name:
            raise CategoryError(f"left identity law fails for {f.name!r}")

    by_src: dict[str, list[Morphism]] = {obj: [] for obj in cat.objects}
    for m in cat.morphisms:
        by_src[m.src].append(m)
    for f in cat.morphisms:
        for g in by_src[f.tgt]:
            gf = cat.composition[(g.name, f.name)]
            for h in by_src[g.tgt]:
                hg = cat.composition[(h.name, g.name)]
                if cat.composition[(h.name, gf)] != cat.composition[(hg, f.name)]:
                    raise CategoryError(
                        f"associativity fails on triple (h={h.name!r}, g={g.name!r}, "
                        f"f={f.name!r}): h(gf)={cat.composition[(h.name, gf)]!r} but "
                        f"(hg)f={cat.composition[(hg, f.name)]!r}"
                    )
    return cat


def close_poset(objects: Iterable[str], pairs: Iterable[tuple[str, str]]) -> Poset:
    """Reflexive-transitive closure of generating pairs, checked antisymmetric."""
    objs = tuple(objects)
    if len(set(objs)) != len(objs):
        dupes = sorted({x for x in objs if objs.count(x) > 1})
        raise PosetError(f"duplicate object names: {dupes}")
    known = set(objs)
    above: dict[str, set[str]] = {x: {x} for x in objs}
    for a, b in pairs:
        if a not in known or b not in known:
            missing = a if a not in known else b
            raise PosetError(f"relation references unknown object {missing!r}")
        above[a].add(b)
    changed = True
    while changed:
        changed = False
        for a in objs:
            extra = set()
            for b in above[a]:
                extra |= above[b]
            if not extra <= above[a]:
                above[a] |= extra
                changed = True
    for a in objs:
        for b in above[a]:
            if a != b and a in above[b]:
                raise PosetError(f"antisymmetry fails: cycle {a!r} <= {b!r} <= {a!r}")
    return Poset(objs, frozenset((a, b) for a in objs for b in above[a]))


def zeta_of_category(cat: FinCategory) -> ZetaContext:
    """Z[i][j] = number of morphisms from object i to object j."""
    index = {x: i for i, x in enumerate(cat.objects)}
    n = len(cat.objects)
    counts = [[0] * n for _ in range(n)]
    for m in cat.morphisms:
        counts[index[m.src]][index[m.tgt]] += 1
    return ZetaContext(cat.objects, Matrix(counts, cols=n))


def zeta_of_poset(poset: Poset) -> ZetaContext:
    index = {x: i for i, x in enumerate(poset.objects)}
    n = len(poset.objects)
    grid = [[0] * n for _ in range(n)]
    for a, b in poset.leq:
        grid[index[a]][index[b]] = 1
    return ZetaContext(poset.objects, Matrix(grid, cols=n))


def zeta_of(structure: FinCategory | Poset) -> ZetaContext:
    if isinstance(structure, Poset):
        return zeta_of_poset(structure)
    return zeta_of_category(structure)


def as_category(structure: FinCategory | Poset) -> FinCategory:
    return structure.as_category() if isinstance(structure, Poset) else structure


def _pair(x: str, y: str) -> str:
    return f"({x},{y})"


def category_product(a: FinCategory, b: FinCategory) -> FinCategory:
    """Product category, objects ordered first-factor-major so the zeta
    matrix equals kron(zeta(a), zeta(b)) entrywise."""
    objects = tuple(_pair(x, y) for x in a.objects for y in b.objects)
    morphisms = tuple(
        Morphism(_pair(f.name, g.name), _pair(f.src, g.src), _pair(f.tgt, g.tgt))
        for f in a.morphisms
        for g in b.morphisms
    )
    identities = {
        _pair(x, y): _pair(a.identities[x], b.identities[y])
        for x in a.objects
        for y in b.objects
    }
    composition = {}
    for (g1, f1), h1 in a.composition.items():
        for (g2, f2), h2 in b.composition.items():
            composition[(_pair(g1, g2), _pair(f1, f2))] = _pair(h1, h2)
    return FinCategory(objects, morphisms, identities, composition)


def category_coproduct(a: FinCategory, b: FinCategory) -> FinCategory:
    """Disjoint union; names are prefixed L:/R: so reused names stay distinct."""
    objects = tuple("L:" + x for x in a.objects) + tuple("R:" + x for x in b.objects)
    morphisms = tuple(
        Morphism("L:" + m.name, "L:" + m.src, "L:" + m.tgt) for m in a.morphisms
    ) + tuple(Morphism("R:" + m.name, "R:" + m.src, "R:" + m.tgt) for m in b.morphisms)
    identities = {"L:" + x: "L:" + m for x, m in a.identities.items()}
    identities.update({"R:" + x: "R:" + m for x, m in b.identities.items()})
    composition = {("L:" + g, "L:" + f): "L:" + h for (g, f), h in a.composition.items()}
    composition.update(
        {("R:" + g, "R:" + f): "R:" + h for (g, f), h in b.composition.items()}
    )
    return FinCategory(objects, morphisms, identities, composition)


def discrete_category(n: int) -> FinCategory:
    """n objects and nothing but their identities."""
    if n < 0:
        raise ValueError("size must be nonnegative")
    objects = tuple(f"x{i}" for i in range(n))
    morphisms = tuple(Morphism(f"id_x{i}", f"x{i}", f"x{i}") for i in range(n))
    identities = {f"x{i}": f"id_x{i}" for i in range(n)}
    composition = {(m.name, m.name): m.name for m in morphisms}
    return validate_category(FinCategory(objects, morphisms, identities, composition))


def indiscrete_category(n: int) -> FinCategory:
    """Exactly one morphism between every ordered pair of n objects."""
    if n < 0:
        raise ValueError("size must be nonnegative")
    objects = tuple(f"x{i}" for i in range(n))
    morphisms = tuple(
        Morphism(f"x{i}->x{j}", f"x{i}", f"x{j}") for i in range(n) for j in range(n)
    )
    identities = {f"x{i}": f"x{i}->x{i}" for i in range(n)}
    composition = {}
    for i, j, k in itertools.product(range(n), repeat=3):
        composition[(f"x{j}->x{k}", f"x{i}->x{j}")] = f"x{i}->x{k}"
    return validate_category(FinCategory(objects, morphisms, identities, composition))


def cyclic_monoid(m: int) -> FinCategory:
    """One object whose m endomorphisms compose as the integers mod m."""
    if m < 1:
        raise ValueError("order must be at least 1")
    objects = ("*",)
    morphisms = tuple(Morphism(f"g{i}", "*", "*") for i in range(m))
    identities = {"*": "g0"}
    composition = {
        (f"g{i}", f"g{j}"): f"g{(i + j) % m}" for i in range(m) for j in range(m)
    }
    return validate_category(FinCategory(objects, morphisms, identities, composition))


def chain_poset(n: int) -> Poset:
    """The total order 0 < 1 < ... < n-1."""
    if n < 0:
        raise ValueError("size must be nonnegative")
    objects = [str(i) for i in range(n)]
    pairs = [(str(i), str(i + 1)) for i in range(n - 1)]
    return close_poset(objects, pairs)


def divisor_poset(n: int) -> Poset:
    """Divisors of n ordered by divisibility."""
    if n < 1:
        raise ValueError("n must be at least 1")
    divisors = [d for d in range(1, n + 1) if n % d == 0]
    pairs = [
        (str(d), str(e)) for d in divisors for e in divisors if d != e and e % d == 0
    ]
    return close_poset([str(d) for d in divisors], pairs)
