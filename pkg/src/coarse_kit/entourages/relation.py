"""Algebra de relaciones sobre X x X (conjuntos controlados)."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Set, Tuple

from coarse_kit.core.sets import GroundSet, PointSet, ensure_same_universe


@dataclass(frozen=True)
class Entourage:
    """Relacion finita: conjunto de pares ordenados de indices."""
    universe: GroundSet
    pairs: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        pairs = frozenset((int(x), int(y)) for x, y in self.pairs)
        object.__setattr__(self, "pairs", pairs)
        size = self.universe.size
        for x, y in pairs:
            if not (0 <= x < size and 0 <= y < size):
                raise ValueError(f"Par ({x},{y}) fuera del universo de tamano {size}")

    @classmethod
    def of(cls, universe: GroundSet, pairs: Iterable[Tuple[int, int]]) -> "Entourage":
        return cls(universe, frozenset(pairs))

    @classmethod
    def full(cls, universe: GroundSet) -> "Entourage":
        points = universe.points()
        return cls(universe, frozenset((x, y) for x in points for y in points))

    def __iter__(self):
        return iter(sorted(self.pairs))

    def __len__(self) -> int:
        return len(self.pairs)

    def __contains__(self, pair) -> bool:
        return pair in self.pairs

    def __le__(self, other: "Entourage") -> bool:
        ensure_same_universe(self, other)
        return self.pairs <= other.pairs

    def __or__(self, other: "Entourage") -> "Entourage":
        ensure_same_universe(self, other)
        return Entourage(self.universe, self.pairs | other.pairs)

    def is_reflexive(self) -> bool:
        return all((x, x) in self.pairs for x in self.universe.points())

    def is_symmetric(self) -> bool:
        return all((y, x) in self.pairs for x, y in self.pairs)

    def to_lists(self) -> List[List[int]]:
        return [[x, y] for x, y in sorted(self.pairs)]


def diagonal(universe: GroundSet) -> Entourage:
    return Entourage(universe, frozenset((x, x) for x in universe.points()))


def inverse(relation: Entourage) -> Entourage:
    return Entourage(relation.universe, frozenset((y, x) for x, y in relation.pairs))


def compose(first: Entourage, second: Entourage) -> Entourage:
    """E o F = {(x,y) : existe z con (x,z) en E y (z,y) en F}.

    El primer argumento aporta el primer tramo (orden literal de los axiomas).
    """
    ensure_same_universe(first, second)
    successors: Dict[int, Set[int]] = {}
    for z, y in second.pairs:
        successors.setdefault(z, set()).add(y)
    pairs = set()
    for x, z in first.pairs:
        for y in successors.get(z, ()):
            pairs.add((x, y))
    return Entourage(first.universe, frozenset(pairs))


def image_of_set(relation: Entourage, subset: PointSet) -> PointSet:
    """E[K] = {x' : existe x en K con (x',x) en E}."""
    ensure_same_universe(relation, subset)
    targets = subset.members
    return PointSet(
        subset.universe,
        frozenset(source for source, x in relation.pairs if x in targets),
    )


def reflexive_symmetric_interior(relation: Entourage) -> Entourage:
    """Pares (x,y) con (x,x),(y,y),(x,y),(y,x) todos en E."""
    pairs = relation.pairs
    return Entourage(
        relation.universe,
        frozenset(
            (x, y) for x, y in pairs
            if (x, x) in pairs and (y, y) in pairs and (y, x) in pairs
        ),
    )
