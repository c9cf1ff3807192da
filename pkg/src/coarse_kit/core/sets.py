"""Conjunto base finito, subconjuntos y mapas entre conjuntos base.

Todos los valores son inmutables: los subconjuntos quedan anclados a su
conjunto base al construirse y nunca se re-indexan implicitamente.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional, Sequence, Tuple

from coarse_kit.errors import UniverseMismatchError


@dataclass(frozen=True)
class GroundSet:
    """Universo finito indexado 0..size-1, con etiquetas opcionales."""
    size: int
    labels: Optional[Tuple[str, ...]] = None

    def __post_init__(self):
        if self.size < 0:
            raise ValueError(f"Tamano invalido: {self.size}")
        if self.labels is not None:
            labels = tuple(self.labels)
            object.__setattr__(self, "labels", labels)
            if len(labels) != self.size:
                raise ValueError(
                    f"Se esperaban {self.size} etiquetas, llegaron {len(labels)}"
                )
            if len(set(labels)) != len(labels):
                raise ValueError("Las etiquetas deben ser distintas")

    def points(self) -> range:
        return range(self.size)

    def label(self, x: int) -> str:
        return self.labels[x] if self.labels is not None else str(x)

    def index_of(self, label: str) -> int:
        """Indice de una etiqueta (o del entero en texto si no hay etiquetas)."""
        if self.labels is None:
            return int(label)
        return self.labels.index(label)

    def full(self) -> "PointSet":
        return PointSet(self, frozenset(range(self.size)))

    def empty(self) -> "PointSet":
        return PointSet(self, frozenset())

    def subset(self, members: Iterable[int]) -> "PointSet":
        return PointSet(self, frozenset(members))

    def singleton(self, x: int) -> "PointSet":
        return PointSet(self, frozenset((x,)))


def ensure_same_universe(*objects) -> GroundSet:
    """Verifica que todos los objetos comparten universo y lo retorna."""
    universe = None
    for obj in objects:
        current = obj.universe
        if universe is None:
            universe = current
        elif current != universe:
            raise UniverseMismatchError(
                f"Universos distintos: size={universe.size} vs size={current.size}"
            )
    return universe


@dataclass(frozen=True)
class PointSet:
    """Subconjunto de un GroundSet (semantica de bitset sobre indices)."""
    universe: GroundSet
    members: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        members = frozenset(self.members)
        object.__setattr__(self, "members", members)
        size = self.universe.size
        for x in members:
            if not 0 <= x < size:
                raise ValueError(f"Indice {x} fuera del universo de tamano {size}")

    def __iter__(self) -> Iterator[int]:
        return iter(sorted(self.members))

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, x: int) -> bool:
        return x in self.members

    def __bool__(self) -> bool:
        return bool(self.members)

    def sorted(self) -> list:
        return sorted(self.members)

    def meets(self, other: "PointSet") -> bool:
        return not self.members.isdisjoint(other.members)

    def issubset(self, other: "PointSet") -> bool:
        return self.members <= other.members

    def __le__(self, other: "PointSet") -> bool:
        ensure_same_universe(self, other)
        return self.members <= other.members

    def __or__(self, other: "PointSet") -> "PointSet":
        ensure_same_universe(self, other)
        return PointSet(self.universe, self.members | other.members)

    def __and__(self, other: "PointSet") -> "PointSet":
        ensure_same_universe(self, other)
        return PointSet(self.universe, self.members & other.members)

    def __sub__(self, other: "PointSet") -> "PointSet":
        ensure_same_universe(self, other)
        return PointSet(self.universe, self.members - other.members)

    def complement(self) -> "PointSet":
        return PointSet(self.universe, frozenset(range(self.universe.size)) - self.members)

    def __repr__(self) -> str:
        return "{" + ",".join(str(x) for x in self.sorted()) + "}"


@dataclass(frozen=True)
class PointMap:
    """Funcion total domain -> codomain; images[i] es la imagen del punto i."""
    domain: GroundSet
    codomain: GroundSet
    images: Tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(y) for y in self.images)
        object.__setattr__(self, "images", images)
        if len(images) != self.domain.size:
            raise ValueError(
                f"El mapa necesita {self.domain.size} imagenes, tiene {len(images)}"
            )
        for y in images:
            if not 0 <= y < self.codomain.size:
                raise ValueError(f"Imagen {y} fuera del codominio")

    @classmethod
    def identity(cls, universe: GroundSet) -> "PointMap":
        return cls(universe, universe, tuple(universe.points()))

    @classmethod
    def constant(cls, domain: GroundSet, codomain: GroundSet, value: int) -> "PointMap":
        return cls(domain, codomain, (value,) * domain.size)

    def __call__(self, x: int) -> int:
        return self.images[x]

    def image(self, subset: PointSet) -> PointSet:
        if subset.universe != self.domain:
            raise UniverseMismatchError("El subconjunto no vive en el dominio del mapa")
        return PointSet(self.codomain, frozenset(self.images[x] for x in subset.members))

    def preimage(self, subset: PointSet) -> PointSet:
        if subset.universe != self.codomain:
            raise UniverseMismatchError("El subconjunto no vive en el codominio del mapa")
        targets = subset.members
        return PointSet(
            self.domain,
            frozenset(x for x, y in enumerate(self.images) if y in targets),
        )

    def fibers(self) -> dict:
        """Fibra de cada punto del codominio alcanzado."""
        result: dict = {}
        for x, y in enumerate(self.images):
            result.setdefault(y, set()).add(x)
        return {y: PointSet(self.domain, frozenset(xs)) for y, xs in result.items()}


def as_pointsets(universe: GroundSet, blocks: Sequence[Iterable[int]]) -> Tuple[PointSet, ...]:
    return tuple(PointSet(universe, frozenset(block)) for block in blocks)
