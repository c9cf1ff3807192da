"""Algebra de familias: estrellas, extension trivial, refinamiento y union.

Una familia es una lista ordenada de subconjuntos (se permiten duplicados);
las comparaciones de igualdad en tests usan el conjunto de miembros.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Iterable, Iterator, List, Sequence, Tuple

from coarse_kit.core.sets import GroundSet, PointMap, PointSet, ensure_same_universe
from coarse_kit.errors import UniverseMismatchError


@dataclass(frozen=True)
class Family:
    """Coleccion finita de PointSets sobre un mismo universo."""
    universe: GroundSet
    sets: Tuple[PointSet, ...] = field(default_factory=tuple)

    def __post_init__(self):
        sets = tuple(self.sets)
        object.__setattr__(self, "sets", sets)
        for member in sets:
            if member.universe != self.universe:
                raise ValueError("Todos los miembros deben compartir el universo")

    @classmethod
    def of(cls, universe: GroundSet, blocks: Iterable[Iterable[int]]) -> "Family":
        return cls(universe, tuple(PointSet(universe, frozenset(b)) for b in blocks))

    @classmethod
    def empty(cls, universe: GroundSet) -> "Family":
        return cls(universe, ())

    @classmethod
    def singletons(cls, universe: GroundSet) -> "Family":
        return cls(universe, tuple(universe.singleton(x) for x in universe.points()))

    def __iter__(self) -> Iterator[PointSet]:
        return iter(self.sets)

    def __len__(self) -> int:
        return len(self.sets)

    def __getitem__(self, i: int) -> PointSet:
        return self.sets[i]

    def support(self) -> PointSet:
        members = set()
        for member in self.sets:
            members.update(member.members)
        return PointSet(self.universe, frozenset(members))

    def member_keys(self) -> frozenset:
        """Vista de conjunto de miembros, insensible al orden y a duplicados."""
        return frozenset(member.members for member in self.sets)

    def to_lists(self) -> List[List[int]]:
        return [member.sorted() for member in self.sets]

    def __repr__(self) -> str:
        return "[" + ", ".join(repr(m) for m in self.sets) + "]"


def star(subset: PointSet, family: Family) -> PointSet:
    """St(B,U): union de los miembros de U que intersectan B.

    B no se incluye automaticamente; solo aparece si algun miembro lo cubre.
    """
    ensure_same_universe(subset, family)
    members = set()
    for member in family.sets:
        if member.meets(subset):
            members.update(member.members)
    return PointSet(subset.universe, frozenset(members))


def star_family(first: Family, second: Family) -> Family:
    """St(B1,B2) = {St(B,B2) : B en B1}, en el orden de B1."""
    universe = ensure_same_universe(first, second)
    containing: Dict[int, List[int]] = {}
    for j, member in enumerate(second.sets):
        for x in member.members:
            containing.setdefault(x, []).append(j)
    stars = []
    for member in first.sets:
        hit = set()
        for x in member.members:
            hit.update(containing.get(x, ()))
        points = set()
        for j in hit:
            points.update(second.sets[j].members)
        stars.append(PointSet(universe, frozenset(points)))
    return Family(universe, tuple(stars))


def trivial_extension(family: Family) -> Family:
    """e(B): la familia con todos los singletons del universo agregados."""
    universe = family.universe
    return Family(universe, family.sets + tuple(universe.singleton(x) for x in universe.points()))


def contained_in_some(member: PointSet, family: Family) -> bool:
    return any(member.members <= other.members for other in family.sets)


def refines(first: Family, second: Family) -> bool:
    """True si cada miembro de first esta contenido en algun miembro de second.

    Los miembros vacios no cuentan; una familia vacia refina cualquier familia.
    """
    ensure_same_universe(first, second)
    return all(contained_in_some(m, second) for m in first.sets if m.members)


def refines_mod_singletons(second: Family, first: Family) -> bool:
    """Refinamiento modulo singletons: todo miembro de B2 con >=2 puntos cabe en algun miembro de B1."""
    ensure_same_universe(first, second)
    return all(contained_in_some(m, first) for m in second.sets if len(m) >= 2)


def union_families(first: Family, second: Family) -> Family:
    ensure_same_universe(first, second)
    return Family(first.universe, first.sets + second.sets)


def discrete_generators(subset: PointSet) -> Family:
    """Generador de la estructura discreta: el bloque unico {K}."""
    return Family(subset.universe, (subset,))


def image_family(mapping: PointMap, family: Family) -> Family:
    """f(B) = {f(B) : B en B}, sobre el codominio del mapa."""
    if family.universe != mapping.domain:
        raise UniverseMismatchError("La familia no vive en el dominio del mapa")
    return Family(mapping.codomain, tuple(mapping.image(member) for member in family.sets))


def preimage_family(mapping: PointMap, family: Family) -> Family:
    """f^-1(C) = {f^-1(C) : C en C}, sobre el dominio del mapa."""
    if family.universe != mapping.codomain:
        raise UniverseMismatchError("La familia no vive en el codominio del mapa")
    return Family(mapping.domain, tuple(mapping.preimage(member) for member in family.sets))


def is_cover(family: Family) -> bool:
    return len(family.support()) == family.universe.size


def canonical(family: Family) -> Family:
    """Miembros sin duplicados, ordenados por (tamano, indices)."""
    unique = sorted(family.member_keys(), key=lambda m: (len(m), sorted(m)))
    return Family(family.universe, tuple(PointSet(family.universe, m) for m in unique))


def same_members(first: Family, second: Family) -> bool:
    ensure_same_universe(first, second)
    return first.member_keys() == second.member_keys()


@dataclass
class AxiomReport:
    """Resultado de revisar cierre por uniones y estrellas sobre una lista finita de familias."""
    checked_pairs: int = 0
    failing_pairs: List[Tuple[int, int]] = field(default_factory=list)

    @property
    def closed(self) -> bool:
        return not self.failing_pairs

    def to_dict(self) -> dict:
        return {
            "checked_pairs": self.checked_pairs,
            "closed": self.closed,
            "failing_pairs": [list(p) for p in self.failing_pairs],
        }


def lss_axiom_report(families: Sequence[Family]) -> AxiomReport:
    """Para cada par (i,j) verifica que St(e(B_i),e(B_j)) refine-mod-singletons alguna familia listada."""
    if families:
        ensure_same_universe(*families)
    report = AxiomReport()
    extended = [trivial_extension(f) for f in families]
    for i, first in enumerate(extended):
        for j, second in enumerate(extended):
            report.checked_pairs += 1
            stars = star_family(first, second)
            if not any(refines_mod_singletons(stars, target) for target in families):
                report.failing_pairs.append((i, j))
    return report
