"""Generadores de casos para la bateria de leyes.

Modo aleatorio: el tamano de cada miembro se sortea uniforme en el rango y
sus puntos se eligen sin reemplazo (random.Random, reproducible por semilla).
Modo exhaustivo: todas las familias de miembros distintos no vacios dentro de
los topes de tamano, y todos los subconjuntos K del universo.
"""
from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass, replace
from typing import Iterator, List, Optional, Tuple

from coarse_kit.core.families import Family
from coarse_kit.core.sets import GroundSet, PointSet
from coarse_kit.entourages.conversion import delta_of_family
from coarse_kit.entourages.relation import Entourage, compose
from coarse_kit.metrics.ext_metric import ExtMetric, path_metric

MAX_RANDOM_UNIVERSE = 12
MAX_EXHAUSTIVE_UNIVERSE = 5
MAX_EXHAUSTIVE_MEMBERS = 3
MAX_EXHAUSTIVE_MEMBER_SIZE = 3


@dataclass(frozen=True)
class CaseSpec:
    """Parametros de generacion; los rangos son cerrados (lo, hi)."""
    seed: int = 1
    mode: str = "random"
    universe_size: Tuple[int, int] = (2, 10)
    family_count: Tuple[int, int] = (0, 3)
    member_size: Tuple[int, int] = (1, 3)
    trials: int = 500
    max_cases: int = 20000

    def __post_init__(self):
        for name in ("universe_size", "family_count", "member_size"):
            lo, hi = getattr(self, name)
            object.__setattr__(self, name, (int(lo), int(hi)))
            if lo > hi or lo < 0:
                raise ValueError(f"Rango invalido para {name}: ({lo}, {hi})")
        if self.mode not in ("random", "exhaustive"):
            raise ValueError(f"Modo desconocido: {self.mode}")
        lo, hi = self.universe_size
        if lo < 1:
            raise ValueError("El universo necesita al menos un punto")
        if self.member_size[0] < 1:
            raise ValueError("Los miembros generados no son vacios")
        if self.mode == "random":
            if hi > MAX_RANDOM_UNIVERSE:
                raise ValueError(f"Universo aleatorio limitado a {MAX_RANDOM_UNIVERSE} puntos")
            if self.trials < 0:
                raise ValueError("trials debe ser >= 0")
        else:
            if hi > MAX_EXHAUSTIVE_UNIVERSE:
                raise ValueError(f"Universo exhaustivo limitado a {MAX_EXHAUSTIVE_UNIVERSE} puntos")
            if self.family_count[1] > MAX_EXHAUSTIVE_MEMBERS:
                raise ValueError(f"Familias exhaustivas limitadas a {MAX_EXHAUSTIVE_MEMBERS} miembros")
            if self.member_size[1] > MAX_EXHAUSTIVE_MEMBER_SIZE:
                raise ValueError(
                    f"Miembros exhaustivos limitados a {MAX_EXHAUSTIVE_MEMBER_SIZE} puntos"
                )

    @classmethod
    def from_dict(cls, data: dict) -> "CaseSpec":
        known = {k: v for k, v in data.items() if k in cls.__dataclass_fields__}
        for name in ("universe_size", "family_count", "member_size"):
            if name in known:
                value = known[name]
                known[name] = (value, value) if isinstance(value, int) else tuple(value)
        return cls(**known)

    def with_seed(self, seed: int) -> "CaseSpec":
        return replace(self, seed=seed)

    def to_dict(self) -> dict:
        return {
            "seed": self.seed,
            "mode": self.mode,
            "universe_size": list(self.universe_size),
            "family_count": list(self.family_count),
            "member_size": list(self.member_size),
            "trials": self.trials,
            "max_cases": self.max_cases,
        }


@dataclass(frozen=True)
class Case:
    """Una instancia: dos familias, subconjuntos K, metrica y relaciones.

    upper_i contiene Delta(B_i) y lower_i esta contenido en Delta(B_i).
    """
    universe: GroundSet
    first: Family
    second: Family
    subsets: Tuple[PointSet, ...]
    metric: ExtMetric
    relation: Entourage
    upper: Tuple[Entourage, Entourage]
    lower: Tuple[Entourage, Entourage]

    def support_size(self) -> int:
        points = set(self.first.support().members) | set(self.second.support().members)
        for subset in self.subsets:
            points.update(subset.members)
        for relation in (self.relation, *self.upper, *self.lower):
            for x, y in relation.pairs:
                points.update((x, y))
        return len(points)

    def to_dict(self) -> dict:
        return {
            "universe_size": self.universe.size,
            "support_size": self.support_size(),
            "B1": self.first.to_lists(),
            "B2": self.second.to_lists(),
            "Ks": [subset.sorted() for subset in self.subsets],
            "metric": [[("inf" if math.isinf(v) else v) for v in row] for row in self.metric.rows()],
            "E": self.relation.to_lists(),
            "E1_upper": self.upper[0].to_lists(),
            "E2_upper": self.upper[1].to_lists(),
            "E1_lower": self.lower[0].to_lists(),
            "E2_lower": self.lower[1].to_lists(),
        }


def line_edges(size: int) -> Tuple[Tuple[int, int, float], ...]:
    return tuple((x, x + 1, 1.0) for x in range(size - 1))


def random_family(rng: random.Random, universe: GroundSet, spec: CaseSpec) -> Family:
    count = rng.randint(*spec.family_count)
    lo, hi = spec.member_size
    blocks = []
    for _ in range(count):
        size = rng.randint(min(lo, universe.size), min(hi, universe.size))
        blocks.append(rng.sample(range(universe.size), size))
    return Family.of(universe, blocks)


def random_subset(rng: random.Random, universe: GroundSet) -> PointSet:
    return universe.subset(rng.sample(range(universe.size), rng.randint(0, universe.size)))


def random_relation(rng: random.Random, universe: GroundSet, density: float = 0.3) -> Entourage:
    points = universe.points()
    return Entourage.of(universe, ((x, y) for x in points for y in points if rng.random() < density))


def random_line_edges(rng: random.Random, size: int, gap: float = 0.2) -> Tuple[Tuple[int, int, float], ...]:
    """Camino 0-1-...-n-1 con pesos enteros 1..3; cada arista falta con probabilidad gap."""
    return tuple(
        (x, x + 1, float(rng.randint(1, 3)))
        for x in range(size - 1)
        if rng.random() >= gap
    )


def _thin(rng: random.Random, relation: Entourage, keep: float = 0.7) -> Entourage:
    return Entourage(relation.universe, frozenset(p for p in sorted(relation.pairs) if rng.random() < keep))


def random_case(rng: random.Random, spec: CaseSpec) -> Case:
    universe = GroundSet(rng.randint(*spec.universe_size))
    first = random_family(rng, universe, spec)
    second = random_family(rng, universe, spec)
    edges = random_line_edges(rng, universe.size)
    deltas = (delta_of_family(first), delta_of_family(second))
    return Case(
        universe=universe,
        first=first,
        second=second,
        subsets=(random_subset(rng, universe),),
        metric=path_metric(universe.size, edges),
        relation=random_relation(rng, universe),
        upper=tuple(d | random_relation(rng, universe, 0.1) for d in deltas),
        lower=tuple(_thin(rng, d) for d in deltas),
    )


def random_cases(spec: CaseSpec, law_id: str) -> Iterator[Case]:
    """Casos reproducibles: la semilla del generador es '{seed}:{law_id}'."""
    rng = random.Random(f"{spec.seed}:{law_id}")
    for _ in range(spec.trials):
        yield random_case(rng, spec)


def all_families(universe: GroundSet, spec: CaseSpec) -> List[Family]:
    lo, hi = spec.member_size
    blocks = [
        combo
        for size in range(lo, min(hi, universe.size) + 1)
        for combo in itertools.combinations(range(universe.size), size)
    ]
    families = []
    low_count, high_count = spec.family_count
    for count in range(low_count, high_count + 1):
        for chosen in itertools.combinations(blocks, count):
            families.append(Family.of(universe, chosen))
    return families


def all_subsets(universe: GroundSet) -> Tuple[PointSet, ...]:
    points = range(universe.size)
    return tuple(
        universe.subset(combo)
        for size in range(universe.size + 1)
        for combo in itertools.combinations(points, size)
    )


def exhaustive_case_count(spec: CaseSpec, arity: int) -> int:
    total = 0
    for size in range(spec.universe_size[0], spec.universe_size[1] + 1):
        total += len(all_families(GroundSet(size), spec)) ** arity
    return total


def _exhaustive_case(universe: GroundSet, first: Family, second: Family,
                     subsets: Tuple[PointSet, ...], metric: ExtMetric) -> Case:
    deltas = (delta_of_family(first), delta_of_family(second))
    return Case(
        universe=universe,
        first=first,
        second=second,
        subsets=subsets,
        metric=metric,
        relation=compose(deltas[0], deltas[1]) if second.sets else _upper_triangle(deltas[0]),
        upper=deltas,
        lower=deltas,
    )


def _upper_triangle(relation: Entourage) -> Entourage:
    return Entourage(relation.universe, frozenset((x, y) for x, y in relation.pairs if x <= y))


def exhaustive_cases(spec: CaseSpec, arity: int) -> Iterator[Case]:
    """Todas las familias (arity 1) o pares de familias (arity 2), con todos los K y la metrica de linea."""
    count = exhaustive_case_count(spec, arity)
    if count > spec.max_cases:
        raise ValueError(
            f"{count} casos exhaustivos superan max_cases={spec.max_cases}; reduzca los rangos"
        )
    for size in range(spec.universe_size[0], spec.universe_size[1] + 1):
        universe = GroundSet(size)
        metric = path_metric(size, line_edges(size))
        subsets = all_subsets(universe)
        families = all_families(universe, spec)
        empty = Family.empty(universe)
        if arity == 1:
            for first in families:
                yield _exhaustive_case(universe, first, empty, subsets, metric)
        else:
            for first, second in itertools.product(families, repeat=2):
                yield _exhaustive_case(universe, first, second, subsets, metric)


def cases_for(spec: CaseSpec, law_id: str, arity: int) -> Iterator[Case]:
    if spec.mode == "exhaustive":
        return exhaustive_cases(spec, arity)
    return random_cases(spec, law_id)


def restrict_case(case: Case, keep: Optional[List[int]] = None) -> Case:
    """Reindexa el caso sobre su soporte (o sobre keep) conservando orden.

    La metrica se restringe como submatriz, lo cual sigue siendo una infinito-metrica.
    """
    if keep is None:
        points = set(case.first.support().members) | set(case.second.support().members)
        for subset in case.subsets:
            points.update(subset.members)
        for relation in (case.relation, *case.upper, *case.lower):
            for x, y in relation.pairs:
                points.update((x, y))
        keep = sorted(points)
    position = {x: i for i, x in enumerate(keep)}
    universe = GroundSet(len(keep))

    def family(f: Family) -> Family:
        return Family.of(universe, ([position[x] for x in m.members if x in position] for m in f.sets))

    def relation(e: Entourage) -> Entourage:
        return Entourage.of(
            universe,
            ((position[x], position[y]) for x, y in e.pairs if x in position and y in position),
        )

    sub = case.metric.dist[keep][:, keep]
    return Case(
        universe=universe,
        first=family(case.first),
        second=family(case.second),
        subsets=tuple(universe.subset(position[x] for x in s.members if x in position) for s in case.subsets),
        metric=ExtMetric(universe, sub, check_triangle=False),
        relation=relation(case.relation),
        upper=(relation(case.upper[0]), relation(case.upper[1])),
        lower=(relation(case.lower[0]), relation(case.lower[1])),
    )
