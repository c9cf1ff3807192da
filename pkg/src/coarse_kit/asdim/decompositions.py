"""Descomposiciones X_0 u ... u X_n, su verificacion y las transformaciones cubierta <-> descomposicion."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Dict, List, Sequence, Tuple

import numpy as np

from coarse_kit.asdim.components import b_components
from coarse_kit.core.families import (
    Family,
    contained_in_some,
    star,
    star_family,
    trivial_extension,
)
from coarse_kit.core.sets import GroundSet, PointSet, ensure_same_universe
from coarse_kit.errors import UnsupportedDimensionError
from coarse_kit.metrics.ext_metric import BoxWindow


@dataclass(frozen=True)
class Decomposition:
    """Particion del universo en partes disjuntas (algunas pueden ser vacias)."""
    universe: GroundSet
    parts: Tuple[PointSet, ...]

    def __post_init__(self):
        parts = tuple(self.parts)
        object.__setattr__(self, "parts", parts)
        seen: set = set()
        for part in parts:
            if part.universe != self.universe:
                raise ValueError("Todas las partes deben compartir el universo")
            if not seen.isdisjoint(part.members):
                raise ValueError("Las partes deben ser disjuntas")
            seen.update(part.members)
        if len(seen) != self.universe.size:
            raise ValueError("Las partes deben cubrir el universo")

    @classmethod
    def from_colors(cls, universe: GroundSet, colors: Sequence[int], count: int) -> "Decomposition":
        buckets: List[set] = [set() for _ in range(count)]
        for x, color in enumerate(colors):
            buckets[color].add(x)
        return cls(universe, tuple(PointSet(universe, frozenset(b)) for b in buckets))

    @property
    def n(self) -> int:
        return len(self.parts) - 1

    def to_lists(self) -> List[List[int]]:
        return [p.sorted() for p in self.parts]


def decomposition_check(decomposition: Decomposition, family: Family, bound: Family) -> bool:
    """Cada B-componente de cada parte cabe en algun miembro de C."""
    ensure_same_universe(decomposition, family, bound)
    for part in decomposition.parts:
        for component in b_components(family, part):
            if not contained_in_some(component, bound):
                return False
    return True


def _second_scale(family: Family) -> Family:
    extended = trivial_extension(family)
    return star_family(extended, extended)


def components_to_cover(decomposition: Decomposition, family: Family) -> Family:
    """{St(C,B1) u C : C una B2-componente de alguna parte}, B2 = St(e(B1),e(B1))."""
    ensure_same_universe(decomposition, family)
    chained = _second_scale(family)
    members = []
    for part in decomposition.parts:
        for component in b_components(chained, part):
            members.append(star(component, family) | component)
    return Family(decomposition.universe, tuple(members))


@dataclass
class StarDisjointnessReport:
    """Pares de B2-componentes de una misma parte cuyas B1-estrellas se cortan."""
    checked_pairs: int = 0
    overlaps: List[Tuple[int, List[int], List[int]]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.overlaps

    def to_dict(self) -> dict:
        return {
            "checked_pairs": self.checked_pairs,
            "passed": self.passed,
            "overlaps": [
                {"part": part, "first": first, "second": second}
                for part, first, second in self.overlaps
            ],
        }


def star_disjointness_check(decomposition: Decomposition, family: Family) -> StarDisjointnessReport:
    ensure_same_universe(decomposition, family)
    chained = _second_scale(family)
    report = StarDisjointnessReport()
    for index, part in enumerate(decomposition.parts):
        components = list(b_components(chained, part))
        stars = [star(c, family) for c in components]
        for i in range(len(components)):
            for j in range(i + 1, len(components)):
                report.checked_pairs += 1
                if stars[i].meets(stars[j]):
                    report.overlaps.append((index, components[i].sorted(), components[j].sorted()))
    return report


def brick_side(radius: float) -> int:
    return max(1, math.ceil(4 * radius))


def brick_colors(window: BoxWindow, radius: float) -> np.ndarray:
    """Color de cada punto: bloques alternos en Z, ladrillos desfasados en tres colores en Z^2."""
    side = brick_side(radius)
    coords = window.coordinates()
    if window.dim == 1:
        return (coords[:, 0] // side) % 2
    if window.dim == 2:
        rows = coords[:, 0] // side
        shifted = coords[:, 1] + (rows % 2) * (side // 2)
        bricks = shifted // side
        return (bricks + rows % 2) % 3
    raise UnsupportedDimensionError(f"Solo se soportan dimensiones 1 y 2, no {window.dim}")


def brick_decomposition(dim: int, window: BoxWindow, radius: float) -> Decomposition:
    """dim+1 partes de ladrillos de lado ~4r; ladrillos del mismo color quedan a distancia > r."""
    if dim not in (1, 2):
        raise UnsupportedDimensionError(f"Solo se soportan dimensiones 1 y 2, no {dim}")
    if window.dim != dim:
        raise ValueError(f"La ventana tiene dimension {window.dim}, se pidio {dim}")
    colors = brick_colors(window, radius)
    return Decomposition.from_colors(window.ground_set(), [int(c) for c in colors], dim + 1)


def parts_by_color(subset: PointSet, colors: Dict[int, int], count: int) -> Tuple[PointSet, ...]:
    buckets: List[set] = [set() for _ in range(count)]
    for x in subset.members:
        buckets[colors[x]].add(x)
    return tuple(PointSet(subset.universe, frozenset(b)) for b in buckets)
