"""Multiplicidad, B-componentes y r-componentes (union-find)."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Hashable, List, Tuple

import numpy as np

from coarse_kit.core.families import Family
from coarse_kit.core.sets import PointSet, ensure_same_universe
from coarse_kit.metrics.ext_metric import ExtMetric, diameter


class UnionFind:
    """Bosque de conjuntos disjuntos con union por rango y compresion de caminos."""

    def __init__(self):
        self._parents: Dict[Hashable, Hashable] = {}
        self._ranks: Dict[Hashable, int] = {}

    def find(self, a: Hashable) -> Hashable:
        if a not in self._parents:
            return a
        path = [a]
        root = self._parents[a]
        while root != path[-1]:
            path.append(root)
            root = self._parents.get(root, root)
        for ancestor in path:
            self._parents[ancestor] = root
        return root

    def union(self, a: Hashable, b: Hashable) -> None:
        root_a = self.find(a)
        root_b = self.find(b)
        if root_a == root_b:
            return
        rank_a = self._ranks.setdefault(root_a, 1)
        rank_b = self._ranks.setdefault(root_b, 1)
        if rank_a < rank_b:
            root_a, root_b = root_b, root_a
        self._parents[root_b] = root_a
        self._parents.setdefault(root_a, root_a)
        if rank_a == rank_b:
            self._ranks[root_a] += 1


@dataclass(frozen=True)
class ComponentPartition:
    """Clases de equivalencia de ~_B restringidas a un subconjunto, ordenadas por menor punto."""
    classes: Tuple[PointSet, ...]

    def __iter__(self):
        return iter(self.classes)

    def __len__(self) -> int:
        return len(self.classes)

    def to_lists(self) -> List[List[int]]:
        return [c.sorted() for c in self.classes]


def _collect(subset: PointSet, forest: UnionFind) -> ComponentPartition:
    groups: Dict[Hashable, set] = {}
    for x in subset.members:
        groups.setdefault(forest.find(x), set()).add(x)
    classes = sorted((PointSet(subset.universe, frozenset(g)) for g in groups.values()),
                     key=lambda c: min(c.members))
    return ComponentPartition(tuple(classes))


def multiplicity(family: Family) -> int:
    """Maximo numero de miembros (con repeticion) que contienen un mismo punto."""
    counts: Dict[int, int] = {}
    for member in family.sets:
        for x in member.members:
            counts[x] = counts.get(x, 0) + 1
    return max(counts.values(), default=0)


def b_components(family: Family, subset: PointSet) -> ComponentPartition:
    """Componentes de S bajo cadenas x_i ~ x_{i+1} en un mismo miembro, con todo x_i en S."""
    ensure_same_universe(family, subset)
    forest = UnionFind()
    inside = subset.members
    for member in family.sets:
        points = [x for x in member.members if x in inside]
        for x in points[1:]:
            forest.union(points[0], x)
    return _collect(subset, forest)


def r_components(metric: ExtMetric, subset: PointSet, radius: float) -> ComponentPartition:
    """Componentes de S con pasos de distancia <= r dentro de S."""
    ensure_same_universe(metric, subset)
    index = np.array(subset.sorted(), dtype=int)
    forest = UnionFind()
    if len(index) > 1:
        close = metric.dist[np.ix_(index, index)] <= radius
        rows, cols = np.nonzero(np.triu(close, k=1))
        for i, j in zip(rows, cols):
            forest.union(int(index[i]), int(index[j]))
    return _collect(subset, forest)


def max_component_diameter(metric: ExtMetric, subset: PointSet, radius: float) -> float:
    return max(
        (diameter(c, metric) for c in r_components(metric, subset, radius)),
        default=0.0,
    )
