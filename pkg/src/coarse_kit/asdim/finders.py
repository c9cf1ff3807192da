"""Buscadores de descomposiciones a escala r con r-componentes acotadas.

Cada buscador recibe (metrica, subconjunto S, r, n, cota D) y devuelve n+1
partes de S cuyas r-componentes tienen diametro <= D, o None.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np
import structlog

from coarse_kit.asdim.components import UnionFind, max_component_diameter
from coarse_kit.asdim.decompositions import Decomposition, brick_colors, parts_by_color
from coarse_kit.core.sets import PointSet
from coarse_kit.errors import SearchCapExceededError
from coarse_kit.metrics.ext_metric import BoxWindow, ExtMetric, finite_components

logger = structlog.get_logger(__name__)

Parts = Tuple[PointSet, ...]
DEFAULT_EXACT_CAP = 16


@dataclass(frozen=True)
class SearchContext:
    """Parametros compartidos por los buscadores."""
    exact_cap: int = DEFAULT_EXACT_CAP
    window: Optional[BoxWindow] = None


def parts_are_bounded(metric: ExtMetric, parts: Sequence[PointSet], radius: float, bound: float) -> bool:
    return all(max_component_diameter(metric, part, radius) <= bound for part in parts)


def trivial_finder(metric, subset, radius, n, bound, context) -> Optional[Parts]:
    """Una sola parte: S entero."""
    if n != 0:
        return None
    return (subset,) if parts_are_bounded(metric, (subset,), radius, bound) else None


def annulus_finder(metric, subset, radius, n, bound, context) -> Optional[Parts]:
    """Bandas de ancho 2r segun la distancia a un punto base por componente finita; color = banda mod (n+1)."""
    if n < 1:
        return None
    width = 2 * radius
    colors: Dict[int, int] = {}
    dist = metric.dist
    for component in finite_components(metric):
        points = sorted(component.members & subset.members)
        if not points:
            continue
        base = points[0]
        for x in points:
            colors[x] = int(math.floor(dist[base, x] / width)) % (n + 1)
    parts = parts_by_color(subset, colors, n + 1)
    return parts if parts_are_bounded(metric, parts, radius, bound) else None


def brick_finder(metric, subset, radius, n, bound, context) -> Optional[Parts]:
    """Ladrillos de una ventana Z^k (k = n), restringidos a S."""
    window = context.window
    if window is None or window.dim != n or n not in (1, 2) or window.size != metric.size:
        return None
    colors = brick_colors(window, radius)
    parts = parts_by_color(subset, {x: int(colors[x]) for x in subset.members}, n + 1)
    return parts if parts_are_bounded(metric, parts, radius, bound) else None


def _partial_ok(metric: ExtMetric, assigned: List[int], colors: List[int], color: int,
                radius: float, bound: float) -> bool:
    """Cota de diametro para la componente parcial del ultimo punto asignado."""
    same = [p for p, c in zip(assigned, colors) if c == color]
    forest = UnionFind()
    dist = metric.dist
    for i, p in enumerate(same):
        for q in same[:i]:
            if dist[p, q] <= radius:
                forest.union(p, q)
    root = forest.find(same[-1])
    members = [p for p in same if forest.find(p) == root]
    index = np.array(members, dtype=int)
    return float(dist[np.ix_(index, index)].max()) <= bound


def bruteforce_finder(metric, subset, radius, n, bound, context) -> Optional[Parts]:
    """Busqueda exhaustiva de (n+1)-coloraciones con poda por componentes parciales."""
    points = subset.sorted()
    if len(points) > context.exact_cap:
        raise SearchCapExceededError(
            f"{len(points)} puntos superan el limite exacto de {context.exact_cap}; "
            "use los buscadores annulus o bricks"
        )
    colors: List[int] = []

    def extend(position: int) -> bool:
        if position == len(points):
            return True
        # simetria: el color nuevo de mayor indice es a lo sumo max(usados)+1
        limit = min(n, max(colors, default=-1) + 1)
        for color in range(limit + 1):
            colors.append(color)
            if _partial_ok(metric, points[:position + 1], colors, color, radius, bound) and extend(position + 1):
                return True
            colors.pop()
        return False

    if not extend(0):
        return None
    return parts_by_color(subset, dict(zip(points, colors)), n + 1)


FINDERS: Dict[str, Callable] = {
    "trivial": trivial_finder,
    "annulus": annulus_finder,
    "bruteforce": bruteforce_finder,
    "bricks": brick_finder,
}


def find_decomposition_bruteforce(
    metric: ExtMetric, radius: float, n: int, bound: float, exact_cap: int = DEFAULT_EXACT_CAP
) -> Optional[Decomposition]:
    """Descomposicion exacta de X en n+1 partes con r-componentes de diametro <= D, o None."""
    universe = metric.universe
    parts = bruteforce_finder(metric, universe.full(), radius, n, bound, SearchContext(exact_cap=exact_cap))
    return None if parts is None else Decomposition(universe, parts)


@dataclass(frozen=True)
class SearchResult:
    n: int
    parts: Parts
    finder: str


def search_decomposition(
    metric: ExtMetric,
    subset: PointSet,
    radius: float,
    bound: float,
    finders: Sequence[str] = ("trivial", "annulus", "bruteforce", "bricks"),
    max_n: int = 2,
    context: Optional[SearchContext] = None,
) -> Optional[SearchResult]:
    """Menor n (hasta max_n) para el que algun buscador produce partes acotadas."""
    context = context or SearchContext()
    for n in range(max_n + 1):
        for name in finders:
            if name == "bruteforce" and len(subset) > context.exact_cap:
                continue
            parts = FINDERS[name](metric, subset, radius, n, bound, context)
            if parts is not None:
                logger.debug("asdim.search_found", n=n, finder=name, scale=radius, points=len(subset))
                return SearchResult(n, parts, name)
    logger.debug("asdim.search_exhausted", max_n=max_n, scale=radius, points=len(subset))
    return None
