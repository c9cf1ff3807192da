"""Reportes a escala de escritorio: desigualdad tipo Hurewicz y paso cubierta -> descomposicion."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
import structlog

from coarse_kit.asdim.decompositions import Decomposition, decomposition_check
from coarse_kit.asdim.finders import (
    SearchContext,
    parts_are_bounded,
    search_decomposition,
)
from coarse_kit.core.sets import PointMap, PointSet
from coarse_kit.metrics.chains import ScaleChain, metrize
from coarse_kit.metrics.ext_metric import ExtMetric, uniformity_bound

logger = structlog.get_logger(__name__)

FIBER_FINDERS = ("trivial", "annulus", "bruteforce", "bricks")


@dataclass
class AssembledDecomposition:
    """Descomposicion de X armada con las partes de las fibras y las de Y.

    numbering "sum": color j + k (n_f + n_Y + 1 colores).
    numbering "product": color j * (n_Y + 1) + k, usado si la suma no queda acotada.
    """
    decomposition: Decomposition
    numbering: str
    verified: bool

    @property
    def n(self) -> int:
        return self.decomposition.n


@dataclass
class HurewiczEntry:
    scale: float
    bound: float
    uniform_bound: float = 0.0
    skipped: Optional[str] = None
    n_f: Optional[int] = None
    n_Y: Optional[int] = None
    n_X_direct: Optional[int] = None
    fibers: int = 0
    verified: bool = False
    assembled: Optional[AssembledDecomposition] = None

    @property
    def n_X_assembled(self) -> Optional[int]:
        if self.assembled is None or not self.assembled.verified:
            return None
        return self.assembled.n

    @property
    def n_X(self) -> Optional[int]:
        """Menor n entre los testigos verificados: busqueda directa y descomposicion armada."""
        witnesses = [n for n in (self.n_X_direct, self.n_X_assembled) if n is not None]
        return min(witnesses, default=None)

    @property
    def inequality_holds(self) -> Optional[bool]:
        if None in (self.n_f, self.n_Y, self.n_X):
            return None
        return self.n_X <= self.n_f + self.n_Y

    def to_dict(self) -> dict:
        return {
            "scale": self.scale,
            "n_f": self.n_f,
            "n_Y": self.n_Y,
            "n_X": self.n_X,
            "n_X_direct": self.n_X_direct,
            "n_X_assembled": self.n_X_assembled,
            "assembly": self.assembled.numbering if self.assembled else None,
            "inequality_holds": self.inequality_holds,
            "D_bound": self.bound,
            "uniform_bound": "inf" if math.isinf(self.uniform_bound) else self.uniform_bound,
            "fibers": self.fibers,
            "verified": self.verified,
            "skipped": self.skipped,
        }


@dataclass
class HurewiczReport:
    entries: List[HurewiczEntry] = field(default_factory=list)

    @property
    def holds(self) -> bool:
        evaluated = [e for e in self.entries if e.skipped is None]
        return bool(evaluated) and all(e.inequality_holds for e in evaluated)

    def to_dict(self) -> dict:
        return {"holds": self.holds, "scales": [e.to_dict() for e in self.entries]}


def _fibers(mapping: PointMap, target: ExtMetric, radius: float) -> Tuple[List[PointSet], List[int]]:
    """f^-1(B_Y(y,r)) sin repetidos ni vacios, y el indice de fibra de cada centro y."""
    images = np.array(mapping.images, dtype=int)
    index_of: Dict[frozenset, int] = {}
    fibers: List[PointSet] = []
    home: List[int] = []
    for y in target.universe.points():
        ball = target.dist[y] <= radius
        members = frozenset(int(x) for x in np.flatnonzero(ball[images]))
        if not members:
            home.append(-1)
            continue
        if members not in index_of:
            index_of[members] = len(fibers)
            fibers.append(PointSet(mapping.domain, members))
        home.append(index_of[members])
    return fibers, home


def _part_index(parts: Sequence[PointSet]) -> Dict[int, int]:
    return {x: index for index, part in enumerate(parts) for x in part.members}


def assemble_decomposition(
    mapping: PointMap,
    source: ExtMetric,
    fiber_parts: Sequence[Sequence[PointSet]],
    home: Sequence[int],
    y_parts: Sequence[PointSet],
    radius: float,
    bound: float,
) -> AssembledDecomposition:
    """Parte de x: j = su parte en la fibra centrada en f(x), k = la parte de f(x) en Y."""
    fiber_colors = [_part_index(parts) for parts in fiber_parts]
    y_colors = _part_index(y_parts)
    fiber_count = max((len(parts) for parts in fiber_parts), default=1)
    y_count = len(y_parts)
    labels = []
    for x in source.universe.points():
        y = mapping(x)
        labels.append((fiber_colors[home[y]][x], y_colors[y]))

    universe = source.universe
    numberings = (
        ("sum", fiber_count + y_count - 1, lambda j, k: j + k),
        ("product", fiber_count * y_count, lambda j, k: j * y_count + k),
    )
    for name, count, color in numberings:
        decomposition = Decomposition.from_colors(universe, [color(j, k) for j, k in labels], count)
        if parts_are_bounded(source, decomposition.parts, radius, bound):
            logger.debug("asdim.hurewicz_assembled", numbering=name, parts=count, scale=radius)
            return AssembledDecomposition(decomposition, name, True)
    # ninguna numeracion quedo acotada: se reporta el producto sin verificar
    return AssembledDecomposition(decomposition, "product", False)


def hurewicz_report(
    mapping: PointMap,
    source: ExtMetric,
    target: ExtMetric,
    scales: Sequence[float],
    bound_factor: float = 8.0,
    max_n: int = 2,
    source_context: Optional[SearchContext] = None,
    target_context: Optional[SearchContext] = None,
) -> HurewiczReport:
    """Para cada escala: n_f uniforme sobre fibras, n_Y, n_X armado y directo, y n_X <= n_f + n_Y."""
    source_context = source_context or SearchContext()
    target_context = target_context or SearchContext()
    report = HurewiczReport()
    for radius in scales:
        bound = bound_factor * radius
        entry = HurewiczEntry(scale=radius, bound=bound)
        report.entries.append(entry)
        entry.uniform_bound = uniformity_bound(mapping, source, target, radius)
        if math.isinf(entry.uniform_bound):
            entry.skipped = "f no es uniforme a esta escala"
            logger.info("asdim.hurewicz_skip", scale=radius)
            continue

        fibers, home = _fibers(mapping, target, radius)
        entry.fibers = len(fibers)
        fiber_parts: Optional[List[Tuple[PointSet, ...]]] = []
        for fiber in fibers:
            found = search_decomposition(source, fiber, radius, bound, FIBER_FINDERS, max_n, source_context)
            if found is None:
                fiber_parts = None
                break
            fiber_parts.append(found.parts)
        if fiber_parts is not None:
            entry.n_f = max((len(parts) - 1 for parts in fiber_parts), default=0)

        found_y = search_decomposition(
            target, target.universe.full(), radius, bound, FIBER_FINDERS, max_n, target_context,
        )
        if found_y is not None:
            entry.n_Y = found_y.n

        if fiber_parts is not None and found_y is not None:
            entry.assembled = assemble_decomposition(
                mapping, source, fiber_parts, home, found_y.parts, radius, bound,
            )

        found_x = search_decomposition(
            source, source.universe.full(), radius, bound, FIBER_FINDERS, max_n, source_context,
        )
        if found_x is not None:
            entry.n_X_direct = found_x.n
            decomposition = Decomposition(source.universe, found_x.parts)
            entry.verified = parts_are_bounded(source, decomposition.parts, radius, bound)
        logger.debug(
            "asdim.hurewicz_scale", scale=radius, n_f=entry.n_f, n_Y=entry.n_Y,
            n_X_direct=entry.n_X_direct, n_X_assembled=entry.n_X_assembled,
        )
    return report


@dataclass
class ChainDecompositionReport:
    """Descomposicion obtenida de una cadena: las B-componentes caen en miembros de B_{M+1}."""
    level: int
    scale: float
    bound: float
    target_level: int
    decomposition: Optional[Decomposition] = None
    verified: bool = False

    @property
    def n(self) -> Optional[int]:
        return None if self.decomposition is None else self.decomposition.n

    def to_dict(self) -> dict:
        return {
            "level": self.level,
            "scale": self.scale,
            "D_bound": self.bound,
            "target_level": self.target_level,
            "n": self.n,
            "parts": self.decomposition.to_lists() if self.decomposition else None,
            "verified": self.verified,
        }


def cover_to_decomposition(
    chain: ScaleChain,
    level: int = 1,
    max_n: int = 2,
    context: Optional[SearchContext] = None,
) -> ChainDecompositionReport:
    """Metriza la cadena, descompone a escala r = level y verifica contra el nivel M+1 (M = depth-1)."""
    if not 1 <= level < chain.depth:
        raise ValueError(f"El nivel debe estar en 1..{chain.depth - 1}")
    metric = metrize(chain)
    target_level = chain.depth
    bound = float(target_level - 1)
    report = ChainDecompositionReport(level, float(level), bound, target_level)
    found = search_decomposition(
        metric, chain.universe.full(), level, bound,
        ("trivial", "annulus", "bruteforce"), max_n, context,
    )
    if found is None:
        return report
    report.decomposition = Decomposition(chain.universe, found.parts)
    report.verified = decomposition_check(
        report.decomposition, chain.level(level), chain.level(target_level),
    )
    return report
