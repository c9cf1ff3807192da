"""Acciones por isometrias sobre ventanas, mapas de orbita y chequeos de Svarc-Milnor.

Una accion puede salir de la ventana: act devuelve None y los reportes
marcan el truncamiento en lugar de afirmar finitud o infinitud.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Sequence, Set

import numpy as np
import structlog

from coarse_kit.core.families import Family, preimage_family
from coarse_kit.core.sets import GroundSet, PointMap
from coarse_kit.errors import WindowError
from coarse_kit.groups.oracles import FiniteSubset, GroupElement, GroupOracle, ZnOracle
from coarse_kit.groups.shifts import ElementWindow
from coarse_kit.metrics.ext_metric import BoxWindow, ExtMetric

logger = structlog.get_logger(__name__)

ActFunction = Callable[[GroupElement, int], Optional[int]]


@dataclass(frozen=True)
class ActionOracle:
    group: GroupOracle
    space: ExtMetric
    act: ActFunction
    name: str = "custom"

    def __call__(self, g: GroupElement, x: int) -> Optional[int]:
        return self.act(g, x)


def translation_action(window: BoxWindow) -> ActionOracle:
    """Z^k actuando por traslacion sobre una ventana de Z^k con metrica l1."""
    group = ZnOracle(window.dim)
    coords = window.coordinates()

    def act(g: GroupElement, x: int) -> Optional[int]:
        moved = [int(c) + int(s) for c, s in zip(coords[x], g.payload)]
        return window.index(moved)

    return ActionOracle(group, window.grid_metric(), act, name="translation")


def trivial_action(group: GroupOracle, space: Optional[ExtMetric] = None) -> ActionOracle:
    """Todo elemento actua como la identidad (por defecto sobre un punto)."""
    if space is None:
        space = ExtMetric(GroundSet(1), np.zeros((1, 1)))
    return ActionOracle(group, space, lambda g, x: x, name="trivial")


@dataclass
class OrbitMap:
    images: Dict[GroupElement, int] = field(default_factory=dict)
    undefined: List[GroupElement] = field(default_factory=list)

    @property
    def total(self) -> bool:
        return not self.undefined


def orbit_map(action: ActionOracle, basepoint: int, elements: Sequence[GroupElement]) -> OrbitMap:
    """g -> g*x0; los g que sacan x0 de la ventana quedan en undefined."""
    result = OrbitMap()
    for g in elements:
        point = action(g, basepoint)
        if point is None:
            result.undefined.append(g)
        else:
            result.images[g] = point
    return result


def orbit_point_map(action: ActionOracle, basepoint: int, window: ElementWindow) -> PointMap:
    """Mapa de orbita como PointMap desde la ventana de elementos al espacio."""
    orbit = orbit_map(action, basepoint, window.elements)
    if not orbit.total:
        missing = ", ".join(window.oracle.encode(g) for g in orbit.undefined[:5])
        raise WindowError(f"La orbita sale de la ventana en: {missing}")
    return PointMap(
        window.universe(), action.space.universe,
        tuple(orbit.images[g] for g in window.elements),
    )


def pullback_family(mapping: PointMap, family: Family) -> Family:
    """Estructura inducida f*: {f^-1(C) : C en C}."""
    return preimage_family(mapping, family)


def orbit_points(action: ActionOracle, basepoint: int) -> Set[int]:
    """Puntos g*x0 alcanzables por generadores sin salir de la ventana."""
    letters = action.group.symmetric_generators()
    seen = {basepoint}
    queue = deque([basepoint])
    while queue:
        x = queue.popleft()
        for letter in letters:
            y = action(letter, x)
            if y is not None and y not in seen:
                seen.add(y)
                queue.append(y)
    return seen


def _orbit_ball(action: ActionOracle, basepoint: int, radius: float) -> List[int]:
    """U = B(x0, r) restringida a la orbita de x0."""
    orbit = orbit_points(action, basepoint)
    return [int(y) for y in np.flatnonzero(action.space.dist[basepoint] <= radius) if int(y) in orbit]


@dataclass
class FinitenessReport:
    finite_hits: List[GroupElement] = field(default_factory=list)
    boundary_truncated: bool = False

    def to_dict(self, oracle: GroupOracle) -> dict:
        return {
            "finite_hits": oracle.encode_all(self.finite_hits),
            "boundary_truncated": self.boundary_truncated,
        }


def svarc_milnor_finiteness_check(
    action: ActionOracle, basepoint: int, radius: float, candidates: Sequence[GroupElement]
) -> FinitenessReport:
    """Lista los g candidatos con (g*U) y U no disjuntos, U = B(x0, r) intersecada con la orbita de x0."""
    ball = _orbit_ball(action, basepoint, radius)
    members = set(ball)
    report = FinitenessReport()
    for g in candidates:
        hit = False
        for u in ball:
            moved = action(g, u)
            if moved is None:
                report.boundary_truncated = True
            elif moved in members:
                hit = True
        if hit:
            report.finite_hits.append(g)
    report.finite_hits = action.group.sorted(report.finite_hits)
    logger.debug(
        "groups.svarc_milnor_hits", hits=len(report.finite_hits),
        candidates=len(candidates), truncated=report.boundary_truncated,
    )
    return report


@dataclass
class OrbitCoverReport:
    """f^-1(B(x,r)) contenido en g_x*F_r para cada punto de orbita muestreado."""
    hits: FiniteSubset
    checked: int = 0
    failures: List[GroupElement] = field(default_factory=list)
    truncated: int = 0

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self, oracle: GroupOracle) -> dict:
        return {
            "passed": self.passed,
            "F_r": oracle.encode_all(self.hits),
            "checked": self.checked,
            "failures": oracle.encode_all(self.failures),
            "truncated": self.truncated,
        }


def svarc_milnor_cover_check(
    action: ActionOracle,
    basepoint: int,
    radius: float,
    candidates: Sequence[GroupElement],
    samples: Optional[Sequence[GroupElement]] = None,
) -> OrbitCoverReport:
    group = action.group
    hits = frozenset(svarc_milnor_finiteness_check(action, basepoint, radius, candidates).finite_hits)
    orbit = orbit_map(action, basepoint, candidates)
    candidate_set = set(candidates)
    report = OrbitCoverReport(hits=hits)
    for g_x in (samples if samples is not None else list(orbit.images)):
        x = orbit.images.get(g_x)
        if x is None:
            continue
        report.checked += 1
        inverse = group.invert(g_x)
        for g, point in orbit.images.items():
            if action.space(point, x) > radius:
                continue
            h = group.multiply(inverse, g)
            if h in hits:
                continue
            if h in candidate_set:
                report.failures.append(g_x)
                break
            report.truncated += 1
    return report


@dataclass
class OrbitRadiusReport:
    radius: float
    checked: int = 0
    violations: int = 0
    truncated: int = 0

    @property
    def passed(self) -> bool:
        return self.violations == 0

    def to_dict(self) -> dict:
        return {
            "radius": self.radius,
            "checked": self.checked,
            "violations": self.violations,
            "truncated": self.truncated,
            "passed": self.passed,
        }


def orbit_radius_check(
    action: ActionOracle, basepoint: int, subset: FiniteSubset, elements: Sequence[GroupElement]
) -> OrbitRadiusReport:
    """Las imagenes de g*F caen en B(g*x0, R) con R = max d(x0, h*x0), h en F."""
    group = action.group
    distances = []
    for h in subset:
        point = action(h, basepoint)
        if point is None:
            raise WindowError(f"{group.encode(h)} saca el punto base de la ventana")
        distances.append(action.space(basepoint, point))
    report = OrbitRadiusReport(radius=max(distances) if distances else 0.0)
    for g in elements:
        center = action(g, basepoint)
        if center is None:
            report.truncated += 1
            continue
        for h in subset:
            point = action(group.multiply(g, h), basepoint)
            if point is None:
                report.truncated += 1
                continue
            report.checked += 1
            if action.space(center, point) > report.radius:
                report.violations += 1
    return report
