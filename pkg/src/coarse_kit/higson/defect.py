"""Calculo de epsilon-variacion (defecto de Higson) sobre ventanas finitas.

La propiedad de Higson es asintotica: en una ventana solo se mide el defecto
fuera de truncaciones acotadas cada vez mayores. Un resultado None de
minimal_truncation significa "no concluyente en la ventana", nunca "no Higson".
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np
import structlog

from coarse_kit.core.families import Family, star, star_family
from coarse_kit.core.sets import GroundSet, PointSet, ensure_same_universe
from coarse_kit.metrics.ext_metric import ExtMetric, ball

logger = structlog.get_logger(__name__)


@dataclass(frozen=True, eq=False)
class RealFunction:
    """f: X -> R total y acotada, un valor por punto del universo."""
    universe: GroundSet
    values: np.ndarray

    def __post_init__(self):
        values = np.array(self.values, dtype=float).reshape(-1)
        if values.shape[0] != self.universe.size:
            raise ValueError(
                f"Se esperaban {self.universe.size} valores, llegaron {values.shape[0]}"
            )
        if not np.all(np.isfinite(values)):
            raise ValueError("La funcion debe ser acotada (valores finitos)")
        values.setflags(write=False)
        object.__setattr__(self, "values", values)

    def __call__(self, x: int) -> float:
        return float(self.values[x])

    def oscillation(self, subset: PointSet) -> float:
        """max - min de f sobre el conjunto; 0 con a lo sumo un punto."""
        if len(subset) < 2:
            return 0.0
        taken = self.values[np.fromiter(subset.members, dtype=int)]
        return float(taken.max() - taken.min())

    def to_list(self) -> List[float]:
        return self.values.tolist()


def named_function(name: str, universe: GroundSet, **params) -> RealFunction:
    """Funciones incorporadas evaluadas en el indice del punto.

    linear: slope*x + offset; log1p: scale*log(1+x); sin: amplitude*sin(frequency*x).
    """
    x = np.arange(universe.size, dtype=float)
    if name == "linear":
        values = params.get("slope", 1.0) * x + params.get("offset", 0.0)
    elif name == "log1p":
        values = params.get("scale", 1.0) * np.log1p(x)
    elif name == "sin":
        values = params.get("amplitude", 1.0) * np.sin(params.get("frequency", 1.0) * x)
    else:
        raise ValueError(f"Funcion desconocida: {name} (use linear, log1p o sin)")
    return RealFunction(universe, values)


def higson_defect(function: RealFunction, family: Family, truncation: PointSet) -> float:
    """max sobre B de la oscilacion de f en B menos U."""
    ensure_same_universe(function, family, truncation)
    worst = 0.0
    for member in family:
        worst = max(worst, function.oscillation(member - truncation))
    return worst


@dataclass(frozen=True)
class Exhaustion:
    """Etapas U_1 contenido en U_2 contenido en ... sobre un mismo universo."""
    universe: GroundSet
    stages: Tuple[PointSet, ...]

    def __post_init__(self):
        stages = tuple(self.stages)
        object.__setattr__(self, "stages", stages)
        for stage in stages:
            if stage.universe != self.universe:
                raise ValueError("Todas las etapas deben compartir el universo")
        for previous, current in zip(stages, stages[1:]):
            if not previous <= current:
                raise ValueError("Las etapas deben crecer por inclusion")

    def __len__(self) -> int:
        return len(self.stages)

    def to_lists(self) -> List[List[int]]:
        return [stage.sorted() for stage in self.stages]


def prefix_exhaustion(universe: GroundSet, step: int, include_full: bool = True) -> Exhaustion:
    """Prefijos {0..k*step-1}; la ventana completa solo si include_full."""
    if step < 1:
        raise ValueError("El paso debe ser positivo")
    stages = [universe.subset(range(end)) for end in range(step, universe.size, step)]
    if include_full:
        stages.append(universe.full())
    return Exhaustion(universe, tuple(stages))


def ball_exhaustion(metric: ExtMetric, basepoint: int, radii: Sequence[float]) -> Exhaustion:
    """Bolas cerradas B(x0, r) con radios crecientes."""
    ordered = sorted(radii)
    stages = tuple(ball(metric, basepoint, r) for r in ordered)
    return Exhaustion(metric.universe, stages)


def block_family(universe: GroundSet, size: int) -> Family:
    """Bloques consecutivos {k*size, ..., (k+1)*size-1}; el ultimo puede ser mas corto."""
    if size < 1:
        raise ValueError("El tamano de bloque debe ser positivo")
    return Family.of(
        universe,
        [range(start, min(start + size, universe.size)) for start in range(0, universe.size, size)],
    )


def defect_profile(function: RealFunction, family: Family, exhaustion: Exhaustion) -> List[float]:
    return [higson_defect(function, family, stage) for stage in exhaustion.stages]


def minimal_truncation(
    function: RealFunction, family: Family, eps: float, exhaustion: Exhaustion
) -> Optional[int]:
    """Menor indice (base 0) de etapa con defecto < eps, o None en la ventana.

    El defecto no crece con la etapa, asi que basta una busqueda binaria.
    """
    if eps <= 0:
        raise ValueError("eps debe ser positivo")
    ensure_same_universe(function, family, exhaustion)
    low, high = 0, len(exhaustion)
    while low < high:
        middle = (low + high) // 2
        if higson_defect(function, family, exhaustion.stages[middle]) < eps:
            high = middle
        else:
            low = middle + 1
    if low == len(exhaustion):
        logger.debug("higson.truncation_inconclusive", eps=eps, stages=len(exhaustion))
        return None
    return low


@dataclass
class StarDefectReport:
    """Cota 3eps/4 para St(B1,B2) fuera de L = St(St(K,B1),B2) u K."""
    eps: float
    first_defect: float
    second_defect: float
    star_defect: float
    truncation: PointSet

    @property
    def bound(self) -> float:
        return 0.75 * self.eps

    @property
    def hypotheses_hold(self) -> bool:
        quarter = self.eps / 4
        return self.first_defect < quarter and self.second_defect < quarter

    @property
    def holds(self) -> bool:
        return not self.hypotheses_hold or self.star_defect < self.bound

    def to_dict(self) -> dict:
        return {
            "eps": self.eps,
            "first_defect": self.first_defect,
            "second_defect": self.second_defect,
            "hypotheses_hold": self.hypotheses_hold,
            "star_defect": self.star_defect,
            "bound": self.bound,
            "holds": self.holds,
            "truncation": self.truncation.sorted(),
        }


def star_defect_check(
    function: RealFunction, first: Family, second: Family, subset: PointSet, eps: float
) -> StarDefectReport:
    ensure_same_universe(function, first, second, subset)
    truncation = star(star(subset, first), second) | subset
    return StarDefectReport(
        eps=eps,
        first_defect=higson_defect(function, first, subset),
        second_defect=higson_defect(function, second, subset),
        star_defect=higson_defect(function, star_family(first, second), truncation),
        truncation=truncation,
    )
