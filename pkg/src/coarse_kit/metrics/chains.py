"""Cadenas de escalas y su metrizacion.

Una cadena B_1, B_2, ... cumple que St(B_i,B_i) refina B_{i+1} y cada nivel
cubre el universo. La metrica asociada es d(x,y) = menor i tal que algun
miembro de B_i contiene a x e y; los pares no cubiertos dentro de la
profundidad de la cadena quedan a distancia inf.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Tuple

import numpy as np
import structlog

from coarse_kit.core.families import (
    Family,
    is_cover,
    refines,
    same_members,
    star_family,
    trivial_extension,
)
from coarse_kit.core.sets import GroundSet
from coarse_kit.errors import ChainInvariantError
from coarse_kit.metrics.ext_metric import INF, ExtMetric, ball_family, triangle_violations

logger = structlog.get_logger(__name__)


@dataclass(frozen=True)
class ScaleChain:
    """Niveles indexados desde 1 (levels[0] es B_1)."""
    universe: GroundSet
    levels: Tuple[Family, ...]

    def __post_init__(self):
        levels = tuple(self.levels)
        object.__setattr__(self, "levels", levels)
        if not levels:
            raise ChainInvariantError("Una cadena necesita al menos un nivel")
        for i, level in enumerate(levels, start=1):
            if level.universe != self.universe:
                raise ChainInvariantError(f"El nivel {i} vive en otro universo")
            if not is_cover(level):
                missing = level.support().complement()
                raise ChainInvariantError(f"El nivel {i} no cubre los puntos {missing}")
        for i in range(len(levels) - 1):
            if not refines(star_family(levels[i], levels[i]), levels[i + 1]):
                raise ChainInvariantError(
                    f"St(B_{i + 1},B_{i + 1}) no refina B_{i + 2}"
                )

    @property
    def depth(self) -> int:
        return len(self.levels)

    def level(self, i: int) -> Family:
        """Nivel B_i con indice 1-based."""
        if not 1 <= i <= self.depth:
            raise IndexError(f"Nivel {i} fuera de 1..{self.depth}")
        return self.levels[i - 1]

    def is_saturated(self) -> bool:
        """True si el ultimo nivel ya es estable bajo estrellas."""
        last = self.levels[-1]
        return same_members(star_family(last, last), last)

    def to_lists(self) -> List[List[List[int]]]:
        return [level.to_lists() for level in self.levels]


def generate_chain(seed: Family, depth: int) -> ScaleChain:
    """B_1 = e(seed), B_{i+1} = St(B_i, B_i)."""
    if depth < 1:
        raise ValueError(f"La profundidad debe ser >= 1: {depth}")
    levels = [trivial_extension(seed)]
    while len(levels) < depth:
        levels.append(star_family(levels[-1], levels[-1]))
    return ScaleChain(seed.universe, tuple(levels))


def metrize(chain: ScaleChain) -> ExtMetric:
    n = chain.universe.size
    dist = np.full((n, n), INF)
    for i, level in enumerate(chain.levels, start=1):
        for member in level.sets:
            index = np.array(member.sorted(), dtype=int)
            if len(index) < 2:
                continue
            block = dist[np.ix_(index, index)]
            dist[np.ix_(index, index)] = np.minimum(block, float(i))
    if n:
        np.fill_diagonal(dist, 0.0)
    return ExtMetric(chain.universe, dist, check_triangle=False)


@dataclass
class RefinementCheck:
    direction: str
    level: int
    radius: int
    passed: bool

    def to_dict(self) -> dict:
        return {
            "direction": self.direction,
            "level": self.level,
            "radius": self.radius,
            "passed": self.passed,
        }


@dataclass
class ChainEquivalenceReport:
    """Ambas direcciones de refinamiento entre niveles y bolas enteras."""
    depth: int
    checks: List[RefinementCheck] = field(default_factory=list)
    saturated: bool = False
    triangle_ok: bool = True
    sharpened_ok: bool = True

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def to_dict(self) -> dict:
        return {
            "depth": self.depth,
            "passed": self.passed,
            "saturated": self.saturated,
            "triangle_ok": self.triangle_ok,
            "sharpened_ok": self.sharpened_ok,
            "note": "radios restringidos a valores < profundidad de la cadena",
            "checks": [check.to_dict() for check in self.checks],
        }


def chain_metric_equivalence(chain: ScaleChain, metric: ExtMetric) -> ChainEquivalenceReport:
    """B_i refina las i-bolas, y las r-bolas refinan B_i para todo i > r."""
    if metric.universe != chain.universe:
        raise ValueError("La metrica no corresponde a la cadena")
    report = ChainEquivalenceReport(depth=chain.depth)
    for i in range(1, chain.depth + 1):
        report.checks.append(RefinementCheck(
            "level_refines_balls", i, i, refines(chain.level(i), ball_family(metric, i)),
        ))
    for r in range(1, chain.depth):
        balls = ball_family(metric, r)
        for i in range(r + 1, chain.depth + 1):
            report.checks.append(RefinementCheck(
                "balls_refine_level", i, r, refines(balls, chain.level(i)),
            ))
    report.saturated = chain.is_saturated()
    report.triangle_ok = not triangle_violations(metric, limit=1)
    report.sharpened_ok = not sharpened_triangle_violations(metric, chain.depth, limit=1)
    logger.debug(
        "chain.equivalence", depth=chain.depth, passed=report.passed,
        saturated=report.saturated,
    )
    return report


def sharpened_triangle_violations(metric: ExtMetric, depth: int, limit: int = 20) -> List[Tuple[int, int, int]]:
    """Triples con d(x,z) > max(d(x,y), d(y,z)) + 1 cuando el maximo es < depth."""
    violations: List[Tuple[int, int, int]] = []
    dist = metric.dist
    for y in range(metric.size):
        worst = np.maximum(dist[:, y][:, None], dist[y, :][None, :])
        xs, zs = np.nonzero((worst < depth) & (dist > worst + 1))
        for x, z in zip(xs, zs):
            violations.append((int(x), y, int(z)))
            if len(violations) >= limit:
                return violations
    return violations
