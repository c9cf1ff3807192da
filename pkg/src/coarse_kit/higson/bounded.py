"""Conjuntos acotados y familias propias sobre ventanas finitas.

"Relativamente compacto" se interpreta como acotado en la infinito-metrica
(diametro finito); una cota opcional hace observable el crecimiento dentro
de una ventana finita.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence

from coarse_kit.core.families import Family, star, star_family
from coarse_kit.core.sets import PointSet, ensure_same_universe
from coarse_kit.entourages.conversion import delta_of_family
from coarse_kit.entourages.relation import Entourage, image_of_set, inverse
from coarse_kit.errors import UnboundedSetError
from coarse_kit.metrics.ext_metric import ExtMetric, diameter, finite_components


def is_bounded_set(subset: PointSet, metric: ExtMetric) -> bool:
    return math.isfinite(diameter(subset, metric))


@dataclass
class PropernessResult:
    """Resultado verdadero/falso que conserva el K que viola la propiedad."""
    passed: bool
    checked: int = 0
    violating: Optional[PointSet] = None
    violating_diameter: Optional[float] = None

    def __bool__(self) -> bool:
        return self.passed

    def to_dict(self) -> dict:
        diam = self.violating_diameter
        return {
            "passed": self.passed,
            "checked": self.checked,
            "violating_K": self.violating.sorted() if self.violating is not None else None,
            "violating_diameter": "inf" if diam is not None and math.isinf(diam) else diam,
        }


def _exceeds(value: float, bound: Optional[float]) -> bool:
    return math.isinf(value) or (bound is not None and value > bound)


def _require_bounded(subsets: Sequence[PointSet], metric: ExtMetric) -> None:
    for subset in subsets:
        if not is_bounded_set(subset, metric):
            raise UnboundedSetError(f"K={subset!r} no es acotado")


def proper_family_check(
    family: Family, subsets: Sequence[PointSet], metric: ExtMetric, bound: Optional[float] = None
) -> PropernessResult:
    """St(K,B) acotado (y de diametro <= bound si se da) para cada K."""
    ensure_same_universe(family, metric, *subsets)
    _require_bounded(subsets, metric)
    result = PropernessResult(passed=True)
    for subset in subsets:
        result.checked += 1
        diam = diameter(star(subset, family), metric)
        if _exceeds(diam, bound):
            result.passed = False
            result.violating = subset
            result.violating_diameter = diam
            break
    return result


def proper_entourage_check(
    relation: Entourage, subsets: Sequence[PointSet], metric: ExtMetric, bound: Optional[float] = None
) -> PropernessResult:
    """E[K] y E^-1[K] acotados para cada K."""
    ensure_same_universe(relation, metric, *subsets)
    _require_bounded(subsets, metric)
    transposed = inverse(relation)
    result = PropernessResult(passed=True)
    for subset in subsets:
        result.checked += 1
        diam = max(
            diameter(image_of_set(relation, subset), metric),
            diameter(image_of_set(transposed, subset), metric),
        )
        if _exceeds(diam, bound):
            result.passed = False
            result.violating = subset
            result.violating_diameter = diam
            break
    return result


def is_proper_on_window(family: Family, metric: ExtMetric, bound: Optional[float] = None) -> PropernessResult:
    """Propiedad con K recorriendo las componentes finitas: todo acotado cae en una de ellas."""
    return proper_family_check(family, finite_components(metric), metric, bound)


@dataclass
class ProperEquivalence:
    family_proper: bool
    delta_proper: bool

    @property
    def agree(self) -> bool:
        return self.family_proper == self.delta_proper

    def to_dict(self) -> dict:
        return {
            "family_proper": self.family_proper,
            "delta_proper": self.delta_proper,
            "agree": self.agree,
        }


def proper_equivalence_check(
    family: Family, subsets: Sequence[PointSet], metric: ExtMetric, bound: Optional[float] = None
) -> ProperEquivalence:
    """B es propia sii Delta(B) es un conjunto controlado propio."""
    return ProperEquivalence(
        family_proper=bool(proper_family_check(family, subsets, metric, bound)),
        delta_proper=bool(proper_entourage_check(delta_of_family(family), subsets, metric, bound)),
    )


def star_proper_inclusion_check(first: Family, second: Family, subset: PointSet) -> bool:
    """St(K,St(B1,B2)) contenido en St(St(St(K,B2),B1),B2).

    Es la forma corregida de la inclusion: la union de dos terminos
    St(St(K,B1),B2) u St(St(K,B2),B1) no contiene al lado izquierdo en general
    (ver two_term_star_inclusion). Si K es acotado y B1, B2 son propias, el
    lado derecho es acotado.
    """
    ensure_same_universe(first, second, subset)
    left = star(subset, star_family(first, second))
    right = star(star(star(subset, second), first), second)
    return left <= right


def two_term_star_inclusion(first: Family, second: Family, subset: PointSet) -> bool:
    """Forma de dos terminos St(St(K,B1),B2) u St(St(K,B2),B1); falla en general.

    Contraejemplo: B1={{1,2}}, B2={{0,1},{2,3}}, K={0}.
    """
    ensure_same_universe(first, second, subset)
    left = star(subset, star_family(first, second))
    right = star(star(subset, first), second) | star(star(subset, second), first)
    return left <= right


def delta_image_bridge_check(family: Family, subset: PointSet) -> bool:
    """Delta(B)[K] = St(K,B)."""
    ensure_same_universe(family, subset)
    return image_of_set(delta_of_family(family), subset) == star(subset, family)
