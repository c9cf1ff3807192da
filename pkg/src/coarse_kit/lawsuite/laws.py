"""Registro de leyes ejecutables: cada identidad o inclusion probada como chequeo sobre un Case."""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Dict, Optional, Tuple

from coarse_kit.core.families import (
    Family,
    refines,
    star_family,
    trivial_extension,
    union_families,
)
from coarse_kit.entourages.conversion import delta_of_family, maximal_family_of_entourage
from coarse_kit.entourages.relation import Entourage, compose, reflexive_symmetric_interior
from coarse_kit.higson.bounded import (
    delta_image_bridge_check,
    is_proper_on_window,
    star_proper_inclusion_check,
)
from coarse_kit.lawsuite.closure import closure_membership, generated_closure, layers_are_monotone
from coarse_kit.lawsuite.generators import Case
from coarse_kit.metrics.chains import chain_metric_equivalence, generate_chain, metrize
from coarse_kit.metrics.ext_metric import diameter

Check = Callable[[Case], bool]

METRIZATION_DEPTH = 4


@dataclass(frozen=True)
class Law:
    law_id: str
    arity: int
    statement: str
    check: Check
    tally: Optional[Callable[[Case], Optional[str]]] = None


def union_closure(case: Case) -> bool:
    joined = union_families(case.first, case.second)
    stars = star_family(trivial_extension(case.first), trivial_extension(case.second))
    return refines(joined, stars)


def _star_bounds(case: Case) -> Tuple[float, float, float]:
    """(M1, M2, mayor diametro de St(B1,B2))."""
    metric = case.metric
    first = max((diameter(m, metric) for m in case.first), default=0.0)
    second = max((diameter(m, metric) for m in case.second), default=0.0)
    if math.isinf(first) or math.isinf(second):
        return first, second, math.inf
    stars = star_family(case.first, case.second)
    return first, second, max((diameter(m, metric) for m in stars), default=0.0)


def metric_star_bound(case: Case) -> bool:
    first, second, worst = _star_bounds(case)
    if math.isinf(first) or math.isinf(second):
        return True
    return worst <= 2 * second + first


def metric_star_tally(case: Case) -> Optional[str]:
    first, second, worst = _star_bounds(case)
    if math.isinf(first) or math.isinf(second):
        return "vacuous"
    if case.first.sets and worst == 2 * second + first:
        return "tight"
    return None


def generated_structure(case: Case) -> bool:
    layers = generated_closure([case.first, case.second], depth=2)
    joined = union_families(case.first, case.second)
    stars = star_family(trivial_extension(case.first), trivial_extension(case.second))
    return (
        closure_membership(joined, layers).found
        and closure_membership(stars, layers).found
        and layers_are_monotone(layers)
    )


def metrization(case: Case) -> bool:
    chain = generate_chain(case.first, METRIZATION_DEPTH)
    report = chain_metric_equivalence(chain, metrize(chain))
    return report.passed and report.triangle_ok and report.sharpened_ok


def _contains_delta(relation: Entourage, family: Family) -> bool:
    return delta_of_family(family).pairs <= relation.pairs


def compose_star(case: Case) -> bool:
    """Delta(St(B1,B2)) dentro de (E2 o E1) o E2 para E_i que contienen Delta(B_i)."""
    first, second = case.upper
    if not (_contains_delta(first, case.first) and _contains_delta(second, case.second)):
        return True
    target = compose(compose(second, first), second)
    return delta_of_family(star_family(case.first, case.second)) <= target


def compose_order_mutant(case: Case) -> bool:
    """Orden corrompido (E2 o E1) o E1; debe fallar."""
    first, second = case.upper
    if not (_contains_delta(first, case.first) and _contains_delta(second, case.second)):
        return True
    target = compose(compose(second, first), first)
    return delta_of_family(star_family(case.first, case.second)) <= target


def compose_into_star(case: Case) -> bool:
    """E1 o E2 dentro de Delta(St(B2, B1 u B2)) para E_i contenidos en Delta(B_i)."""
    first, second = case.lower
    if not (first.pairs <= delta_of_family(case.first).pairs
            and second.pairs <= delta_of_family(case.second).pairs):
        return True
    joined = union_families(case.first, case.second)
    return compose(first, second) <= delta_of_family(star_family(case.second, joined))


def delta_image(case: Case) -> bool:
    return all(delta_image_bridge_check(case.first, subset) for subset in case.subsets)


def proper_star(case: Case) -> bool:
    """Inclusion de estrellas corregida (tres pasos) para cada K y St(B1,B2) propia cuando B1 y B2 lo son."""
    if not all(star_proper_inclusion_check(case.first, case.second, s) for s in case.subsets):
        return False
    metric = case.metric
    if is_proper_on_window(case.first, metric) and is_proper_on_window(case.second, metric):
        return bool(is_proper_on_window(star_family(case.first, case.second), metric))
    return True


def entourage_roundtrip(case: Case) -> bool:
    relation = case.relation
    interior = reflexive_symmetric_interior(relation)
    if delta_of_family(maximal_family_of_entourage(relation)) != interior:
        return False
    return refines(case.first, maximal_family_of_entourage(delta_of_family(case.first)))


LAWS: Dict[str, Law] = {
    law.law_id: law
    for law in (
        Law("union-closure", 2, "B1 u B2 refina St(e(B1),e(B2))", union_closure),
        Law("metric-star-bound", 2, "diam St(B1,B2) <= 2*M2 + M1", metric_star_bound, metric_star_tally),
        Law("generated-structure", 2, "uniones y estrellas pertenecen a la capa 2", generated_structure),
        Law("metrization", 1, "metrize(cadena) equivale a la cadena", metrization),
        Law("compose-star", 2, "Delta(St(B1,B2)) en (E2 o E1) o E2", compose_star),
        Law("compose-into-star", 2, "E1 o E2 en Delta(St(B2,B1 u B2))", compose_into_star),
        Law("delta-image", 1, "Delta(B)[K] = St(K,B)", delta_image),
        Law("proper-star", 2, "St(K,St(B1,B2)) en St(St(St(K,B2),B1),B2) (forma corregida)", proper_star),
        Law("entourage-roundtrip", 1, "Delta(B(E)) = interior de E; B refina B(Delta(B))", entourage_roundtrip),
    )
}

MUTATIONS: Dict[str, Tuple[str, Check]] = {
    "compose-order": ("compose-star", compose_order_mutant),
}
