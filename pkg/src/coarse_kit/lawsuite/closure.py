"""Estructura generada por familias semilla, semi-decidida a profundidad acotada.

Cada capa agrega extensiones triviales de uniones y estrellas mutuas de la
capa anterior. Solo se conservan las familias maximales bajo
refinamiento-modulo-singletons: la prueba de pertenencia no cambia.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Sequence

import structlog

from coarse_kit.core.families import (
    Family,
    refines_mod_singletons,
    star_family,
    trivial_extension,
    union_families,
)
from coarse_kit.core.sets import ensure_same_universe

logger = structlog.get_logger(__name__)

MAX_CLOSURE_DEPTH = 6


def _absorb(kept: List[Family], candidate: Family) -> None:
    """Agrega candidate salvo que refine alguna familia ya guardada; quita las que refinen a candidate."""
    if any(refines_mod_singletons(candidate, other) for other in kept):
        return
    kept[:] = [other for other in kept if not refines_mod_singletons(other, candidate)]
    kept.append(candidate)


def generated_closure(seeds: Sequence[Family], depth: int) -> List[List[Family]]:
    """Capas 1..depth; la capa 1 son las extensiones triviales de las semillas."""
    if not 1 <= depth <= MAX_CLOSURE_DEPTH:
        raise ValueError(f"La profundidad debe estar en 1..{MAX_CLOSURE_DEPTH}")
    if not seeds:
        return [[] for _ in range(depth)]
    ensure_same_universe(*seeds)
    layer: List[Family] = []
    for seed in seeds:
        _absorb(layer, trivial_extension(seed))
    layers = [layer]
    while len(layers) < depth:
        current = layers[-1]
        following = list(current)
        for first in current:
            for second in current:
                _absorb(following, trivial_extension(union_families(first, second)))
                _absorb(following, trivial_extension(star_family(first, second)))
        layers.append(following)
        logger.debug("closure.layer", depth=len(layers), families=len(following))
    return layers


@dataclass(frozen=True)
class ClosureMembership:
    found: bool
    depth: int
    witness: Optional[int] = None

    def describe(self) -> str:
        if self.found:
            return f"member by depth {self.depth}"
        return f"not found by depth {self.depth}"

    def to_dict(self) -> dict:
        return {"found": self.found, "depth": self.depth, "status": self.describe()}


def closure_membership(candidate: Family, layers: Sequence[Sequence[Family]]) -> ClosureMembership:
    """Primera capa con una familia a la que candidate refine modulo singletons."""
    for depth, layer in enumerate(layers, start=1):
        for index, family in enumerate(layer):
            if refines_mod_singletons(candidate, family):
                return ClosureMembership(True, depth, index)
    return ClosureMembership(False, len(layers))


def layers_are_monotone(layers: Sequence[Sequence[Family]]) -> bool:
    """Cada familia de una capa refina-modulo-singletons alguna de la siguiente."""
    for current, following in zip(layers, layers[1:]):
        for family in current:
            if not any(refines_mod_singletons(family, other) for other in following):
                return False
    return True
