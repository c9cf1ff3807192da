# Core Package - Calculo de conjuntos y familias
#
# Modulos:
#   sets.py      - GroundSet, PointSet, PointMap
#   families.py  - Family, estrellas, extension trivial, refinamiento

from coarse_kit.core.sets import GroundSet, PointSet, PointMap, ensure_same_universe
from coarse_kit.core.families import (
    Family,
    star,
    star_family,
    trivial_extension,
    refines,
    refines_mod_singletons,
    union_families,
    discrete_generators,
    image_family,
    preimage_family,
    is_cover,
    canonical,
    same_members,
    lss_axiom_report,
)

__all__ = [
    "GroundSet", "PointSet", "PointMap", "ensure_same_universe",
    "Family", "star", "star_family", "trivial_extension", "refines",
    "refines_mod_singletons", "union_families", "discrete_generators",
    "image_family", "preimage_family", "is_cover", "canonical", "same_members", "lss_axiom_report",
]
