# Higson Package - Acotacion, familias propias y defecto de Higson
#
# Modulos:
#   bounded.py  - Conjuntos acotados, familias y entourages propios, puente Delta(B)[K]=St(K,B)
#   defect.py   - RealFunction, defecto sobre truncaciones, exhaustiones, cota 3eps/4

from coarse_kit.higson.bounded import (
    is_bounded_set,
    PropernessResult,
    proper_family_check,
    is_proper_on_window,
    proper_entourage_check,
    proper_equivalence_check,
    star_proper_inclusion_check,
    two_term_star_inclusion,
    delta_image_bridge_check,
)
from coarse_kit.higson.defect import (
    RealFunction,
    named_function,
    higson_defect,
    Exhaustion,
    prefix_exhaustion,
    ball_exhaustion,
    block_family,
    defect_profile,
    minimal_truncation,
    star_defect_check,
)

__all__ = [
    "is_bounded_set", "PropernessResult", "proper_family_check", "is_proper_on_window",
    "proper_entourage_check", "proper_equivalence_check",
    "star_proper_inclusion_check", "two_term_star_inclusion",
    "delta_image_bridge_check", "RealFunction", "named_function",
    "higson_defect", "Exhaustion", "prefix_exhaustion", "ball_exhaustion",
    "block_family", "defect_profile", "minimal_truncation", "star_defect_check",
]
