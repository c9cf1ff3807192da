# Groups Package - Oraculos de grupo, traslaciones y acciones
#
# Modulos:
#   dyadic.py   - Racionales diadicos exactos para BS(1,2)
#   oracles.py  - GroupOracle: Z^n, grupo libre, BS(1,2), tabla finita
#   shifts.py   - Familias de traslaciones, testigos, busqueda de divergencia
#   actions.py  - Acciones sobre ventanas, mapa de orbita, Svarc-Milnor

from coarse_kit.groups.dyadic import Dyadic
from coarse_kit.groups.oracles import (
    GroupElement,
    FiniteSubset,
    GroupOracle,
    ZnOracle,
    FreeGroupOracle,
    BS12Oracle,
    FiniteTableOracle,
    word_ball,
    oracle_from_descriptor,
)
from coarse_kit.groups.shifts import (
    ElementWindow,
    left_shift_family,
    right_shift_family,
    left_witness,
    cover_candidates,
    shift_cover_search,
    divergence_search,
    shift_star_bound,
)
from coarse_kit.groups.actions import (
    ActionOracle,
    translation_action,
    trivial_action,
    orbit_map,
    orbit_points,
    orbit_point_map,
    pullback_family,
    svarc_milnor_finiteness_check,
    svarc_milnor_cover_check,
    orbit_radius_check,
)

__all__ = [
    "Dyadic", "GroupElement", "FiniteSubset", "GroupOracle", "ZnOracle",
    "FreeGroupOracle", "BS12Oracle", "FiniteTableOracle", "word_ball",
    "oracle_from_descriptor", "ElementWindow", "left_shift_family",
    "right_shift_family", "left_witness", "cover_candidates",
    "shift_cover_search", "divergence_search", "shift_star_bound",
    "ActionOracle", "translation_action", "trivial_action", "orbit_map", "orbit_points",
    "orbit_point_map", "pullback_family", "svarc_milnor_finiteness_check",
    "svarc_milnor_cover_check", "orbit_radius_check",
]
