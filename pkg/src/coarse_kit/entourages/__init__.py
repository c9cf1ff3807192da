# Entourages Package - Conjuntos controlados y conversion con familias
#
# Modulos:
#   relation.py    - Entourage, diagonal, inverso, composicion, E[K]
#   conversion.py  - Delta(B), B(E) maximal, testigos de controlabilidad en ambas direcciones

from coarse_kit.entourages.relation import (
    Entourage,
    diagonal,
    inverse,
    compose,
    image_of_set,
    reflexive_symmetric_interior,
)
from coarse_kit.entourages.conversion import (
    delta_of_family,
    maximal_family_of_entourage,
    lss_to_coarse_witness,
    coarse_to_lss_witness,
    coarse_axiom_report,
)

__all__ = [
    "Entourage", "diagonal", "inverse", "compose", "image_of_set",
    "reflexive_symmetric_interior", "delta_of_family",
    "maximal_family_of_entourage", "lss_to_coarse_witness",
    "coarse_to_lss_witness", "coarse_axiom_report",
]
