# Asdim Package - Dimension asintotica en ventanas finitas
#
# Modulos:
#   components.py      - UnionFind, multiplicidad, B-componentes, r-componentes
#   decompositions.py  - Decomposition, verificacion, cubierta desde componentes, ladrillos
#   finders.py         - Buscadores trivial / annulus / bruteforce / bricks
#   hurewicz.py        - Desigualdad n_X <= n_f + n_Y con X armado desde fibras y base, cadena -> descomposicion

from coarse_kit.asdim.components import (
    UnionFind,
    ComponentPartition,
    multiplicity,
    b_components,
    r_components,
    max_component_diameter,
)
from coarse_kit.asdim.decompositions import (
    Decomposition,
    decomposition_check,
    components_to_cover,
    star_disjointness_check,
    brick_decomposition,
)
from coarse_kit.asdim.finders import (
    SearchContext,
    find_decomposition_bruteforce,
    search_decomposition,
)
from coarse_kit.asdim.hurewicz import assemble_decomposition, cover_to_decomposition, hurewicz_report

__all__ = [
    "UnionFind", "ComponentPartition", "multiplicity", "b_components",
    "r_components", "max_component_diameter", "Decomposition",
    "decomposition_check", "components_to_cover", "star_disjointness_check",
    "brick_decomposition", "SearchContext", "find_decomposition_bruteforce",
    "search_decomposition", "hurewicz_report", "cover_to_decomposition", "assemble_decomposition",
]
