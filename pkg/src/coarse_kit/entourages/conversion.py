"""Conversion entre familias uniformemente acotadas y conjuntos controlados.

Delta(B) es la union de cuadrados B x B; B(E) se representa por su
anticadena de miembros maximales (cliques maximales del grafo de E).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Sequence, Tuple

import networkx as nx
import structlog

from coarse_kit.core.families import Family
from coarse_kit.core.sets import ensure_same_universe
from coarse_kit.entourages.relation import Entourage, compose, diagonal, inverse

logger = structlog.get_logger(__name__)


def delta_of_family(family: Family) -> Entourage:
    pairs = set()
    for member in family.sets:
        points = member.sorted()
        pairs.update((x, y) for x in points for y in points)
    return Entourage(family.universe, frozenset(pairs))


def clique_graph(relation: Entourage) -> nx.Graph:
    """Grafo x~y sii (x,x),(y,y),(x,y),(y,x) estan en E; solo vertices con lazo."""
    pairs = relation.pairs
    graph = nx.Graph()
    graph.add_nodes_from(x for x in relation.universe.points() if (x, x) in pairs)
    for x, y in pairs:
        if x < y and (y, x) in pairs and graph.has_node(x) and graph.has_node(y):
            graph.add_edge(x, y)
    return graph


def maximal_family_of_entourage(relation: Entourage) -> Family:
    """Miembros maximales de B(E), via enumeracion de cliques maximales.

    Sin lazos el unico miembro maximal es el conjunto vacio.
    """
    universe = relation.universe
    graph = clique_graph(relation)
    if graph.number_of_nodes() == 0:
        return Family(universe, (universe.empty(),))
    cliques = sorted((sorted(c) for c in nx.find_cliques(graph)), key=lambda c: (c[0], len(c), c))
    logger.debug("entourage.maximal_cliques", count=len(cliques), nodes=graph.number_of_nodes())
    return Family.of(universe, cliques)


def lss_to_coarse_witness(families: Sequence[Family], relation: Entourage) -> bool:
    """E es controlado si E esta contenido en Delta(B) para algun B listado."""
    if families:
        ensure_same_universe(relation, *families)
    return any(relation.pairs <= delta_of_family(f).pairs for f in families)


def coarse_to_lss_witness(relations: Sequence[Entourage], family: Family) -> bool:
    """B es uniformemente acotada si Delta(B) cabe en algun E listado."""
    if relations:
        ensure_same_universe(family, *relations)
    squares = delta_of_family(family).pairs
    return any(squares <= e.pairs for e in relations)


@dataclass
class CoarseAxiomReport:
    """Cierre de una lista finita de testigos bajo los axiomas de estructura coarse."""
    diagonal_controlled: bool = False
    inverse_failures: List[int] = field(default_factory=list)
    union_failures: List[Tuple[int, int]] = field(default_factory=list)
    composition_failures: List[Tuple[int, int]] = field(default_factory=list)

    @property
    def closed(self) -> bool:
        return (self.diagonal_controlled and not self.inverse_failures
                and not self.union_failures and not self.composition_failures)

    def to_dict(self) -> dict:
        return {
            "closed": self.closed,
            "diagonal_controlled": self.diagonal_controlled,
            "inverse_failures": self.inverse_failures,
            "union_failures": [list(p) for p in self.union_failures],
            "composition_failures": [list(p) for p in self.composition_failures],
        }


def coarse_axiom_report(relations: Sequence[Entourage]) -> CoarseAxiomReport:
    """Revisa diagonal, inversos, uniones y composiciones hasta contencion en algun testigo."""
    report = CoarseAxiomReport()
    if not relations:
        return report
    universe = ensure_same_universe(*relations)

    def covered(candidate: Entourage) -> bool:
        return any(candidate.pairs <= e.pairs for e in relations)

    report.diagonal_controlled = covered(diagonal(universe))
    for i, relation in enumerate(relations):
        if not covered(inverse(relation)):
            report.inverse_failures.append(i)
        for j, other in enumerate(relations):
            if i < j and not covered(relation | other):
                report.union_failures.append((i, j))
            if not covered(compose(relation, other)):
                report.composition_failures.append((i, j))
    return report
