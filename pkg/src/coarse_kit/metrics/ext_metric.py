"""Infinito-metricas sobre ventanas finitas y las familias de bolas asociadas.

La matriz de distancias usa numpy con math.inf como valor absorbente
(x + inf = inf). Las bolas son cerradas: B(x,r) = {y : d(x,y) <= r}.
"""
from __future__ import annotations

import math
from dataclasses import InitVar, dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import networkx as nx
import numpy as np

from coarse_kit.core.families import Family
from coarse_kit.core.sets import GroundSet, PointMap, PointSet, ensure_same_universe
from coarse_kit.errors import MissingValueError

INF = math.inf


@dataclass(frozen=True, eq=False)
class ExtMetric:
    """Matriz simetrica de distancias en [0, inf] sobre un GroundSet.

    check_triangle=False solo para matrices que ya son metricas por construccion
    (caminos mas cortos, ventanas, uniones disjuntas, restricciones) y para la
    metrizacion truncada, que puede violar la desigualdad en el borde de profundidad.
    """
    universe: GroundSet
    dist: np.ndarray
    check_triangle: InitVar[bool] = True

    def __post_init__(self, check_triangle: bool = True):
        matrix = np.array(self.dist, dtype=float)
        n = self.universe.size
        if matrix.shape != (n, n):
            raise ValueError(f"Se esperaba matriz {n}x{n}, llego {matrix.shape}")
        if n:
            if np.any(np.isnan(matrix)) or np.any(matrix < 0):
                raise ValueError("Las distancias deben ser no negativas")
            if np.any(np.diag(matrix) != 0):
                raise ValueError("d(x,x) debe ser 0")
            if not np.array_equal(matrix, matrix.T):
                raise ValueError("La metrica debe ser simetrica")
            off_diagonal = ~np.eye(n, dtype=bool)
            if np.any(matrix[off_diagonal] == 0):
                raise ValueError("d(x,y)=0 exige x=y")
        matrix.setflags(write=False)
        object.__setattr__(self, "dist", matrix)
        if check_triangle and n > 2:
            violations = triangle_violations(self, limit=1)
            if violations:
                x, y, z = violations[0]
                raise ValueError(f"Desigualdad triangular violada: d({x},{z}) > d({x},{y}) + d({y},{z})")

    @property
    def size(self) -> int:
        return self.universe.size

    def __call__(self, x: int, y: int) -> float:
        return float(self.dist[x, y])

    def rows(self) -> List[List[float]]:
        return self.dist.tolist()


def diameter(subset: PointSet, metric: ExtMetric) -> float:
    """Supremo de distancias por pares; 0 para vacio o singleton."""
    ensure_same_universe(subset, metric)
    points = subset.sorted()
    if len(points) < 2:
        return 0.0
    index = np.array(points)
    return float(metric.dist[np.ix_(index, index)].max())


def is_uniformly_bounded(family: Family, metric: ExtMetric, bound: float) -> bool:
    ensure_same_universe(family, metric)
    return all(diameter(member, metric) <= bound for member in family.sets)


def ball(metric: ExtMetric, center: int, radius: float) -> PointSet:
    members = np.flatnonzero(metric.dist[center] <= radius)
    return PointSet(metric.universe, frozenset(int(y) for y in members))


def ball_family(metric: ExtMetric, radius: float) -> Family:
    """{B(x,r)} para x en X, con bolas cerradas."""
    if not radius > 0:
        raise ValueError(f"El radio debe ser positivo: {radius}")
    return Family(metric.universe, tuple(ball(metric, x, radius) for x in metric.universe.points()))


@dataclass(frozen=True)
class RadiusFunction:
    """f: X -> (0, inf) para la estructura sublineal."""
    values: Dict[int, float] = field(default_factory=dict)

    def __post_init__(self):
        for x, value in self.values.items():
            if not value > 0:
                raise ValueError(f"f({x})={value} debe ser positivo")

    def __call__(self, x: int) -> float:
        if x not in self.values:
            raise MissingValueError(f"f no esta definida en el punto {x}")
        return self.values[x]


def sublinear_ball_family(metric: ExtMetric, basepoint: int, radii: RadiusFunction) -> Family:
    """{B(x, f(x))}; la condicion asintotica f(x)/d(x,x0) -> 0 no es decidible en una ventana.

    El punto base se conserva en la firma para que los radios se construyan respecto a el.
    """
    if not 0 <= basepoint < metric.size:
        raise ValueError(f"Punto base {basepoint} fuera del universo")
    return Family(
        metric.universe,
        tuple(ball(metric, x, radii(x)) for x in metric.universe.points()),
    )


def linear_radius(metric: ExtMetric, basepoint: int, base: float, slope: float) -> RadiusFunction:
    """f(x) = base + slope * d(x, x0), restringido a la componente finita de x0."""
    values = {}
    for x in metric.universe.points():
        distance = metric(x, basepoint)
        values[x] = base + slope * distance if math.isfinite(distance) else base
    return RadiusFunction(values)


def disjoint_union(metrics: Sequence[ExtMetric]) -> ExtMetric:
    """Metrica por bloques: distancias cruzadas infinitas, internas preservadas."""
    sizes = [m.size for m in metrics]
    total = sum(sizes)
    matrix = np.full((total, total), INF)
    labels: Optional[List[str]] = []
    offset = 0
    for block, metric in enumerate(metrics):
        n = metric.size
        matrix[offset:offset + n, offset:offset + n] = metric.dist
        if labels is not None and metric.universe.labels is not None:
            labels.extend(f"{block}:{label}" for label in metric.universe.labels)
        else:
            labels = None
        offset += n
    if total:
        np.fill_diagonal(matrix, 0.0)
    if labels is not None and len(labels) != total:
        labels = None
    return ExtMetric(GroundSet(total, tuple(labels) if labels else None), matrix, check_triangle=False)


def path_metric(size: int, edges: Iterable[Tuple[int, int, float]]) -> ExtMetric:
    """Metrica de caminos mas cortos de un grafo ponderado; sin camino -> inf."""
    graph = nx.Graph()
    graph.add_nodes_from(range(size))
    for x, y, weight in edges:
        graph.add_edge(x, y, weight=float(weight))
    matrix = np.full((size, size), INF)
    for source, lengths in nx.all_pairs_dijkstra_path_length(graph, weight="weight"):
        for target, length in lengths.items():
            matrix[source, target] = length
    return ExtMetric(GroundSet(size), matrix, check_triangle=False)


def finite_components(metric: ExtMetric) -> List[PointSet]:
    """Particion en componentes finitas (d(x,y) < inf)."""
    remaining = set(metric.universe.points())
    components = []
    while remaining:
        seed = min(remaining)
        members = frozenset(int(y) for y in np.flatnonzero(np.isfinite(metric.dist[seed])))
        components.append(PointSet(metric.universe, members))
        remaining -= members
    return components


def scale_pair_family(metric: ExtMetric, radius: float) -> Family:
    """Pares {x,y} con d(x,y) <= r; sus B-componentes son las r-componentes."""
    rows, cols = np.nonzero(np.triu(metric.dist <= radius, k=1))
    return Family.of(metric.universe, ((int(x), int(y)) for x, y in zip(rows, cols)))


def triangle_violations(metric: ExtMetric, limit: int = 20) -> List[Tuple[int, int, int]]:
    """Triples (x,y,z) con d(x,z) > d(x,y) + d(y,z)."""
    violations: List[Tuple[int, int, int]] = []
    dist = metric.dist
    for y in range(metric.size):
        through = dist[:, y][:, None] + dist[y, :][None, :]
        xs, zs = np.nonzero(dist > through)
        for x, z in zip(xs, zs):
            violations.append((int(x), y, int(z)))
            if len(violations) >= limit:
                return violations
    return violations


def uniformity_bound(mapping: PointMap, source: ExtMetric, target: ExtMetric, radius: float) -> float:
    """sup_x diam f(B(x,r)); inf significa que f no es uniforme a escala r."""
    if mapping.domain != source.universe or mapping.codomain != target.universe:
        raise ValueError("El mapa no coincide con las metricas dadas")
    images = np.array(mapping.images, dtype=int)
    worst = 0.0
    for x in source.universe.points():
        hit = np.unique(images[np.flatnonzero(source.dist[x] <= radius)])
        if len(hit) > 1:
            worst = max(worst, float(target.dist[np.ix_(hit, hit)].max()))
            if math.isinf(worst):
                break
    return worst


@dataclass(frozen=True)
class BoxWindow:
    """Ventana [0,n_1) x ... x [0,n_k) de Z^k con indexado row-major."""
    extents: Tuple[int, ...]

    def __post_init__(self):
        extents = tuple(int(e) for e in self.extents)
        object.__setattr__(self, "extents", extents)
        if not extents or any(e <= 0 for e in extents):
            raise ValueError(f"Extensiones invalidas: {extents}")

    @property
    def dim(self) -> int:
        return len(self.extents)

    @property
    def size(self) -> int:
        return int(np.prod(self.extents))

    def ground_set(self) -> GroundSet:
        return GroundSet(self.size)

    def coordinates(self) -> np.ndarray:
        """Arreglo (size, dim) con las coordenadas de cada indice."""
        grids = np.indices(self.extents).reshape(self.dim, -1)
        return grids.T

    def index(self, coords: Sequence[int]) -> Optional[int]:
        if len(coords) != self.dim:
            raise ValueError("Dimension de coordenadas incorrecta")
        if any(not 0 <= c < e for c, e in zip(coords, self.extents)):
            return None
        return int(np.ravel_multi_index(tuple(coords), self.extents))

    def grid_metric(self) -> ExtMetric:
        """Metrica de caminos del grafo reticular (l1)."""
        coords = self.coordinates()
        matrix = np.zeros((self.size, self.size))
        for axis in range(self.dim):
            column = coords[:, axis].astype(float)
            matrix += np.abs(column[:, None] - column[None, :])
        return ExtMetric(self.ground_set(), matrix, check_triangle=False)

    def projection(self, axis: int, target: "BoxWindow") -> PointMap:
        if target.dim != 1 or target.extents[0] != self.extents[axis]:
            raise ValueError("La ventana destino debe ser el eje proyectado")
        coords = self.coordinates()
        return PointMap(self.ground_set(), target.ground_set(), tuple(int(c) for c in coords[:, axis]))
