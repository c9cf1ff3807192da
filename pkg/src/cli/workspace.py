"""Formato de workspace JSON (pydantic) y su traduccion a objetos de coarse_kit.

Un unico documento autodescriptivo; las distancias infinitas se escriben "inf".
"""

import math
from typing import Any, Dict, List, Literal, Optional, Tuple, Union

from pydantic import BaseModel, Field, field_validator, model_validator

from cli.bridge_utils import SchemaError, load_file_safe
from coarse_kit.core.families import Family
from coarse_kit.core.sets import GroundSet, PointMap, PointSet
from coarse_kit.entourages.relation import Entourage
from coarse_kit.higson.defect import Exhaustion, RealFunction, named_function, prefix_exhaustion
from coarse_kit.metrics.chains import ScaleChain
from coarse_kit.metrics.ext_metric import BoxWindow, ExtMetric, path_metric

Distance = Union[float, Literal["inf"]]


def _to_float(value: Distance) -> float:
    return math.inf if value == "inf" else float(value)


class GroundSetModel(BaseModel):
    size: int = Field(ge=0)
    labels: Optional[List[str]] = None

    @model_validator(mode="after")
    def _labels_match(self):
        if self.labels is not None and len(self.labels) != self.size:
            raise ValueError(f"Se esperaban {self.size} etiquetas")
        return self


class MetricModel(BaseModel):
    """Exactamente una fuente: matriz, aristas de un grafo o ventana Z^k."""
    matrix: Optional[List[List[Distance]]] = None
    edges: Optional[List[Tuple[int, int, float]]] = None
    size: Optional[int] = Field(default=None, ge=0)
    window: Optional[List[int]] = None
    # matrices de `metrize`: truncadas en esta profundidad, sin chequeo triangular
    truncated_depth: Optional[int] = Field(default=None, ge=1)

    @model_validator(mode="after")
    def _one_source(self):
        sources = [s for s in (self.matrix, self.edges, self.window) if s is not None]
        if len(sources) != 1:
            raise ValueError("Una metrica necesita exactamente uno de matrix, edges o window")
        if self.edges is not None and self.size is None:
            raise ValueError("Una metrica por aristas necesita size")
        return self

    def point_count(self) -> int:
        if self.matrix is not None:
            return len(self.matrix)
        if self.window is not None:
            return math.prod(self.window)
        return self.size


class FunctionModel(BaseModel):
    values: Optional[List[float]] = None
    name: Optional[Literal["linear", "log1p", "sin"]] = None
    params: Dict[str, float] = Field(default_factory=dict)

    @model_validator(mode="after")
    def _one_source(self):
        if (self.values is None) == (self.name is None):
            raise ValueError("Una funcion necesita values o name, no ambos")
        return self


class ExhaustionModel(BaseModel):
    stages: Optional[List[List[int]]] = None
    prefix_step: Optional[int] = Field(default=None, ge=1)
    include_full: bool = True

    @model_validator(mode="after")
    def _one_source(self):
        if (self.stages is None) == (self.prefix_step is None):
            raise ValueError("Una exhaustion necesita stages o prefix_step")
        return self


class MapModel(BaseModel):
    source: str
    target: str
    images: List[int]


class GroupTaskModel(BaseModel):
    """Descriptor de grupo mas los parametros de witness/divergence/svarc-milnor."""
    descriptor: Dict[str, Any]
    E: List[str] = Field(default_factory=list)
    F: Optional[List[str]] = None
    F_radius: Optional[int] = Field(default=None, ge=0)
    members: List[List[str]] = Field(default_factory=list)
    search_radius: int = Field(default=3, ge=0)
    search_bounds: Optional[Dict[str, int]] = None
    window: Optional[List[int]] = None
    basepoint: Optional[List[int]] = None
    radius: float = Field(default=1.0, ge=0)
    candidate_radius: int = Field(default=4, ge=0)


class WorkspaceFile(BaseModel):
    ground_set: Optional[GroundSetModel] = None
    families: Dict[str, List[List[int]]] = Field(default_factory=dict)
    entourages: Dict[str, List[Tuple[int, int]]] = Field(default_factory=dict)
    subsets: Dict[str, List[int]] = Field(default_factory=dict)
    metrics: Dict[str, MetricModel] = Field(default_factory=dict)
    chains: Dict[str, List[List[List[int]]]] = Field(default_factory=dict)
    decompositions: Dict[str, List[List[int]]] = Field(default_factory=dict)
    functions: Dict[str, FunctionModel] = Field(default_factory=dict)
    exhaustions: Dict[str, ExhaustionModel] = Field(default_factory=dict)
    maps: Dict[str, MapModel] = Field(default_factory=dict)
    groups: Dict[str, GroupTaskModel] = Field(default_factory=dict)
    lawsuite: Optional[Dict[str, Any]] = None
    reports: Dict[str, Any] = Field(default_factory=dict)

    @field_validator("families", "decompositions")
    @classmethod
    def _no_negative_points(cls, value):
        for name, blocks in value.items():
            if any(x < 0 for block in blocks for x in block):
                raise ValueError(f"'{name}' contiene indices negativos")
        return value

    @model_validator(mode="after")
    def _indices_in_range(self):
        if self.ground_set is None:
            if self.families or self.entourages or self.subsets or self.chains or self.decompositions:
                raise ValueError("families/entourages/subsets/chains/decompositions requieren ground_set")
            return self
        size = self.ground_set.size

        def check(points, where):
            for x in points:
                if not 0 <= x < size:
                    raise ValueError(f"Indice {x} fuera de 0..{size - 1} en {where}")

        for name, blocks in self.families.items():
            for block in blocks:
                check(block, f"families.{name}")
        for name, pairs in self.entourages.items():
            for pair in pairs:
                check(pair, f"entourages.{name}")
        for name, points in self.subsets.items():
            check(points, f"subsets.{name}")
        for name, levels in self.chains.items():
            for level in levels:
                for block in level:
                    check(block, f"chains.{name}")
        for name, parts in self.decompositions.items():
            for part in parts:
                check(part, f"decompositions.{name}")
        for name, function in self.functions.items():
            if function.values is not None and len(function.values) != size:
                raise ValueError(f"functions.{name} necesita {size} valores")
        for name, exhaustion in self.exhaustions.items():
            for stage in exhaustion.stages or []:
                check(stage, f"exhaustions.{name}")
        for name, mapping in self.maps.items():
            for ref in (mapping.source, mapping.target):
                if ref not in self.metrics:
                    raise ValueError(f"maps.{name} referencia la metrica inexistente '{ref}'")
            if len(mapping.images) != self.metrics[mapping.source].point_count():
                raise ValueError(f"maps.{name} necesita una imagen por punto de '{mapping.source}'")
            target_size = self.metrics[mapping.target].point_count()
            if any(not 0 <= y < target_size for y in mapping.images):
                raise ValueError(f"maps.{name} tiene imagenes fuera de '{mapping.target}'")
        return self


class Workspace:
    """Vista de un WorkspaceFile que construye objetos de coarse_kit bajo demanda."""

    def __init__(self, model: WorkspaceFile):
        self.model = model

    @classmethod
    def from_json(cls, text: str) -> "Workspace":
        return cls(WorkspaceFile.model_validate_json(text))

    @classmethod
    def empty(cls) -> "Workspace":
        return cls(WorkspaceFile())

    def universe(self) -> GroundSet:
        gs = self.model.ground_set
        if gs is None:
            raise SchemaError("El workspace no define ground_set")
        return GroundSet(gs.size, tuple(gs.labels) if gs.labels else None)

    def _require(self, section: str, name: Optional[str]) -> str:
        entries = getattr(self.model, section)
        if not entries:
            raise SchemaError(f"El workspace no tiene {section}")
        if name is None:
            return next(iter(entries))
        if name not in entries:
            raise SchemaError(f"{section}.{name} no existe")
        return name

    def family(self, name: Optional[str] = None) -> Tuple[str, Family]:
        name = self._require("families", name)
        return name, Family.of(self.universe(), self.model.families[name])

    def entourage(self, name: Optional[str] = None) -> Tuple[str, Entourage]:
        name = self._require("entourages", name)
        return name, Entourage.of(self.universe(), (tuple(p) for p in self.model.entourages[name]))

    def subset(self, name: Optional[str] = None) -> Tuple[str, PointSet]:
        name = self._require("subsets", name)
        return name, self.universe().subset(self.model.subsets[name])

    def _metric_universe(self, count: int) -> GroundSet:
        gs = self.model.ground_set
        if gs is not None and gs.size == count:
            return self.universe()
        return GroundSet(count)

    def metric(self, name: Optional[str] = None) -> Tuple[str, ExtMetric]:
        name = self._require("metrics", name)
        spec = self.model.metrics[name]
        universe = self._metric_universe(spec.point_count())
        if spec.matrix is not None:
            rows = [[_to_float(v) for v in row] for row in spec.matrix]
            return name, ExtMetric(universe, rows, check_triangle=spec.truncated_depth is None)
        if spec.window is not None:
            grid = BoxWindow(tuple(spec.window)).grid_metric()
            return name, ExtMetric(universe, grid.dist, check_triangle=False)
        built = path_metric(spec.size, spec.edges)
        return name, ExtMetric(universe, built.dist, check_triangle=False)

    def window(self, name: Optional[str] = None) -> Optional[BoxWindow]:
        name = self._require("metrics", name)
        spec = self.model.metrics[name]
        return BoxWindow(tuple(spec.window)) if spec.window is not None else None

    def chain(self, name: Optional[str] = None) -> Tuple[str, ScaleChain]:
        name = self._require("chains", name)
        universe = self.universe()
        levels = tuple(Family.of(universe, level) for level in self.model.chains[name])
        return name, ScaleChain(universe, levels)

    def function(self, name: Optional[str] = None) -> Tuple[str, RealFunction]:
        name = self._require("functions", name)
        spec = self.model.functions[name]
        if spec.values is not None:
            return name, RealFunction(self.universe(), spec.values)
        return name, named_function(spec.name, self.universe(), **spec.params)

    def exhaustion(self, name: Optional[str] = None) -> Tuple[str, Exhaustion]:
        name = self._require("exhaustions", name)
        spec = self.model.exhaustions[name]
        universe = self.universe()
        if spec.stages is not None:
            return name, Exhaustion(universe, tuple(universe.subset(s) for s in spec.stages))
        return name, prefix_exhaustion(universe, spec.prefix_step, spec.include_full)

    def point_map(self, name: Optional[str] = None) -> Tuple[str, PointMap, ExtMetric, ExtMetric]:
        name = self._require("maps", name)
        spec = self.model.maps[name]
        _, source = self.metric(spec.source)
        _, target = self.metric(spec.target)
        return name, PointMap(source.universe, target.universe, tuple(spec.images)), source, target

    def group_task(self, name: Optional[str] = None) -> Tuple[str, GroupTaskModel]:
        name = self._require("groups", name)
        return name, self.model.groups[name]

    def add(self, section: str, name: str, value: Any):
        """Agrega un objeto serializado a una seccion y revalida el documento."""
        data = self.model.model_dump()
        data.setdefault(section, {})[name] = value
        self.model = WorkspaceFile.model_validate(data)

    def to_dict(self) -> dict:
        return self.model.model_dump(exclude_none=True, exclude_defaults=True)


def metric_rows(metric: ExtMetric) -> List[List[Distance]]:
    return [["inf" if math.isinf(v) else v for v in row] for row in metric.rows()]


def load_workspace(path: Optional[str], required: bool = True) -> Workspace:
    """Lee y valida el workspace de --input; sin ruta devuelve uno vacio si no es obligatorio."""
    if not path:
        if required:
            raise SchemaError("Este subcomando necesita --input")
        return Workspace.empty()
    return Workspace.from_json(load_file_safe(path, "Workspace"))
