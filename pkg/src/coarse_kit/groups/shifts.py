"""Estructuras de traslaciones izquierda/derecha y busqueda de divergencia."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple

import structlog

from coarse_kit.core.families import Family
from coarse_kit.core.sets import GroundSet, PointSet
from coarse_kit.errors import EmptyMemberError, WindowError
from coarse_kit.groups.oracles import FiniteSubset, GroupElement, GroupOracle

logger = structlog.get_logger(__name__)


def left_shift_family(
    oracle: GroupOracle, subset: FiniteSubset, basepoints: Sequence[GroupElement]
) -> List[FiniteSubset]:
    """[x*F for x in basepoints]."""
    return [oracle.left_translate(x, subset) for x in basepoints]


def right_shift_family(
    oracle: GroupOracle, subset: FiniteSubset, basepoints: Sequence[GroupElement]
) -> List[FiniteSubset]:
    """[F*x for x in basepoints]."""
    return [oracle.right_translate(subset, x) for x in basepoints]


def left_witness(oracle: GroupOracle, members: Sequence[FiniteSubset]) -> FiniteSubset:
    """F = union de b_B^-1 * B, con b_B el menor elemento de B; garantiza B en b_B*F."""
    witness = set()
    for i, member in enumerate(members):
        if not member:
            raise EmptyMemberError(f"El miembro {i} es vacio")
        basepoint = oracle.least(member)
        witness.update(oracle.left_translate(oracle.invert(basepoint), member))
    return frozenset(witness)


def cover_candidates(
    oracle: GroupOracle, x: GroupElement, shifts: FiniteSubset, subset: FiniteSubset
) -> List[FiniteSubset]:
    """Para cada e en E, el conjunto F^-1*(x*e) de los y con x*e en F*y."""
    inverses = oracle.inverse_set(subset)
    return [
        oracle.right_translate(inverses, oracle.multiply(x, e))
        for e in oracle.sorted(shifts)
    ]


def shift_cover_search(
    oracle: GroupOracle, x: GroupElement, shifts: FiniteSubset, subset: FiniteSubset
) -> Optional[GroupElement]:
    """Algun y con x*E contenido en F*y (el menor), o None."""
    if not shifts or not subset:
        raise EmptyMemberError("E y F deben ser no vacios")
    candidates = None
    for options in cover_candidates(oracle, x, shifts, subset):
        candidates = set(options) if candidates is None else candidates & options
        if not candidates:
            return None
    return oracle.least(candidates)


def divergence_search(
    oracle: GroupOracle,
    shifts: FiniteSubset,
    subset: FiniteSubset,
    search_space: Sequence[GroupElement],
) -> Optional[GroupElement]:
    """Primer x del espacio de busqueda tal que ninguna traslacion derecha de F cubre x*E."""
    for examined, x in enumerate(search_space, start=1):
        if shift_cover_search(oracle, x, shifts, subset) is None:
            logger.debug("groups.divergence_witness", examined=examined, witness=oracle.encode(x))
            return x
    logger.debug("groups.divergence_none", examined=len(search_space))
    return None


def shift_star_bound(oracle: GroupOracle, first: FiniteSubset, second: FiniteSubset) -> FiniteSubset:
    """F = F1*F2*F2 con F2 simetrizado (y con la identidad)."""
    symmetric = set(second) | oracle.inverse_set(second) | {oracle.identity}
    return oracle.set_product(oracle.set_product(first, symmetric), symmetric)


@dataclass(frozen=True)
class ElementWindow:
    """Lista finita de elementos vista como GroundSet, para aplicar el calculo de estrellas."""
    oracle: GroupOracle
    elements: Tuple[GroupElement, ...]

    def __post_init__(self):
        elements = tuple(self.oracle.sorted(set(self.elements)))
        object.__setattr__(self, "elements", elements)
        object.__setattr__(self, "_index", {g: i for i, g in enumerate(elements)})
        object.__setattr__(
            self, "_universe", GroundSet(len(elements), tuple(self.oracle.encode(g) for g in elements))
        )

    def universe(self) -> GroundSet:
        return self._universe

    def index(self, g: GroupElement) -> Optional[int]:
        return self._index.get(g)

    def contains(self, subset: Iterable[GroupElement]) -> bool:
        return all(g in self._index for g in subset)

    def to_pointset(self, subset: Iterable[GroupElement], clip: bool = False) -> PointSet:
        indices = []
        for g in subset:
            i = self._index.get(g)
            if i is None:
                if clip:
                    continue
                raise WindowError(f"{self.oracle.encode(g)} no esta en la ventana")
            indices.append(i)
        return PointSet(self.universe(), frozenset(indices))

    def to_family(self, members: Iterable[FiniteSubset], clip: bool = False) -> Family:
        return Family(self.universe(), tuple(self.to_pointset(m, clip) for m in members))

    def to_elements(self, subset: PointSet) -> FiniteSubset:
        return frozenset(self.elements[i] for i in subset.members)

