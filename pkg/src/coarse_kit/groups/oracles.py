"""Oraculos de grupo con formas normales exactas.

Cada oraculo es inmutable: expone identidad, producto, inverso, generadores,
una codificacion canonica en texto y una clave de orden total usada para
elegir el "menor" elemento en forma determinista.
"""
from __future__ import annotations

import random
from abc import ABC, abstractmethod
from collections import deque
from dataclasses import dataclass
from typing import Any, Dict, FrozenSet, Hashable, Iterable, List, Optional, Sequence, Tuple

from coarse_kit.errors import GroupDescriptorError
from coarse_kit.groups.dyadic import Dyadic


@dataclass(frozen=True)
class GroupElement:
    """Forma normal opaca; igualdad de payload equivale a igualdad en el grupo."""
    payload: Hashable


FiniteSubset = FrozenSet[GroupElement]


class GroupOracle(ABC):
    kind: str = ""

    @property
    @abstractmethod
    def identity(self) -> GroupElement:
        """Elemento neutro."""

    @abstractmethod
    def multiply(self, g: GroupElement, h: GroupElement) -> GroupElement:
        """Producto g*h en forma normal."""

    @abstractmethod
    def invert(self, g: GroupElement) -> GroupElement:
        """Inverso en forma normal."""

    @property
    @abstractmethod
    def generators(self) -> Tuple[GroupElement, ...]:
        """Generadores, sin la identidad."""

    @abstractmethod
    def encode(self, g: GroupElement) -> str:
        """Texto canonico del elemento."""

    @abstractmethod
    def decode(self, text: str) -> GroupElement:
        """Inverso de encode."""

    @abstractmethod
    def sort_key(self, g: GroupElement) -> Tuple:
        """Clave lexicografica sobre la forma normal."""

    def describe(self) -> Dict[str, Any]:
        return {"kind": self.kind}

    def least(self, elements: Iterable[GroupElement]) -> GroupElement:
        return min(elements, key=self.sort_key)

    def sorted(self, elements: Iterable[GroupElement]) -> List[GroupElement]:
        return sorted(elements, key=self.sort_key)

    def product(self, *elements: GroupElement) -> GroupElement:
        result = self.identity
        for g in elements:
            result = self.multiply(result, g)
        return result

    def power(self, g: GroupElement, n: int) -> GroupElement:
        base = g if n >= 0 else self.invert(g)
        result = self.identity
        for _ in range(abs(n)):
            result = self.multiply(result, base)
        return result

    def left_translate(self, x: GroupElement, subset: Iterable[GroupElement]) -> FiniteSubset:
        return frozenset(self.multiply(x, f) for f in subset)

    def right_translate(self, subset: Iterable[GroupElement], x: GroupElement) -> FiniteSubset:
        return frozenset(self.multiply(f, x) for f in subset)

    def inverse_set(self, subset: Iterable[GroupElement]) -> FiniteSubset:
        return frozenset(self.invert(f) for f in subset)

    def set_product(self, first: Iterable[GroupElement], second: Iterable[GroupElement]) -> FiniteSubset:
        second = list(second)
        return frozenset(self.multiply(f, g) for f in first for g in second)

    def symmetric_generators(self) -> List[GroupElement]:
        letters = []
        for g in self.generators:
            for candidate in (g, self.invert(g)):
                if candidate not in letters:
                    letters.append(candidate)
        return letters

    def random_element(self, rng: random.Random, max_length: int = 8) -> GroupElement:
        letters = self.symmetric_generators()
        result = self.identity
        for _ in range(rng.randint(0, max_length)):
            result = self.multiply(result, rng.choice(letters))
        return result

    def decode_all(self, texts: Iterable[str]) -> FiniteSubset:
        return frozenset(self.decode(t) for t in texts)

    def encode_all(self, elements: Iterable[GroupElement]) -> List[str]:
        return [self.encode(g) for g in self.sorted(elements)]


def word_ball(oracle: GroupOracle, radius: int) -> FiniteSubset:
    """Bola de la metrica de palabras en el grafo de Cayley (BFS sobre generadores e inversos)."""
    if radius < 0:
        raise ValueError(f"Radio negativo: {radius}")
    letters = oracle.symmetric_generators()
    seen = {oracle.identity: 0}
    queue = deque([oracle.identity])
    while queue:
        g = queue.popleft()
        if seen[g] == radius:
            continue
        for letter in letters:
            h = oracle.multiply(g, letter)
            if h not in seen:
                seen[h] = seen[g] + 1
                queue.append(h)
    return frozenset(seen)


class ZnOracle(GroupOracle):
    """Z^n aditivo; payload = tupla de enteros."""
    kind = "Zn"

    def __init__(self, n: int):
        if n < 1:
            raise GroupDescriptorError(f"Z^n necesita n >= 1: {n}")
        self.n = n
        self._identity = GroupElement((0,) * n)
        self._generators = tuple(
            GroupElement(tuple(1 if i == j else 0 for j in range(n))) for i in range(n)
        )

    @property
    def identity(self) -> GroupElement:
        return self._identity

    @property
    def generators(self) -> Tuple[GroupElement, ...]:
        return self._generators

    def element(self, *coords: int) -> GroupElement:
        if len(coords) != self.n:
            raise ValueError(f"Se esperaban {self.n} coordenadas")
        return GroupElement(tuple(int(c) for c in coords))

    def multiply(self, g: GroupElement, h: GroupElement) -> GroupElement:
        return GroupElement(tuple(a + b for a, b in zip(g.payload, h.payload)))

    def invert(self, g: GroupElement) -> GroupElement:
        return GroupElement(tuple(-a for a in g.payload))

    def encode(self, g: GroupElement) -> str:
        return ",".join(str(a) for a in g.payload)

    def decode(self, text: str) -> GroupElement:
        try:
            coords = tuple(int(part) for part in text.split(","))
        except ValueError as exc:
            raise GroupDescriptorError(f"Elemento de Z^{self.n} invalido: {text!r}") from exc
        if len(coords) != self.n:
            raise GroupDescriptorError(f"Elemento de Z^{self.n} invalido: {text!r}")
        return GroupElement(coords)

    def sort_key(self, g: GroupElement) -> Tuple:
        return tuple(g.payload)

    def describe(self) -> Dict[str, Any]:
        return {"kind": self.kind, "n": self.n}


_FREE_LETTERS = "xyzuvw"


class FreeGroupOracle(GroupOracle):
    """Grupo libre de rango k; payload = palabra reducida, mayuscula = inverso."""
    kind = "free"

    def __init__(self, rank: int):
        if not 1 <= rank <= len(_FREE_LETTERS):
            raise GroupDescriptorError(f"Rango de grupo libre fuera de 1..{len(_FREE_LETTERS)}: {rank}")
        self.rank = rank
        self.letters = _FREE_LETTERS[:rank]
        self._generators = tuple(GroupElement(letter) for letter in self.letters)

    @property
    def identity(self) -> GroupElement:
        return GroupElement("")

    @property
    def generators(self) -> Tuple[GroupElement, ...]:
        return self._generators

    @staticmethod
    def _reduce(word: str) -> str:
        stack: List[str] = []
        for letter in word:
            if stack and stack[-1] == letter.swapcase():
                stack.pop()
            else:
                stack.append(letter)
        return "".join(stack)

    def word(self, text: str) -> GroupElement:
        return self.decode(text)

    def multiply(self, g: GroupElement, h: GroupElement) -> GroupElement:
        return GroupElement(self._reduce(g.payload + h.payload))

    def invert(self, g: GroupElement) -> GroupElement:
        return GroupElement(g.payload[::-1].swapcase())

    def encode(self, g: GroupElement) -> str:
        return g.payload or "1"

    def decode(self, text: str) -> GroupElement:
        text = text.strip()
        if text in ("", "1"):
            return self.identity
        allowed = set(self.letters) | set(self.letters.upper())
        if any(letter not in allowed for letter in text):
            raise GroupDescriptorError(f"Palabra invalida para F_{self.rank}: {text!r}")
        return GroupElement(self._reduce(text))

    def sort_key(self, g: GroupElement) -> Tuple:
        return (len(g.payload), g.payload)

    def describe(self) -> Dict[str, Any]:
        return {"kind": self.kind, "rank": self.rank}


class BS12Oracle(GroupOracle):
    """BS(1,2) = <a,t | t a t^-1 = a^2> como pares (q, n), q diadico.

    (q1,n1)(q2,n2) = (q1 + 2^n1 q2, n1 + n2); a = (1,0), t = (0,1).
    """
    kind = "bs12"

    def __init__(self):
        self.a = GroupElement((Dyadic(1), 0))
        self.t = GroupElement((Dyadic(0), 1))

    @property
    def identity(self) -> GroupElement:
        return GroupElement((Dyadic(0), 0))

    @property
    def generators(self) -> Tuple[GroupElement, ...]:
        return (self.a, self.t)

    def element(self, numerator: int, exponent: int, height: int) -> GroupElement:
        return GroupElement((Dyadic(numerator, exponent), int(height)))

    def multiply(self, g: GroupElement, h: GroupElement) -> GroupElement:
        q1, n1 = g.payload
        q2, n2 = h.payload
        return GroupElement((q1 + q2.scale(n1), n1 + n2))

    def invert(self, g: GroupElement) -> GroupElement:
        q, n = g.payload
        return GroupElement((-q.scale(-n), -n))

    def encode(self, g: GroupElement) -> str:
        q, n = g.payload
        return f"{q}|{n}"

    def decode(self, text: str) -> GroupElement:
        try:
            q_text, n_text = text.split("|")
            return GroupElement((Dyadic.from_string(q_text), int(n_text)))
        except ValueError as exc:
            raise GroupDescriptorError(f"Elemento de BS(1,2) invalido: {text!r}") from exc

    def sort_key(self, g: GroupElement) -> Tuple:
        q, n = g.payload
        return (n, q.exponent, q.numerator)

    def search_space(self, max_numerator: int, max_exponent: int, max_height: int) -> List[GroupElement]:
        """Formas normales (m/2^j, n) con |m| <= M, j <= J, |n| <= N, sin repetidos."""
        elements = {
            self.element(m, j, n)
            for n in range(-max_height, max_height + 1)
            for j in range(max_exponent + 1)
            for m in range(-max_numerator, max_numerator + 1)
        }
        return self.sorted(elements)


class FiniteTableOracle(GroupOracle):
    """Grupo finito dado por su tabla de multiplicar; payload = indice."""
    kind = "table"

    def __init__(self, table: Sequence[Sequence[int]], generators: Optional[Sequence[int]] = None):
        rows = [tuple(int(v) for v in row) for row in table]
        size = len(rows)
        if size == 0 or any(len(row) != size for row in rows):
            raise GroupDescriptorError("La tabla debe ser cuadrada y no vacia")
        if any(not 0 <= v < size for row in rows for v in row):
            raise GroupDescriptorError("Entradas de la tabla fuera de rango")
        self.table = tuple(rows)
        self.size = size
        identity = next(
            (e for e in range(size) if all(rows[e][g] == g and rows[g][e] == g for g in range(size))),
            None,
        )
        if identity is None:
            raise GroupDescriptorError("La tabla no tiene identidad")
        self._identity_index = identity
        self._inverses = []
        for g in range(size):
            inverse = next((h for h in range(size) if rows[g][h] == identity and rows[h][g] == identity), None)
            if inverse is None:
                raise GroupDescriptorError(f"El elemento {g} no tiene inverso")
            self._inverses.append(inverse)
        for a in range(size):
            for b in range(size):
                ab = rows[a][b]
                for c in range(size):
                    if rows[ab][c] != rows[a][rows[b][c]]:
                        raise GroupDescriptorError(f"La tabla no es asociativa en ({a},{b},{c})")
        chosen = [int(g) for g in generators] if generators is not None else [g for g in range(size) if g != identity]
        if any(not 0 <= g < size for g in chosen):
            raise GroupDescriptorError(f"Generadores fuera de rango 0..{size - 1}: {chosen}")
        if identity in chosen:
            raise GroupDescriptorError("Los generadores no pueden incluir la identidad")
        self._generators = tuple(GroupElement(int(g)) for g in chosen)

    @property
    def identity(self) -> GroupElement:
        return GroupElement(self._identity_index)

    @property
    def generators(self) -> Tuple[GroupElement, ...]:
        return self._generators

    def multiply(self, g: GroupElement, h: GroupElement) -> GroupElement:
        return GroupElement(self.table[g.payload][h.payload])

    def invert(self, g: GroupElement) -> GroupElement:
        return GroupElement(self._inverses[g.payload])

    def encode(self, g: GroupElement) -> str:
        return str(g.payload)

    def decode(self, text: str) -> GroupElement:
        try:
            value = int(text)
        except ValueError as exc:
            raise GroupDescriptorError(f"Elemento de tabla invalido: {text!r}") from exc
        if not 0 <= value < self.size:
            raise GroupDescriptorError(f"Elemento de tabla fuera de rango: {value}")
        return GroupElement(value)

    def sort_key(self, g: GroupElement) -> Tuple:
        return (g.payload,)

    def describe(self) -> Dict[str, Any]:
        return {"kind": self.kind, "mul": [list(row) for row in self.table]}


def oracle_from_descriptor(descriptor: Dict[str, Any]) -> GroupOracle:
    """Construye un oraculo desde {"kind": "Zn"|"free"|"bs12"|"table", ...}."""
    kind = descriptor.get("kind")
    try:
        if kind == "Zn":
            return ZnOracle(int(descriptor["n"]))
        if kind == "free":
            return FreeGroupOracle(int(descriptor["rank"]))
        if kind == "bs12":
            return BS12Oracle()
        if kind == "table":
            return FiniteTableOracle(descriptor["mul"], descriptor.get("generators"))
    except KeyError as exc:
        raise GroupDescriptorError(f"Descriptor '{kind}' sin el campo {exc}") from exc
    raise GroupDescriptorError(f"Tipo de grupo desconocido: {kind!r}")
