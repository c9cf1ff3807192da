"""Racionales diadicos exactos m / 2^j (sin punto flotante)."""
from __future__ import annotations

import re

_DYADIC_RE = re.compile(r"^\s*(?P<num>[-+]?\d+)(?:/2\^(?P<exp>\d+))?\s*$")


class Dyadic:
    """numerator / 2**exponent en forma canonica: exponent >= 0 y numerador impar si exponent > 0."""

    __slots__ = ("_numerator", "_exponent")

    def __new__(cls, numerator: int = 0, exponent: int = 0):
        self = super().__new__(cls)
        numerator = int(numerator)
        exponent = int(exponent)
        if exponent < 0:
            numerator <<= -exponent
            exponent = 0
        if numerator == 0:
            exponent = 0
        else:
            while exponent > 0 and numerator % 2 == 0:
                numerator //= 2
                exponent -= 1
        self._numerator = numerator
        self._exponent = exponent
        return self

    @classmethod
    def from_string(cls, text: str) -> "Dyadic":
        match = _DYADIC_RE.match(text)
        if match is None:
            raise ValueError(f"Diadico invalido: {text!r}")
        return cls(int(match.group("num")), int(match.group("exp") or 0))

    @property
    def numerator(self) -> int:
        return self._numerator

    @property
    def exponent(self) -> int:
        return self._exponent

    def scale(self, power: int) -> "Dyadic":
        """self * 2**power, con power entero de cualquier signo."""
        return Dyadic(self._numerator, self._exponent - power)

    def __add__(self, other: "Dyadic") -> "Dyadic":
        if not isinstance(other, Dyadic):
            return NotImplemented
        exponent = max(self._exponent, other._exponent)
        total = (self._numerator << (exponent - self._exponent)) + (
            other._numerator << (exponent - other._exponent)
        )
        return Dyadic(total, exponent)

    def __neg__(self) -> "Dyadic":
        return Dyadic(-self._numerator, self._exponent)

    def __sub__(self, other: "Dyadic") -> "Dyadic":
        if not isinstance(other, Dyadic):
            return NotImplemented
        return self + (-other)

    def __eq__(self, other) -> bool:
        if isinstance(other, Dyadic):
            return self._numerator == other._numerator and self._exponent == other._exponent
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self._numerator, self._exponent))

    def __lt__(self, other: "Dyadic") -> bool:
        exponent = max(self._exponent, other._exponent)
        return (self._numerator << (exponent - self._exponent)) < (
            other._numerator << (exponent - other._exponent)
        )

    def __bool__(self) -> bool:
        return self._numerator != 0

    def __str__(self) -> str:
        return f"{self._numerator}/2^{self._exponent}"

    def __repr__(self) -> str:
        return f"Dyadic({self._numerator}, {self._exponent})"
