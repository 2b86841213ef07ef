"""Dense univariate polynomials with exact integer coefficients."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable


def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = [int(x) for x in coeffs]
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True)
class Polynomial:
    """``coeffs[i]`` is the coefficient of ``q**i``; zero is the empty tuple."""

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int] = ()):
        object.__setattr__(self, "coeffs", _trim(coeffs))

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> Polynomial:
        return cls([0] * k + [c])

    @classmethod
    def falling_factorial(cls, k: int) -> Polynomial:
        """q (q-1) ... (q-k+1); the constant 1 for k = 0."""
        p = cls([1])
        for j in range(k):
            p = p * cls([-j, 1])
        return p

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: Polynomial) -> Polynomial:
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return Polynomial([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])

    def __neg__(self) -> Polynomial:
        return Polynomial([-x for x in self.coeffs])

    def __sub__(self, other: Polynomial) -> Polynomial:
        return self + (-other)

    def __mul__(self, other: Polynomial | int) -> Polynomial:
        if isinstance(other, int):
            return Polynomial([x * other for x in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Polynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return Polynomial(out)

    __rmul__ = __mul__

    def __call__(self, q: int) -> int:
        return eval_poly(self, q)

    def __str__(self) -> str:
        return format_poly(self)

    def to_json(self) -> str:
        return json.dumps([str(c) for c in self.coeffs])

    @classmethod
    def from_json(cls, text: str) -> Polynomial:
        data = json.loads(text)
        if not isinstance(data, list) or not all(isinstance(s, str) for s in data):
            raise ValueError("polynomial JSON must be an array of decimal strings")
        return cls(int(s) for s in data)


def eval_poly(p: Polynomial, q: int) -> int:
    """Horner evaluation; exact for integer ``q``."""
    acc = 0
    for c in reversed(p.coeffs):
        acc = acc * q + c
    return acc


def format_poly(p: Polynomial, var: str = "q") -> str:
    if p.is_zero():
        return "0"
    parts = []
    for k in range(p.degree, -1, -1):
        c = p.coeffs[k]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            mono = var if k == 1 else f"{var}^{k}"
            body = mono if mag == 1 else f"{mag}{mono}"
        parts.append((sign, body))
    first_sign, first = parts[0]
    text = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        text += f" {sign} {body}"
    return text
