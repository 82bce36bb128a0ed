"""Affine forms on the six SL3 coordinates (l1, l2, m1, m2, n1, n2).

Formulas are written with the nine GL3 parts; ``l3`` and ``m3`` are set to
zero and ``n3`` is replaced by ``l1 + l2 + m1 + m2 - n1 - n2`` when parsed.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

COORDS = ("l1", "l2", "m1", "m2", "n1", "n2")

# Each GL3 variable as (constant, 6 coefficients) in SL3 coordinates.
_SUBSTITUTION = {
    "l1": (1, 0, 0, 0, 0, 0),
    "l2": (0, 1, 0, 0, 0, 0),
    "l3": (0, 0, 0, 0, 0, 0),
    "m1": (0, 0, 1, 0, 0, 0),
    "m2": (0, 0, 0, 1, 0, 0),
    "m3": (0, 0, 0, 0, 0, 0),
    "n1": (0, 0, 0, 0, 1, 0),
    "n2": (0, 0, 0, 0, 0, 1),
    "n3": (1, 1, 1, 1, -1, -1),
}

_TERM = re.compile(r"([+-])?\s*(\d*)\s*\*?\s*([lmn][123])?")


def nu3(point: Sequence[int]) -> int:
    """Third part of nu forced by weight balance."""
    l1, l2, m1, m2, n1, n2 = point
    return l1 + l2 + m1 + m2 - n1 - n2


@dataclass(frozen=True)
class AffineForm:
    constant: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) != 6:
            raise ValueError("an affine form needs 6 coefficients")

    def __call__(self, point: Sequence[int]) -> int:
        return self.constant + sum(c * x for c, x in zip(self.coeffs, point))

    def linear(self, vector: Sequence[int]) -> int:
        """Value of the linear part only."""
        return sum(c * x for c, x in zip(self.coeffs, vector))

    def compose(self, matrix: Sequence[Sequence]) -> "AffineForm":
        """The form p -> self(matrix @ p).

        Raises ValueError if the result has non-integer coefficients.
        """
        coeffs = []
        for j in range(6):
            c = sum(Fraction(self.coeffs[i]) * Fraction(matrix[i][j]) for i in range(6))
            if c.denominator != 1:
                raise ValueError("composition leaves the integers")
            coeffs.append(int(c))
        return AffineForm(self.constant, tuple(coeffs))

    def to_json(self) -> dict:
        return {"constant": self.constant, "coeffs": list(self.coeffs)}

    @classmethod
    def from_json(cls, obj) -> "AffineForm":
        constant, coeffs = obj["constant"], obj["coeffs"]
        if not isinstance(constant, int) or not all(isinstance(c, int) for c in coeffs):
            raise TypeError("affine form entries must be integers")
        return cls(constant, tuple(coeffs))

    def __str__(self):
        out = str(self.constant) if self.constant else ""
        for c, name in zip(self.coeffs, COORDS):
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = "" if abs(c) == 1 else str(abs(c))
            out += f" {sign} {mag}{name}" if out else f"{'-' if c < 0 else ''}{mag}{name}"
        return out or "0"


def parse_form(text: str) -> AffineForm:
    """Parse a linear expression such as ``"1 - l3 - m3 + n3"``."""
    text = text.strip()
    constant = 0
    coeffs = [0] * 6
    pos = 0
    while pos < len(text):
        m = _TERM.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse {text!r} at position {pos}")
        sign, number, var = m.groups()
        if not number and not var:
            raise ValueError(f"dangling sign in {text!r}")
        k = (-1 if sign == "-" else 1) * (int(number) if number else 1)
        if var is None:
            constant += k
        else:
            sub = _SUBSTITUTION[var]
            for i in range(6):
                coeffs[i] += k * sub[i]
        pos = m.end()
        while pos < len(text) and text[pos].isspace():
            pos += 1
    return AffineForm(constant, tuple(coeffs))


def coordinate_map(outputs: Sequence[str]) -> tuple[tuple[int, ...], ...]:
    """Integer matrix of a linear map given by six output expressions."""
    rows = []
    for expr in outputs:
        form = parse_form(expr)
        if form.constant:
            raise ValueError(f"{expr!r} is not linear")
        rows.append(form.coeffs)
    return tuple(rows)
