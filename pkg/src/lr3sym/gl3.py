"""Passing between GL3 coefficients and the six-coordinate SL3 function C."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import NamedTuple, Sequence

from .chamber import evaluate_C
from .errors import ValidationFailure
from .oracle import safe_lr


class GL3Triple(NamedTuple):
    lam: tuple[int, int, int]
    mu: tuple[int, int, int]
    nu: tuple[int, int, int]

    @classmethod
    def of(cls, lam: Sequence[int], mu: Sequence[int], nu: Sequence[int]) -> "GL3Triple":
        def pad(p):
            p = tuple(int(a) for a in p)
            if len(p) > 3:
                raise ValueError(f"{p} has more than 3 parts")
            return p + (0,) * (3 - len(p))
        return cls(pad(lam), pad(mu), pad(nu))

    def to_json(self) -> list[list[int]]:
        return [list(self.lam), list(self.mu), list(self.nu)]

    @classmethod
    def from_json(cls, obj) -> "GL3Triple":
        lam, mu, nu = obj
        if any(len(p) != 3 for p in (lam, mu, nu)):
            raise ValueError("expected [[3 ints],[3 ints],[3 ints]]")
        return cls.of(lam, mu, nu)


def coefficient(t: GL3Triple) -> int:
    """c^nu_{lam, mu}; 0 when some component is not a partition."""
    return safe_lr(t.lam, t.mu, t.nu)


def is_balanced(t: GL3Triple) -> bool:
    return sum(t.lam) + sum(t.mu) == sum(t.nu)


def reduce_to_sl3(t: GL3Triple) -> tuple[int, ...]:
    """Strip full columns from lam and mu (and the matching ones from nu).

    The third part of nu is dropped, so the coefficient of ``t`` equals C at
    the result only when ``t`` is weight balanced; see ``coefficient_via_C``.
    """
    (l1, l2, l3), (m1, m2, m3), (n1, n2, _) = t
    shift = l3 + m3
    return (l1 - l3, l2 - l3, m1 - m3, m2 - m3, n1 - shift, n2 - shift)


def coefficient_via_C(t: GL3Triple) -> int:
    """The coefficient of ``t`` computed through the chamber formulas."""
    return evaluate_C(reduce_to_sl3(t)) if is_balanced(t) else 0


def gl3_extra_generator(t: GL3Triple) -> GL3Triple:
    """Move m = lam3 - mu3 full columns from lam to mu; an involution."""
    m = t.lam[2] - t.mu[2]
    return GL3Triple(
        tuple(a - m for a in t.lam), tuple(a + m for a in t.mu), t.nu)


def gl3_triples(bound: int):
    """All triples of partitions with at most 3 parts, each part <= bound."""
    parts = [p for p in itertools.combinations_with_replacement(range(bound, -1, -1), 3)]
    for lam, mu, nu in itertools.product(parts, repeat=3):
        yield GL3Triple(lam, mu, nu)


@dataclass
class GL3Report:
    bound: int
    triples: int
    nonzero: int
    mismatches: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches


def check_gl3_generator(bound: int, strict: bool = True) -> GL3Report:
    """Check that the extra GL3 generator preserves every coefficient up to ``bound``."""
    if bound < 0:
        raise ValueError("bound must be nonnegative")
    report = GL3Report(bound, 0, 0)
    for t in gl3_triples(bound):
        report.triples += 1
        a, b = coefficient(t), coefficient(gl3_extra_generator(t))
        report.nonzero += a != 0
        if a != b:
            if strict:
                raise ValidationFailure(f"{t}: {a} != {b} after the extra generator", t)
            report.mismatches.append((t, a, b))
    return report
