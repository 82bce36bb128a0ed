"""Brute-force Littlewood-Richardson coefficients from LR tableaux.

This module is deliberately independent of the chamber complex: it is the
ground truth the piecewise formulas are checked against.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Sequence

Partition = tuple  # tuple[int, ...], weakly decreasing, no trailing zeros


def partition(parts: Iterable[int]) -> Partition:
    """Normalize ``parts`` to a partition, stripping trailing zeros.

    Raises ValueError if the parts are negative or not weakly decreasing.
    """
    parts = [int(x) for x in parts]
    if any(x < 0 for x in parts):
        raise ValueError(f"negative part in {parts}")
    if any(a < b for a, b in zip(parts, parts[1:])):
        raise ValueError(f"parts not weakly decreasing: {parts}")
    while parts and parts[-1] == 0:
        parts.pop()
    return tuple(parts)


def is_partition(parts: Sequence[int]) -> bool:
    return all(x >= 0 for x in parts) and all(
        a >= b for a, b in zip(parts, parts[1:])
    )


def contained(lam: Partition, nu: Partition) -> bool:
    """Young diagram containment lam <= nu."""
    return len(lam) <= len(nu) and all(a <= b for a, b in zip(lam, nu))


def complement(p: Sequence[int], height: int, width: int) -> Partition | None:
    """Complement of ``p`` in a height x width rectangle, rotated by 180 degrees.

    Returns None when ``p`` does not fit in the rectangle.
    """
    p = list(p) + [0] * (height - len(p))
    if len(p) > height or any(x > width for x in p) or any(x < 0 for x in p):
        return None
    return partition(width - x for x in reversed(p))


def _tableaux(lam: Partition, mu: Partition, nu: Partition):
    # Cells are filled top row first, each row right to left, which is exactly
    # the reverse reading word, so the lattice condition is checked on prefixes.
    lam = lam + (0,) * (len(nu) - len(lam))
    rows = [(lam[i], nu[i]) for i in range(len(nu))]
    cells = [(i, j) for i, (a, b) in enumerate(rows) for j in range(b - 1, a - 1, -1)]
    grid = {}
    counts = [0] * (len(mu) + 1)

    def fill(k):
        if k == len(cells):
            yield tuple(
                tuple(grid[i, j] for j in range(a, b)) for i, (a, b) in enumerate(rows)
            )
            return
        i, j = cells[k]
        hi = min(len(mu), i + 1)
        right = grid.get((i, j + 1))
        if right is not None:
            hi = min(hi, right)
        above = grid.get((i - 1, j))
        lo = 1 if above is None else above + 1
        for v in range(lo, hi + 1):
            if counts[v] == mu[v - 1]:
                continue
            if v > 1 and counts[v] + 1 > counts[v - 1]:
                continue
            grid[i, j] = v
            counts[v] += 1
            yield from fill(k + 1)
            counts[v] -= 1
            del grid[i, j]

    yield from fill(0)


def enumerate_lr_tableaux(lam, mu, nu) -> list:
    """All LR tableaux of shape nu/lam and content mu.

    Each tableau is a tuple of rows; row ``i`` holds the entries of the cells
    in columns ``lam[i] .. nu[i]-1`` (cells of lam are absent).
    """
    lam, mu, nu = partition(lam), partition(mu), partition(nu)
    if sum(lam) + sum(mu) != sum(nu) or not contained(lam, nu):
        return []
    return list(_tableaux(lam, mu, nu))


@lru_cache(maxsize=None)
def _count(lam: Partition, mu: Partition, nu: Partition) -> int:
    if sum(lam) + sum(mu) != sum(nu) or not contained(lam, nu):
        return 0
    if not mu:
        return 1
    return sum(1 for _ in _tableaux(lam, mu, nu))


def lr_coefficient(lam, mu, nu) -> int:
    """The Littlewood-Richardson coefficient c^nu_{lam, mu}."""
    return _count(partition(lam), partition(mu), partition(nu))


def safe_lr(lam, mu, nu) -> int:
    """Like lr_coefficient, but 0 when any argument is not a partition."""
    if sum(lam) + sum(mu) != sum(nu):
        return 0
    if not (is_partition(lam) and is_partition(mu) and is_partition(nu)):
        return 0
    return lr_coefficient(lam, mu, nu)


def oracle_C(point: Sequence[int]) -> int:
    """The SL3 function C at (l1, l2, m1, m2, n1, n2), straight from tableaux."""
    l1, l2, m1, m2, n1, n2 = point
    n3 = l1 + l2 + m1 + m2 - n1 - n2
    return safe_lr((l1, l2), (m1, m2), (n1, n2, n3))


def s3_variants(lam, mu, nu, height: int = 3) -> list:
    """The six triples related by the S3 symmetry, complements in height x nu1.

    An entry is None when a complement does not exist (then the coefficient of
    the original triple is 0).
    """
    width = nu[0] if nu else 0
    lc, mc, nc = (complement(p, height, width) for p in (lam, mu, nu))
    return [
        (lam, mu, nu),
        (mu, lam, nu),
        None if None in (nc, lc) else (mu, nc, lc),
        None if None in (nc, lc) else (nc, mu, lc),
        None if None in (nc, mc) else (nc, lam, mc),
        None if None in (nc, mc) else (lam, nc, mc),
    ]


def dual_triple(lam, mu, nu, height: int = 3):
    """Complements of lam, mu, nu in rectangles of widths lam1, mu1, lam1 + mu1."""
    l1 = lam[0] if lam else 0
    m1 = mu[0] if mu else 0
    parts = (complement(lam, height, l1), complement(mu, height, m1), complement(nu, height, l1 + m1))
    return None if None in parts else parts
