"""The chamber complex of the SL3 Littlewood-Richardson function C.

C(l1, l2, m1, m2, n1, n2) is the coefficient c^{(n1, n2, n3)}_{(l1, l2), (m1, m2)}
with n3 = l1 + l2 + m1 + m2 - n1 - n2, and 0 off the partition region.  On each
of 18 simplicial cones it agrees with an affine formula.
"""

from __future__ import annotations

import itertools
import json
import logging
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from . import exactmath as em
from .errors import DataCorrupt, InconsistentFormulas, SingularMatrix, ValidationFailure
from .forms import AffineForm, nu3, parse_form
from .oracle import oracle_C

log = logging.getLogger(__name__)

__all__ = [
    "RAY_ORDER", "RAYS", "Chamber", "ChamberComplex", "load_complex", "nu3",
    "chambers_containing", "evaluate_C", "evaluate_many", "cross_validate",
]

RAY_ORDER = ("b", "c", "f", "d1", "e1", "g1", "d2", "e2", "g2")

RAYS = {
    "b": (2, 1, 2, 1, 3, 2),
    "c": (1, 1, 1, 1, 2, 1),
    "f": (1, 0, 1, 0, 1, 1),
    "d1": (1, 1, 1, 0, 1, 1),
    "e1": (1, 1, 0, 0, 1, 1),
    "g1": (1, 0, 0, 0, 1, 0),
    "d2": (1, 0, 1, 1, 1, 1),
    "e2": (0, 0, 1, 1, 1, 1),
    "g2": (0, 0, 1, 0, 1, 0),
}

# Generators and formulas as tabulated, nu1 read for nu3 in k13 and k14.
_TABLE = [
    ("k1", "b c d1 e2 d2 e1", "1 - l2 - m2 + n1"),
    ("k2", "b c d1 g1 d2 g2", "1 + n2 - n3"),
    ("k3", "b c e2 g1 e1 g2", "1 + l1 + m1 - n1"),
    ("k4", "b f d1 e2 d2 e1", "1 + n1 - n2"),
    ("k5", "b f d1 g1 d2 g2", "1 + l2 + m2 - n3"),
    ("k6", "b f e2 g1 e1 g2", "1 - l3 - m3 + n3"),
    ("k7", "b c d1 g1 d2 e1", "1 + l3 + m1 - n3"),
    ("k8", "b c d1 e2 d2 g2", "1 + l1 + m3 - n3"),
    ("k9", "b c d1 e2 e1 g2", "1 + l1 - l2"),
    ("k10", "b c e2 g1 d2 e1", "1 + m1 - m2"),
    ("k11", "b c d1 g1 e1 g2", "1 - l2 - m3 + n2"),
    ("k12", "b c e2 g1 d2 g2", "1 - l3 - m2 + n2"),
    ("k13", "b f d1 g1 d2 e1", "1 - l1 - m3 + n1"),
    ("k14", "b f d1 e2 d2 g2", "1 - l3 - m1 + n1"),
    ("k15", "b f d1 g1 e1 g2", "1 + m2 - m3"),
    ("k16", "b f e2 g1 d2 g2", "1 + l2 - l3"),
    ("k17", "b f d1 e2 e1 g2", "1 + l1 + m2 - n2"),
    ("k18", "b f e2 g1 d2 e1", "1 + l2 + m1 - n2"),
]

_BLOCK_CF = frozenset({"c", "f"})
_BLOCK_1 = frozenset({"d1", "e2", "g1"})
_BLOCK_2 = frozenset({"d2", "e1", "g2"})


@dataclass(frozen=True)
class Chamber:
    id: str
    ray_ids: tuple[str, ...]
    formula: AffineForm


@dataclass(frozen=True)
class _Cone:
    """Integer data deciding membership in one closed simplicial cone."""

    adjugate: np.ndarray  # det(R) * R^-1, integer
    sign: int  # sign of det(R)


class ChamberComplex:
    """Validated, immutable chamber complex with exact membership tests."""

    def __init__(self, rays: dict[str, tuple[int, ...]], chambers: Sequence[Chamber]):
        self.rays = dict(rays)
        self.chambers = tuple(chambers)
        self.by_id = {ch.id: ch for ch in self.chambers}
        self._validate()
        self._vector_to_label = {v: k for k, v in self.rays.items()}
        self._ray_sets = {frozenset(ch.ray_ids): ch.id for ch in self.chambers}
        self._cones = {ch.id: self._cone(ch) for ch in self.chambers}
        self._stack = np.stack([self._cones[ch.id].adjugate * self._cones[ch.id].sign
                                for ch in self.chambers])
        self._consts = np.array([ch.formula.constant for ch in self.chambers], dtype=np.int64)
        self._coeffs = np.array([ch.formula.coeffs for ch in self.chambers], dtype=np.int64)

    def ray_matrix(self, chamber_id: str) -> em.RationalMatrix:
        """6x6 matrix whose columns are the chamber's ray generators."""
        return em.from_columns([self.rays[r] for r in self.by_id[chamber_id].ray_ids])

    def _cone(self, ch: Chamber) -> _Cone:
        m = self.ray_matrix(ch.id)
        d = em.det(m)
        adj = em.to_int_matrix(tuple(tuple(x * d for x in row) for row in em.inverse(m)))
        return _Cone(np.array(adj, dtype=np.int64), 1 if d > 0 else -1)

    def _validate(self):
        if set(self.rays) != set(RAY_ORDER):
            raise DataCorrupt(f"ray labels {sorted(self.rays)} differ from {sorted(RAY_ORDER)}")
        for label, vec in self.rays.items():
            if tuple(vec) != RAYS[label]:
                raise DataCorrupt(f"ray {label} = {vec}, expected {RAYS[label]}")
        if len(self.chambers) != 18 or len(self.by_id) != 18:
            raise DataCorrupt(f"expected 18 distinct chambers, got {len(self.chambers)}")
        seen = set()
        for ch in self.chambers:
            ids = set(ch.ray_ids)
            if len(ch.ray_ids) != 6 or len(ids) != 6 or not ids <= set(self.rays):
                raise DataCorrupt(f"{ch.id}: bad generator list {ch.ray_ids}")
            if frozenset(ids) in seen:
                raise DataCorrupt(f"{ch.id}: duplicate generator set")
            seen.add(frozenset(ids))
            if not ("b" in ids and len(ids & _BLOCK_CF) == 1
                    and len(ids & _BLOCK_1) == 2 and len(ids & _BLOCK_2) == 2):
                raise DataCorrupt(f"{ch.id}: generators {sorted(ids)} break the b/cf/block pattern")
            try:
                em.inverse(self.ray_matrix(ch.id))
            except SingularMatrix:
                raise DataCorrupt(f"{ch.id}: generators are linearly dependent") from None
        for a, b in itertools.combinations(self.chambers, 2):
            if a.formula == b.formula:
                raise DataCorrupt(f"{a.id} and {b.id} share a formula")
            # Affine forms agree on the common face iff they agree at the apex
            # and on every shared generator.
            shared = set(a.ray_ids) & set(b.ray_ids)
            if a.formula.constant != b.formula.constant or any(
                a.formula.linear(self.rays[r]) != b.formula.linear(self.rays[r]) for r in shared
            ):
                raise DataCorrupt(f"{a.id} and {b.id} disagree on their common face")

    def label_of(self, vector: Sequence[int]) -> str | None:
        """Ray label whose generator equals ``vector``, or None."""
        return self._vector_to_label.get(tuple(int(x) for x in vector))

    def chamber_with_rays(self, labels: Iterable[str]) -> str | None:
        return self._ray_sets.get(frozenset(labels))

    def chambers_containing(self, point: Sequence[int]) -> set[str]:
        p = np.asarray(point, dtype=np.int64)
        inside = np.all(self._stack @ p >= 0, axis=1)
        return {ch.id for ch, ok in zip(self.chambers, inside.tolist()) if ok}

    def evaluate(self, point: Sequence[int]) -> int:
        ids = self.chambers_containing(point)
        if not ids:
            return 0
        values = {self.by_id[cid].formula(point) for cid in ids}
        if len(values) != 1:
            raise InconsistentFormulas(f"chambers {sorted(ids)} disagree at {tuple(point)}")
        return values.pop()

    def evaluate_many(self, points) -> np.ndarray:
        """Vectorized ``evaluate`` over an (N, 6) integer array."""
        p = np.asarray(points, dtype=np.int64).reshape(-1, 6)
        # coords[n, k, i]: i-th cone coordinate (scaled by |det|) of point n in chamber k
        coords = (p @ self._stack.reshape(-1, 6).T).reshape(len(p), -1, 6)
        inside = np.all(coords >= 0, axis=2).T
        values = self._consts[:, None] + self._coeffs @ p.T
        masked = np.where(inside, values, -1)
        best = masked.max(axis=0)
        lowest = np.where(inside, values, np.iinfo(np.int64).max).min(axis=0)
        covered = inside.any(axis=0)
        bad = covered & (best != lowest)
        if bad.any():
            n = int(np.argmax(bad))
            raise InconsistentFormulas(f"chambers disagree at {tuple(int(x) for x in p[n])}")
        return np.where(covered, best, 0)

    def to_json(self) -> dict:
        return {
            "rays": {k: list(self.rays[k]) for k in RAY_ORDER if k in self.rays},
            "chambers": [
                {"id": ch.id, "rays": list(ch.ray_ids), "formula": ch.formula.to_json()}
                for ch in self.chambers
            ],
        }

    @classmethod
    def from_json(cls, obj) -> "ChamberComplex":
        try:
            rays = {}
            for k, v in obj["rays"].items():
                if len(v) != 6 or not all(isinstance(x, int) and not isinstance(x, bool) for x in v):
                    raise DataCorrupt(f"ray {k} must be 6 integers")
                rays[k] = tuple(v)
            chambers = [
                Chamber(c["id"], tuple(c["rays"]), AffineForm.from_json(c["formula"]))
                for c in obj["chambers"]
            ]
        except (KeyError, TypeError, ValueError, AttributeError) as exc:
            raise DataCorrupt(f"malformed chamber complex JSON: {exc}") from exc
        return cls(rays, chambers)


def _embedded() -> ChamberComplex:
    chambers = [Chamber(cid, tuple(gens.split()), parse_form(formula))
                for cid, gens, formula in _TABLE]
    return ChamberComplex(RAYS, chambers)


@lru_cache(maxsize=1)
def _default() -> ChamberComplex:
    return _embedded()


def load_complex(path: str | Path | None = None) -> ChamberComplex:
    """The embedded complex, or one read from a JSON file at ``path``."""
    if path is None:
        return _default()
    try:
        obj = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise DataCorrupt(f"{path}: {exc}") from exc
    return ChamberComplex.from_json(obj)


def save_complex(cc: ChamberComplex, path: str | Path) -> None:
    Path(path).write_text(json.dumps(cc.to_json(), indent=1) + "\n", encoding="utf-8")


def chambers_containing(point: Sequence[int]) -> set[str]:
    return _default().chambers_containing(point)


def evaluate_C(point: Sequence[int]) -> int:
    """C at an integer 6-vector, from the chamber formulas."""
    return _default().evaluate(point)


def evaluate_many(points) -> np.ndarray:
    return _default().evaluate_many(points)


def box_points(bound: int) -> np.ndarray:
    """All points of [0, bound]^6 in lexicographic order, shape (N, 6)."""
    axes = np.arange(bound + 1, dtype=np.int64)
    grid = np.stack(np.meshgrid(*([axes] * 6), indexing="ij"), axis=-1)
    return grid.reshape(-1, 6)


@dataclass
class CrossValidationReport:
    bound: int
    points_checked: int
    nonzero: int
    mismatches: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches


def cross_validate(bound: int, strict: bool = True, cc: ChamberComplex | None = None):
    """Compare chamber evaluation with the tableau oracle on [0, bound]^6.

    Both the scalar and the vectorized evaluation are checked at every point.

    With ``strict`` a mismatch raises ValidationFailure carrying the first bad
    point; otherwise all mismatches are returned in the report.
    """
    if bound < 0:
        raise ValueError("bound must be nonnegative")
    cc = cc or _default()
    points = box_points(bound)
    fast = cc.evaluate_many(points).tolist()
    report = CrossValidationReport(bound, len(points), 0)
    for p, vector_value in zip(points.tolist(), fast):
        value = cc.evaluate(p)
        expected = oracle_C(p)
        report.nonzero += value != 0
        if value != expected or vector_value != value:
            if strict:
                raise ValidationFailure(
                    f"C{tuple(p)} = {value} from chambers ({vector_value} vectorized), "
                    f"{expected} from tableaux", tuple(p))
            report.mismatches.append((tuple(p), value, expected))
    log.info("cross-validated %d points, %d mismatches", report.points_checked, len(report.mismatches))
    return report
