"""Lift ray permutations to integer linear maps and certify them as symmetries of C."""

from __future__ import annotations

import operator
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

from . import exactmath as em
from .chamber import RAY_ORDER, ChamberComplex, load_complex
from .errors import NoLift, NotChamberMap, NotUnimodular, PolynomialMismatch
from .forms import coordinate_map
from .raysym import Perm, closure, orbit, ray_symmetry_group, s, t, u

IntMatrix = tuple  # tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class LinearSymmetry:
    """An integer 6x6 matrix acting on (l1, l2, m1, m2, n1, n2) by p -> M p."""

    matrix: IntMatrix
    ray_perm: Perm | None = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        m = tuple(tuple(int(a) for a in row) for row in self.matrix)
        if len(m) != 6 or any(len(row) != 6 for row in m):
            raise ValueError("a linear symmetry is a 6x6 integer matrix")
        object.__setattr__(self, "matrix", m)

    def __call__(self, point: Sequence[int]) -> tuple[int, ...]:
        return tuple(sum(a * b for a, b in zip(row, point)) for row in self.matrix)

    def __matmul__(self, other: "LinearSymmetry") -> "LinearSymmetry":
        cols = list(zip(*other.matrix))
        return LinearSymmetry(tuple(
            tuple(sum(a * b for a, b in zip(row, col)) for col in cols) for row in self.matrix))

    @property
    def det(self) -> int:
        return int(em.det(em.matrix(self.matrix)))

    def is_unimodular(self) -> bool:
        return em.is_unimodular(self.matrix)

    def inverse(self) -> "LinearSymmetry":
        if not self.is_unimodular():
            raise NotUnimodular(f"det = {self.det}")
        return LinearSymmetry(em.to_int_matrix(em.inverse(em.matrix(self.matrix))))

    def to_json(self) -> list[list[int]]:
        return [list(row) for row in self.matrix]

    @classmethod
    def from_json(cls, obj) -> "LinearSymmetry":
        if (not isinstance(obj, list) or len(obj) != 6
                or any(not isinstance(r, list) or len(r) != 6 for r in obj)
                or any(not isinstance(a, int) or isinstance(a, bool) for r in obj for a in r)):
            raise ValueError("expected a JSON array of 6 arrays of 6 integers")
        return cls(tuple(tuple(r) for r in obj))


IDENTITY = LinearSymmetry(tuple(tuple(int(i == j) for j in range(6)) for i in range(6)))


def lift_basis(cc: ChamberComplex | None = None) -> tuple[str, ...]:
    """First six linearly independent rays in the order b, c, f, d1, e1, g1, d2, e2, g2."""
    cc = cc or load_complex()
    basis: list[str] = []
    for label in RAY_ORDER:
        trial = basis + [label]
        if em.rank(em.matrix([cc.rays[r] for r in trial])) == len(trial):
            basis = trial
        if len(basis) == 6:
            return tuple(basis)
    raise NoLift("rays do not span")


def lift(p: Perm, cc: ChamberComplex | None = None) -> LinearSymmetry:
    """The unique linear map sending every ray r to the ray p(r)."""
    cc = cc or load_complex()
    basis = lift_basis(cc)
    src = em.from_columns([cc.rays[r] for r in basis])
    dst = em.from_columns([cc.rays[p(r)] for r in basis])
    f = em.matmul(dst, em.inverse(src))
    for r in RAY_ORDER:
        if em.matvec(f, cc.rays[r]) != tuple(cc.rays[p(r)]):
            raise NoLift(f"{p!r}: the map fixed by {basis} sends {r} off {p(r)}")
    if not em.is_integral(f):
        raise NotUnimodular(f"{p!r} lifts to a non-integral map")
    m = em.to_int_matrix(f)
    if not em.is_unimodular(m):
        raise NotUnimodular(f"{p!r} lifts to a map with det {em.det(f)}")
    return LinearSymmetry(m, ray_perm=p)


def ray_permutation(f: LinearSymmetry, cc: ChamberComplex | None = None) -> Perm:
    """The permutation of ray labels induced by ``f``."""
    cc = cc or load_complex()
    images = {}
    for r in RAY_ORDER:
        img = cc.label_of(f(cc.rays[r]))
        if img is None:
            raise NotChamberMap(f"image of ray {r} is not a ray generator")
        images[r] = img
    try:
        return Perm(images)
    except ValueError:
        raise NotChamberMap("map is not injective on rays") from None


# Coordinate maps of the classical symmetries and the new one.  ``n3`` is
# eliminated on parsing, so these are matrices on the six free coordinates.
_KNOWN = {
    "S": ("m1", "m2", "l1", "l2", "n1", "n2"),
    "T": ("l1", "l1 - l2", "m1", "m1 - m2", "l1 + m1 - n3", "l1 + m1 - n2"),
    "U": ("n1 - n3", "n1 - n2", "m1", "m2", "n1", "n1 - l2"),
    "X": ("l1 + m1 - n2", "l2 + m1 - n2", "n2", "m2", "n1", "m1"),
}


def known_symmetries() -> dict[str, LinearSymmetry]:
    return {name: LinearSymmetry(coordinate_map(exprs)) for name, exprs in _KNOWN.items()}


def induced_chamber_map(f: LinearSymmetry, cc: ChamberComplex | None = None) -> dict[str, str]:
    """The permutation of chambers induced by ``f`` acting on their generators."""
    cc = cc or load_complex()
    out = {}
    for ch in cc.chambers:
        labels = []
        for r in ch.ray_ids:
            img = cc.label_of(f(cc.rays[r]))
            if img is None:
                raise NotChamberMap(f"{ch.id}: image of ray {r} is not a ray generator")
            labels.append(img)
        target = cc.chamber_with_rays(labels)
        if target is None:
            raise NotChamberMap(f"{ch.id}: image {sorted(labels)} is not a chamber")
        out[ch.id] = target
    if len(set(out.values())) != len(out):
        raise NotChamberMap("induced map on chambers is not injective")
    return out


@dataclass
class SymmetryCertificate:
    map: LinearSymmetry
    chamber_perm: dict[str, str]
    polynomial_checks: dict[str, bool]

    @property
    def valid(self) -> bool:
        return all(self.polynomial_checks.values())

    @property
    def passed(self) -> int:
        return sum(self.polynomial_checks.values())

    def to_json(self) -> dict:
        out = {
            "matrix": self.map.to_json(),
            "valid": self.valid,
            "chamber_perm": list(self.chamber_perm.values()),
            "polynomial_checks": f"{self.passed}/{len(self.polynomial_checks)}",
        }
        if self.map.ray_perm is not None:
            out["ray_perm"] = self.map.ray_perm.to_json()
        return out


def certify_symmetry(f: LinearSymmetry, cc: ChamberComplex | None = None,
                     strict: bool = False) -> SymmetryCertificate:
    """Check C o f = C chamber by chamber.

    ``f`` must be unimodular and permute the chambers; then for every chamber
    k the formula of its image must equal P_k o f^-1.  With ``strict`` the first
    failed identity raises PolynomialMismatch.
    """
    cc = cc or load_complex()
    if not f.is_unimodular():
        raise NotUnimodular(f"det = {f.det}, not invertible over the integers")
    g = induced_chamber_map(f, cc)
    f_inv = f.inverse().matrix
    checks = {}
    for ch in cc.chambers:
        ok = cc.by_id[g[ch.id]].formula == ch.formula.compose(f_inv)
        if strict and not ok:
            raise PolynomialMismatch(f"formula of {g[ch.id]} differs from that of {ch.id} pulled back", ch.id)
        checks[ch.id] = ok
    return SymmetryCertificate(f, g, checks)


def matrix_closure(generators) -> frozenset[LinearSymmetry]:
    return closure(generators, IDENTITY, operator.matmul)


@dataclass
class GroupReport:
    order: int
    certified: int
    generator_order: int
    known_subgroup_order: int
    chamber_orbit: list[str]
    lift_basis: tuple[str, ...]
    certificates: list[SymmetryCertificate] = field(repr=False, default_factory=list)

    @property
    def transitive(self) -> bool:
        return len(self.chamber_orbit) == 18

    @property
    def ok(self) -> bool:
        return (self.order == 144 and self.certified == self.order
                and self.generator_order == 144 and self.transitive)


def _chamber_key(cid: str) -> int:
    return int(cid.lstrip("k"))


@lru_cache(maxsize=1)
def _full_group():
    cc = load_complex()
    rays = ray_symmetry_group()
    group = sorted((lift(p, cc) for p in rays), key=lambda f: f.matrix)
    certs = [certify_symmetry(f, cc) for f in group]

    known = known_symmetries()
    gen_perms = [ray_permutation(known[k], cc) for k in "STUX"]
    generator_order = len(closure(gen_perms, Perm.identity()))
    known_order = len(matrix_closure([lift(p, cc) for p in (s, t, u)]))

    maps = [c.chamber_perm for c in certs]
    ch_orbit = sorted(orbit(maps, "k1", lambda g, k: g[k]), key=_chamber_key)

    report = GroupReport(
        order=len(group),
        certified=sum(c.valid for c in certs),
        generator_order=generator_order,
        known_subgroup_order=known_order,
        chamber_orbit=ch_orbit,
        lift_basis=lift_basis(cc),
        certificates=certs,
    )
    return tuple(group), report


def full_symmetry_group() -> tuple[list[LinearSymmetry], GroupReport]:
    """All linear symmetries of C, each lifted from a ray symmetry and certified."""
    group, report = _full_group()
    return list(group), report


def orbit_of_triple(point: Sequence[int]) -> set[tuple[int, ...]]:
    group, _ = _full_group()
    return {f(point) for f in group}
