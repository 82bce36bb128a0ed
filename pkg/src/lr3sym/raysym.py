"""Linear symmetries of the ray generators as colored-graph automorphisms.

A permutation of a spanning vector set is induced by a linear map exactly when
it preserves every entry of the projection matrix Q = Vt (V Vt)^-1 V, so the
symmetries are the automorphisms of the complete graph colored by Q.
"""

from __future__ import annotations

import itertools
import operator
import re
from collections import Counter, deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Hashable, Iterable, Mapping, Sequence

from . import exactmath as em
from .chamber import RAY_ORDER, RAYS


class Perm:
    """A bijection of a finite label set.

    Products compose left to right: ``(p * q)(a) == q(p(a))``, so the word
    ``t * x * s * x`` applies ``t`` first.
    """

    __slots__ = ("_map", "_key")

    def __init__(self, mapping: Mapping[Hashable, Hashable]):
        m = dict(mapping)
        if set(m.values()) != set(m):
            raise ValueError("not a bijection")
        self._map = m
        self._key = frozenset((a, b) for a, b in m.items() if a != b)

    @classmethod
    def identity(cls, labels: Iterable = RAY_ORDER) -> "Perm":
        return cls({a: a for a in labels})

    @classmethod
    def from_cycles(cls, cycles, labels: Iterable = RAY_ORDER) -> "Perm":
        """Build from cycles, given as label tuples or strings like ``"(e1,g2)"``."""
        if isinstance(cycles, str):
            cycles = [cycles]
        m = {a: a for a in labels}
        for cyc in cycles:
            if isinstance(cyc, str):
                cyc = parse_cycles(cyc)
            else:
                cyc = [tuple(cyc)]
            for c in cyc:
                for a, b in zip(c, c[1:] + c[:1]):
                    if a not in m:
                        raise ValueError(f"unknown label {a!r}")
                    m[a] = b
        return cls(m)

    def __call__(self, a):
        return self._map[a]

    @property
    def labels(self):
        return tuple(self._map)

    def __mul__(self, other: "Perm") -> "Perm":
        return Perm({a: other._map[b] for a, b in self._map.items()})

    def inverse(self) -> "Perm":
        return Perm({b: a for a, b in self._map.items()})

    def is_identity(self) -> bool:
        return not self._key

    def __eq__(self, other):
        return isinstance(other, Perm) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def cycles(self) -> list[tuple]:
        seen, out = set(), []
        for a in self._map:
            if a in seen or self._map[a] == a:
                continue
            cyc = [a]
            seen.add(a)
            b = self._map[a]
            while b != a:
                cyc.append(b)
                seen.add(b)
                b = self._map[b]
            out.append(tuple(cyc))
        return out

    def to_json(self) -> list[str]:
        return ["(" + ",".join(map(str, c)) + ")" for c in self.cycles()]

    def __repr__(self):
        return "".join(self.to_json()) or "()"


_CYCLE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str) -> list[tuple[str, ...]]:
    """``"(d1,d2)(e1,e2)"`` -> ``[("d1", "d2"), ("e1", "e2")]``."""
    text = text.strip()
    found = _CYCLE.findall(text)
    if _CYCLE.sub("", text).strip() or (text and not found):
        raise ValueError(f"bad cycle notation {text!r}")
    return [tuple(x.strip() for x in c.split(",")) for c in found if c.strip()]


# The named ray permutations: s, t, u are induced by the classical symmetries,
# x by the new one; v and y are the remaining transposition generators.
s = Perm.from_cycles("(d1,d2)(e1,e2)(g1,g2)")
t = Perm.from_cycles("(d1,d2)(e1,g1)(e2,g2)(c,f)")
u = Perm.from_cycles("(d1,g2)(d2,e2)(e1,g1)")
x = Perm.from_cycles("(e1,g2)")
v = Perm.from_cycles("(c,f)")
y = Perm.from_cycles("(e1,d2)")

NAMED = {"s": s, "t": t, "u": u, "x": x, "v": v, "y": y}


@dataclass(frozen=True)
class ColoredGraph:
    vertex_labels: tuple
    vertex_colors: tuple[Fraction, ...]
    edge_colors: tuple[tuple[Fraction, ...], ...]  # symmetric; diagonal unused

    def edge(self, i: int, j: int) -> Fraction:
        return self.edge_colors[i][j]


def build_graph(rays: Sequence[Sequence[int]], labels: Sequence | None = None) -> ColoredGraph:
    """Complete graph on the vectors, colored by the projection matrix Q."""
    labels = tuple(labels) if labels is not None else tuple(range(len(rays)))
    if len(labels) != len(rays):
        raise ValueError("one label per ray")
    q = em.projection_matrix(em.from_columns(rays))
    n = len(rays)
    return ColoredGraph(labels, tuple(q[i][i] for i in range(n)), q)


def ray_graph() -> ColoredGraph:
    return build_graph([RAYS[r] for r in RAY_ORDER], RAY_ORDER)


def automorphisms(g: ColoredGraph) -> frozenset[Perm]:
    """All color-preserving vertex bijections, by refined backtracking."""
    n = len(g.vertex_labels)
    # A vertex's invariant: its color plus the multiset of incident edge colors.
    invariant = [
        (g.vertex_colors[i], tuple(sorted(Counter(g.edge(i, j) for j in range(n) if j != i).items())))
        for i in range(n)
    ]
    candidates = [[j for j in range(n) if invariant[j] == invariant[i]] for i in range(n)]
    order = sorted(range(n), key=lambda i: len(candidates[i]))
    image = [None] * n
    used = [False] * n
    found = []

    def extend(k):
        if k == n:
            found.append(tuple(image))
            return
        i = order[k]
        for j in candidates[i]:
            if used[j]:
                continue
            if all(g.edge(i, order[p]) == g.edge(j, image[order[p]]) for p in range(k)):
                image[i] = j
                used[j] = True
                extend(k + 1)
                used[j] = False
        image[i] = None

    extend(0)
    labels = g.vertex_labels
    return frozenset(Perm({labels[i]: labels[img[i]] for i in range(n)}) for img in found)


def preserves_colors(g: ColoredGraph, p: Perm) -> bool:
    index = {a: i for i, a in enumerate(g.vertex_labels)}
    img = [index[p(a)] for a in g.vertex_labels]
    n = len(img)
    return all(g.vertex_colors[i] == g.vertex_colors[img[i]] for i in range(n)) and all(
        g.edge(i, j) == g.edge(img[i], img[j]) for i in range(n) for j in range(n)
    )


def closure(generators: Iterable, identity=None, mul: Callable = operator.mul) -> frozenset:
    """Smallest set containing ``generators`` closed under ``mul``.

    For a finite group this is the generated group.  ``identity`` seeds the
    result so that an empty generating set still yields the trivial group.
    """
    gens = list(generators)
    seed = [identity] if identity is not None else []
    seen = set(seed) | set(gens)
    queue = deque(seen)
    while queue:
        a = queue.popleft()
        for gen in gens:
            b = mul(a, gen)
            if b not in seen:
                seen.add(b)
                queue.append(b)
    return frozenset(seen)


def orbit(group: Iterable, seed, action: Callable) -> set:
    out = {seed}
    frontier = [seed]
    group = list(group)
    while frontier:
        e = frontier.pop()
        for gr in group:
            f = action(gr, e)
            if f not in out:
                out.add(f)
                frontier.append(f)
    return out


def word(*letters: str) -> Perm:
    """Product of named permutations, leftmost applied first."""
    out = Perm.identity()
    for ch in letters:
        out = out * NAMED[ch]
    return out


RELATIONS = {"v = txsx": ("v", "txsx"), "y = usxsu": ("y", "usxsu")}


def verify_relations(relations: Mapping[str, tuple[str, str]] = RELATIONS) -> dict[str, bool]:
    """Check each relation ``lhs = w`` with ``w`` evaluated left to right.

    Both sides here are involutions, so the right-to-left reading gives the
    same verdict; the check is reported for the left-to-right reading.
    """
    return {name: word(*lhs) == word(*rhs) for name, (lhs, rhs) in relations.items()}


def block_stabilizer(labels: Sequence[str] = RAY_ORDER) -> frozenset[Perm]:
    """Permutations of the nine rays that fix b, keep {c, f}, and keep or swap
    the blocks {d1, e2, g1} and {d2, e1, g2}; filtered from all 9! bijections."""
    cf = {"c", "f"}
    blocks = {frozenset({"d1", "e2", "g1"}), frozenset({"d2", "e1", "g2"})}
    out = []
    for img in itertools.permutations(labels):
        m = dict(zip(labels, img))
        if m["b"] != "b" or {m["c"], m["f"]} != cf:
            continue
        if all(frozenset(m[a] for a in blk) in blocks for blk in blocks):
            out.append(Perm(m))
    return frozenset(out)


def ray_symmetry_group() -> frozenset[Perm]:
    return automorphisms(ray_graph())
