"""Quivers, quiver maps and windings.

A quiver is a finite directed multigraph with named vertices and arrows
(loops and parallel arrows allowed).  A winding is a quiver map whose
arrow assignment is injective per color on sources and on targets; it is
the combinatorial carrier for everything else in this package.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import cached_property

from .errors import (
    DisconnectedQuiver,
    InputError,
    NotPseudotree,
    UnknownArrow,
    UnknownVertex,
)


@dataclass(frozen=True, order=True)
class Arrow:
    id: str
    source: str
    target: str


@dataclass(frozen=True)
class Quiver:
    """Immutable quiver; vertices and arrows are kept sorted by id."""

    vertices: tuple[str, ...]
    arrows: tuple[Arrow, ...]

    def __post_init__(self):
        vs = tuple(sorted(self.vertices))
        ars = tuple(sorted(self.arrows, key=lambda a: a.id))
        if len(set(vs)) != len(vs):
            dup = sorted({v for v in vs if vs.count(v) > 1})[0]
            raise InputError(f"duplicate vertex id {dup!r}")
        ids = [a.id for a in ars]
        if len(set(ids)) != len(ids):
            dup = sorted({i for i in ids if ids.count(i) > 1})[0]
            raise InputError(f"duplicate arrow id {dup!r}")
        vset = set(vs)
        for a in ars:
            if a.source not in vset:
                raise UnknownVertex(f"arrow {a.id!r} has unknown source {a.source!r}")
            if a.target not in vset:
                raise UnknownVertex(f"arrow {a.id!r} has unknown target {a.target!r}")
        object.__setattr__(self, "vertices", vs)
        object.__setattr__(self, "arrows", ars)

    # -- lookup helpers -------------------------------------------------

    @cached_property
    def arrow_by_id(self) -> dict[str, Arrow]:
        return {a.id: a for a in self.arrows}

    @cached_property
    def _out(self) -> dict[str, tuple[Arrow, ...]]:
        d: dict[str, list[Arrow]] = {v: [] for v in self.vertices}
        for a in self.arrows:
            d[a.source].append(a)
        return {v: tuple(lst) for v, lst in d.items()}

    @cached_property
    def _in(self) -> dict[str, tuple[Arrow, ...]]:
        d: dict[str, list[Arrow]] = {v: [] for v in self.vertices}
        for a in self.arrows:
            d[a.target].append(a)
        return {v: tuple(lst) for v, lst in d.items()}

    def out_arrows(self, v: str) -> tuple[Arrow, ...]:
        return self._out[v]

    def in_arrows(self, v: str) -> tuple[Arrow, ...]:
        return self._in[v]

    def degree(self, v: str) -> int:
        """Total undirected degree; a loop contributes 2."""
        return len(self._out[v]) + len(self._in[v])

    # -- graph structure ------------------------------------------------

    @cached_property
    def components(self) -> tuple[frozenset[str], ...]:
        """Weakly connected components, sorted by smallest vertex."""
        parent = {v: v for v in self.vertices}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for a in self.arrows:
            ra, rb = find(a.source), find(a.target)
            if ra != rb:
                parent[ra] = rb
        groups: dict[str, set[str]] = {}
        for v in self.vertices:
            groups.setdefault(find(v), set()).add(v)
        return tuple(
            sorted((frozenset(g) for g in groups.values()), key=lambda s: min(s))
        )

    @property
    def is_connected(self) -> bool:
        return len(self.components) <= 1

    def subquiver(self, vertices, arrow_ids=None) -> "Quiver":
        """Subquiver on the given vertices.

        With ``arrow_ids=None`` this is the full subquiver (all arrows with
        both endpoints inside).
        """
        vset = set(vertices)
        if arrow_ids is None:
            ars = tuple(a for a in self.arrows if a.source in vset and a.target in vset)
        else:
            ars = tuple(self.arrow_by_id[i] for i in arrow_ids)
        return Quiver(tuple(sorted(vset)), ars)

    @property
    def is_acyclic(self) -> bool:
        """True iff the quiver has no directed cycle."""
        indeg = {v: len(self._in[v]) for v in self.vertices}
        stack = [v for v in self.vertices if indeg[v] == 0]
        seen = 0
        while stack:
            v = stack.pop()
            seen += 1
            for a in self._out[v]:
                indeg[a.target] -= 1
                if indeg[a.target] == 0:
                    stack.append(a.target)
        return seen == len(self.vertices)


def betti_number(q: Quiver) -> int:
    """Rank of the first homology of the underlying graph.

    Computed as arrows - vertices + components, which is exact for a
    finite 1-complex.
    """
    if not q.vertices:
        return 0
    return len(q.arrows) - len(q.vertices) + len(q.components)


class Shape(Enum):
    TREE = "Tree"
    TYPE_A_TILDE_CYCLE = "TypeATildeCycle"
    PROPER_PSEUDOTREE = "ProperPseudotree"
    WILD = "Wild"


@dataclass(frozen=True)
class ShapeClass:
    kind: Shape
    betti: int


def classify_shape(q: Quiver) -> ShapeClass:
    """Shape of a connected quiver: tree, pure cycle, proper pseudotree or wild."""
    if not q.is_connected:
        raise DisconnectedQuiver("shape classification needs a connected quiver")
    b = betti_number(q)
    if b == 0:
        return ShapeClass(Shape.TREE, 0)
    if b >= 2:
        return ShapeClass(Shape.WILD, b)
    if all(q.degree(v) == 2 for v in q.vertices):
        return ShapeClass(Shape.TYPE_A_TILDE_CYCLE, 1)
    return ShapeClass(Shape.PROPER_PSEUDOTREE, 1)


def central_cycle(q: Quiver) -> Quiver:
    """The unique simple cycle of a quiver with first Betti number one.

    Returned as a subquiver carrying the cycle vertices and cycle arrows.
    """
    if betti_number(q) != 1:
        raise NotPseudotree("central cycle requires first Betti number exactly 1")
    # Strip leaves repeatedly; the 2-core of a Betti-1 graph is its cycle.
    alive_v = set(q.vertices)
    alive_a = {a.id for a in q.arrows}
    deg = {v: q.degree(v) for v in q.vertices}
    queue = [v for v in q.vertices if deg[v] <= 1]
    while queue:
        v = queue.pop()
        if v not in alive_v or deg[v] > 1:
            continue
        alive_v.discard(v)
        for a in q.out_arrows(v) + q.in_arrows(v):
            if a.id in alive_a:
                alive_a.discard(a.id)
                other = a.target if a.source == v else a.source
                if other in alive_v:
                    deg[other] -= 1
                    if deg[other] <= 1:
                        queue.append(other)
    return q.subquiver(sorted(alive_v), sorted(alive_a))


def reverse_arrow(q: Quiver, arrow_id: str) -> Quiver:
    """Same quiver with the source and target of one arrow swapped."""
    if arrow_id not in q.arrow_by_id:
        raise UnknownArrow(f"unknown arrow {arrow_id!r}")
    ars = tuple(
        Arrow(a.id, a.target, a.source) if a.id == arrow_id else a for a in q.arrows
    )
    return Quiver(q.vertices, ars)


# ---------------------------------------------------------------------------
# Quiver maps and windings
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class QuiverMap:
    """A pair of vertex/arrow assignments between two quivers.

    Construction validates that every key and value refers to an existing
    vertex or arrow; the commutation law is checked separately by
    :func:`validate_quiver_map`.
    """

    domain: Quiver
    codomain: Quiver
    vertex_map: dict[str, str]
    arrow_map: dict[str, str]

    def __post_init__(self):
        for v in self.domain.vertices:
            if v not in self.vertex_map:
                raise UnknownVertex(f"vertex {v!r} has no image")
        for v, w in self.vertex_map.items():
            if v not in set(self.domain.vertices):
                raise UnknownVertex(f"vertex map mentions unknown vertex {v!r}")
            if w not in set(self.codomain.vertices):
                raise UnknownVertex(f"vertex {v!r} maps to unknown vertex {w!r}")
        dom_arrows = self.domain.arrow_by_id
        cod_arrows = self.codomain.arrow_by_id
        for a in self.domain.arrows:
            if a.id not in self.arrow_map:
                raise UnknownArrow(f"arrow {a.id!r} has no image")
        for a, b in self.arrow_map.items():
            if a not in dom_arrows:
                raise UnknownArrow(f"arrow map mentions unknown arrow {a!r}")
            if b not in cod_arrows:
                raise UnknownArrow(f"arrow {a!r} maps to unknown arrow {b!r}")

    def vertex_image(self, v: str) -> str:
        return self.vertex_map[v]

    def arrow_image(self, a: str) -> str:
        return self.arrow_map[a]


def validate_quiver_map(m: QuiverMap) -> bool:
    """True iff the assignments commute with sources and targets."""
    cod = m.codomain.arrow_by_id
    for a in m.domain.arrows:
        img = cod[m.arrow_map[a.id]]
        if img.source != m.vertex_map[a.source]:
            return False
        if img.target != m.vertex_map[a.target]:
            return False
    return True


def winding_violation(m: QuiverMap) -> tuple[str, str] | None:
    """A pair of arrows breaking per-color injectivity, or None.

    Two distinct arrows of equal color must have distinct sources and
    distinct targets; equivalently every vertex carries at most one
    incoming and one outgoing arrow of each color.
    """
    out_seen: dict[tuple[str, str], str] = {}
    in_seen: dict[tuple[str, str], str] = {}
    for a in m.domain.arrows:
        color = m.arrow_map[a.id]
        k_out = (a.source, color)
        if k_out in out_seen:
            return (out_seen[k_out], a.id)
        out_seen[k_out] = a.id
        k_in = (a.target, color)
        if k_in in in_seen:
            return (in_seen[k_in], a.id)
        in_seen[k_in] = a.id
    return None


def is_winding(m: QuiverMap) -> bool:
    return validate_quiver_map(m) and winding_violation(m) is None


@dataclass(frozen=True)
class Winding:
    """A quiver map that satisfies the per-color injectivity law."""

    map: QuiverMap

    def __post_init__(self):
        if not validate_quiver_map(self.map):
            raise InputError("quiver map does not commute with sources/targets")
        bad = winding_violation(self.map)
        if bad is not None:
            raise InputError(f"not a winding: arrows {bad[0]!r}, {bad[1]!r} collide")

    @property
    def total(self) -> Quiver:
        return self.map.domain

    @property
    def base(self) -> Quiver:
        return self.map.codomain

    def vertex_color(self, v: str) -> str:
        return self.map.vertex_map[v]

    def arrow_color(self, a: str) -> str:
        return self.map.arrow_map[a]


def compose_quiver_maps(outer: QuiverMap, inner: QuiverMap) -> QuiverMap:
    """Composite map; domains must chain (inner.codomain == outer.domain)."""
    if inner.codomain != outer.domain:
        raise InputError("maps do not compose: codomain/domain mismatch")
    return QuiverMap(
        domain=inner.domain,
        codomain=outer.codomain,
        vertex_map={v: outer.vertex_map[w] for v, w in inner.vertex_map.items()},
        arrow_map={a: outer.arrow_map[b] for a, b in inner.arrow_map.items()},
    )


def inclusion_map(sub: Quiver, whole: Quiver) -> QuiverMap:
    """Identity-on-names inclusion of a subquiver."""
    return QuiverMap(
        domain=sub,
        codomain=whole,
        vertex_map={v: v for v in sub.vertices},
        arrow_map={a.id: a.id for a in sub.arrows},
    )


def identity_map(q: Quiver) -> QuiverMap:
    return inclusion_map(q, q)
