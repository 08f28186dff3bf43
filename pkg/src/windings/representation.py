"""Representations as windings: dimension vectors, nilpotency, direct sums,
closed vertex sets (sub/quotient supports), hom and automorphism counting,
and canonical isomorphism keys.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import cached_property

from . import canon
from .errors import BaseMismatch, NotClosed
from .quiver import Arrow, Quiver, QuiverMap, Winding


@dataclass(frozen=True)
class Representation:
    """A representation, carried by a winding total -> base."""

    winding: Winding

    @property
    def total(self) -> Quiver:
        return self.winding.total

    @property
    def base(self) -> Quiver:
        return self.winding.base

    @property
    def dim(self) -> int:
        return len(self.total.vertices)

    @cached_property
    def key(self) -> bytes:
        return canon.canonical_key(self.winding)

    def vertex_color(self, v: str) -> str:
        return self.winding.vertex_color(v)

    def arrow_color(self, a: str) -> str:
        return self.winding.arrow_color(a)

    @cached_property
    def out_by_color(self) -> dict[tuple[str, str], str]:
        """(vertex, base arrow) -> target of the unique such outgoing arrow."""
        d = {}
        for a in self.total.arrows:
            d[(a.source, self.arrow_color(a.id))] = a.target
        return d

    @cached_property
    def in_by_color(self) -> dict[tuple[str, str], str]:
        d = {}
        for a in self.total.arrows:
            d[(a.target, self.arrow_color(a.id))] = a.source
        return d

    def out_colors(self, v: str) -> frozenset[str]:
        return frozenset(self.arrow_color(a.id) for a in self.total.out_arrows(v))

    def in_colors(self, v: str) -> frozenset[str]:
        return frozenset(self.arrow_color(a.id) for a in self.total.in_arrows(v))


def make_representation(base: Quiver, vertices, arrows) -> Representation:
    """Build a representation from explicit data.

    vertices: iterable of (vertex_id, base_vertex)
    arrows:   iterable of (arrow_id, source, target, base_arrow)
    """
    vmap = {v: c for v, c in vertices}
    amap = {a: c for a, _, _, c in arrows}
    total = Quiver(
        tuple(vmap), tuple(Arrow(a, s, t) for a, s, t, _ in arrows)
    )
    return Representation(Winding(QuiverMap(total, base, vmap, amap)))


def zero_representation(base: Quiver) -> Representation:
    return make_representation(base, [], [])


def dimension_vector(m: Representation) -> dict[str, int]:
    """Count of total-quiver vertices over each base vertex."""
    d = {v: 0 for v in m.base.vertices}
    for v in m.total.vertices:
        d[m.vertex_color(v)] += 1
    return d


def dim_total(d: dict[str, int]) -> int:
    return sum(d.values())


def is_nilpotent(m: Representation) -> bool:
    """True iff the coefficient quiver has no directed cycle."""
    return m.total.is_acyclic


def is_indecomposable(m: Representation) -> bool:
    return m.dim > 0 and m.total.is_connected


def induced_subrepresentation(m: Representation, vertices) -> Representation:
    """Full subquiver on the given vertices with the restricted winding."""
    vset = set(vertices)
    sub = m.total.subquiver(sorted(vset))
    return Representation(
        Winding(
            QuiverMap(
                domain=sub,
                codomain=m.base,
                vertex_map={v: m.vertex_color(v) for v in sub.vertices},
                arrow_map={a.id: m.arrow_color(a.id) for a in sub.arrows},
            )
        )
    )


def decompose(m: Representation) -> list[Representation]:
    """Weakly connected components, each as a representation.

    Deterministic order: by canonical key, then by smallest vertex id.
    """
    parts = [induced_subrepresentation(m, comp) for comp in m.total.components]
    parts.sort(key=lambda p: (p.key, p.total.vertices[0]))
    return parts


def direct_sum(*parts: Representation) -> Representation:
    """Disjoint union over a common base; vertex ids get a copy prefix."""
    if not parts:
        raise ValueError("direct_sum needs at least one summand")
    base = parts[0].base
    vertices = []
    arrows = []
    for i, p in enumerate(parts):
        if p.base != base:
            raise BaseMismatch("summands live over different base quivers")
        for v in p.total.vertices:
            vertices.append((f"c{i}.{v}", p.vertex_color(v)))
        for a in p.total.arrows:
            arrows.append(
                (f"c{i}.{a.id}", f"c{i}.{a.source}", f"c{i}.{a.target}",
                 p.arrow_color(a.id))
            )
    return make_representation(base, vertices, arrows)


# ---------------------------------------------------------------------------
# Closed vertex sets
# ---------------------------------------------------------------------------


class SubFlavor(Enum):
    #: closed under taking arrow targets; supports of subrepresentations
    ARROW_TARGET_CLOSED = "ArrowTargetClosed"
    #: closed under taking arrow sources; supports of quotients
    ARROW_SOURCE_CLOSED = "ArrowSourceClosed"


@dataclass(frozen=True)
class ClosedVertexSet:
    vertices: frozenset[str]
    flavor: SubFlavor


def is_closed(m: Representation, vertices, flavor: SubFlavor) -> bool:
    vset = set(vertices)
    for a in m.total.arrows:
        if flavor is SubFlavor.ARROW_TARGET_CLOSED:
            if a.source in vset and a.target not in vset:
                return False
        else:
            if a.target in vset and a.source not in vset:
                return False
    return True


def _closure_masks(m: Representation, flavor: SubFlavor):
    """Per-vertex reachability masks in the closure direction."""
    verts = m.total.vertices
    idx = {v: i for i, v in enumerate(verts)}
    n = len(verts)
    step = [0] * n
    for a in m.total.arrows:
        if flavor is SubFlavor.ARROW_TARGET_CLOSED:
            step[idx[a.source]] |= 1 << idx[a.target]
        else:
            step[idx[a.target]] |= 1 << idx[a.source]
    reach = [0] * n
    for start in range(n):
        mask = 1 << start
        frontier = [start]
        while frontier:
            v = frontier.pop()
            nxt = step[v] & ~mask
            mask |= step[v]
            while nxt:
                low = nxt & -nxt
                frontier.append(low.bit_length() - 1)
                nxt ^= low
        reach[start] = mask
    co = [0] * n
    for v in range(n):
        for u in range(n):
            if reach[u] >> v & 1:
                co[v] |= 1 << u
    return verts, reach, co


def closed_subsets(
    m: Representation,
    flavor: SubFlavor = SubFlavor.ARROW_TARGET_CLOSED,
    d: dict[str, int] | None = None,
) -> list[ClosedVertexSet]:
    """All vertex subsets closed under the flavor's arrow direction.

    With a dimension vector ``d``, only subsets with exactly that many
    vertices over each base vertex are returned.  Results are sorted by
    size then by vertex tuple.
    """
    verts, reach, co = _closure_masks(m, flavor)
    n = len(verts)
    colmask: dict[str, int] = {b: 0 for b in m.base.vertices}
    for i, v in enumerate(verts):
        colmask[m.vertex_color(v)] |= 1 << i
    want = None
    if d is not None:
        want = {b: d.get(b, 0) for b in m.base.vertices}
        if any(k not in colmask and d[k] for k in d):
            return []

    results: list[int] = []

    def feasible(inc: int, exc: int) -> bool:
        if want is None:
            return True
        for b, mask in colmask.items():
            have = (inc & mask).bit_count()
            if have > want[b]:
                return False
            if have + ((~exc) & mask & ~inc).bit_count() < want[b]:
                return False
        return True

    def rec(i: int, inc: int, exc: int):
        while i < n and (inc >> i & 1 or exc >> i & 1):
            i += 1
        if i == n:
            if want is None or all(
                (inc & mask).bit_count() == want[b] for b, mask in colmask.items()
            ):
                results.append(inc)
            return
        new_exc = exc | co[i]
        if feasible(inc, new_exc):
            rec(i + 1, inc, new_exc)
        cl = reach[i]
        if not (cl & exc):
            new_inc = inc | cl
            if feasible(new_inc, exc):
                rec(i + 1, new_inc, exc)

    rec(0, 0, 0)
    sets = [
        frozenset(verts[i] for i in range(n) if mask >> i & 1) for mask in results
    ]
    sets.sort(key=lambda s: (len(s), tuple(sorted(s))))
    return [ClosedVertexSet(s, flavor) for s in sets]


def sub_and_quotient(
    m: Representation, s: ClosedVertexSet
) -> tuple[Representation, Representation]:
    """Subrepresentation on a target-closed set and the quotient on its complement."""
    if s.flavor is not SubFlavor.ARROW_TARGET_CLOSED:
        raise NotClosed("subrepresentation supports must be arrow-target-closed")
    if not s.vertices <= set(m.total.vertices):
        raise NotClosed("vertex set is not a subset of the total quiver")
    if not is_closed(m, s.vertices, SubFlavor.ARROW_TARGET_CLOSED):
        raise NotClosed("vertex set is not arrow-target-closed")
    sub = induced_subrepresentation(m, s.vertices)
    quot = induced_subrepresentation(m, set(m.total.vertices) - s.vertices)
    return sub, quot


# ---------------------------------------------------------------------------
# Coefficient isomorphisms (brute force)
# ---------------------------------------------------------------------------


def count_coefficient_isos(
    m1: Representation, m2: Representation, stop_at_first: bool = False
) -> int:
    """Number of coefficient isomorphisms m1 -> m2 by backtracking search.

    Independent of canonical keys; used as the ground-truth oracle.
    """
    if m1.base != m2.base:
        raise BaseMismatch("coefficient isomorphisms need a common base")
    v1, v2 = m1.total.vertices, m2.total.vertices
    if len(v1) != len(v2) or len(m1.total.arrows) != len(m2.total.arrows):
        return 0
    if dimension_vector(m1) != dimension_vector(m2):
        return 0
    if not v1:
        return 1

    def profile(m, v):
        return (m.vertex_color(v), m.out_colors(v), m.in_colors(v))

    prof2: dict = {}
    for w in v2:
        prof2.setdefault(profile(m2, w), []).append(w)
    candidates = {}
    for v in v1:
        candidates[v] = prof2.get(profile(m1, v), [])
        if not candidates[v]:
            return 0

    order = sorted(v1, key=lambda v: len(candidates[v]))
    assigned: dict[str, str] = {}
    used: set[str] = set()
    count = 0

    def consistent(v, w):
        for (s, color), t in m1.out_by_color.items():
            if s != v:
                continue
            img = m2.out_by_color.get((w, color))
            if img is None:
                return False
            if t in assigned and assigned[t] != img:
                return False
            if t not in assigned and img in used:
                return False
        for (t, color), s in m1.in_by_color.items():
            if t != v:
                continue
            img = m2.in_by_color.get((w, color))
            if img is None:
                return False
            if s in assigned and assigned[s] != img:
                return False
            if s not in assigned and img in used:
                return False
        return True

    def rec(i):
        nonlocal count
        if i == len(order):
            count += 1
            return stop_at_first
        v = order[i]
        for w in candidates[v]:
            if w in used or not consistent(v, w):
                continue
            assigned[v] = w
            used.add(w)
            if rec(i + 1):
                return True
            del assigned[v]
            used.discard(w)
        return False

    rec(0)
    return count


def are_coefficient_isomorphic(m1: Representation, m2: Representation) -> bool:
    return count_coefficient_isos(m1, m2, stop_at_first=True) > 0


def aut_count(m: Representation) -> int:
    """Number of coefficient automorphisms of the coefficient quiver."""
    return count_coefficient_isos(m, m)


def hom_count(v: Representation, w: Representation) -> int:
    """Number of morphisms v -> w.

    Counted as coefficient isomorphisms from arrow-source-closed full
    subquivers of v's total quiver onto arrow-target-closed full
    subquivers of w's; the empty-to-empty pair contributes the zero map.
    """
    if v.base != w.base:
        raise BaseMismatch("hom counting needs a common base")
    sources = closed_subsets(v, SubFlavor.ARROW_SOURCE_CLOSED)
    targets = closed_subsets(w, SubFlavor.ARROW_TARGET_CLOSED)
    targets_by_dim: dict[tuple, list[Representation]] = {}
    for t in targets:
        rep = induced_subrepresentation(w, t.vertices)
        dv = tuple(sorted(dimension_vector(rep).items()))
        targets_by_dim.setdefault(dv, []).append(rep)
    total = 0
    for s in sources:
        rep = induced_subrepresentation(v, s.vertices)
        dv = tuple(sorted(dimension_vector(rep).items()))
        for trep in targets_by_dim.get(dv, []):
            total += count_coefficient_isos(rep, trep)
    return total
