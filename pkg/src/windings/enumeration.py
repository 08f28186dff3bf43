"""Exhaustive enumeration of nilpotent indecomposables up to isomorphism.

Generation grows connected acyclic windings one vertex at a time: every
connected acyclic quiver has a source or sink whose removal keeps it
connected, so attaching a fresh source-or-sink vertex in all legal ways to
every witness of the previous dimension reaches every class.  Duplicates
are removed by canonical key.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum

from . import catalog
from .errors import BudgetExceeded, GraphMismatch, NotTreeRep, UnknownArrow
from .quiver import Quiver, betti_number, central_cycle, reverse_arrow
from .representation import Representation, make_representation

DEFAULT_BUDGET = 12

_TABLES: dict[Quiver, "_Table"] = {}


class _Table:
    """Per-quiver cache of enumerated classes, one level per dimension."""

    def __init__(self, quiver: Quiver):
        self.quiver = quiver
        self.levels: dict[int, list[tuple[bytes, Representation]]] = {}

    def level(self, n: int) -> list[tuple[bytes, Representation]]:
        if n in self.levels:
            return self.levels[n]
        if n <= 0:
            entry: list[tuple[bytes, Representation]] = []
        elif n == 1:
            seen = {}
            for v in self.quiver.vertices:
                rep = make_representation(self.quiver, [("x1", v)], [])
                seen.setdefault(rep.key, rep)
            entry = sorted(seen.items())
        else:
            seen = {}
            for _, witness in self.level(n - 1):
                for rep in _vertex_extensions(self.quiver, witness, n):
                    seen.setdefault(rep.key, rep)
            entry = sorted(seen.items())
        self.levels[n] = entry
        return entry


def _vertex_extensions(q: Quiver, witness: Representation, n: int):
    """All windings obtained by attaching vertex ``x{n}`` as a source or sink."""
    new_v = f"x{n}"
    base_verts = [(w, witness.vertex_color(w)) for w in witness.total.vertices]
    base_arrows = [
        (a.id, a.source, a.target, witness.arrow_color(a.id))
        for a in witness.total.arrows
    ]
    next_arrow = len(base_arrows) + 1
    out = []
    for color in q.vertices:
        for as_sink in (True, False):
            slots = []
            for alpha in q.arrows:
                if as_sink:
                    if alpha.target != color:
                        continue
                    cands = [
                        w
                        for w in witness.total.vertices
                        if witness.vertex_color(w) == alpha.source
                        and (w, alpha.id) not in witness.out_by_color
                    ]
                else:
                    if alpha.source != color:
                        continue
                    cands = [
                        w
                        for w in witness.total.vertices
                        if witness.vertex_color(w) == alpha.target
                        and (w, alpha.id) not in witness.in_by_color
                    ]
                if cands:
                    slots.append((alpha.id, cands))
            if not slots:
                continue
            for choice in itertools.product(*[[None] + c for _, c in slots]):
                if all(w is None for w in choice):
                    continue
                arrows = list(base_arrows)
                k = next_arrow
                for (alpha_id, _), w in zip(slots, choice):
                    if w is None:
                        continue
                    if as_sink:
                        arrows.append((f"e{k}", w, new_v, alpha_id))
                    else:
                        arrows.append((f"e{k}", new_v, w, alpha_id))
                    k += 1
                out.append(
                    make_representation(
                        q, base_verts + [(new_v, color)], arrows
                    )
                )
    return out


def enumerate_nilpotent_indecomposables(
    q: Quiver, n: int, budget: int = DEFAULT_BUDGET
) -> list[tuple[bytes, Representation]]:
    """One witness per isomorphism class of connected acyclic windings of
    dimension n, as (canonical key, witness) pairs sorted by key."""
    if n > budget:
        raise BudgetExceeded(f"dimension {n} exceeds budget {budget}")
    table = _TABLES.setdefault(q, _Table(q))
    return table.level(n)


def count_indecomposables(q: Quiver, n: int, budget: int = DEFAULT_BUDGET) -> int:
    return len(enumerate_nilpotent_indecomposables(q, n, budget))


def tree_classes(q: Quiver, n: int, budget: int = DEFAULT_BUDGET):
    return [
        rep
        for _, rep in enumerate_nilpotent_indecomposables(q, n, budget)
        if betti_number(rep.total) == 0
    ]


def pseudotree_classes(q: Quiver, n: int, budget: int = DEFAULT_BUDGET):
    return [
        rep
        for _, rep in enumerate_nilpotent_indecomposables(q, n, budget)
        if betti_number(rep.total) == 1
    ]


def tree_pseudotree_split(
    q: Quiver, n: int, budget: int = DEFAULT_BUDGET
) -> tuple[int, int]:
    """Class counts split by the total quiver's Betti number (0 vs 1)."""
    from .errors import NotPseudotree

    if betti_number(q) > 1 or not q.is_connected:
        raise NotPseudotree("tree/pseudotree split requires a pseudotree base")
    t = len(tree_classes(q, n, budget))
    p = len(pseudotree_classes(q, n, budget))
    return t, p


# ---------------------------------------------------------------------------
# Spine classification
# ---------------------------------------------------------------------------


class SpineKind(Enum):
    SPINE = "Spine"
    BRANCH = "Branch"


@dataclass(frozen=True)
class SpineData:
    kind: SpineKind
    start: str | None
    finish: str | None
    #: number of total-quiver vertices lying over the central cycle
    vertex_count: int


def spine_classify(t: Representation, q: Quiver | None = None) -> SpineData:
    """Spine or branch classification of a tree representation.

    A tree representation is a spine representation when some vertex lies
    over the central cycle; the spine's endpoints are reported as base
    vertices and the count is the number of vertices over the cycle.
    """
    base = q if q is not None else t.base
    if t.dim == 0 or betti_number(t.total) != 0 or not t.total.is_connected:
        raise NotTreeRep("spine classification needs a nonempty tree representation")
    cycle = central_cycle(base)
    cyc_vertices = set(cycle.vertices)
    cyc_arrows = {a.id for a in cycle.arrows}
    over = sorted(v for v in t.total.vertices if t.vertex_color(v) in cyc_vertices)
    if not over:
        return SpineData(SpineKind.BRANCH, None, None, 0)
    over_set = set(over)
    spine_arrows = [
        a
        for a in t.total.arrows
        if t.arrow_color(a.id) in cyc_arrows
        and a.source in over_set
        and a.target in over_set
    ]
    incident = {v: 0 for v in over}
    has_in = {v: False for v in over}
    has_out = {v: False for v in over}
    for a in spine_arrows:
        incident[a.source] += 1
        incident[a.target] += 1
        has_out[a.source] = True
        has_in[a.target] = True
    ends = [v for v in over if incident[v] <= 1]
    if len(over) == 1:
        v = over[0]
        c = t.vertex_color(v)
        return SpineData(SpineKind.SPINE, c, c, 1)
    starts = [v for v in ends if not has_in[v]]
    start = starts[0] if len(starts) == 1 else min(ends)
    finish = next(v for v in ends if v != start) if len(ends) > 1 else start
    return SpineData(
        SpineKind.SPINE, t.vertex_color(start), t.vertex_color(finish), len(over)
    )


# ---------------------------------------------------------------------------
# Arrow reversal on representations
# ---------------------------------------------------------------------------


def reverse_representation(m: Representation, arrow_id: str) -> Representation:
    """Reverse one base arrow and every total-quiver arrow over it."""
    if arrow_id not in m.base.arrow_by_id:
        raise UnknownArrow(f"unknown arrow {arrow_id!r}")
    new_base = reverse_arrow(m.base, arrow_id)
    verts = [(v, m.vertex_color(v)) for v in m.total.vertices]
    arrows = []
    for a in m.total.arrows:
        color = m.arrow_color(a.id)
        if color == arrow_id:
            arrows.append((a.id, a.target, a.source, color))
        else:
            arrows.append((a.id, a.source, a.target, color))
    return make_representation(new_base, verts, arrows)


def _reorientation_diff(q: Quiver, q2: Quiver) -> list[str]:
    if q.vertices != q2.vertices or set(q.arrow_by_id) != set(q2.arrow_by_id):
        raise GraphMismatch("quivers do not share vertices and arrow ids")
    flipped = []
    for a in q.arrows:
        b = q2.arrow_by_id[a.id]
        if (a.source, a.target) == (b.source, b.target):
            continue
        if (a.source, a.target) == (b.target, b.source):
            flipped.append(a.id)
        else:
            raise GraphMismatch(f"arrow {a.id!r} joins different vertex pairs")
    return flipped


def tree_counts_orientation_invariant(
    q: Quiver, q2: Quiver, n: int, budget: int = DEFAULT_BUDGET
) -> bool:
    """Check that tree-representation counts agree for two orientations.

    Verified constructively: chained single-arrow reversals carry each tree
    class of one orientation to a class of the other, and the resulting key
    sets must coincide.
    """
    flipped = _reorientation_diff(q, q2)
    carried = []
    for rep in tree_classes(q, n, budget):
        cur = rep
        for a in flipped:
            cur = reverse_representation(cur, a)
        if cur.base != q2:
            raise GraphMismatch("reversal chain did not reach the target quiver")
        carried.append(cur.key)
    target = [rep.key for rep in tree_classes(q2, n, budget)]
    return sorted(carried) == sorted(target)


# ---------------------------------------------------------------------------
# The factorial family over the two-loop quiver
# ---------------------------------------------------------------------------


def factorial_family(k: int) -> list[Representation]:
    """k! pairwise non-isomorphic 2k-dimensional classes over two loops.

    A full chain of red arrows n_{2k} -> ... -> n_1 is decorated with k
    blue arrows from the top half onto a permutation of the bottom half.
    """
    if k < 1:
        raise ValueError("k must be positive")
    base = catalog.two_loops()
    verts = [(f"n{i:02d}", "v") for i in range(1, 2 * k + 1)]
    red = [
        (f"r{i:02d}", f"n{i + 1:02d}", f"n{i:02d}", "red") for i in range(1, 2 * k)
    ]
    out = []
    for perm in itertools.permutations(range(1, k + 1)):
        blue = [
            (f"b{i:02d}", f"n{k + i:02d}", f"n{perm[i - 1]:02d}", "blue")
            for i in range(1, k + 1)
        ]
        out.append(make_representation(base, verts, red + blue))
    return out
