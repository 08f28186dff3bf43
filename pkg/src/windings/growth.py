"""Growth of indecomposable counts: rooted-subtree coefficients, the
loop-tree and equioriented-cycle recursions, characteristic polynomials,
dominant roots, and the final four-way growth classification.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import (
    BudgetExceeded,
    DisconnectedQuiver,
    InputError,
    NoBracket,
    NotEquioriented,
    WrongShape,
)
from .quiver import Quiver, Shape, central_cycle, classify_shape

MAX_RECURSION_ORDER = 64


# ---------------------------------------------------------------------------
# Rooted trees and subtree counts
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RootedTree:
    quiver: Quiver
    root: str

    def __post_init__(self):
        if self.root not in set(self.quiver.vertices):
            raise InputError(f"root {self.root!r} is not a vertex")
        q = self.quiver
        if not q.is_connected or len(q.arrows) != len(q.vertices) - 1:
            raise WrongShape("underlying graph must be a tree")

    @property
    def size(self) -> int:
        return len(self.quiver.vertices)


def _poly_mul(p: list[int], q: list[int], cap: int | None = None) -> list[int]:
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                if b:
                    out[i + j] += a * b
    if cap is not None:
        out = out[: cap + 1]
    return out


def subtree_generating_poly(t: RootedTree) -> list[int]:
    """Coefficient k = number of k-vertex rooted subtrees containing the root."""
    q = t.quiver
    neighbors: dict[str, list[str]] = {v: [] for v in q.vertices}
    for a in q.arrows:
        neighbors[a.source].append(a.target)
        neighbors[a.target].append(a.source)

    def gen(v: str, parent: str | None) -> list[int]:
        poly = [0, 1]
        for c in sorted(neighbors[v]):
            if c == parent:
                continue
            child = gen(c, v)
            factor = [1] + child[1:]
            poly = _poly_mul(poly, factor)
        return poly

    return gen(t.root, None)


def rooted_subtree_counts(t: RootedTree) -> list[int]:
    """Counts (s_1, ..., s_t) of rooted subtrees by vertex count."""
    poly = subtree_generating_poly(t)
    return poly[1:]


# ---------------------------------------------------------------------------
# Linear recursions and characteristic polynomials
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class LinearRecursion:
    """f(n) = sum coeffs[k-1] * f(n-k), valid for n >= valid_from."""

    coeffs: tuple[int, ...]
    valid_from: int
    description: str = ""

    def __post_init__(self):
        if not self.coeffs or self.coeffs[-1] < 1:
            raise InputError("last recursion coefficient must be at least 1")
        if any(c < 0 for c in self.coeffs):
            raise InputError("recursion coefficients must be non-negative")

    @property
    def order(self) -> int:
        return len(self.coeffs)

    def extend(self, seeds: dict[int, int], upto: int) -> dict[int, int]:
        """Fill values seeds[n] for n up to ``upto`` using the recursion."""
        values = dict(seeds)
        for n in range(self.valid_from, upto + 1):
            if n in values:
                continue
            values[n] = sum(
                c * values[n - k] for k, c in enumerate(self.coeffs, start=1)
            )
        return values


@dataclass(frozen=True)
class CharPolynomial:
    """Monic integer polynomial, coefficients in descending degree order."""

    coeffs: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x: float) -> float:
        acc = 0.0
        for c in self.coeffs:
            acc = acc * x + c
        return acc


def characteristic_polynomial(r: LinearRecursion) -> CharPolynomial:
    """x^d - coeffs[0] x^(d-1) - ... - coeffs[d-1]."""
    return CharPolynomial((1,) + tuple(-c for c in r.coeffs))


def dominant_root(
    p: CharPolynomial, tol: float = 1e-9, bracket: tuple[float, float] | None = None
) -> float:
    """The unique real root in (1, inf), located by sign-change bisection.

    Requires p(1) < 0 unless an explicit bracket is supplied; the upper
    end defaults to the Cauchy-style bound 1 + sum |lower coefficients|.
    """
    if bracket is not None:
        lo, hi = bracket
        if not (p(lo) < 0 < p(hi)):
            raise NoBracket("supplied bracket does not enclose a sign change")
    else:
        lo = 1.0
        if p(lo) >= 0:
            raise NoBracket("p(1) >= 0; supply an explicit bracket")
        hi = 1.0 + float(sum(abs(c) for c in p.coeffs[1:]))
        while p(hi) <= 0:
            hi *= 2.0
    while hi - lo > 2.0 * tol:
        mid = (lo + hi) / 2.0
        if p(mid) < 0:
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2.0


# ---------------------------------------------------------------------------
# Loop-tree and equioriented-cycle recursions
# ---------------------------------------------------------------------------


def _loop_tree_parts(qt: Quiver) -> RootedTree:
    loops = [a for a in qt.arrows if a.source == a.target]
    if len(loops) != 1:
        raise WrongShape("expected exactly one loop")
    loop = loops[0]
    rest = qt.subquiver(qt.vertices, [a.id for a in qt.arrows if a.id != loop.id])
    return RootedTree(rest, loop.source)


def loop_tree_recursion(qt: Quiver) -> LinearRecursion:
    """Counting recursion for a rooted tree glued to a single loop.

    Coefficients are the rooted-subtree counts of the tree; the relation
    holds from twice the tree size onward.
    """
    tree = _loop_tree_parts(qt)
    s = rooted_subtree_counts(tree)
    return LinearRecursion(
        tuple(s), 2 * tree.size, description="loop-tree counting recursion"
    )


def _cycle_order(q: Quiver) -> list[str]:
    """Vertices of the central cycle in arrow order; requires equiorientation."""
    cycle = central_cycle(q)
    succ: dict[str, str] = {}
    indeg = {v: 0 for v in cycle.vertices}
    for a in cycle.arrows:
        if a.source in succ:
            raise NotEquioriented("central cycle is not equioriented")
        succ[a.source] = a.target
        indeg[a.target] += 1
    if any(d != 1 for d in indeg.values()) or len(succ) != len(cycle.vertices):
        raise NotEquioriented("central cycle is not equioriented")
    start = min(cycle.vertices)
    order = [start]
    while True:
        nxt = succ[order[-1]]
        if nxt == start:
            break
        order.append(nxt)
    return order


def hanging_tree(q: Quiver, cycle_vertex: str) -> RootedTree:
    """The rooted tree attached at a cycle vertex (cycle arrows removed)."""
    cycle = central_cycle(q)
    if cycle_vertex not in set(cycle.vertices):
        raise InputError(f"{cycle_vertex!r} is not a central cycle vertex")
    cyc_arrows = {a.id for a in cycle.arrows}
    pruned = q.subquiver(
        q.vertices, [a.id for a in q.arrows if a.id not in cyc_arrows]
    )
    comp = next(c for c in pruned.components if cycle_vertex in c)
    return RootedTree(pruned.subquiver(sorted(comp)), cycle_vertex)


def cycle_step_coefficients(q: Quiver, f: str) -> list[int]:
    """Per-step coefficients at cycle vertex f: subtree counts of its tree."""
    _cycle_order(q)
    return rooted_subtree_counts(hanging_tree(q, f))


def cycle_recursion(q: Quiver, i: str, f: str) -> LinearRecursion:
    """Recursion for spine counts from i to f, composed once around the cycle.

    Back-substituting the one-step relation all the way around multiplies
    the per-vertex subtree generating polynomials; the product's
    coefficients are the recursion coefficients.
    """
    order = _cycle_order(q)
    for v in (i, f):
        if v not in order:
            raise InputError(f"{v!r} is not a central cycle vertex")
    trees = {v: hanging_tree(q, v) for v in order}
    sizes = {v: trees[v].size for v in order}
    total = sum(sizes.values())
    if total > MAX_RECURSION_ORDER:
        raise BudgetExceeded(
            f"composed recursion order {total} exceeds {MAX_RECURSION_ORDER}"
        )
    poly = [1]
    for v in order:
        poly = _poly_mul(poly, subtree_generating_poly(trees[v]))
    pos_f = order.index(f)
    prev_f = order[pos_f - 1]
    threshold = max(
        sizes[f] + sizes[prev_f],
        sum(sizes[order[k]] + sizes[order[k - 1]] for k in range(len(order))),
    )
    return LinearRecursion(
        tuple(poly[1:]), threshold, description=f"cycle recursion {i}->{f}"
    )


def spine_path_count(q: Quiver, i: str, f: str, d: int) -> int:
    """Number of classes of dimension d whose spine runs from v_i to v_f.

    Direct dynamic program: walk around the cycle multiplying subtree
    generating polynomials, reading off the degree-d coefficient whenever
    the walk ends at f.
    """
    order = _cycle_order(q)
    for v in (i, f):
        if v not in order:
            raise InputError(f"{v!r} is not a central cycle vertex")
    polys = {v: subtree_generating_poly(hanging_tree(q, v)) for v in order}
    n = len(order)
    pos_i, pos_f = order.index(i), order.index(f)
    total = 0
    poly = [0] * (d + 1)
    base = polys[order[pos_i]]
    for k in range(min(len(base), d + 1)):
        poly[k] = base[k]
    pos = pos_i
    length = 1
    while True:
        if pos == pos_f:
            total += poly[d]
        if length > d:
            break
        pos = (pos + 1) % n
        poly = _poly_mul(poly, polys[order[pos]], cap=d)
        length += 1
        if not any(poly):
            break
    return total


def counting_recursion(q: Quiver) -> LinearRecursion:
    """Recursion satisfied by the total class count of a pseudotree base.

    For a loop-tree base this is the loop-tree recursion itself; for an
    equioriented central cycle the composed cycle recursion applies once
    every spine-window count obeys it and branch classes have died out.
    """
    loops = [a for a in q.arrows if a.source == a.target]
    if len(loops) == 1 and len(q.arrows) == len(q.vertices):
        return loop_tree_recursion(q)
    order = _cycle_order(q)
    rec = cycle_recursion(q, order[0], order[0])
    max_t = max(hanging_tree(q, v).size for v in order)
    return LinearRecursion(
        rec.coeffs,
        max(rec.valid_from, max_t + rec.order),
        description="total count recursion",
    )


# ---------------------------------------------------------------------------
# Growth classification
# ---------------------------------------------------------------------------


class NilClass(Enum):
    L0 = "L0"
    L1 = "L1"
    LOOP_ARROW = "LoopArrow"
    L2 = "L2"


REPRESENTATIVE = {
    NilClass.L0: "single-vertex",
    NilClass.L1: "one-loop",
    NilClass.LOOP_ARROW: "loop-with-arrow",
    NilClass.L2: "two-loops",
}


def classify_nil(q: Quiver) -> NilClass:
    """Growth class of a connected quiver, one of four possibilities."""
    if not q.is_connected:
        raise DisconnectedQuiver("growth classification needs a connected quiver")
    shape = classify_shape(q)
    return {
        Shape.TREE: NilClass.L0,
        Shape.TYPE_A_TILDE_CYCLE: NilClass.L1,
        Shape.PROPER_PSEUDOTREE: NilClass.LOOP_ARROW,
        Shape.WILD: NilClass.L2,
    }[shape.kind]
