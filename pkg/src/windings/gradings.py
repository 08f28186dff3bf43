"""Nice gradings and nice sequences on windings.

A grading is an integer vertex labeling; it is nice when equally colored
arrows have equal slope.  Sequences of gradings that stay nice relative to
the profiles already accumulated, and eventually tell all vertices apart,
certify that subrepresentation counting computes the Euler characteristic
of the corresponding quiver Grassmannians.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .errors import (
    InputError,
    InvalidSequence,
    LoopPresent,
    NoCertificate,
    NotNice,
    PartialGrading,
)
from .quiver import Winding
from .representation import Representation, SubFlavor, closed_subsets, dimension_vector

Grading = dict[str, int]


def _check_total(w: Winding, g: Grading) -> None:
    missing = [v for v in w.total.vertices if v not in g]
    if missing:
        raise PartialGrading(f"grading misses vertices {missing}")


def slopes(w: Winding, g: Grading) -> dict[str, int]:
    """Per-arrow slope: value at target minus value at source."""
    _check_total(w, g)
    return {a.id: g[a.target] - g[a.source] for a in w.total.arrows}


def is_nice(w: Winding, g: Grading) -> bool:
    """Equal slope on equally colored arrows."""
    sl = slopes(w, g)
    per_color: dict[str, int] = {}
    for a in w.total.arrows:
        color = w.arrow_color(a.id)
        if color in per_color:
            if per_color[color] != sl[a.id]:
                return False
        else:
            per_color[color] = sl[a.id]
    return True


def is_nondegenerate(w: Winding, g: Grading) -> bool:
    """All slopes nonzero; requires a nice grading."""
    if not is_nice(w, g):
        raise NotNice("non-degeneracy is only defined for nice gradings")
    return all(v != 0 for v in slopes(w, g).values())


def _profiles(w: Winding, seq: list[Grading]) -> dict[str, tuple[int, ...]]:
    return {v: tuple(g[v] for g in seq) for v in w.total.vertices}


def confusable_classes(w: Winding, seq: list[Grading]) -> list[tuple[str, ...]]:
    """Partition of arrows by color and endpoint profiles under ``seq``.

    Two arrows in one class are exactly those whose slopes a further
    grading is still required to match.
    """
    for g in seq:
        _check_total(w, g)
    prof = _profiles(w, seq)
    groups: dict[tuple, list[str]] = {}
    for a in w.total.arrows:
        sig = (w.arrow_color(a.id), prof[a.source], prof[a.target])
        groups.setdefault(sig, []).append(a.id)
    classes = [tuple(sorted(ids)) for ids in groups.values()]
    classes.sort()
    return classes


def is_relative_nice(w: Winding, seq: list[Grading], g: Grading) -> bool:
    """Slope equality required only on arrow pairs still confusable under seq."""
    if not is_valid_nice_sequence(w, seq):
        raise InvalidSequence("prior gradings do not form a nice sequence")
    sl = slopes(w, g)
    for cls in confusable_classes(w, seq):
        vals = {sl[a] for a in cls}
        if len(vals) > 1:
            return False
    return True


def is_valid_nice_sequence(w: Winding, seq: list[Grading]) -> bool:
    for i, g in enumerate(seq):
        _check_total(w, g)
        sl = slopes(w, g)
        for cls in confusable_classes(w, seq[:i]):
            if len({sl[a] for a in cls}) > 1:
                return False
    return True


def distinguishes(seq: list[Grading], w: Winding) -> bool:
    """True iff vertex profile vectors are pairwise distinct."""
    prof = _profiles(w, seq)
    return len(set(prof.values())) == len(prof)


def vertex_label_grading(w: Winding) -> Grading:
    """Grade each vertex by the index of its base vertex.

    Nice by construction; non-degenerate whenever the base has no loops.
    """
    if any(a.source == a.target for a in w.base.arrows):
        raise LoopPresent("base quiver has a loop; labels would give slope 0")
    index = {v: i + 1 for i, v in enumerate(w.base.vertices)}
    return {v: index[w.vertex_color(v)] for v in w.total.vertices}


# ---------------------------------------------------------------------------
# Integer solution lattices
# ---------------------------------------------------------------------------


def _int_kernel(rows: list[list[int]], ncols: int) -> list[list[int]]:
    """Basis of the integer kernel of a matrix, via unimodular column ops.

    Returns vectors generating all integer solutions of rows . x = 0.
    """
    A = [list(r) for r in rows]
    U = [[1 if i == j else 0 for j in range(ncols)] for i in range(ncols)]

    def colop_sub(c, c0, q):
        for row in A:
            row[c] -= q * row[c0]
        for row in U:
            row[c] -= q * row[c0]

    def colswap(c1, c2):
        for row in A:
            row[c1], row[c2] = row[c2], row[c1]
        for row in U:
            row[c1], row[c2] = row[c2], row[c1]

    col = 0
    for r in range(len(A)):
        if col >= ncols:
            break
        while True:
            nz = [c for c in range(col, ncols) if A[r][c] != 0]
            if not nz:
                break
            if len(nz) == 1:
                if nz[0] != col:
                    colswap(nz[0], col)
                col += 1
                break
            c0 = min(nz, key=lambda c: (abs(A[r][c]), c))
            for c in nz:
                if c == c0:
                    continue
                q = A[r][c] // A[r][c0]
                if q:
                    colop_sub(c, c0, q)
    kernel = []
    for c in range(col, ncols):
        vec = [U[i][c] for i in range(ncols)]
        lead = next((x for x in vec if x != 0), 0)
        if lead < 0:
            vec = [-x for x in vec]
        kernel.append(vec)
    return kernel


@dataclass
class GradingLattice:
    """All integer gradings whose slopes are constant on each arrow class."""

    winding: Winding
    classes: tuple[tuple[str, ...], ...]
    basis: tuple[Grading, ...] = field(default_factory=tuple)

    def contains(self, g: Grading) -> bool:
        """Membership equals the defining property: class-constant slopes."""
        sl = slopes(self.winding, g)
        return all(len({sl[a] for a in cls}) <= 1 for cls in self.classes)

    def spans(self, g: Grading) -> bool:
        """True iff g is an integer combination of the basis vectors."""
        verts = self.winding.total.vertices
        cols = [[b.get(v, 0) for v in verts] for b in self.basis]
        target = [g.get(v, 0) for v in verts]
        n = len(verts)
        cols = [list(c) for c in cols]
        # column echelon with back-substitution against the target
        used = [False] * len(cols)
        for row in range(n):
            while True:
                nz = [j for j, c in enumerate(cols) if not used[j] and c[row] != 0]
                if not nz:
                    break
                if len(nz) == 1:
                    break
                j0 = min(nz, key=lambda j: (abs(cols[j][row]), j))
                for j in nz:
                    if j == j0:
                        continue
                    q = cols[j][row] // cols[j0][row]
                    if q:
                        for i in range(n):
                            cols[j][i] -= q * cols[j0][i]
            nz = [j for j, c in enumerate(cols) if not used[j] and c[row] != 0]
            if nz:
                j0 = nz[0]
                if target[row] % cols[j0][row] != 0:
                    return False
                q = target[row] // cols[j0][row]
                for i in range(n):
                    target[i] -= q * cols[j0][i]
                used[j0] = True
            elif target[row] != 0:
                return False
        return all(x == 0 for x in target)


def grading_lattice(
    w: Winding, classes: list[tuple[str, ...]] | None = None
) -> GradingLattice:
    """Integer basis of gradings with equal slope on each arrow class.

    Solved exactly: unknowns are vertex values and one slope per class,
    one linear relation per arrow; the kernel is computed over the
    integers so the basis generates every solution.
    """
    if classes is None:
        classes = confusable_classes(w, [])
    verts = w.total.vertices
    nv = len(verts)
    vidx = {v: i for i, v in enumerate(verts)}
    cidx = {a: j for j, cls in enumerate(classes) for a in cls}
    ncols = nv + len(classes)
    rows = []
    for a in w.total.arrows:
        row = [0] * ncols
        row[vidx[a.target]] += 1
        row[vidx[a.source]] -= 1
        row[nv + cidx[a.id]] -= 1
        rows.append(row)
    kernel = _int_kernel(rows, ncols)
    basis = tuple(
        {v: vec[vidx[v]] for v in verts}
        for vec in kernel
        if any(vec[i] for i in range(nv))
    )
    return GradingLattice(w, tuple(classes), basis)


def _candidate_gradings(basis: tuple[Grading, ...], max_coeff: int, limit: int):
    """Deterministic stream of integer combinations of basis gradings."""
    import math

    k = len(basis)
    count = 0

    def combine(pairs):
        out: Grading = {}
        for coeff, b in pairs:
            for v, val in b.items():
                out[v] = out.get(v, 0) + coeff * val
        return out

    for i in range(k):
        yield basis[i]
        count += 1
        if count >= limit:
            return
    for i in range(k):
        for j in range(i + 1, k):
            for ci in range(1, max_coeff + 1):
                for cj in range(-max_coeff, max_coeff + 1):
                    if cj == 0 or math.gcd(ci, abs(cj)) != 1:
                        continue
                    yield combine([(ci, basis[i]), (cj, basis[j])])
                    count += 1
                    if count >= limit:
                        return
    for i in range(k):
        for j in range(i + 1, k):
            for l in range(j + 1, k):
                for ci in range(1, max_coeff + 1):
                    for cj in range(-max_coeff, max_coeff + 1):
                        for cl in range(-max_coeff, max_coeff + 1):
                            if cj == 0 or cl == 0:
                                continue
                            if math.gcd(math.gcd(ci, abs(cj)), abs(cl)) != 1:
                                continue
                            yield combine(
                                [(ci, basis[i]), (cj, basis[j]), (cl, basis[l])]
                            )
                            count += 1
                            if count >= limit:
                                return


def frees(
    w: Winding,
    seq: list[Grading],
    arrow_id: str,
    max_coeff: int = 3,
    max_candidates: int = 2000,
) -> bool:
    """Whether one more relative-nice grading can isolate the arrow.

    True iff some candidate separates the arrow's endpoint profiles from
    every other arrow of its confusable class.  A False result after the
    candidate budget is inconclusive, not a proof of impossibility.
    """
    if not is_valid_nice_sequence(w, seq):
        raise InvalidSequence("prior gradings do not form a nice sequence")
    if arrow_id not in w.total.arrow_by_id:
        raise InputError(f"unknown arrow {arrow_id!r}")
    classes = confusable_classes(w, seq)
    cls = next(c for c in classes if arrow_id in c)
    if len(cls) == 1:
        return True
    lattice = grading_lattice(w, classes)
    arr = w.total.arrow_by_id
    a = arr[arrow_id]
    others = [arr[x] for x in cls if x != arrow_id]
    for g in _candidate_gradings(lattice.basis, max_coeff, max_candidates):
        pa = (g[a.source], g[a.target])
        if all((g[b.source], g[b.target]) != pa for b in others):
            return True
    return False


# ---------------------------------------------------------------------------
# Distinguishing sequence search and Euler characteristics
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SearchBudget:
    """Search limits; ``max_gradings=None`` allows one grading per vertex,
    which always suffices when the search can succeed at all."""

    max_gradings: int | None = None
    max_coeff: int = 3
    max_candidates: int = 4000


def find_distinguishing_sequence(
    w: Winding, budget: SearchBudget | None = None
) -> list[Grading] | None:
    """Greedy search for a nice sequence with pairwise distinct profiles.

    At each stage the full integer lattice for the current confusable
    partition is computed and the first candidate that strictly refines
    the vertex profile partition is appended.  Failure is inconclusive.
    """
    budget = budget or SearchBudget()
    max_gradings = budget.max_gradings
    if max_gradings is None:
        max_gradings = max(8, len(w.total.vertices))
    seq: list[Grading] = []
    while True:
        if distinguishes(seq, w):
            return seq
        if len(seq) >= max_gradings:
            return None
        prof = _profiles(w, seq)
        blocks = len(set(prof.values()))
        n = len(w.total.vertices)
        classes = confusable_classes(w, seq)
        lattice = grading_lattice(w, classes)
        chosen = None
        for g in _candidate_gradings(
            lattice.basis, budget.max_coeff, budget.max_candidates
        ):
            refined = len({(prof[v], g[v]) for v in w.total.vertices})
            if refined == n:
                chosen = g
                break
            if refined > blocks and chosen is None:
                chosen = g
        if chosen is None:
            return None
        seq.append(chosen)


@dataclass(frozen=True)
class EulerResult:
    value: int
    certificate: list[Grading]


def euler_characteristic(
    m: Representation, d: dict[str, int], budget: SearchBudget | None = None
) -> EulerResult:
    """Euler characteristic by counting target-closed subsets of size d.

    A distinguishing nice sequence is attached as the certificate; without
    one the count alone is not certified and NoCertificate is raised.
    """
    dims = dimension_vector(m)
    for v, k in d.items():
        if v not in dims:
            raise InputError(f"dimension vector mentions unknown vertex {v!r}")
        if k < 0 or k > dims[v]:
            raise InputError(
                f"entry {k} at vertex {v!r} outside [0, {dims[v]}]"
            )
    seq = find_distinguishing_sequence(m.winding, budget)
    if seq is None:
        raise NoCertificate("no distinguishing nice sequence found within budget")
    count = len(closed_subsets(m, SubFlavor.ARROW_TARGET_CLOSED, d))
    return EulerResult(count, seq)


def subrepresentation_count(m: Representation, d: dict[str, int]) -> int:
    """Raw count of target-closed subsets with dimension vector d."""
    return len(closed_subsets(m, SubFlavor.ARROW_TARGET_CLOSED, d))
