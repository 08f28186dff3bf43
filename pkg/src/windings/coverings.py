"""Coverings, the chained-copies construction, restriction and contraction
of windings along base arrow subsets, and lifting of nice sequences.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .errors import InputError, PreconditionFailed, UnknownArrow
from .gradings import (
    Grading,
    distinguishes,
    is_valid_nice_sequence,
)
from .quiver import (
    Arrow,
    Quiver,
    QuiverMap,
    Winding,
    is_winding,
    validate_quiver_map,
    winding_violation,
)


@dataclass(frozen=True)
class CoveringReport:
    is_quiver_map: bool
    is_surjective: bool
    local_out_bijective: dict[str, bool]
    local_in_bijective: dict[str, bool]
    boundary_vertices: tuple[str, ...]
    strict: bool


def covering_report(m: QuiverMap) -> CoveringReport:
    """Per-vertex covering diagnostics.

    A strict covering is surjective and restricts to bijections between
    incident arrows upstairs and downstairs at every vertex; the
    construction below fails this only at its two extreme copies, which is
    why the boundary is reported instead of a single flag.
    """
    ok_map = validate_quiver_map(m)
    surj = set(m.vertex_map.values()) == set(m.codomain.vertices) and set(
        m.arrow_map.values()
    ) == {a.id for a in m.codomain.arrows}
    local_out: dict[str, bool] = {}
    local_in: dict[str, bool] = {}
    for k in m.domain.vertices:
        i = m.vertex_map[k]
        up_out = sorted(m.arrow_map[a.id] for a in m.domain.out_arrows(k))
        down_out = sorted(a.id for a in m.codomain.out_arrows(i))
        local_out[k] = up_out == down_out
        up_in = sorted(m.arrow_map[a.id] for a in m.domain.in_arrows(k))
        down_in = sorted(a.id for a in m.codomain.in_arrows(i))
        local_in[k] = up_in == down_in
    boundary = tuple(
        sorted(v for v in m.domain.vertices if not (local_out[v] and local_in[v]))
    )
    strict = ok_map and surj and not boundary
    return CoveringReport(ok_map, surj, local_out, local_in, boundary, strict)


def check_covering_implies_winding(m: QuiverMap) -> bool:
    """Property assertion: a strict covering is always a winding."""
    report = covering_report(m)
    return (not report.strict) or is_winding(m)


# ---------------------------------------------------------------------------
# Chained-copies construction
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ChainCoverConfig:
    """Copies of the base minus one arrow, chained back through that arrow.

    The labeling is a bijection from base vertices onto 1..|vertices| and
    drives the distinguishing grading; by default it follows sorted order.
    """

    base: Quiver
    arrow: str
    copies: int
    labeling: dict[str, int] = field(default_factory=dict)

    def __post_init__(self):
        if self.arrow not in self.base.arrow_by_id:
            raise UnknownArrow(f"unknown arrow {self.arrow!r}")
        if self.copies < 1:
            raise InputError("copies must be at least 1")
        if not self.labeling:
            object.__setattr__(
                self,
                "labeling",
                {v: i + 1 for i, v in enumerate(self.base.vertices)},
            )
        expected = set(range(1, len(self.base.vertices) + 1))
        if (
            set(self.labeling) != set(self.base.vertices)
            or set(self.labeling.values()) != expected
        ):
            raise InputError("labeling must biject vertices onto 1..|vertices|")


def build_chain_cover(cfg: ChainCoverConfig) -> Winding:
    """Disjoint copies of the base minus the chosen arrow, consecutive
    copies joined by an arrow over it from source in one copy to target in
    the next."""
    q = cfg.base
    e = q.arrow_by_id[cfg.arrow]
    verts = []
    arrows = []
    vmap = {}
    amap = {}
    for k in range(1, cfg.copies + 1):
        for v in q.vertices:
            name = f"{v}@{k}"
            verts.append(name)
            vmap[name] = v
        for a in q.arrows:
            if a.id == cfg.arrow:
                continue
            name = f"{a.id}@{k}"
            arrows.append(Arrow(name, f"{a.source}@{k}", f"{a.target}@{k}"))
            amap[name] = a.id
    for k in range(1, cfg.copies):
        name = f"{cfg.arrow}@{k}"
        arrows.append(Arrow(name, f"{e.source}@{k}", f"{e.target}@{k + 1}"))
        amap[name] = cfg.arrow
    total = Quiver(tuple(verts), tuple(arrows))
    return Winding(QuiverMap(total, q, vmap, amap))


def chain_cover_grading(w: Winding, cfg: ChainCoverConfig) -> Grading:
    """Nice distinguishing grading on a chained cover.

    Copy k is offset by 2|vertices|(k-1), so the slope over the chained
    arrow is its label difference plus 2|vertices|; label ranges of
    distinct copies stay disjoint because labels lie in 1..|vertices|.
    """
    n = len(cfg.base.vertices)
    out: Grading = {}
    for v in w.total.vertices:
        base_v, k = v.rsplit("@", 1)
        out[v] = cfg.labeling[base_v] + 2 * n * (int(k) - 1)
    return out


# ---------------------------------------------------------------------------
# Restriction and contraction
# ---------------------------------------------------------------------------


def restrict(w: Winding, arrow_ids) -> Winding:
    """Winding induced on the arrows over a base arrow subset.

    The total quiver keeps exactly those arrows and their endpoints; the
    base is unchanged.  The result is always a winding.
    """
    aset = set(arrow_ids)
    unknown = aset - set(w.base.arrow_by_id)
    if unknown:
        raise UnknownArrow(f"unknown arrows {sorted(unknown)}")
    kept = [a for a in w.total.arrows if w.arrow_color(a.id) in aset]
    verts = sorted({a.source for a in kept} | {a.target for a in kept})
    total = Quiver(tuple(verts), tuple(kept))
    return Winding(
        QuiverMap(
            total,
            w.base,
            {v: w.vertex_color(v) for v in verts},
            {a.id: w.arrow_color(a.id) for a in kept},
        )
    )


@dataclass(frozen=True)
class ContractionResult:
    map: QuiverMap
    is_winding: bool
    #: total-quiver vertex -> quotient vertex
    projection: dict[str, str]
    #: base vertex -> quotient base vertex
    base_projection: dict[str, str]


def _merge(quiver: Quiver, arrow_ids: set[str]) -> tuple[Quiver, dict[str, str]]:
    parent = {v: v for v in quiver.vertices}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a in quiver.arrows:
        if a.id in arrow_ids:
            ra, rb = find(a.source), find(a.target)
            if ra != rb:
                parent[ra] = rb
    groups: dict[str, list[str]] = {}
    for v in quiver.vertices:
        groups.setdefault(find(v), []).append(v)
    rep = {root: min(members) for root, members in groups.items()}
    proj = {v: rep[find(v)] for v in quiver.vertices}
    verts = tuple(sorted(set(proj.values())))
    arrows = tuple(
        Arrow(a.id, proj[a.source], proj[a.target])
        for a in quiver.arrows
        if a.id not in arrow_ids
    )
    return Quiver(verts, arrows), proj


def contract(w: Winding, arrow_ids) -> ContractionResult:
    """Contract the arrows over a base arrow subset, at both levels.

    The endpoints of every contracted arrow are merged and the remaining
    arrows reattached.  The quotient assignment always commutes with
    sources and targets; whether it is still a winding is reported.
    """
    aset = set(arrow_ids)
    unknown = aset - set(w.base.arrow_by_id)
    if unknown:
        raise UnknownArrow(f"unknown arrows {sorted(unknown)}")
    fiber = {a.id for a in w.total.arrows if w.arrow_color(a.id) in aset}
    total_q, proj = _merge(w.total, fiber)
    base_q, base_proj = _merge(w.base, aset)
    # class representatives are vertices of the original quiver, so their
    # colors descend directly
    vmap = {v: base_proj[w.vertex_color(v)] for v in total_q.vertices}
    amap = {a.id: w.arrow_color(a.id) for a in total_q.arrows}
    m = QuiverMap(total_q, base_q, vmap, amap)
    ok = validate_quiver_map(m) and winding_violation(m) is None
    return ContractionResult(m, ok, proj, base_proj)


def lift_nice_sequence(
    w: Winding,
    arrow_ids,
    seq_quotient: list[Grading],
    seq_restricted: list[Grading],
) -> list[Grading]:
    """Combine distinguishing sequences of the contraction and the
    restriction into one distinguishing sequence on the whole winding.

    Quotient gradings lift by constancy on each merged class (slope zero
    over the contracted arrows); restricted gradings lift by zero outside
    the restricted part.  Both preconditions are enforced: the contraction
    must be a winding and both inputs must distinguish their domains.
    """
    contraction = contract(w, arrow_ids)
    if not contraction.is_winding:
        raise PreconditionFailed("contracted assignment is not a winding")
    quotient_w = Winding(contraction.map)
    restricted_w = restrict(w, arrow_ids)
    if not is_valid_nice_sequence(quotient_w, seq_quotient):
        raise PreconditionFailed("quotient sequence is not a nice sequence")
    if not distinguishes(seq_quotient, quotient_w):
        raise PreconditionFailed("quotient sequence does not distinguish")
    if not is_valid_nice_sequence(restricted_w, seq_restricted):
        raise PreconditionFailed("restricted sequence is not a nice sequence")
    if not distinguishes(seq_restricted, restricted_w):
        raise PreconditionFailed("restricted sequence does not distinguish")
    proj = contraction.projection
    lifted: list[Grading] = []
    for g in seq_quotient:
        lifted.append({v: g[proj[v]] for v in w.total.vertices})
    restricted_verts = set(restricted_w.total.vertices)
    for g in seq_restricted:
        lifted.append(
            {v: (g[v] if v in restricted_verts else 0) for v in w.total.vertices}
        )
    if not is_valid_nice_sequence(w, lifted) or not distinguishes(lifted, w):
        raise PreconditionFailed("lifted sequence failed validation")
    return lifted
