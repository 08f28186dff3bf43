"""Hall algebra of representations: product, coproduct, commutators, the
tree-gluing bracket, the sign twist under arrow reversal, and the
decomposition of cycle-carrying classes into brackets of tree classes.

Elements are finite integer combinations of canonical isomorphism-class
keys, each with a stored witness representation.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .errors import (
    BaseMismatch,
    DisconnectedT,
    InputError,
    NonIndecomposableInput,
    NoSink,
    NotPseudotree,
    NotTreeRep,
    WindingsError,
)
from .quiver import Quiver, betti_number, central_cycle
from .representation import (
    Representation,
    SubFlavor,
    aut_count,
    closed_subsets,
    count_coefficient_isos,
    decompose,
    dimension_vector,
    direct_sum,
    induced_subrepresentation,
    is_indecomposable,
    make_representation,
    zero_representation,
)


@dataclass
class HallElement:
    """Integer combination of isomorphism classes over one base quiver."""

    base: Quiver
    terms: dict[bytes, tuple[int, Representation]] = field(default_factory=dict)

    def copy(self) -> "HallElement":
        return HallElement(self.base, dict(self.terms))

    def add_term(self, rep: Representation, coeff: int = 1) -> None:
        if rep.base != self.base:
            raise BaseMismatch("term lives over a different base")
        if coeff == 0:
            return
        key = rep.key
        old, witness = self.terms.get(key, (0, rep))
        new = old + coeff
        if new == 0:
            self.terms.pop(key, None)
        else:
            self.terms[key] = (new, witness)

    def coefficient(self, rep_or_key) -> int:
        key = rep_or_key if isinstance(rep_or_key, bytes) else rep_or_key.key
        return self.terms.get(key, (0, None))[0]

    def __add__(self, other: "HallElement") -> "HallElement":
        out = self.copy()
        for coeff, witness in other.terms.values():
            out.add_term(witness, coeff)
        return out

    def __sub__(self, other: "HallElement") -> "HallElement":
        out = self.copy()
        for coeff, witness in other.terms.values():
            out.add_term(witness, -coeff)
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, HallElement):
            return NotImplemented
        return self.base == other.base and {
            k: c for k, (c, _) in self.terms.items()
        } == {k: c for k, (c, _) in other.terms.items()}

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def support(self) -> list[Representation]:
        return [w for _, (_, w) in sorted(self.terms.items())]

    def items(self):
        """(key, coeff, witness) triples sorted by key."""
        return [(k, c, w) for k, (c, w) in sorted(self.terms.items())]


def element_from(rep: Representation, coeff: int = 1) -> HallElement:
    e = HallElement(rep.base)
    e.add_term(rep, coeff)
    return e


@dataclass
class TensorElement:
    """Integer combination of ordered pairs of classes."""

    base: Quiver
    terms: dict[tuple[bytes, bytes], tuple[int, Representation, Representation]] = (
        field(default_factory=dict)
    )

    def add_term(self, left: Representation, right: Representation, coeff: int = 1):
        if coeff == 0:
            return
        key = (left.key, right.key)
        old = self.terms.get(key, (0, left, right))[0]
        new = old + coeff
        if new == 0:
            self.terms.pop(key, None)
        else:
            self.terms[key] = (new, left, right)

    def coefficient(self, left_key: bytes, right_key: bytes) -> int:
        return self.terms.get((left_key, right_key), (0, None, None))[0]

    def __eq__(self, other) -> bool:
        if not isinstance(other, TensorElement):
            return NotImplemented
        return self.base == other.base and {
            k: c for k, (c, *_) in self.terms.items()
        } == {k: c for k, (c, *_) in other.terms.items()}


# ---------------------------------------------------------------------------
# Extensions
# ---------------------------------------------------------------------------


def _partial_matchings(lefts, rights):
    """All injective partial maps from lefts into rights, as pair lists."""
    out = [[]]
    for v in lefts:
        new = []
        for match in out:
            used = {w for _, w in match}
            new.append(match)
            for w in rights:
                if w not in used:
                    new.append(match + [(v, w)])
        out = new
    return out


def _glued(m: Representation, n: Representation, added):
    """Disjoint union of m (quotient part) and n (sub part) plus glue arrows.

    ``added`` holds triples (vertex of m, vertex of n, base arrow id); the
    glue arrows run from the m part into the n part.
    """
    verts = [(f"q.{v}", m.vertex_color(v)) for v in m.total.vertices]
    verts += [(f"s.{v}", n.vertex_color(v)) for v in n.total.vertices]
    arrows = [
        (f"q.{a.id}", f"q.{a.source}", f"q.{a.target}", m.arrow_color(a.id))
        for a in m.total.arrows
    ]
    arrows += [
        (f"s.{a.id}", f"s.{a.source}", f"s.{a.target}", n.arrow_color(a.id))
        for a in n.total.arrows
    ]
    arrows += [
        (f"g{k}", f"q.{v}", f"s.{w}", alpha) for k, (v, w, alpha) in enumerate(added)
    ]
    return make_representation(m.base, verts, arrows)


def enumerate_extensions(m: Representation, n: Representation) -> list[Representation]:
    """All middle terms of extensions with sub n and quotient m, up to iso.

    Every such representation arises from the disjoint union by adding,
    for each base arrow, arrows from its saturated endpoints in the m part
    to its free endpoints in the n part; the split extension (no arrows
    added) is included.
    """
    if m.base != n.base:
        raise BaseMismatch("extensions need a common base")
    per_color = []
    for alpha in m.base.arrows:
        sinks = [
            v
            for v in m.total.vertices
            if m.vertex_color(v) == alpha.source
            and (v, alpha.id) not in m.out_by_color
        ]
        sources = [
            w
            for w in n.total.vertices
            if n.vertex_color(w) == alpha.target and (w, alpha.id) not in n.in_by_color
        ]
        matchings = _partial_matchings(sinks, sources)
        per_color.append([[(v, w, alpha.id) for v, w in match] for match in matchings])
    seen: dict[bytes, Representation] = {}
    for combo in itertools.product(*per_color):
        added = [triple for group in combo for triple in group]
        rep = _glued(m, n, added)
        seen.setdefault(rep.key, rep)
    return [rep for _, rep in sorted(seen.items())]


_PRODUCT_MEMO: dict[tuple[Quiver, bytes, bytes], HallElement] = {}


def hall_product(m: Representation, n: Representation) -> HallElement:
    """Product of two classes: sum over extensions weighted by the number
    of target-closed subobjects isomorphic to n with quotient isomorphic
    to m.  Results are memoized by canonical key pair."""
    if m.base != n.base:
        raise BaseMismatch("product needs a common base")
    memo_key = (m.base, m.key, n.key)
    cached = _PRODUCT_MEMO.get(memo_key)
    if cached is not None:
        return cached.copy()
    want = dimension_vector(n)
    key_n, key_m = n.key, m.key
    out = HallElement(m.base)
    for rep in enumerate_extensions(m, n):
        count = 0
        for cs in closed_subsets(rep, SubFlavor.ARROW_TARGET_CLOSED, want):
            sub = induced_subrepresentation(rep, cs.vertices)
            if sub.key != key_n:
                continue
            quot = induced_subrepresentation(
                rep, set(rep.total.vertices) - cs.vertices
            )
            if quot.key == key_m:
                count += 1
        if count:
            out.add_term(rep, count)
    _PRODUCT_MEMO[memo_key] = out.copy()
    return out


def element_product(e1: HallElement, e2: HallElement) -> HallElement:
    """Bilinear extension of the product to integer combinations."""
    if e1.base != e2.base:
        raise BaseMismatch("product needs a common base")
    out = HallElement(e1.base)
    for c1, w1 in e1.terms.values():
        for c2, w2 in e2.terms.values():
            prod = hall_product(w1, w2)
            for c, w in prod.terms.values():
                out.add_term(w, c * c1 * c2)
    return out


def verify_extension_counts(
    m: Representation, n: Representation, r: Representation
) -> bool:
    """Cross-check the product normalization on one middle term.

    The number of (inclusion, quotient identification) pairs, counted by
    brute-force isomorphism search, must equal the number of target-closed
    subobjects isomorphic to n with quotient isomorphic to m, times the
    automorphism counts of both ends.
    """
    if not (m.base == n.base == r.base):
        raise BaseMismatch("all three representations need a common base")
    want = dimension_vector(n)
    pair_count = 0
    subobject_count = 0
    for cs in closed_subsets(r, SubFlavor.ARROW_TARGET_CLOSED, want):
        sub = induced_subrepresentation(r, cs.vertices)
        quot = induced_subrepresentation(r, set(r.total.vertices) - cs.vertices)
        pair_count += count_coefficient_isos(n, sub) * count_coefficient_isos(quot, m)
        if sub.key == n.key and quot.key == m.key:
            subobject_count += 1
    return pair_count == subobject_count * aut_count(m) * aut_count(n)


# ---------------------------------------------------------------------------
# Coproduct and commutators
# ---------------------------------------------------------------------------


def coproduct(e: HallElement) -> TensorElement:
    """Split each class across ordered pairs of complementary summand
    multisets; a class is primitive exactly when it is indecomposable."""
    out = TensorElement(e.base)
    for coeff, witness in e.terms.values():
        parts = decompose(witness)
        groups: dict[bytes, list[Representation]] = {}
        for p in parts:
            groups.setdefault(p.key, []).append(p)
        keys = sorted(groups)
        ranges = [range(len(groups[k]) + 1) for k in keys]
        for pick in itertools.product(*ranges):
            left_parts: list[Representation] = []
            right_parts: list[Representation] = []
            for k, take in zip(keys, pick):
                left_parts.extend(groups[k][:take])
                right_parts.extend(groups[k][take:])
            left = direct_sum(*left_parts) if left_parts else zero_representation(e.base)
            right = (
                direct_sum(*right_parts) if right_parts else zero_representation(e.base)
            )
            out.add_term(left, right, coeff)
    return out


def commutator(m: Representation, n: Representation) -> HallElement:
    """Product commutator of two indecomposable classes.

    All decomposable terms cancel; this is enforced, not assumed.
    """
    if not is_indecomposable(m) or not is_indecomposable(n):
        raise NonIndecomposableInput("commutator arguments must be indecomposable")
    out = hall_product(m, n) - hall_product(n, m)
    for _, witness in out.terms.values():
        if not is_indecomposable(witness):
            raise WindingsError(
                "decomposable term survived in a commutator; this should not happen"
            )
    return out


# ---------------------------------------------------------------------------
# Tree gluing bracket and the sign twist
# ---------------------------------------------------------------------------


def _require_tree_rep(m: Representation) -> None:
    if m.dim == 0 or not m.total.is_connected or betti_number(m.total) != 0:
        raise NotTreeRep("expected a nonempty tree representation")


def _require_pseudotree(base: Quiver) -> None:
    if not base.is_connected or betti_number(base) > 1:
        raise NotPseudotree("base must be a connected quiver of Betti number <= 1")


def one_arrow_gluings(
    s: Representation, t: Representation, beta: str
) -> list[Representation]:
    """All windings made by one new beta-colored arrow from the s part to
    the t part of their disjoint union (multiset, not deduplicated)."""
    alpha = s.base.arrow_by_id[beta]
    out = []
    for v in s.total.vertices:
        if s.vertex_color(v) != alpha.source or (v, beta) in s.out_by_color:
            continue
        for w in t.total.vertices:
            if t.vertex_color(w) != alpha.target or (w, beta) in t.in_by_color:
                continue
            out.append(_glued(s, t, [(v, w, beta)]))
    return out


def glue_bracket(s: Representation, t: Representation) -> HallElement:
    """Antisymmetrized sum of all one-arrow gluings between two tree classes."""
    if s.base != t.base:
        raise BaseMismatch("bracket needs a common base")
    _require_pseudotree(s.base)
    _require_tree_rep(s)
    _require_tree_rep(t)
    out = HallElement(s.base)
    for alpha in s.base.arrows:
        for rep in one_arrow_gluings(s, t, alpha.id):
            out.add_term(rep, 1)
        for rep in one_arrow_gluings(t, s, alpha.id):
            out.add_term(rep, -1)
    return out


def tree_projection(e: HallElement) -> HallElement:
    """Drop every class whose total quiver carries a cycle (Betti number 1)."""
    _require_pseudotree(e.base)
    out = HallElement(e.base)
    for coeff, witness in e.terms.values():
        if betti_number(witness.total) != 1:
            out.add_term(witness, coeff)
    return out


def reversal_twist(e: HallElement, arrow_id: str) -> HallElement:
    """Send each tree class S to (-1)^(number of arrows over ``arrow_id``)
    times its image under reversal of that base arrow."""
    from .enumeration import reverse_representation
    from .quiver import reverse_arrow

    new_base = reverse_arrow(e.base, arrow_id)
    out = HallElement(new_base)
    for coeff, witness in e.terms.values():
        _require_tree_rep(witness)
        flips = sum(
            1 for a in witness.total.arrows if witness.arrow_color(a.id) == arrow_id
        )
        sign = -1 if flips % 2 else 1
        out.add_term(reverse_representation(witness, arrow_id), sign * coeff)
    return out


def count_nonsplit_extensions(s: Representation, t: Representation) -> int:
    """Number of non-split extensions whose glue arrows run from the s part
    into the t part, i.e. extensions with sub t and quotient s.

    For two spine tree classes over a pseudotree the answer is 0, 1 or 3;
    with a branch class involved it is bounded by the larger number of
    vertices over the central cycle (or 1).
    """
    if s.base != t.base:
        raise BaseMismatch("extension counting needs a common base")
    _require_pseudotree(s.base)
    _require_tree_rep(s)
    _require_tree_rep(t)
    return len(enumerate_extensions(s, t)) - 1


# ---------------------------------------------------------------------------
# Generator decomposition of cycle-carrying classes
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GeneratorDecomposition:
    main_tree: Representation
    pivot_tree: Representation
    first_glue_arrow: str
    second_glue_arrow: str
    verified: bool


def generator_decomposition(m: Representation) -> GeneratorDecomposition:
    """Express a cycle-carrying class through tree classes.

    Splits the total quiver at a sink of its cycle by removing the two
    incoming cycle-colored arrows there, then verifies the four-term
    product identity

        [T] * [T'] = [T' (+) T] + [T with first arrow] +
                     [T with second arrow] + [m]

    where T' is the piece holding the chosen sink and T the rest.
    """
    base = m.base
    _require_pseudotree(base)
    if betti_number(m.total) != 1 or not m.total.is_connected:
        raise InputError("expected an indecomposable class of Betti number 1")
    cycle = central_cycle(base)
    cycle_in: dict[str, list] = {v: [] for v in cycle.vertices}
    cycle_out: dict[str, list] = {v: [] for v in cycle.vertices}
    for a in cycle.arrows:
        cycle_out[a.source].append(a)
        cycle_in[a.target].append(a)
    sinks = sorted(v for v in cycle.vertices if len(cycle_in[v]) == 2)
    if not sinks:
        raise NoSink("central cycle is equioriented; no sink to split at")
    v = sinks[0]

    gamma_cycle = central_cycle(m.total)
    pivots = sorted(
        u
        for u in gamma_cycle.vertices
        if m.vertex_color(u) == v and len(gamma_cycle.in_arrows(u)) == 2
    )
    if not pivots:
        raise NoSink("no total-quiver vertex realizes the cycle sink")
    u = pivots[0]
    glue = sorted(
        (a.id for a in gamma_cycle.in_arrows(u)),
        key=lambda aid: (m.arrow_color(aid), aid),
    )
    first, second = glue

    kept = [a.id for a in m.total.arrows if a.id not in (first, second)]
    split = m.total.subquiver(m.total.vertices, kept)
    comps = split.components
    if len(comps) != 2:
        raise DisconnectedT(
            f"removing the glue arrows left {len(comps)} components, expected 2"
        )
    pivot_comp = next(c for c in comps if u in c)
    rest_comp = next(c for c in comps if u not in c)
    main = induced_subrepresentation(m, rest_comp)
    pivot = induced_subrepresentation(m, pivot_comp)

    def without(arrow_id: str) -> Representation:
        verts = [(x, m.vertex_color(x)) for x in m.total.vertices]
        arrows = [
            (a.id, a.source, a.target, m.arrow_color(a.id))
            for a in m.total.arrows
            if a.id != arrow_id
        ]
        return make_representation(base, verts, arrows)

    expected = HallElement(base)
    expected.add_term(direct_sum(pivot, main), 1)
    expected.add_term(without(second), 1)
    expected.add_term(without(first), 1)
    expected.add_term(m, 1)
    verified = hall_product(main, pivot) == expected
    return GeneratorDecomposition(main, pivot, first, second, verified)
