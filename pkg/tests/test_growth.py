"""Subtree counts, counting recursions, dominant roots, classification."""
import random

import pytest

from windings import catalog
from windings.enumeration import count_indecomposables
from windings.errors import (
    DisconnectedQuiver,
    NoBracket,
    NotEquioriented,
    WrongShape,
)
from windings.growth import (
    CharPolynomial,
    LinearRecursion,
    NilClass,
    RootedTree,
    characteristic_polynomial,
    classify_nil,
    counting_recursion,
    cycle_recursion,
    cycle_step_coefficients,
    dominant_root,
    loop_tree_recursion,
    rooted_subtree_counts,
    spine_path_count,
)
from windings.quiver import Arrow, Quiver


def test_rooted_subtree_counts_single_vertex():
    t = RootedTree(catalog.point(), "v")
    assert rooted_subtree_counts(t) == [1]


def test_rooted_subtree_counts_two_leaves_into_path():
    # leaves l1, l2 -> m -> root
    q = Quiver(
        ("l1", "l2", "m", "root"),
        (Arrow("a", "l1", "m"), Arrow("b", "l2", "m"), Arrow("c", "m", "root")),
    )
    assert rooted_subtree_counts(RootedTree(q, "root")) == [1, 1, 2, 1]


def test_rooted_subtree_counts_path():
    q = catalog.path_quiver(3)
    assert rooted_subtree_counts(RootedTree(q, "p1")) == [1, 1, 1]
    assert rooted_subtree_counts(RootedTree(q, "p2")) == [1, 2, 1]


def test_subtree_counts_boundary_values():
    rng = random.Random(23)
    for _ in range(40):
        n = rng.randint(1, 7)
        verts = [f"v{i}" for i in range(n)]
        arrows = []
        for i in range(1, n):
            j = rng.randrange(i)
            pair = (verts[i], verts[j]) if rng.random() < 0.5 else (verts[j], verts[i])
            arrows.append(Arrow(f"a{i}", *pair))
        t = RootedTree(Quiver(tuple(verts), tuple(arrows)), rng.choice(verts))
        s = rooted_subtree_counts(t)
        assert len(s) == n and s[0] == 1 and s[-1] == 1


def test_loop_tree_recursions():
    rec = loop_tree_recursion(catalog.loop_with_arrow_in())
    assert rec.coeffs == (1, 1) and rec.valid_from == 4
    rec = loop_tree_recursion(catalog.loop_with_two_arrows_in())
    assert rec.coeffs == (1, 2, 1) and rec.valid_from == 6
    rec = loop_tree_recursion(catalog.one_loop())
    assert rec.coeffs == (1,)
    with pytest.raises(WrongShape):
        loop_tree_recursion(catalog.a2())
    with pytest.raises(WrongShape):
        loop_tree_recursion(catalog.two_loops())


def test_characteristic_polynomials():
    assert characteristic_polynomial(
        LinearRecursion((1, 1), 4)
    ).coeffs == (1, -1, -1)
    assert characteristic_polynomial(
        LinearRecursion((1, 2, 1), 6)
    ).coeffs == (1, -1, -2, -1)
    assert characteristic_polynomial(
        LinearRecursion((0, 1, 1), 6)
    ).coeffs == (1, 0, -1, -1)


def test_dominant_roots():
    golden = dominant_root(CharPolynomial((1, -1, -1)), 1e-12)
    assert abs(golden - (1 + 5**0.5) / 2) < 1e-9
    plastic = dominant_root(CharPolynomial((1, 0, -1, -1)), 1e-9)
    assert abs(plastic - 1.3247) < 1e-3
    assert dominant_root(CharPolynomial((1, -2)), 1e-12) == pytest.approx(2.0)
    with pytest.raises(NoBracket):
        dominant_root(CharPolynomial((1, -1)))  # x - 1 has no root above 1


def test_loop_tree_poly_negative_at_one():
    rng = random.Random(5)
    for _ in range(30):
        n = rng.randint(2, 6)
        verts = [f"v{i}" for i in range(n)]
        arrows = [Arrow("loop", verts[0], verts[0])]
        for i in range(1, n):
            j = rng.randrange(i)
            arrows.append(Arrow(f"a{i}", verts[i], verts[j]))
        q = Quiver(tuple(verts), tuple(arrows))
        rec = loop_tree_recursion(q)
        p = characteristic_polynomial(rec)
        assert p(1.0) <= -1
        assert dominant_root(p, 1e-9) > 1


def test_recursion_predicts_counts_loop_trees():
    for q in (catalog.loop_with_arrow_in(), catalog.loop_with_two_arrows_in()):
        rec = loop_tree_recursion(q)
        upto = rec.valid_from + 6
        counts = {n: count_indecomposables(q, n, budget=upto) for n in range(1, upto + 1)}
        for n in range(rec.valid_from, upto + 1):
            assert counts[n] == sum(
                c * counts[n - k] for k, c in enumerate(rec.coeffs, start=1)
            ), n


def test_cycle_step_coefficients():
    q = catalog.directed_cycle(4)
    for v in q.vertices:
        assert cycle_step_coefficients(q, v) == [1]
    q2 = catalog.equioriented_two_cycle_with_two_legs()
    assert cycle_step_coefficients(q2, "c1") == [1, 1]
    with pytest.raises(NotEquioriented):
        cycle_step_coefficients(catalog.acyclic_triangle(), "a")


def test_degenerate_cycle_reduces_to_loop_tree():
    q = catalog.loop_with_arrow_in()
    assert cycle_step_coefficients(q, "r") == [1, 1]
    rec = cycle_recursion(q, "r", "r")
    loop_rec = loop_tree_recursion(q)
    assert rec.coeffs == loop_rec.coeffs
    assert rec.valid_from == loop_rec.valid_from


def test_cycle_recursions_match_known_coefficients():
    q2 = catalog.equioriented_two_cycle_with_two_legs()
    rec = cycle_recursion(q2, "c1", "c1")
    assert rec.coeffs == (0, 1, 2, 1)
    q2p = catalog.equioriented_two_cycle_with_one_leg()
    rec = cycle_recursion(q2p, "c1", "c1")
    assert rec.coeffs == (0, 1, 1)
    cyc = catalog.directed_cycle(4)
    rec = cycle_recursion(cyc, "v1", "v2")
    assert rec.coeffs == (0, 0, 0, 1)  # g(d) = g(d-4)


def test_cycle_recursion_agrees_with_direct_count():
    cases = [
        (catalog.equioriented_two_cycle_with_two_legs(), "c1", "c2"),
        (catalog.equioriented_two_cycle_with_one_leg(), "c2", "c1"),
        (catalog.directed_cycle(3), "v1", "v1"),
    ]
    for q, i, f in cases:
        rec = cycle_recursion(q, i, f)
        upto = rec.valid_from + 8
        g = {d: spine_path_count(q, i, f, d) for d in range(0, upto + 1)}
        for d in range(rec.valid_from, upto + 1):
            assert g[d] == sum(
                c * g[d - k] for k, c in enumerate(rec.coeffs, start=1)
            ), (q, d)


def test_spine_path_count_small_cases():
    q = catalog.directed_cycle(2)
    assert spine_path_count(q, "v1", "v1", 3) == 1
    assert spine_path_count(q, "v1", "v2", 1) == 0


def test_spine_path_count_matches_classified_enumeration():
    """Independent route: enumerate all classes, classify each spine's
    endpoints, and compare the per-endpoint tallies with the dynamic
    program."""
    from collections import Counter

    from windings.enumeration import enumerate_nilpotent_indecomposables, spine_classify
    from windings.quiver import betti_number

    for q in (
        catalog.equioriented_two_cycle_with_one_leg(),
        catalog.directed_cycle(2),
        catalog.loop_with_arrow_in(),
    ):
        from windings.quiver import central_cycle

        cyc = set(central_cycle(q).vertices)
        for d in range(1, 8):
            tally = Counter()
            for _, rep in enumerate_nilpotent_indecomposables(q, d):
                if betti_number(rep.total) != 0:
                    continue
                data = spine_classify(rep, q)
                if data.kind.value == "Spine":
                    tally[(data.start, data.finish)] += 1
            for i in sorted(cyc):
                for f in sorted(cyc):
                    assert spine_path_count(q, i, f, d) == tally[(i, f)], (q, i, f, d)


def test_spine_counts_sum_to_class_count():
    q = catalog.loop_with_arrow_in()
    for d in (4, 5):
        assert spine_path_count(q, "r", "r", d) == count_indecomposables(q, d)
    q2 = catalog.equioriented_two_cycle_with_one_leg()
    max_t = 2
    for d in range(max_t, 9):
        total = sum(
            spine_path_count(q2, i, f, d)
            for i in ("c1", "c2")
            for f in ("c1", "c2")
        )
        assert total == count_indecomposables(q2, d), d


def test_counting_recursion_predicts_totals():
    q2 = catalog.equioriented_two_cycle_with_one_leg()
    rec = counting_recursion(q2)
    upto = rec.valid_from + 6
    counts = {n: count_indecomposables(q2, n, budget=upto) for n in range(1, upto + 1)}
    for n in range(rec.valid_from, upto + 1):
        assert counts[n] == sum(
            c * counts[n - k] for k, c in enumerate(rec.coeffs, start=1)
        )


def test_cycle_recursion_order_cap():
    from windings.errors import BudgetExceeded

    # 2-cycle with a 63-vertex path hanging at c1: composed order 65
    verts = ["c1", "c2"] + [f"t{i}" for i in range(1, 64)]
    arrows = [Arrow("cyc1", "c1", "c2"), Arrow("cyc2", "c2", "c1"),
              Arrow("m1", "t1", "c1")]
    arrows += [Arrow(f"m{i}", f"t{i}", f"t{i-1}") for i in range(2, 64)]
    q = Quiver(tuple(verts), tuple(arrows))
    with pytest.raises(BudgetExceeded):
        cycle_recursion(q, "c1", "c1")


def test_classify_nil():
    assert classify_nil(catalog.path_quiver(4)) is NilClass.L0
    assert classify_nil(catalog.point()) is NilClass.L0
    assert classify_nil(catalog.directed_cycle(3)) is NilClass.L1
    assert classify_nil(catalog.acyclic_triangle()) is NilClass.L1
    assert classify_nil(catalog.equioriented_two_cycle_with_two_legs()) is NilClass.LOOP_ARROW
    assert classify_nil(catalog.two_loops()) is NilClass.L2
    with pytest.raises(DisconnectedQuiver):
        classify_nil(Quiver(("a", "b"), ()))
