"""Orderly generation, spine data, arrow reversal, the factorial family."""
import random

import pytest

from conftest import naive_class_keys
from windings import catalog
from windings.enumeration import (
    SpineKind,
    count_indecomposables,
    enumerate_nilpotent_indecomposables,
    factorial_family,
    pseudotree_classes,
    reverse_representation,
    spine_classify,
    tree_classes,
    tree_counts_orientation_invariant,
    tree_pseudotree_split,
)
from windings.errors import BudgetExceeded, GraphMismatch, NotTreeRep
from windings.quiver import betti_number, reverse_arrow
from windings.representation import (
    dimension_vector,
    is_indecomposable,
    is_nilpotent,
    make_representation,
)


def test_one_loop_has_single_class_per_dimension():
    q = catalog.one_loop()
    for n in range(1, 9):
        assert count_indecomposables(q, n) == 1


def test_a2_counts():
    q = catalog.a2()
    assert count_indecomposables(q, 1) == 2
    assert count_indecomposables(q, 2) == 1
    assert count_indecomposables(q, 3) == 0


def test_loop_with_arrow_counts():
    q = catalog.loop_with_arrow_in()
    assert count_indecomposables(q, 4) == 5
    assert count_indecomposables(q, 5) == 8


def test_witnesses_are_valid():
    q = catalog.triangle_with_leaf()
    for n in range(1, 6):
        for key, rep in enumerate_nilpotent_indecomposables(q, n):
            assert rep.key == key
            assert rep.dim == n
            assert is_nilpotent(rep)
            assert is_indecomposable(rep)


def test_budget():
    with pytest.raises(BudgetExceeded):
        enumerate_nilpotent_indecomposables(catalog.one_loop(), 15, budget=12)


@pytest.mark.parametrize(
    "base,upto",
    [
        (catalog.one_loop(), 6),
        (catalog.a2(), 6),
        (catalog.double_arrow(), 6),
        (catalog.loop_with_arrow_in(), 5),
        (catalog.acyclic_triangle(), 5),
    ],
)
def test_matches_naive_oracle(base, upto):
    """Orderly generation agrees with generate-all-then-dedup exactly."""
    for n in range(1, upto + 1):
        naive = naive_class_keys(base, n)
        fast = enumerate_nilpotent_indecomposables(base, n)
        assert sorted(naive) == [k for k, _ in fast], (base, n)


def test_split_tree_pseudotree():
    q = catalog.directed_cycle(3)
    for n in range(1, 7):
        t, p = tree_pseudotree_split(q, n)
        assert p == 0  # equioriented cycle admits no cycle-carrying class
    da = catalog.double_arrow()
    # at dimension 2: the two single gluings (distinct colors, distinct
    # classes) plus the double gluing carrying the cycle
    t, p = tree_pseudotree_split(da, 2)
    assert (t, p) == (2, 1)
    t, p = tree_pseudotree_split(da, 1)
    assert (t, p) == (2, 0)


def test_pseudotree_needs_cycle_length():
    q = catalog.acyclic_triangle()
    assert tree_pseudotree_split(q, 1)[1] == 0
    assert tree_pseudotree_split(q, 2)[1] == 0
    assert tree_pseudotree_split(q, 3)[1] == 1


def test_spine_classification():
    q = catalog.loop_with_arrow_out()
    at_cycle = catalog.simple(q, "r")
    data = spine_classify(at_cycle, q)
    assert data.kind is SpineKind.SPINE
    assert data.start == data.finish == "r"
    assert data.vertex_count == 1
    off_cycle = catalog.simple(q, "u")
    assert spine_classify(off_cycle, q).kind is SpineKind.BRANCH


def test_spine_endpoints_on_path():
    q = catalog.equioriented_two_cycle_with_two_legs()
    rep = make_representation(
        q,
        [("s1", "c1"), ("s2", "c2"), ("s3", "c1"), ("h", "l2")],
        [
            ("e1", "s1", "s2", "cyc1"),
            ("e2", "s2", "s3", "cyc2"),
            ("e3", "h", "s2", "leg2"),
        ],
    )
    data = spine_classify(rep, q)
    assert data.kind is SpineKind.SPINE
    assert data.start == "c1" and data.finish == "c1"
    assert data.vertex_count == 3
    short = make_representation(
        q,
        [("s1", "c1"), ("s2", "c2")],
        [("e1", "s1", "s2", "cyc1")],
    )
    data = spine_classify(short, q)
    assert (data.start, data.finish, data.vertex_count) == ("c1", "c2", 2)


def test_spine_rejects_cycle_rep():
    q = catalog.double_arrow()
    dd = make_representation(
        q, [("x", "a"), ("y", "b")],
        [("e1", "x", "y", "alpha"), ("e2", "x", "y", "beta")],
    )
    with pytest.raises(NotTreeRep):
        spine_classify(dd, q)


def test_reverse_representation_properties():
    rng = random.Random(3)
    q = catalog.triangle_with_leaf()
    reps = [rep for n in range(1, 6) for rep in tree_classes(q, n)]
    for rep in rng.sample(reps, 10):
        a = rng.choice(q.arrows).id
        r = reverse_representation(rep, a)
        assert dimension_vector(r) == dimension_vector(rep)
        assert betti_number(r.total) == betti_number(rep.total)
        back = reverse_representation(r, a)
        assert back.key == rep.key


def test_orientation_invariance_of_tree_counts():
    q = catalog.triangle_with_leaf()
    assert tree_counts_orientation_invariant(q, q, 4)
    q2 = reverse_arrow(q, "h")  # equioriented central cycle
    for n in range(1, 7):
        assert tree_counts_orientation_invariant(q, q2, n)
    with pytest.raises(GraphMismatch):
        tree_counts_orientation_invariant(q, catalog.a2(), 2)


def test_tree_base_reorientation():
    q = catalog.path_quiver(3)
    q2 = reverse_arrow(q, "e1")
    for n in range(1, 5):
        assert tree_counts_orientation_invariant(q, q2, n)


def test_pseudotree_at_most_tree_counts():
    q = catalog.triangle_with_leaf()
    for n in range(1, 9):
        assert len(pseudotree_classes(q, n)) <= len(tree_classes(q, n))


def test_factorial_family():
    assert len(factorial_family(1)) == 1
    for k in (2, 3, 4):
        fam = factorial_family(k)
        keys = {r.key for r in fam}
        assert len(keys) == len(fam)
        for r in fam:
            assert r.dim == 2 * k
            assert is_nilpotent(r)
            assert is_indecomposable(r)
