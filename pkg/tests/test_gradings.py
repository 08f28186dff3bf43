"""Nice gradings, lattices, distinguishing sequences, Euler counts."""
import itertools
import random

import pytest

from conftest import random_winding_rep
from windings import catalog
from windings.errors import (
    InputError,
    LoopPresent,
    NoCertificate,
    NotNice,
    PartialGrading,
)
from windings.gradings import (
    SearchBudget,
    confusable_classes,
    distinguishes,
    euler_characteristic,
    find_distinguishing_sequence,
    frees,
    grading_lattice,
    is_nice,
    is_nondegenerate,
    is_relative_nice,
    is_valid_nice_sequence,
    subrepresentation_count,
    vertex_label_grading,
)
from windings.representation import dimension_vector, make_representation


def test_constant_grading_is_nice_but_degenerate():
    m = catalog.multi_beta_representation()
    g = {v: 0 for v in m.total.vertices}
    assert is_nice(m.winding, g)
    assert not is_nondegenerate(m.winding, g)


def test_partial_grading_rejected():
    m = catalog.multi_beta_representation()
    with pytest.raises(PartialGrading):
        is_nice(m.winding, {"x1": 0})


def test_injective_grading_nice_when_colors_unique():
    m = catalog.multi_beta_representation()
    g = {v: i for i, v in enumerate(m.total.vertices)}
    assert is_nice(m.winding, g)
    assert distinguishes([g], m.winding)


def test_unequal_slopes_on_shared_color_not_nice():
    L1 = catalog.one_loop()
    two_chains = make_representation(
        L1,
        [("x1", "v"), ("x2", "v"), ("y1", "v"), ("y2", "v")],
        [("e1", "x1", "x2", "loop"), ("e2", "y1", "y2", "loop")],
    )
    g = {"x1": 0, "x2": 1, "y1": 0, "y2": 2}
    assert not is_nice(two_chains.winding, g)
    g2 = {"x1": 0, "x2": 1, "y1": 5, "y2": 6}
    assert is_nice(two_chains.winding, g2)
    assert is_nondegenerate(two_chains.winding, g2)


def test_nondegenerate_requires_nice():
    L1 = catalog.one_loop()
    ch = catalog.chain(L1, 2)
    two_chains = make_representation(
        L1,
        [("x1", "v"), ("x2", "v"), ("y1", "v"), ("y2", "v")],
        [("e1", "x1", "x2", "loop"), ("e2", "y1", "y2", "loop")],
    )
    with pytest.raises(NotNice):
        is_nondegenerate(two_chains.winding, {"x1": 0, "x2": 1, "y1": 0, "y2": 2})
    assert is_nondegenerate(ch.winding, {"x1": 0, "x2": 3})


def test_relative_nice_reduces_to_nice_on_empty_sequence():
    m = catalog.multi_beta_representation()
    g = {v: 0 for v in m.total.vertices}
    assert is_relative_nice(m.winding, [], g)


def test_relative_nice_with_distinguishing_prefix_is_free():
    m = catalog.multi_beta_representation()
    inj = {v: i for i, v in enumerate(m.total.vertices)}
    # after a distinguishing grading, any labeling is relative nice
    rng = random.Random(1)
    arbitrary = {v: rng.randint(-5, 5) for v in m.total.vertices}
    assert is_relative_nice(m.winding, [inj], arbitrary)


def test_vertex_label_grading():
    a2 = catalog.a2()
    P = make_representation(a2, [("x", "1"), ("y", "2")], [("e", "x", "y", "alpha")])
    g = vertex_label_grading(P.winding)
    assert g == {"x": 1, "y": 2}
    assert is_nondegenerate(P.winding, g)
    m = catalog.multi_beta_representation()
    assert is_nondegenerate(m.winding, vertex_label_grading(m.winding))
    with pytest.raises(LoopPresent):
        vertex_label_grading(catalog.chain(catalog.one_loop(), 2).winding)


def test_lattice_dimension_on_tree_total():
    a2 = catalog.a2()
    P = make_representation(a2, [("x", "1"), ("y", "2")], [("e", "x", "y", "alpha")])
    lat = grading_lattice(P.winding)
    # one component plus one color class
    assert len(lat.basis) == 2


def test_lattice_matches_small_box_search():
    """Every grading in a small box with class-constant slopes is spanned
    by the basis, and every basis combination has the property."""
    cases = []
    L2 = catalog.two_loops()
    cases.append(
        make_representation(
            L2,
            [("x1", "v"), ("x2", "v"), ("x3", "v"), ("x4", "v")],
            [
                ("a1", "x1", "x2", "red"),
                ("b1", "x1", "x3", "blue"),
                ("b2", "x2", "x4", "blue"),
                ("a2", "x3", "x4", "red"),
            ],
        )
    )
    L1 = catalog.one_loop()
    cases.append(
        make_representation(
            L1,
            [("x", "v"), ("y", "v")],
            [("e1", "x", "y", "loop"), ("e2", "y", "x", "loop")],
        )
    )
    for rep in cases:
        w = rep.winding
        lat = grading_lattice(w)
        verts = w.total.vertices
        for values in itertools.product(range(-2, 3), repeat=len(verts)):
            g = dict(zip(verts, values))
            assert lat.contains(g) == lat.spans(g), g


def test_loop_colored_two_cycle_forces_zero_slope():
    L1 = catalog.one_loop()
    rep = make_representation(
        L1,
        [("x", "v"), ("y", "v")],
        [("e1", "x", "y", "loop"), ("e2", "y", "x", "loop")],
    )
    lat = grading_lattice(rep.winding)
    from windings.gradings import slopes

    for b in lat.basis:
        assert all(v == 0 for v in slopes(rep.winding, b).values())


def test_frees_unique_color():
    m = catalog.multi_beta_representation()
    for a in m.total.arrows:
        assert frees(m.winding, [], a.id)


def test_distinguishing_sequence_frees_everything():
    m = catalog.multi_beta_representation()
    seq = find_distinguishing_sequence(m.winding)
    assert seq is not None
    for a in m.total.arrows:
        assert frees(m.winding, seq, a.id)


def test_forced_equal_profiles_not_freed():
    """Alternating-color directed square: the cycle relation pins the two
    same-colored arrows to identical profiles in every nice sequence."""
    L2 = catalog.two_loops()
    m = make_representation(
        L2,
        [("x1", "v"), ("x2", "v"), ("x3", "v"), ("x4", "v")],
        [
            ("a1", "x1", "x2", "red"),
            ("b1", "x2", "x3", "blue"),
            ("a2", "x3", "x4", "red"),
            ("b2", "x4", "x1", "blue"),
        ],
    )
    assert not frees(m.winding, [], "a1")
    assert find_distinguishing_sequence(m.winding) is None


def test_find_sequence_simple_cases():
    m = catalog.multi_beta_representation()
    seq = find_distinguishing_sequence(m.winding)
    assert seq is not None
    assert is_valid_nice_sequence(m.winding, seq)
    assert distinguishes(seq, m.winding)
    single = catalog.simple(catalog.a2(), "1")
    assert find_distinguishing_sequence(single.winding) == []


def test_sequence_budget_limits():
    from windings.coverings import ChainCoverConfig, build_chain_cover

    cfg = ChainCoverConfig(catalog.fan_quiver(), "e", 3)
    w = build_chain_cover(cfg)
    assert find_distinguishing_sequence(w, SearchBudget(max_gradings=1)) is None
    seq = find_distinguishing_sequence(w)
    assert seq is not None and distinguishes(seq, w)


def test_euler_characteristic_multi_beta():
    m = catalog.multi_beta_representation()
    res = euler_characteristic(m, {"1": 0, "2": 1, "3": 2})
    assert res.value == 2
    assert is_valid_nice_sequence(m.winding, res.certificate)
    assert distinguishes(res.certificate, m.winding)
    assert euler_characteristic(m, {"1": 0, "2": 0, "3": 0}).value == 1
    assert euler_characteristic(m, dimension_vector(m)).value == 1
    with pytest.raises(InputError):
        euler_characteristic(m, {"1": 2, "2": 0, "3": 0})


def test_euler_without_certificate_raises():
    L2 = catalog.two_loops()
    m = make_representation(
        L2,
        [("x1", "v"), ("x2", "v"), ("x3", "v"), ("x4", "v")],
        [
            ("a1", "x1", "x2", "red"),
            ("b1", "x2", "x3", "blue"),
            ("a2", "x3", "x4", "red"),
            ("b2", "x4", "x1", "blue"),
        ],
    )
    with pytest.raises(NoCertificate):
        euler_characteristic(m, {"v": 2})
    assert subrepresentation_count(m, {"v": 2}) >= 0


def test_euler_invariant_under_relabeling():
    from conftest import relabeled

    rng = random.Random(8)
    m = catalog.multi_beta_representation()
    d = {"1": 0, "2": 1, "3": 2}
    base_val = euler_characteristic(m, d).value
    for _ in range(5):
        m2 = relabeled(rng, m)
        assert euler_characteristic(m2, d).value == base_val


def test_euler_sum_rule():
    m = catalog.multi_beta_representation()
    dims = dimension_vector(m)
    total = 0
    for combo in itertools.product(*[range(k + 1) for k in dims.values()]):
        total += subrepresentation_count(m, dict(zip(dims.keys(), combo)))
    from windings.representation import SubFlavor, closed_subsets

    assert total == len(closed_subsets(m, SubFlavor.ARROW_TARGET_CLOSED))


def test_lattice_members_are_relative_nice():
    rng = random.Random(6)
    for base in (catalog.double_arrow(), catalog.two_loops()):
        for _ in range(10):
            m = random_winding_rep(rng, base, max_vertices=6, min_vertices=1)
            classes = confusable_classes(m.winding, [])
            lat = grading_lattice(m.winding, classes)
            for b in lat.basis:
                assert is_nice(m.winding, b)
