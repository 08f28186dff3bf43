"""Named example quivers and representations used across tests and docs."""
from __future__ import annotations

from .quiver import Arrow, Quiver
from .representation import Representation, make_representation


def point() -> Quiver:
    """One vertex, no arrows."""
    return Quiver(("v",), ())


def one_loop() -> Quiver:
    return Quiver(("v",), (Arrow("loop", "v", "v"),))


def two_loops() -> Quiver:
    return Quiver(("v",), (Arrow("blue", "v", "v"), Arrow("red", "v", "v")))


def a2() -> Quiver:
    """Two vertices joined by a single arrow 1 -> 2."""
    return Quiver(("1", "2"), (Arrow("alpha", "1", "2"),))


def double_arrow() -> Quiver:
    """Two parallel arrows a -> b."""
    return Quiver(("a", "b"), (Arrow("alpha", "a", "b"), Arrow("beta", "a", "b")))


def loop_with_arrow_in() -> Quiver:
    """A loop at r plus an arrow u -> r."""
    return Quiver(("r", "u"), (Arrow("loop", "r", "r"), Arrow("mu", "u", "r")))


def loop_with_arrow_out() -> Quiver:
    """A loop at r plus an arrow r -> u."""
    return Quiver(("r", "u"), (Arrow("loop", "r", "r"), Arrow("mu", "r", "u")))


def loop_with_two_arrows_in() -> Quiver:
    """A loop at r plus arrows u1 -> r and u2 -> r."""
    return Quiver(
        ("r", "u1", "u2"),
        (Arrow("loop", "r", "r"), Arrow("mu1", "u1", "r"), Arrow("mu2", "u2", "r")),
    )


def equioriented_two_cycle_with_two_legs() -> Quiver:
    """Directed 2-cycle c1 <-> c2 with one incoming leg at each cycle vertex."""
    return Quiver(
        ("c1", "c2", "l1", "l2"),
        (
            Arrow("cyc1", "c1", "c2"),
            Arrow("cyc2", "c2", "c1"),
            Arrow("leg1", "l1", "c1"),
            Arrow("leg2", "l2", "c2"),
        ),
    )


def equioriented_two_cycle_with_one_leg() -> Quiver:
    """Directed 2-cycle c1 <-> c2 with one incoming leg at c1."""
    return Quiver(
        ("c1", "c2", "l1"),
        (
            Arrow("cyc1", "c1", "c2"),
            Arrow("cyc2", "c2", "c1"),
            Arrow("leg1", "l1", "c1"),
        ),
    )


def directed_cycle(n: int, prefix: str = "v") -> Quiver:
    """Equioriented cycle on n vertices."""
    verts = tuple(f"{prefix}{i}" for i in range(1, n + 1))
    arrows = tuple(
        Arrow(f"c{i}", f"{prefix}{i}", f"{prefix}{i % n + 1}") for i in range(1, n + 1)
    )
    return Quiver(verts, arrows)


def acyclic_triangle() -> Quiver:
    """Three vertices a, b, c with arrows a->b, b->c, a->c (no directed cycle)."""
    return Quiver(
        ("a", "b", "c"),
        (Arrow("f", "a", "b"), Arrow("g", "b", "c"), Arrow("h", "a", "c")),
    )


def triangle_with_leaf() -> Quiver:
    """Acyclic triangle plus a leaf arrow d -> a."""
    return Quiver(
        ("a", "b", "c", "d"),
        (
            Arrow("f", "a", "b"),
            Arrow("g", "b", "c"),
            Arrow("h", "a", "c"),
            Arrow("leaf", "d", "a"),
        ),
    )


def path_quiver(n: int) -> Quiver:
    """Equioriented path on n vertices."""
    verts = tuple(f"p{i}" for i in range(1, n + 1))
    arrows = tuple(Arrow(f"e{i}", f"p{i}", f"p{i+1}") for i in range(1, n))
    return Quiver(verts, arrows)


def fan_quiver() -> Quiver:
    """Four-vertex quiver with one distinguished chord arrow ``e``: 3 -> 4."""
    return Quiver(
        ("1", "2", "3", "4"),
        (
            Arrow("a", "4", "2"),
            Arrow("b", "3", "2"),
            Arrow("c", "1", "3"),
            Arrow("d", "1", "2"),
            Arrow("e", "3", "4"),
        ),
    )


def multi_beta_quiver() -> Quiver:
    """1 -> 2 followed by four parallel arrows 2 -> 3."""
    return Quiver(
        ("1", "2", "3"),
        (
            Arrow("alpha", "1", "2"),
            Arrow("beta1", "2", "3"),
            Arrow("beta2", "2", "3"),
            Arrow("beta3", "2", "3"),
            Arrow("beta4", "2", "3"),
        ),
    )


def multi_beta_representation() -> Representation:
    """Five-dimensional representation of :func:`multi_beta_quiver`.

    Total quiver: x1 -> x2 (alpha); x2 -> y1 (beta1), x2 -> y2 (beta4),
    x3 -> y1 (beta2), x3 -> y2 (beta3).  Dimension vector (1, 2, 2).
    """
    base = multi_beta_quiver()
    return make_representation(
        base,
        [("x1", "1"), ("x2", "2"), ("x3", "2"), ("y1", "3"), ("y2", "3")],
        [
            ("a", "x1", "x2", "alpha"),
            ("b1", "x2", "y1", "beta1"),
            ("b4", "x2", "y2", "beta4"),
            ("b2", "x3", "y1", "beta2"),
            ("b3", "x3", "y2", "beta3"),
        ],
    )


def simple(base: Quiver, vertex: str, name: str = "x") -> Representation:
    """One-dimensional representation supported at a single base vertex."""
    return make_representation(base, [(name, vertex)], [])


def chain(base_loop: Quiver, n: int) -> Representation:
    """The n-chain over a one-loop quiver."""
    loop = base_loop.arrows[0].id
    vertex = base_loop.vertices[0]
    verts = [(f"x{i}", vertex) for i in range(1, n + 1)]
    arrows = [(f"e{i}", f"x{i}", f"x{i+1}", loop) for i in range(1, n)]
    return make_representation(base_loop, verts, arrows)
