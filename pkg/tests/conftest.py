"""Shared helpers for the test suite: random generators and oracles."""
from __future__ import annotations

import itertools
import random

from windings.quiver import Arrow, Quiver
from windings.representation import Representation, make_representation


def random_quiver(rng: random.Random, max_vertices=6, max_arrows=8) -> Quiver:
    n = rng.randint(1, max_vertices)
    verts = tuple(f"v{i}" for i in range(1, n + 1))
    m = rng.randint(0, max_arrows)
    arrows = tuple(
        Arrow(f"a{k}", rng.choice(verts), rng.choice(verts)) for k in range(m)
    )
    return Quiver(verts, arrows)


def random_connected_quiver(rng: random.Random, max_vertices=8) -> Quiver:
    n = rng.randint(1, max_vertices)
    verts = [f"v{i}" for i in range(1, n + 1)]
    arrows = []
    # spanning arrows first, in a random direction
    for i in range(1, n):
        other = verts[rng.randrange(i)]
        pair = (verts[i], other) if rng.random() < 0.5 else (other, verts[i])
        arrows.append(Arrow(f"a{len(arrows)}", *pair))
    for _ in range(rng.randint(0, 4)):
        arrows.append(Arrow(f"a{len(arrows)}", rng.choice(verts), rng.choice(verts)))
    return Quiver(tuple(verts), tuple(arrows))


def random_winding_rep(
    rng: random.Random,
    base: Quiver,
    max_vertices=6,
    min_vertices=0,
    acyclic=False,
    density=0.5,
) -> Representation:
    n = rng.randint(min_vertices, max_vertices)
    names = [f"x{i}" for i in range(1, n + 1)]
    vmap = {v: rng.choice(base.vertices) for v in names}
    candidates = []
    for a in base.arrows:
        for s in names:
            if vmap[s] != a.source:
                continue
            for d in names:
                if vmap[d] != a.target:
                    continue
                if acyclic and s >= d:
                    continue  # names are topologically ordered in this mode
                candidates.append((s, d, a.id))
    rng.shuffle(candidates)
    used_out, used_in = set(), set()
    arrows = []
    for s, d, aid in candidates:
        if rng.random() > density:
            continue
        if (s, aid) in used_out or (d, aid) in used_in:
            continue
        used_out.add((s, aid))
        used_in.add((d, aid))
        arrows.append((f"e{len(arrows)}", s, d, aid))
    return make_representation(base, [(v, vmap[v]) for v in names], arrows)


def relabeled(rng: random.Random, rep: Representation) -> Representation:
    """Same representation with vertices and arrows renamed at random."""
    verts = list(rep.total.vertices)
    shuffled = verts[:]
    rng.shuffle(shuffled)
    vmap = dict(zip(verts, (f"y{s}" for s in shuffled)))
    arrows = list(rep.total.arrows)
    order = list(range(len(arrows)))
    rng.shuffle(order)
    return make_representation(
        rep.base,
        [(vmap[v], rep.vertex_color(v)) for v in verts],
        [
            (f"f{order[i]}", vmap[a.source], vmap[a.target], rep.arrow_color(a.id))
            for i, a in enumerate(arrows)
        ],
    )


def naive_class_keys(q: Quiver, n: int) -> dict[bytes, Representation]:
    """Generate-all-then-dedup oracle for connected acyclic windings.

    Exponential; intended for bases with few vertices and small n.
    """
    names = [f"x{i}" for i in range(1, n + 1)]
    found: dict[bytes, Representation] = {}

    def injections(srcs, dsts):
        out = [[]]
        for s in srcs:
            new = []
            for m in out:
                used = {d for _, d in m}
                new.append(m)
                for d in dsts:
                    if d not in used:
                        new.append(m + [(s, d)])
            out = new
        return out

    for coloring in itertools.product(q.vertices, repeat=n):
        vmap = dict(zip(names, coloring))
        per_arrow = []
        for a in q.arrows:
            srcs = [v for v in names if vmap[v] == a.source]
            dsts = [v for v in names if vmap[v] == a.target]
            per_arrow.append((a.id, injections(srcs, dsts)))
        for combo in itertools.product(*[inj for _, inj in per_arrow]):
            arrows = []
            for (aid, _), pairs in zip(per_arrow, combo):
                for s, d in pairs:
                    arrows.append((f"e{len(arrows)}", s, d, aid))
            rep = make_representation(q, list(vmap.items()), arrows)
            if rep.total.is_acyclic and rep.total.is_connected:
                found.setdefault(rep.key, rep)
    return found
