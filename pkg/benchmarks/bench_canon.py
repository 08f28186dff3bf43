#!/usr/bin/env python3
"""Benchmark the canonical-labeling kernels (compiled vs pure Python).

Times both backends on the same corpus of random windings and on the
enumeration-heavy path, then prints a comparison table.

Usage:
    python3 benchmarks/bench_canon.py [--trials N]
"""
from __future__ import annotations

import argparse
import random
import time

from windings import _canon_py
from windings import catalog

try:
    from windings import _canon_cy
except ImportError:
    _canon_cy = None


def make_corpus(rng: random.Random, count: int):
    """Random windings over a few bases, flattened to kernel inputs."""
    bases = [
        catalog.two_loops(),
        catalog.double_arrow(),
        catalog.triangle_with_leaf(),
        catalog.multi_beta_quiver(),
    ]
    corpus = []
    for _ in range(count):
        base = rng.choice(bases)
        n = rng.randint(6, 18)
        names = list(range(n))
        vindex = {v: i for i, v in enumerate(base.vertices)}
        aindex = {a.id: i for i, a in enumerate(base.arrows)}
        vcolors = [rng.randrange(len(base.vertices)) for _ in names]
        used_out, used_in = set(), set()
        arcs = []
        for a in base.arrows:
            srcs = [i for i in names if vcolors[i] == vindex[a.source]]
            dsts = [i for i in names if vcolors[i] == vindex[a.target]]
            rng.shuffle(srcs)
            rng.shuffle(dsts)
            for s, d in zip(srcs, dsts):
                if rng.random() < 0.7:
                    arcs.append((s, d, aindex[a.id]))
        corpus.append((n, vcolors, arcs))
    return corpus


def time_backend(fn, corpus, repeats: int) -> float:
    start = time.perf_counter()
    for _ in range(repeats):
        for n, vcolors, arcs in corpus:
            fn(n, vcolors, arcs)
    return time.perf_counter() - start


def time_enumeration(backend_name: str) -> float:
    """End-to-end: class counts to dimension 11 on the loop-with-arrow base."""
    import os
    import subprocess
    import sys

    code = (
        "import time\n"
        "from windings import catalog\n"
        "from windings.enumeration import count_indecomposables\n"
        "q = catalog.loop_with_arrow_in()\n"
        "t = time.perf_counter()\n"
        "for n in range(1, 12):\n"
        "    count_indecomposables(q, n)\n"
        "print(time.perf_counter() - t)\n"
    )
    env = dict(os.environ, WINDINGS_CANON_BACKEND=backend_name)
    out = subprocess.run(
        [sys.executable, "-c", code], env=env, capture_output=True, text=True
    )
    return float(out.stdout.strip())


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--trials", type=int, default=300)
    parser.add_argument("--repeats", type=int, default=3)
    args = parser.parse_args()

    rng = random.Random(20240229)
    corpus = make_corpus(rng, args.trials)

    t_py = time_backend(_canon_py.canonical_certificate, corpus, args.repeats)
    print(f"pure python kernel : {t_py:8.3f}s "
          f"({args.trials * args.repeats} certificates)")
    if _canon_cy is None:
        print("compiled kernel    : not built")
        return
    mismatch = sum(
        1
        for n, vc, arcs in corpus
        if _canon_py.canonical_certificate(n, vc, arcs)
        != _canon_cy.canonical_certificate(n, vc, arcs)
    )
    t_cy = time_backend(_canon_cy.canonical_certificate, corpus, args.repeats)
    print(f"compiled kernel    : {t_cy:8.3f}s  (speedup {t_py / t_cy:4.1f}x, "
          f"{mismatch} certificate mismatches)")

    e_py = time_enumeration("python")
    e_cy = time_enumeration("cython")
    print(f"enumeration to n=11: {e_py:8.3f}s pure, {e_cy:8.3f}s compiled "
          f"(speedup {e_py / e_cy:4.1f}x)")


if __name__ == "__main__":
    main()
