"""Pure-Python canonical labeling of vertex- and arrow-colored multidigraphs.

Individualization-refinement: refine the vertex partition by colored
in/out neighborhood signatures until stable, then branch on the first
non-singleton cell and keep the lexicographically smallest certificate.

The compiled backend (``_canon_cy``) implements the identical algorithm,
including the integer signature encoding, so the two produce
byte-identical certificates.
"""
from __future__ import annotations

from array import array

BACKEND = "python"


def canonical_certificate(n, vcolors, arcs):
    """Canonical byte certificate of a colored multidigraph.

    n        number of vertices (0..n-1)
    vcolors  per-vertex color (small non-negative ints)
    arcs     triples (src, dst, arrow_color)

    Two inputs get equal certificates iff some vertex bijection preserves
    vertex colors, arrows and arrow colors.
    """
    m = len(arcs)
    if n == 0:
        return array("i", [0, m]).tobytes()

    out_adj = [[] for _ in range(n)]
    in_adj = [[] for _ in range(n)]
    for s, d, c in arcs:
        out_adj[s].append((c, d))
        in_adj[d].append((c, s))

    by_color = {}
    for v in range(n):
        by_color.setdefault(vcolors[v], []).append(v)
    cells = [sorted(by_color[c]) for c in sorted(by_color)]

    # Adjacency entries are encoded as color*(n+1)+cell, which preserves
    # the lexicographic order of (color, cell) pairs since cell <= n.
    enc = n + 1
    best = [None]

    def refine(cells):
        cell_of = [0] * n
        for i, cell in enumerate(cells):
            for v in cell:
                cell_of[v] = i
        while True:
            new_cells = []
            changed = False
            for cell in cells:
                if len(cell) == 1:
                    new_cells.append(cell)
                    continue
                groups = {}
                for v in cell:
                    sig = tuple(
                        sorted(c * enc + cell_of[d] for c, d in out_adj[v])
                    ) + (-1,) + tuple(
                        sorted(c * enc + cell_of[s] for c, s in in_adj[v])
                    )
                    groups.setdefault(sig, []).append(v)
                if len(groups) == 1:
                    new_cells.append(cell)
                else:
                    changed = True
                    for sig in sorted(groups):
                        new_cells.append(sorted(groups[sig]))
            if not changed:
                return cells
            cells = new_cells
            cell_of = [0] * n
            for i, cell in enumerate(cells):
                for v in cell:
                    cell_of[v] = i

    def certificate(cells):
        pos = [0] * n
        order = []
        for i, cell in enumerate(cells):
            pos[cell[0]] = i
            order.append(cell[0])
        cert = [n, m]
        cert.extend(vcolors[v] for v in order)
        cert.extend(
            x
            for triple in sorted((pos[s], pos[d], c) for s, d, c in arcs)
            for x in triple
        )
        return cert

    def search(cells):
        cells = refine(cells)
        target = None
        for i, cell in enumerate(cells):
            if len(cell) > 1:
                target = i
                break
        if target is None:
            cand = certificate(cells)
            if best[0] is None or cand < best[0]:
                best[0] = cand
            return
        cell = cells[target]
        for v in cell:
            rest = [u for u in cell if u != v]
            search(cells[:target] + [[v], rest] + cells[target + 1 :])

    search(cells)
    return array("i", best[0]).tobytes()
