# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled canonical labeling kernel.

Mirrors ``_canon_py`` step for step: the refinement signatures, the cell
ordering and the certificate layout are identical, so both backends emit
byte-identical certificates.
"""
import array as _pyarray

BACKEND = "cython"


cdef void _insertion_sort(int* buf, int length) noexcept:
    cdef int i, j, key
    for i in range(1, length):
        key = buf[i]
        j = i - 1
        while j >= 0 and buf[j] > key:
            buf[j + 1] = buf[j]
            j -= 1
        buf[j + 1] = key


cdef class _Canon:
    cdef int n, m, enc, maxcolor
    cdef int[:] out_start, out_c, out_d, in_start, in_c, in_s
    cdef int[:] vcol, cell_of, sig_buf
    cdef object key_buf
    cdef object arcs
    cdef list best

    def __init__(self, int n, vcolors, arcs):
        cdef int i, j, s, d, c
        cdef int m = len(arcs)
        self.n = n
        self.m = m
        self.enc = n + 1
        self.arcs = arcs
        self.best = None

        out_start = _pyarray.array("i", [0] * (n + 2))
        in_start = _pyarray.array("i", [0] * (n + 2))
        out_c = _pyarray.array("i", [0] * max(m, 1))
        out_d = _pyarray.array("i", [0] * max(m, 1))
        in_c = _pyarray.array("i", [0] * max(m, 1))
        in_s = _pyarray.array("i", [0] * max(m, 1))
        self.out_start = out_start
        self.in_start = in_start
        self.out_c = out_c
        self.out_d = out_d
        self.in_c = in_c
        self.in_s = in_s

        self.maxcolor = 0
        for t in arcs:
            s = t[0]
            d = t[1]
            c = t[2]
            if c > self.maxcolor:
                self.maxcolor = c
            self.out_start[s + 1] += 1
            self.in_start[d + 1] += 1
        for i in range(1, n + 2):
            self.out_start[i] += self.out_start[i - 1]
            self.in_start[i] += self.in_start[i - 1]
        fill_out = _pyarray.array("i", [0] * (n + 1))
        fill_in = _pyarray.array("i", [0] * (n + 1))
        cdef int[:] fo = fill_out
        cdef int[:] fi = fill_in
        for t in arcs:
            s = t[0]
            d = t[1]
            c = t[2]
            j = self.out_start[s] + fo[s]
            self.out_c[j] = c
            self.out_d[j] = d
            fo[s] += 1
            j = self.in_start[d] + fi[d]
            self.in_c[j] = c
            self.in_s[j] = s
            fi[d] += 1

        vcol = _pyarray.array("i", [0] * n)
        self.vcol = vcol
        for i in range(n):
            self.vcol[i] = vcolors[i]
        cell_of = _pyarray.array("i", [0] * n)
        self.cell_of = cell_of
        sig_buf = _pyarray.array("i", [0] * (2 * m + 1))
        self.sig_buf = sig_buf
        self.key_buf = bytearray(4 * (2 * m + 1))

    cdef bytes sig_key(self, int v):
        """Signature bytes: sorted out encodings, separator, sorted in
        encodings; 4-byte big-endian with +1 offset keeps byte order equal
        to the tuple order used by the pure backend."""
        cdef int length = 0
        cdef int k, e, mid
        cdef int[:] buf = self.sig_buf
        for k in range(self.out_start[v], self.out_start[v + 1]):
            buf[length] = self.out_c[k] * self.enc + self.cell_of[self.out_d[k]]
            length += 1
        _insertion_sort(&buf[0], length)
        buf[length] = -1
        length += 1
        mid = length
        for k in range(self.in_start[v], self.in_start[v + 1]):
            buf[length] = self.in_c[k] * self.enc + self.cell_of[self.in_s[k]]
            length += 1
        _insertion_sort(&buf[mid], length - mid)
        kb = self.key_buf
        for k in range(length):
            e = buf[k] + 1
            kb[4 * k] = (e >> 24) & 0xFF
            kb[4 * k + 1] = (e >> 16) & 0xFF
            kb[4 * k + 2] = (e >> 8) & 0xFF
            kb[4 * k + 3] = e & 0xFF
        return bytes(kb[: 4 * length])

    cdef void set_cell_of(self, list cells):
        cdef int idx
        for idx in range(len(cells)):
            for u in cells[idx]:
                self.cell_of[<int> u] = idx

    cdef list refine(self, list cells):
        cdef bint changed
        self.set_cell_of(cells)
        while True:
            new_cells = []
            changed = False
            for cell in cells:
                if len(cell) == 1:
                    new_cells.append(cell)
                    continue
                groups = {}
                for u in cell:
                    key = self.sig_key(<int> u)
                    bucket = groups.get(key)
                    if bucket is None:
                        groups[key] = [u]
                    else:
                        bucket.append(u)
                if len(groups) == 1:
                    new_cells.append(cell)
                else:
                    changed = True
                    for key in sorted(groups):
                        new_cells.append(groups[key])
            if not changed:
                return cells
            cells = new_cells
            self.set_cell_of(cells)

    cdef list certificate(self, list cells):
        cdef int idx, ls, ld, span, e
        pos = _pyarray.array("i", [0] * self.n)
        cdef int[:] posv = pos
        order = []
        for idx in range(len(cells)):
            posv[<int> cells[idx][0]] = idx
            order.append(cells[idx][0])
        cert = [self.n, self.m]
        for u in order:
            cert.append(self.vcol[<int> u])
        span = self.maxcolor + 1
        coded = []
        for t in self.arcs:
            ls = posv[<int> t[0]]
            ld = posv[<int> t[1]]
            coded.append((ls * self.n + ld) * span + <int> t[2])
        coded.sort()
        for e_obj in coded:
            e = e_obj
            cert.append(e // (self.n * span))
            cert.append((e // span) % self.n)
            cert.append(e % span)
        return cert

    cdef void search(self, list cells):
        cdef int idx, target
        cells = self.refine(cells)
        target = -1
        for idx in range(len(cells)):
            if len(cells[idx]) > 1:
                target = idx
                break
        if target < 0:
            cand = self.certificate(cells)
            if self.best is None or cand < self.best:
                self.best = cand
            return
        cell = cells[target]
        for v in cell:
            rest = [u for u in cell if u != v]
            self.search(cells[:target] + [[v], rest] + cells[target + 1 :])

    def run(self, cells):
        self.search(cells)
        return _pyarray.array("i", self.best).tobytes()


def canonical_certificate(int n, vcolors, arcs):
    """See _canon_py.canonical_certificate; same contract, same output."""
    cdef int m = len(arcs)
    if n == 0:
        return _pyarray.array("i", [0, m]).tobytes()
    by_color = {}
    for v in range(n):
        by_color.setdefault(vcolors[v], []).append(v)
    cells = [sorted(by_color[k]) for k in sorted(by_color)]
    return _Canon(n, vcolors, arcs).run(cells)
