"""Canonical isomorphism keys for windings.

Selects the compiled certificate kernel when the extension module built,
falling back to the pure-Python implementation.  Set the environment
variable ``WINDINGS_CANON_BACKEND=python`` to force the fallback.
"""
from __future__ import annotations

import os

from .quiver import Winding

if os.environ.get("WINDINGS_CANON_BACKEND") == "python":
    from . import _canon_py as _impl
else:
    try:
        from . import _canon_cy as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _canon_py as _impl

BACKEND: str = _impl.BACKEND
canonical_certificate = _impl.canonical_certificate


def _base_header(base) -> bytes:
    # length-prefixed tokens keep the header unambiguous for any id strings
    tokens = [str(len(base.vertices)), str(len(base.arrows))]
    tokens.extend(base.vertices)
    for a in base.arrows:
        tokens.extend((a.id, a.source, a.target))
    return "|".join(f"{len(t)}.{t}" for t in tokens).encode("utf-8")


def canonical_key(w: Winding) -> bytes:
    """Key equal for two windings iff they are coefficient-isomorphic.

    The key embeds the base quiver verbatim, so keys are comparable across
    any windings, not only those sharing a base object.
    """
    base = w.base
    total = w.total
    vindex = {v: i for i, v in enumerate(base.vertices)}
    aindex = {a.id: i for i, a in enumerate(base.arrows)}
    gverts = total.vertices
    gpos = {v: i for i, v in enumerate(gverts)}
    vcolors = [vindex[w.vertex_color(v)] for v in gverts]
    arcs = [
        (gpos[a.source], gpos[a.target], aindex[w.arrow_color(a.id)])
        for a in total.arrows
    ]
    cert = canonical_certificate(len(gverts), vcolors, arcs)
    return _base_header(base) + b"|" + cert


def key_hex(key: bytes) -> str:
    return key.hex()
