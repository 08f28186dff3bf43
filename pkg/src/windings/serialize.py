"""JSON reading and writing for quivers and windings.

Formats:

    Quiver   {"vertices": ["v1", ...],
              "arrows": [{"id": "a1", "source": "v1", "target": "v2"}, ...]}

    Winding  {"base": <Quiver>, "total": <Quiver>,
              "vertex_map": {"x": "v1", ...}, "arrow_map": {"e1": "a1", ...}}

Emission is canonical: UTF-8, two-space indent, arrays sorted by id, map
keys sorted, fields in the order shown above.  ``emit(parse(text)) == text``
for canonically formatted input.
"""
from __future__ import annotations

import json

from .errors import InputError
from .quiver import Arrow, Quiver, QuiverMap, Winding


def _load(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise InputError(f"invalid JSON at line {e.lineno}, column {e.colno}: {e.msg}")


def _quiver_from_obj(obj) -> Quiver:
    if not isinstance(obj, dict):
        raise InputError("quiver must be a JSON object")
    try:
        vertices = obj["vertices"]
        arrows = obj["arrows"]
    except KeyError as e:
        raise InputError(f"quiver is missing field {e.args[0]!r}")
    if not isinstance(vertices, list) or not all(isinstance(v, str) for v in vertices):
        raise InputError("'vertices' must be a list of strings")
    ars = []
    for rec in arrows:
        if not isinstance(rec, dict):
            raise InputError("'arrows' entries must be objects")
        for f in ("id", "source", "target"):
            if f not in rec or not isinstance(rec[f], str):
                raise InputError(f"arrow record is missing string field {f!r}")
        ars.append(Arrow(rec["id"], rec["source"], rec["target"]))
    return Quiver(tuple(vertices), tuple(ars))


def parse_quiver(text: str) -> Quiver:
    return _quiver_from_obj(_load(text))


def quiver_to_obj(q: Quiver) -> dict:
    return {
        "vertices": list(q.vertices),
        "arrows": [
            {"id": a.id, "source": a.source, "target": a.target} for a in q.arrows
        ],
    }


def emit_quiver(q: Quiver) -> str:
    return json.dumps(quiver_to_obj(q), indent=2, ensure_ascii=False) + "\n"


def _winding_from_obj(obj) -> Winding:
    if not isinstance(obj, dict):
        raise InputError("winding must be a JSON object")
    for f in ("base", "total", "vertex_map", "arrow_map"):
        if f not in obj:
            raise InputError(f"winding is missing field {f!r}")
    base = _quiver_from_obj(obj["base"])
    total = _quiver_from_obj(obj["total"])
    vm = obj["vertex_map"]
    am = obj["arrow_map"]
    if not isinstance(vm, dict) or not isinstance(am, dict):
        raise InputError("'vertex_map' and 'arrow_map' must be objects")
    m = QuiverMap(domain=total, codomain=base, vertex_map=dict(vm), arrow_map=dict(am))
    return Winding(m)


def parse_winding(text: str) -> Winding:
    return _winding_from_obj(_load(text))


def quiver_map_to_obj(m: QuiverMap) -> dict:
    return {
        "base": quiver_to_obj(m.codomain),
        "total": quiver_to_obj(m.domain),
        "vertex_map": {k: m.vertex_map[k] for k in sorted(m.vertex_map)},
        "arrow_map": {k: m.arrow_map[k] for k in sorted(m.arrow_map)},
    }


def emit_quiver_map(m: QuiverMap) -> str:
    return json.dumps(quiver_map_to_obj(m), indent=2, ensure_ascii=False) + "\n"


def emit_winding(w: Winding) -> str:
    return emit_quiver_map(w.map)


def parse_quiver_or_winding(text: str):
    """Detect the payload kind by its fields; returns Quiver or Winding."""
    obj = _load(text)
    if isinstance(obj, dict) and "base" in obj:
        return _winding_from_obj(obj)
    return _quiver_from_obj(obj)
