"""Command-line front end.

Exit codes: 0 success, 1 usage error, 2 input error, 3 budget exceeded,
4 uncertified result when a certificate was required.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import coverings, enumeration, gradings, growth, hall
from .canon import key_hex
from .errors import (
    BudgetExceeded,
    InputError,
    NoBracket,
    NoCertificate,
    WindingsError,
)
from .quiver import Quiver, classify_shape, reverse_arrow
from .representation import Representation
from .serialize import (
    parse_quiver,
    parse_quiver_or_winding,
    parse_winding,
    quiver_map_to_obj,
    quiver_to_obj,
)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _read(path: str) -> str:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as e:
        raise InputError(f"cannot read {path}: {e.strerror}")


def _render(obj, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(obj, indent=2, ensure_ascii=False)
    return _render_text(obj, 0)


def _render_text(obj, indent: int) -> str:
    pad = "  " * indent
    if isinstance(obj, dict):
        lines = []
        for k, v in obj.items():
            if isinstance(v, (dict, list)):
                lines.append(f"{pad}{k}:")
                lines.append(_render_text(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {v}")
        return "\n".join(lines)
    if isinstance(obj, list):
        lines = []
        for v in obj:
            if isinstance(v, (dict, list)):
                lines.append(f"{pad}-")
                lines.append(_render_text(v, indent + 1))
            else:
                lines.append(f"{pad}- {v}")
        return "\n".join(lines) if lines else f"{pad}(empty)"
    return f"{pad}{obj}"


def _build_parser() -> _Parser:
    p = _Parser(prog="windings", description=__doc__)
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument(
        "--jobs",
        type=int,
        default=1,
        help="parallelism cap; results are deterministic regardless",
    )
    p.add_argument(
        "--seedless",
        action="store_true",
        help="no-op; output is deterministic and seed-free by construction",
    )
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("classify", help="shape and growth class of a quiver")
    c.add_argument("file")

    c = sub.add_parser("count", help="class counts per dimension")
    c.add_argument("--max", type=int, required=True, dest="max_dim")
    c.add_argument("--recursion", action="store_true")
    c.add_argument("file")

    c = sub.add_parser("list", help="witnesses of all classes of one dimension")
    c.add_argument("--dim", type=int, required=True)
    c.add_argument("file")

    c = sub.add_parser("growth", help="counting recursion and dominant root")
    c.add_argument("--from", dest="start")
    c.add_argument("--to", dest="finish")
    c.add_argument("file")

    c = sub.add_parser("euler", help="Euler characteristic by subobject counting")
    c.add_argument("--dimvec", required=True)
    c.add_argument("--require-certificate", action="store_true")
    c.add_argument("file")

    c = sub.add_parser("nice-seq", help="search a distinguishing nice sequence")
    c.add_argument("--budget", type=int, default=8)
    c.add_argument("file")

    c = sub.add_parser("hall", help="product or bracket of two classes")
    c.add_argument("--op", choices=("product", "bracket"), required=True)
    c.add_argument("--mod-p", action="store_true", dest="mod_p")
    c.add_argument("file_a")
    c.add_argument("file_b")

    c = sub.add_parser("cover", help="chained-copies covering plus its grading")
    c.add_argument("--arrow", required=True)
    c.add_argument("--copies", type=int, required=True)
    c.add_argument("file")

    c = sub.add_parser("contract", help="contract a winding along base arrows")
    c.add_argument("--arrows", required=True)
    c.add_argument("file")

    c = sub.add_parser("reverse", help="reverse one base arrow")
    c.add_argument("--arrow", required=True)
    c.add_argument("file")
    return p


def _cmd_classify(args) -> dict:
    q = parse_quiver(_read(args.file))
    shape = classify_shape(q)
    nil = growth.classify_nil(q)
    return {
        "shape": shape.kind.value,
        "betti": shape.betti,
        "class": nil.value,
        "representative": growth.REPRESENTATIVE[nil],
    }


def _cmd_count(args) -> dict:
    q = parse_quiver(_read(args.file))
    upto = args.max_dim
    if upto < 1:
        raise InputError("--max must be at least 1")
    if not args.recursion:
        budget = max(enumeration.DEFAULT_BUDGET, upto)
        return {
            str(n): enumeration.count_indecomposables(q, n, budget)
            for n in range(1, upto + 1)
        }
    rec = growth.counting_recursion(q)
    seed_to = min(upto, rec.valid_from - 1)
    budget = max(enumeration.DEFAULT_BUDGET, seed_to)
    seeds = {
        n: enumeration.count_indecomposables(q, n, budget)
        for n in range(1, seed_to + 1)
    }
    values = rec.extend(seeds, upto)
    return {str(n): values[n] for n in range(1, upto + 1)}


def _cmd_list(args) -> list:
    q = parse_quiver(_read(args.file))
    budget = max(enumeration.DEFAULT_BUDGET, args.dim)
    entries = enumeration.enumerate_nilpotent_indecomposables(q, args.dim, budget)
    return [quiver_map_to_obj(rep.winding.map) for _, rep in entries]


def _cmd_growth(args) -> dict:
    q = parse_quiver(_read(args.file))
    if (args.start is None) != (args.finish is None):
        raise UsageError("--from and --to must be given together")
    if args.start is None:
        rec = growth.loop_tree_recursion(q)
    else:
        rec = growth.cycle_recursion(q, args.start, args.finish)
    poly = growth.characteristic_polynomial(rec)
    try:
        root = growth.dominant_root(poly, 1e-9)
    except NoBracket:
        root = None
    return {
        "coeffs": list(rec.coeffs),
        "valid_from": rec.valid_from,
        "char_poly": list(poly.coeffs),
        "dominant_root": root,
    }


def _parse_dimvec(csv: str, q: Quiver) -> dict[str, int]:
    try:
        parts = [int(x) for x in csv.split(",")]
    except ValueError:
        raise InputError(f"bad dimension vector {csv!r}")
    if len(parts) != len(q.vertices):
        raise InputError(
            f"dimension vector has {len(parts)} entries, quiver has "
            f"{len(q.vertices)} vertices"
        )
    return dict(zip(q.vertices, parts))


def _cmd_euler(args, fmt: str) -> tuple[int, str]:
    w = parse_winding(_read(args.file))
    rep = Representation(w)
    d = _parse_dimvec(args.dimvec, w.base)
    try:
        result = gradings.euler_characteristic(rep, d)
    except NoCertificate:
        if args.require_certificate:
            print("no distinguishing nice sequence found", file=sys.stderr)
            return 4, ""
        value = gradings.subrepresentation_count(rep, d)
        out = {"value": value, "certified": False, "sequence": None}
        return 0, _render(out, fmt)
    out = {
        "value": result.value,
        "certified": True,
        "sequence": [dict(sorted(g.items())) for g in result.certificate],
    }
    return 0, _render(out, fmt)


def _cmd_nice_seq(args, fmt: str) -> str:
    w = parse_winding(_read(args.file))
    budget = gradings.SearchBudget(max_gradings=args.budget)
    seq = gradings.find_distinguishing_sequence(w, budget)
    if seq is None:
        return _render("failure", fmt)
    return _render({"sequence": [dict(sorted(g.items())) for g in seq]}, fmt)


def _cmd_hall(args) -> dict:
    a = Representation(parse_winding(_read(args.file_a)))
    b = Representation(parse_winding(_read(args.file_b)))
    if args.op == "product":
        elem = hall.hall_product(a, b)
    else:
        elem = hall.commutator(a, b)
    if args.mod_p:
        elem = hall.tree_projection(elem)
    return {
        "terms": [
            {
                "key": key_hex(key),
                "coeff": coeff,
                "witness": quiver_map_to_obj(witness.winding.map),
            }
            for key, coeff, witness in elem.items()
        ]
    }


def _cmd_cover(args) -> dict:
    q = parse_quiver(_read(args.file))
    cfg = coverings.ChainCoverConfig(q, args.arrow, args.copies)
    w = coverings.build_chain_cover(cfg)
    g = coverings.chain_cover_grading(w, cfg)
    return {
        "winding": quiver_map_to_obj(w.map),
        "grading": dict(sorted(g.items())),
    }


def _cmd_contract(args) -> dict:
    w = parse_winding(_read(args.file))
    ids = [x for x in args.arrows.split(",") if x]
    result = coverings.contract(w, ids)
    return {
        "map": quiver_map_to_obj(result.map),
        "is_winding": result.is_winding,
    }


def _cmd_reverse(args) -> dict:
    payload = parse_quiver_or_winding(_read(args.file))
    if isinstance(payload, Quiver):
        return quiver_to_obj(reverse_arrow(payload, args.arrow))
    rep = enumeration.reverse_representation(Representation(payload), args.arrow)
    return quiver_map_to_obj(rep.winding.map)


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        if args.jobs < 1:
            raise UsageError("--jobs must be at least 1")
        fmt = args.format
        if args.command == "euler":
            code, text = _cmd_euler(args, fmt)
            if text:
                print(text)
            return code
        if args.command == "nice-seq":
            print(_cmd_nice_seq(args, fmt))
            return 0
        handler = {
            "classify": _cmd_classify,
            "count": _cmd_count,
            "list": _cmd_list,
            "growth": _cmd_growth,
            "hall": _cmd_hall,
            "cover": _cmd_cover,
            "contract": _cmd_contract,
            "reverse": _cmd_reverse,
        }[args.command]
        print(_render(handler(args), fmt))
        return 0
    except UsageError as e:
        print(f"usage error: {e}", file=sys.stderr)
        return 1
    except BudgetExceeded as e:
        print(f"budget exceeded: {e}", file=sys.stderr)
        return 3
    except (InputError, WindingsError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
