"""Command-line interface.

Commands read a digraph from a DTF file and print "key: value" lines, or
a JSON document with the same fields under --json.  Exit codes: 0 when
the command succeeded (property true, object found), 1 when the queried
property is false or no object exists (a witness is printed when there is
one), 2 on input errors.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from dgtk import colouring
from dgtk.applications import ch_low_outdegree_vertex, find_2king, is_2king
from dgtk.decomposition import (
    FourPartition,
    RoundBlowup,
    UniversalSemicomplete,
    decompose_lsc,
    maximal_hubs,
)
from dgtk.digraph import Digraph, girth
from dgtk.dtf import parse_dtf, write_dtf
from dgtk.generators import GENERATOR_CLASSES, GeneratorSpec, generate
from dgtk.orders import ORDER_KINDS, OrderSearchFailure, find_in_round_order, find_out_round_order, find_round_order
from dgtk.recognition import CLASSES, check_class, is_hero


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        code, result = args.handler(args)
    except (ValueError, RuntimeError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    _emit(result, args.json)
    return code


def _build_parser():
    parser = argparse.ArgumentParser(prog="dgtk", description="digraph toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    def cmd(name, handler, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.add_argument("--json", action="store_true", help="emit a JSON document")
        p.set_defaults(handler=handler)
        return p

    p = cmd("recognize", _cmd_recognize, help="test class membership")
    p.add_argument("--class", dest="cls", required=True, choices=CLASSES)
    p.add_argument("file")

    p = cmd("order", _cmd_order, help="construct a cyclic order")
    p.add_argument("--kind", required=True, choices=ORDER_KINDS)
    p.add_argument("file")

    p = cmd("hubs", _cmd_hubs, help="maximal hub decomposition")
    p.add_argument("file")

    p = cmd("decompose", _cmd_decompose, help="locally semicomplete structure")
    p.add_argument("file")

    p = cmd("colour", _cmd_colour, help="constructive 2-dicolourings")
    p.add_argument("--mode", required=True, choices=("in-round", "out-transitive", "local-tournament"))
    p.add_argument("--anchor", type=int, default=0, help="anchor vertex for in-round mode")
    p.add_argument("--tset", default="", help="comma-separated monochromatic set for out-transitive mode")
    p.add_argument("file")

    p = cmd("oracle", _cmd_oracle, help="exact brute-force oracles")
    p.add_argument("--dichromatic", action="store_true")
    p.add_argument("file")

    p = cmd("girth", _cmd_girth, help="shortest directed cycle length")
    p.add_argument("file")

    p = cmd("ch", _cmd_ch, help="low out-degree vertex under a girth bound")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("file")

    p = cmd("king", _cmd_king, help="find a 2-king")
    p.add_argument("file")

    p = cmd("hero", _cmd_hero, help="hero recognition for tournaments")
    p.add_argument("file")

    p = cmd("gen", _cmd_gen, help="generate a class instance")
    p.add_argument("--class", dest="cls", required=True, choices=GENERATOR_CLASSES)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--girth-floor", type=int, default=None)

    return parser


def _load(args) -> Digraph:
    return parse_dtf(Path(args.file).read_text())


def _emit(result, as_json):
    if result is None:
        return
    if as_json:
        print(json.dumps(result, indent=2))
        return
    for key, value in result.items():
        print(f"{key}: {_render(value)}")


def _render(value):
    if isinstance(value, bool):
        return "true" if value else "false"
    if value is None:
        return "none"
    if isinstance(value, (list, tuple)):
        if value and all(isinstance(v, (list, tuple)) for v in value):
            return " | ".join(",".join(str(x) for x in v) for v in value)
        return " ".join(_render(v) for v in value)
    if isinstance(value, dict):
        return json.dumps(value)
    return str(value)


def _witness_dict(w):
    return {"kind": w.kind, "vertices": list(w.vertices)}


def _cmd_recognize(args):
    d = _load(args)
    ok, w = check_class(d, args.cls)
    out = {"class": args.cls, "member": ok}
    if w is not None:
        out["witness"] = _witness_dict(w)
    return (0 if ok else 1), out


def _cmd_order(args):
    d = _load(args)
    finder = {
        "in-round": find_in_round_order,
        "round": find_round_order,
        "out-round": find_out_round_order,
    }[args.kind]
    res = finder(d)
    if isinstance(res, OrderSearchFailure):
        out = {"kind": args.kind, "found": False, "reason": res.reason}
        if res.witness is not None:
            out["witness"] = _witness_dict(res.witness)
        if res.detail is not None:
            out["detail"] = list(res.detail)
        return 1, out
    return 0, {"kind": args.kind, "found": True, "order": list(res.seq)}


def _cmd_hubs(args):
    d = _load(args)
    hp = maximal_hubs(d)
    return 0, {
        "parts": [sorted(p) for p in hp.parts],
        "quotient_arcs": [list(a) for a in sorted(hp.quotient.arcs)],
        "order": list(hp.order.seq),
    }


def _cmd_decompose(args):
    d = _load(args)
    structure = decompose_lsc(d)
    if isinstance(structure, UniversalSemicomplete):
        return 0, {"case": "universal-semicomplete", "vertex": structure.vertex}
    if isinstance(structure, RoundBlowup):
        return 0, {
            "case": "round-blowup",
            "parts": [sorted(p) for p in structure.parts],
            "quotient_arcs": [list(a) for a in sorted(structure.quotient.arcs)],
            "order": list(structure.order.seq) if structure.order is not None else None,
        }
    return 0, {
        "case": "four-partition",
        "e": sorted(structure.e),
        "f": sorted(structure.f),
        "g": sorted(structure.g),
        "h": sorted(structure.h),
    }


def _cmd_colour(args):
    d = _load(args)
    if args.mode == "in-round":
        col = colouring.dicolour_in_round(d, args.anchor)
    elif args.mode == "out-transitive":
        tset = [int(v) for v in args.tset.split(",") if v.strip() != ""]
        col = colouring.dicolour_out_transitive(d, tset)
    else:
        col = colouring.dicolour_locally_tournament(d, colouring.minimum_dicolouring)
    ok, _ = colouring.is_valid_dicolouring(d, col)
    return 0, {
        "mode": args.mode,
        "palette": col.palette,
        "colours": list(col.colours),
        "valid": ok,
    }


def _cmd_oracle(args):
    if not args.dichromatic:
        raise ValueError("choose an oracle: --dichromatic")
    d = _load(args)
    return 0, {"dichromatic": colouring.dichromatic_number(d)}


def _cmd_girth(args):
    d = _load(args)
    g = girth(d)
    return 0, {"girth": "acyclic" if g is None else g}


def _cmd_ch(args):
    d = _load(args)
    u = ch_low_outdegree_vertex(d, args.k)
    return 0, {"k": args.k, "n": d.n, "vertex": u, "out_degree": d.out_degree(u)}


def _cmd_king(args):
    d = _load(args)
    king = find_2king(d)
    if king is None:
        return 1, {"king": None}
    return 0, {"king": king, "verified": is_2king(d, king)}


def _cmd_hero(args):
    d = _load(args)
    ok, deriv = is_hero(d)
    out = {"hero": ok}
    if deriv is not None:
        out["derivation"] = deriv.describe()
    return (0 if ok else 1), out


def _cmd_gen(args):
    spec = GeneratorSpec(kind=args.cls, n=args.n, seed=args.seed, girth_floor=args.girth_floor)
    d = generate(spec)
    comment = f"generated: class={spec.kind} n={spec.n} seed={spec.seed}"
    if spec.girth_floor is not None:
        comment += f" girth-floor={spec.girth_floor}"
    sys.stdout.write(write_dtf(d, comments=(comment,)))
    return 0, None


if __name__ == "__main__":
    sys.exit(main())
