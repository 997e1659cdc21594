"""Command-line front end.

Exit codes: 0 success / theorem holds, 1 no extension / theorem fails,
2 bad input or violated precondition.  JSON goes to stdout, diagnostics to
stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import classify, extension, oracle
from .errors import ParseError, PosetError
from .io import _read_json, load_poset, map_from_doc

EXIT_OK, EXIT_NONE, EXIT_INPUT = 0, 1, 2


def _emit(obj):
    sys.stdout.write(json.dumps(obj, indent=2, ensure_ascii=False) + "\n")


def _load_map_doc(path: str):
    doc = _read_json(path)
    return doc, map_from_doc(doc, Path(path).parent)


def cmd_classify(args) -> int:
    P = load_poset(args.file)
    _emit(classify.classify_poset(P, args.size_bound).to_dict())
    return EXIT_OK


def cmd_extend(args) -> int:
    doc, f = _load_map_doc(args.map)
    if args.mode == "lower":
        g = extension.lower_extension(f)
    elif args.mode == "upper":
        g = extension.upper_extension(f)
    elif args.mode == "greedy":
        order = args.order.split(",") if args.order else None
        g = extension.extend_greedy(f, order)
    elif args.mode == "any":
        g = extension.extend_exists(f)
    else:
        g = extension.extend_preserving_extremes(f)
    if g is None:
        _emit("none")
        return EXIT_NONE
    _emit({"domain": doc["domain"], "codomain": doc["codomain"], "map": g.to_labels()})
    return EXIT_OK


def cmd_enumerate(args) -> int:
    doc, f = _load_map_doc(args.map)
    family = extension.enumerate_extensions(f, args.cap)
    bottom, top = family.bottom(), family.top()
    _emit(
        {
            "domain": doc["domain"],
            "codomain": doc["codomain"],
            "count": len(family),
            "members": [g.to_labels() for g in family],
            "bottom": None if bottom is None else bottom.to_labels(),
            "top": None if top is None else top.to_labels(),
            "lattice": family.is_lattice(),
        }
    )
    return EXIT_OK


def cmd_verify(args) -> int:
    caps = {}
    if args.max_size is not None:
        caps["max_size"] = args.max_size
    if args.max_x is not None:
        caps["max_x"] = args.max_x
    result = oracle.check_theorem(args.theorem, caps)
    _emit(result.to_dict())
    return EXIT_OK if result.passed else EXIT_NONE


def cmd_gen(args) -> int:
    if args.mode == "random":
        stream = oracle.enumerate_posets(args.n, "random", seed=args.seed, count=args.count)
    else:
        stream = oracle.enumerate_posets(args.n, "iso" if args.iso else "labeled")
    posets = iter(stream)
    out = sys.stdout
    out.write("[")
    for k, P in enumerate(posets):
        out.write(",\n" if k else "\n")
        out.write(json.dumps(P.to_doc(), ensure_ascii=False))
    out.write("\n]\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="isotone", description="Isotone extension of maps between finite posets."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="classify a poset document")
    p.add_argument("file")
    p.add_argument("--size-bound", type=int, default=None, help="only check antichain pairs smaller than this")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("extend", help="extend a partial map document")
    p.add_argument("map")
    p.add_argument("--mode", choices=["lower", "upper", "greedy", "any", "extremes"], default="any")
    p.add_argument("--order", help="comma-separated processing order for --mode greedy")
    p.set_defaults(func=cmd_extend)

    p = sub.add_parser("enumerate", help="list every isotone extension")
    p.add_argument("map")
    p.add_argument("--cap", type=int, default=extension.DEFAULT_ENUMERATION_CAP)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", help="check a theorem over a capped universe")
    p.add_argument("--theorem", required=True, help=", ".join(oracle.THEOREMS))
    p.add_argument("--max-size", type=int, default=None)
    p.add_argument("--max-x", type=int, default=None)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gen", help="generate poset documents")
    p.add_argument("n", type=int)
    p.add_argument("--mode", choices=["random", "exhaustive"], default="random")
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--iso", action="store_true", help="exhaustive mode: one poset per isomorphism class")
    p.set_defaults(func=cmd_gen)
    return parser


def main(argv=None) -> int:
    if hasattr(sys.stdout, "reconfigure"):
        sys.stdout.reconfigure(encoding="utf-8")
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"ParseError: {exc}", file=sys.stderr)
    except (PosetError, ValueError) as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
    return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
