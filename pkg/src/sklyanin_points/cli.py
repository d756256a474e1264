"""Command line interface: ``sklyanin-points {dims,components,paths,det-cubic,verify}``."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .quiver import enumerate_paths, format_path, get_quiver
from .relations import GENERATORS, QuadraticRelationSet, default_relations, factor_check
from .report import RunConfig, run_dims, run_verify, write_output
from .sections import scheme_V, scheme_W


def format_factor(f) -> str:
    """Named objects print symbolically; other points and lines by coordinates."""
    if f.name:
        return f.name
    return str(f)


def _relations(args) -> QuadraticRelationSet:
    if getattr(args, "relations", None):
        return QuadraticRelationSet.load(args.relations)
    return default_relations()


def cmd_dims(args) -> int:
    config = RunConfig(max_d=args.max_d, fmt=args.format, out=args.out,
                       expensive=args.expensive, relations=_relations(args))
    run_dims(config)
    return 0


def cmd_components(args) -> int:
    S = scheme_V(args.d) if args.scheme == "V" else scheme_W(args.d)
    labels = [[format_factor(f) for f in C.factors] for C in S]
    if args.json:
        text = json.dumps({"d": args.d, "scheme": args.scheme, "components": labels},
                          indent=2, ensure_ascii=False) + "\n"
    else:
        text = "".join(" × ".join(row) + "\n" for row in labels)
    write_output(text, args.out)
    return 0


def cmd_paths(args) -> int:
    G = get_quiver(args.quiver)
    text = "".join(format_path(p) + "\n" for p in enumerate_paths(G, args.d))
    write_output(text, args.out)
    return 0


def cmd_det_cubic(args) -> int:
    fc = factor_check(_relations(args))
    lines = [f"det M = {fc.cubic.format(GENERATORS)}"]
    if fc.ok:
        lines.append(f"constant = {fc.constant}")
        for L in fc.factors:
            lines.append(f"factor {L.name}: {L}")
    else:
        lines.append("det M is not a constant times L_A*L_B*L_C")
    write_output("\n".join(lines) + "\n", args.out)
    return 0 if fc.ok else 1


def cmd_verify(args) -> int:
    max_d = args.max_d if args.max_d is not None else (args.d if args.d is not None else 5)
    config = RunConfig(max_d=max_d, out=args.out, expensive=args.expensive,
                       relations=_relations(args))
    status, _ = run_verify(config)
    return status


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sklyanin-points",
        description="Truncated point schemes of S(1,1,1) and their section dimensions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, relations=False):
        p.add_argument("--out", type=Path, help="write output to PATH instead of stdout")
        if relations:
            p.add_argument("--relations", type=Path,
                           help="JSON file with three 3x3 coefficient matrices f, g, h")

    p = sub.add_parser("dims", help="table of dim S_d, dim B_d, dim P_d and image ranks")
    p.add_argument("--max-d", type=int, default=5)
    p.add_argument("--format", choices=("json", "csv", "table"), default="table")
    p.add_argument("--expensive", action="store_true", help="allow max-d above 6")
    common(p, relations=True)
    p.set_defaults(func=cmd_dims)

    p = sub.add_parser("components", help="maximal components of V_d or W_d")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--scheme", choices=("V", "W"), default="V")
    p.add_argument("--json", action="store_true")
    common(p)
    p.set_defaults(func=cmd_components)

    p = sub.add_parser("paths", help="length-d paths of Q or Q'")
    p.add_argument("--quiver", choices=("Q", "Qprime"), default="Q")
    p.add_argument("--d", type=int, required=True)
    common(p)
    p.set_defaults(func=cmd_paths)

    p = sub.add_parser("det-cubic", help="det of the successor matrix and its factors")
    common(p, relations=True)
    p.set_defaults(func=cmd_det_cubic)

    p = sub.add_parser("verify", help="run every check and print a certificate")
    p.add_argument("--max-d", type=int, default=None)
    p.add_argument("--d", type=int, default=None, help="alias for --max-d")
    p.add_argument("--expensive", action="store_true", help="allow max-d above 6")
    common(p, relations=True)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "d", None) is not None and args.d < 1:
        parser.error("--d must be at least 1")
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
