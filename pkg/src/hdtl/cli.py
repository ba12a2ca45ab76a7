"""Command-line interface: ``hdtl <subcommand> ...``.

Exit status is 0 on success, 1 on usage or input errors and 2 when a law
check fails.
"""

from __future__ import annotations

import argparse
import json
import sys

from .algebra import AlgebraElement, compose
from .boundary import ParseError, parse_boundary
from .colouring import (
    PartitionError,
    enumerate_h_classes,
    enumerate_sh_classes,
    h_class_of,
    make_sh_class,
)
from .symmetry import automorphism_group
from .tables import (
    DEFAULT_LIMIT,
    TableTooLarge,
    check_laws,
    dimensions,
    multiplication_table,
    serialize_table,
)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _config(text):
    try:
        return parse_boundary(text)
    except ParseError as exc:
        raise UsageError(f"bad configuration {text!r}: {exc}") from None


def _dump(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def cmd_classes(args) -> tuple[int, str]:
    top, bottom = _config(args.top), _config(args.bottom)
    classes = enumerate_sh_classes(top, bottom) if args.sh else enumerate_h_classes(top, bottom)
    names = [str(c) for c in classes]
    if args.format == "json":
        kind = "sh" if args.sh else "h"
        return 0, _dump({"top": top.text, "bottom": bottom.text, "kind": kind, "classes": names})
    return 0, "\n".join(names)


def cmd_aut(args) -> tuple[int, str]:
    cfg = _config(args.config)
    group = automorphism_group(cfg)
    perms = [g.cycle_notation() for g in group]
    if args.format == "json":
        return 0, _dump({"config": cfg.text, "order": group.order, "elements": perms})
    return 0, "\n".join([f"order={group.order}", *perms])


def cmd_compose(args) -> tuple[int, str]:
    if args.config is not None:
        if any(x is not None for x in (args.top, args.mid, args.bottom)):
            raise UsageError("give either a single configuration or --top/--mid/--bottom")
        top = mid = bottom = _config(args.config)
    else:
        if args.mid is None:
            raise UsageError("--mid is required when no single configuration is given")
        mid = _config(args.mid)
        top = _config(args.top) if args.top is not None else mid
        bottom = _config(args.bottom) if args.bottom is not None else mid
    try:
        a = h_class_of(make_sh_class(top, mid, args.a))
        b = h_class_of(make_sh_class(mid, bottom, args.b))
    except PartitionError as exc:
        raise UsageError(str(exc)) from None
    result = compose(AlgebraElement.basis(a), AlgebraElement.basis(b))
    if args.format == "json":
        return 0, _dump(
            {
                "top": top.text,
                "mid": mid.text,
                "bottom": bottom.text,
                "terms": [[str(h), str(c)] for h, c in result.terms],
            }
        )
    return 0, str(result)


def cmd_table(args) -> tuple[int, str]:
    cfg = _config(args.config)
    try:
        table = multiplication_table(cfg, limit=args.limit)
    except TableTooLarge as exc:
        raise UsageError(str(exc)) from None
    return 0, serialize_table(table, args.format).rstrip("\n")


def cmd_check(args) -> tuple[int, str]:
    cfg = _config(args.config)
    report = check_laws(cfg, mode=args.mode, seed=args.seed, samples=args.samples)
    status = 0 if report.passed else 2
    if args.format == "json":
        return status, _dump(report.as_dict())
    lines = []
    for c in report.checks:
        line = f"{c.name}: {'pass' if c.passed else 'FAIL'} ({c.tested} tested)"
        if c.counterexample:
            line += " counterexample: " + " ; ".join(f"[{x}]" for x in c.counterexample)
        lines.append(line)
    return status, "\n".join(lines)


def cmd_dims(args) -> tuple[int, str]:
    top, bottom = _config(args.top), _config(args.bottom)
    sh, h, gt, gb = dimensions(top, bottom)
    if args.format == "json":
        return 0, _dump(
            {"top": top.text, "bottom": bottom.text, "sh": sh, "h": h,
             "pi_top": gt, "pi_bottom": gb}
        )
    return 0, f"sh={sh} h={h} |Pi_top|={gt} |Pi_bottom|={gb}"


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hdtl", description="Heterotopy algebras of circle configurations.")
    parser.add_argument("--output", help="write the result to this file instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help, formats=("text", "json")):
        p = sub.add_parser(name, help=help)
        p.set_defaults(func=func)
        p.add_argument("--format", choices=formats, default=formats[0])
        p.add_argument("--output", default=argparse.SUPPRESS,
                       help="write the result to this file instead of stdout")
        return p

    p = add("classes", cmd_classes, "list heterotopy classes between two configurations")
    p.add_argument("top")
    p.add_argument("bottom")
    p.add_argument("--sh", action="store_true", help="list strong-heterotopy classes instead")

    p = add("aut", cmd_aut, "symmetry group of a configuration")
    p.add_argument("config")

    p = add("compose", cmd_compose, "compose two classes")
    p.add_argument("operands", nargs="+", metavar="ARG",
                   help="[config] classA classB")
    p.add_argument("--top")
    p.add_argument("--mid")
    p.add_argument("--bottom")

    p = add("table", cmd_table, "multiplication table of End(config)",
            formats=("markdown", "json", "csv"))
    p.add_argument("config")
    p.add_argument("--limit", type=int, default=DEFAULT_LIMIT)

    p = add("check", cmd_check, "verify unit and associativity laws")
    p.add_argument("config")
    p.add_argument("--mode", choices=("exhaustive", "sampled"), default="exhaustive")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=1000)

    p = add("dims", cmd_dims, "dimension counts")
    p.add_argument("top")
    p.add_argument("bottom")
    return parser


def run(argv: list[str]) -> tuple[int, str, str]:
    """Run one invocation; returns (exit code, stdout text, stderr text)."""
    try:
        args = build_parser().parse_args(argv)
        if args.command == "compose":
            ops = args.operands
            if len(ops) == 3:
                args.config, args.a, args.b = ops
            elif len(ops) == 2:
                args.config = None
                args.a, args.b = ops
            else:
                raise UsageError("compose takes [config] classA classB")
        code, out = args.func(args)
    except UsageError as exc:
        return 1, "", f"hdtl: error: {exc}\n"
    out = out + "\n" if out else ""
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(out)
        out = ""
    return code, out, ""


def main(argv: list[str] | None = None) -> int:
    code, out, err = run(sys.argv[1:] if argv is None else argv)
    sys.stdout.write(out)
    sys.stderr.write(err)
    return code


if __name__ == "__main__":
    sys.exit(main())
