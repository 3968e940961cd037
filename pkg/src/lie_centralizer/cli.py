"""Command-line entry point.  Every command is a thin wrapper over catalog."""
from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

from . import catalog
from .errors import NotInCell, OracleDisagreement
from .root_data import LieType
from .weyl_cell import parse_vector

EXIT_OK, EXIT_USAGE, EXIT_NOT_IN_CELL, EXIT_CROSS_CHECK = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # argparse would exit with status 2
        raise UsageError(message)


def _group(args) -> LieType:
    text = args.group_opt or args.group
    if not text:
        raise UsageError("a group or type is required")
    try:
        return LieType.parse(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _vector(text: Optional[str], t: LieType):
    if not text:
        raise UsageError("a point u is required")
    try:
        lam = parse_vector(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"cannot parse {text!r} as rationals") from exc
    if len(lam) != t.rank:
        raise UsageError(f"{t} needs {t.rank} coordinates, got {len(lam)}")
    return lam


def _build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="lie-centralizer", description="Centralizers of elements of simple compact Lie groups.")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)

    def common(sp, with_u: bool):
        sp.add_argument("group", nargs="?", help='type or group name, e.g. "F4" or "Sp(3)"')
        sp.add_argument("--group", dest="group_opt")
        if with_u:
            sp.add_argument("u", nargs="?", help="fundamental-weight coordinates, e.g. 0,1/4,0,0")
            sp.add_argument("--u", dest="u_opt")
        sp.add_argument("--json", action="store_true")
        sp.add_argument("--out")

    common(sub.add_parser("centralizer", help="centralizer of exp(u)"), True)
    sub.choices["centralizer"].add_argument("--dot", action="store_true", help="emit the diagram instead")
    common(sub.add_parser("maximal", help="centralizers at the points of F_G"), False)
    sp = sub.add_parser("parabolic", help="parabolic centralizer with I_u = {i}")
    common(sp, False)
    sp.add_argument("index", nargs="?", type=int)
    sp = sub.add_parser("centralizer-set", help="centralizer of a finite set of elements")
    common(sp, False)
    sp.add_argument("points", nargs="*")
    sp.add_argument("--u", dest="u_list", action="append", default=[])
    sp = sub.add_parser("tables", help="regenerate center, minimal weight or deficiency tables")
    sp.add_argument("kind", choices=["deficiency", "minimal-weights", "centers"])
    sp.add_argument("groups", nargs="*")
    sp.add_argument("--json", action="store_true")
    sp.add_argument("--out")
    common(sub.add_parser("dot", help="Dynkin diagram as Graphviz text"), True)
    return p


def _run(args) -> str:
    cmd = args.command
    if cmd == "centralizer":
        t = _group(args)
        lam = _vector(args.u_opt or args.u, t)
        if args.dot:
            return catalog.dot_diagram(t, lam)
        rep = catalog.centralizer_report(t, lam)
        return rep.to_json() + "\n" if args.json else rep.to_text()
    if cmd == "maximal":
        t = _group(args)
        if args.json:
            rows = [dict(label=label, **rep.to_dict()) for label, rep in catalog.maximal_reports(t)]
            return json.dumps(rows, ensure_ascii=False, indent=2) + "\n"
        return catalog.maximal_table(t)
    if cmd == "parabolic":
        t = _group(args)
        if args.index is None:
            if args.json:
                raise UsageError("--json needs a vertex index")
            return catalog.parabolic_table(t)
        if not 1 <= args.index <= t.rank:
            raise UsageError(f"vertex index {args.index} out of range 1..{t.rank}")
        label, rep = catalog.parabolic_report(t, args.index)
        return rep.to_json() + "\n" if args.json else rep.to_text()
    if cmd == "centralizer-set":
        t = _group(args)
        texts = list(args.points) + list(args.u_list)
        if not texts:
            raise UsageError("at least one point is required")
        rep = catalog.set_report(t, [_vector(x, t) for x in texts])
        return json.dumps(rep.to_dict(), ensure_ascii=False, indent=2) + "\n" if args.json else rep.to_text()
    if cmd == "tables":
        try:
            types = [LieType.parse(g) for g in args.groups] or [LieType.parse(g) for g in catalog.EXCEPTIONAL]
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        return catalog.table_text(args.kind, types)
    if cmd == "dot":
        t = _group(args)
        text = args.u_opt or args.u
        return catalog.dot_diagram(t, _vector(text, t) if text else None)
    raise UsageError("a command is required")


def main(argv: Optional[List[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        text = _run(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except NotInCell as exc:
        print(f"not in the Weyl cell: {exc}", file=sys.stderr)
        return EXIT_NOT_IN_CELL
    except OracleDisagreement as exc:
        print(f"cross-check failed: {exc}", file=sys.stderr)
        return EXIT_CROSS_CHECK
    if getattr(args, "out", None):
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
