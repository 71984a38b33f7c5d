"""Command line front end.

Exit codes: 0 success, 1 unreadable input document, 2 gap set is not a
GNS, 3 counterexamples found by ``verify``, 64 bad usage.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import theorems
from .core import GapSet, GNSError, InvalidGapSet, MonomialOrder, closure_violation, dumps
from .enumeration import (
    FamilyQuery,
    enumerate_family,
    export_tree,
    iter_dot,
    iter_family,
    maximal_elements,
)
from .fixtures import golden_files, maximals_document
from .invariants import profile
from .plot import gap_diagram_svg

EXIT_PARSE = 1
EXIT_INVALID = 2
EXIT_COUNTEREXAMPLE = 3
EXIT_USAGE = 64


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def parse_point(text: str) -> tuple[int, ...]:
    try:
        p = tuple(int(c) for c in text.split(","))
    except ValueError:
        raise UsageError(f"bad point {text!r}: use comma-separated integers") from None
    if any(c < 0 for c in p):
        raise UsageError(f"bad point {text!r}: coordinates must be non-negative")
    return p


def parse_points(text: str | None) -> list[tuple[int, ...]]:
    if not text:
        return []
    return [parse_point(t.strip()) for t in text.split(";") if t.strip()]


def _write(text: str, output: str | None) -> None:
    if output:
        Path(output).write_text(text)
    else:
        sys.stdout.write(text)


def _query(args) -> FamilyQuery:
    corner = parse_point(args.corner)
    avoid = parse_points(args.avoid)
    if any(c == 0 for c in corner):
        raise UsageError(f"corner {corner} has a zero coordinate")
    if all(c == 1 for c in corner):
        raise UsageError(f"corner {corner} gives genus 0")
    try:
        return FamilyQuery(corner, avoid, order=args.order, dedup=getattr(args, "dedup", "on") == "on")
    except (GNSError, ValueError) as exc:
        raise UsageError(str(exc)) from None


def _load_gapset(args) -> GapSet:
    if args.gaps is not None:
        pts = parse_points(args.gaps)
        d = args.d if args.d is not None else (len(pts[0]) if pts else None)
        if d is None:
            raise UsageError("--d is required for an empty gap list")
        return GapSet(d, pts)
    if args.input is None:
        raise UsageError("give an input file (or '-') or --gaps")
    text = sys.stdin.read() if args.input == "-" else Path(args.input).read_text()
    return GapSet.from_json(text)


def cmd_analyze(args) -> int:
    try:
        H = _load_gapset(args)
    except (OSError, ValueError, GNSError) as exc:
        print(f"error: cannot read gap set: {exc}", file=sys.stderr)
        return EXIT_PARSE
    bad = closure_violation(H)
    if bad is not None:
        h, x, y = bad
        print(f"error: not a GNS: {h} = {x} + {y} with {x} and {y} outside the gap set",
              file=sys.stderr)
        return EXIT_INVALID
    if args.plot and H.d != 2:
        raise UsageError("--plot needs d = 2")
    _write(dumps(profile(H).to_dict()), args.output)
    if args.plot:
        Path(args.plot).write_text(gap_diagram_svg(H))
    return 0


def cmd_enumerate(args) -> int:
    q = _query(args)
    if args.format == "dot":
        out = open(args.output, "w") if args.output else sys.stdout
        try:
            for line in iter_dot(q, iter_family(q)):
                out.write(line + "\n")
        finally:
            if args.output:
                out.close()
    else:
        _write(export_tree(enumerate_family(q), "json"), args.output)
    return 0


def cmd_maximals(args) -> int:
    q = _query(args)
    doc = maximals_document(q.corner, q.forced_gaps, maximal_elements(q), q.order.value)
    _write(dumps(doc), args.output)
    return 0


def cmd_verify(args) -> int:
    if args.list:
        for id in theorems.REGISTRY:
            print(f"{id}: {theorems.describe(id)}")
        return 0
    ids = theorems.REGISTRY if args.all else [args.id]
    if not args.all and args.id not in theorems.REGISTRY:
        listing = "\n".join(f"  {i}" for i in theorems.REGISTRY)
        print(f"error: unknown statement id {args.id!r}; registered ids:\n{listing}", file=sys.stderr)
        return EXIT_USAGE
    if args.g1 or args.g2:
        if not (args.g1 and args.g2):
            raise UsageError("--g1 and --g2 go together")
        if args.all:
            raise UsageError("--all sweeps a bound; drop --g1/--g2")
        try:
            reports = [theorems.verify_pair(args.id, (parse_point(args.g1), parse_point(args.g2)))]
        except (KeyError, GNSError) as exc:
            raise UsageError(str(exc).strip("'\"")) from None
    else:
        if not args.bound:
            raise UsageError("--bound is required unless --g1/--g2 are given")
        bound = parse_point(args.bound)
        reports = [theorems.verify_proposition(i, bound) for i in ids]
    docs = [r.to_dict() for r in reports]
    if not args.timing:
        for doc in docs:
            doc.pop("ms")
    _write(dumps(docs[0] if len(docs) == 1 else docs), args.output)
    return EXIT_COUNTEREXAMPLE if any(r.counterexamples for r in reports) else 0


def cmd_fixtures(args) -> int:
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    for name, doc in sorted(golden_files().items()):
        (out / name).write_text(dumps(doc))
        print(out / name)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="gnsatoms", description="Generalized numerical semigroups by gap sets.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    a = sub.add_parser("analyze", help="invariants of one gap set")
    a.add_argument("input", nargs="?", help="gap-set JSON file, or - for stdin")
    a.add_argument("--gaps", help="inline gaps, e.g. '0,1;1,0;1,1'")
    a.add_argument("--d", type=int, help="dimension (needed when --gaps is empty)")
    a.add_argument("--plot", metavar="SVG", help="write a gap diagram (d = 2)")
    a.add_argument("-o", "--output")
    a.set_defaults(func=cmd_analyze)

    def family_flags(sp):
        sp.add_argument("--corner", required=True, help="corner element, e.g. 3,2")
        sp.add_argument("--avoid", default="", help="forced gaps, e.g. '2,2;3,3'")
        sp.add_argument("--order", default="lex", choices=[o.value for o in MonomialOrder])
        sp.add_argument("-o", "--output")

    e = sub.add_parser("enumerate", help="tree of the family F(c; h1..hn)")
    family_flags(e)
    e.add_argument("--dedup", default="on", choices=["on", "off"])
    e.add_argument("--format", default="json", choices=["json", "dot"])
    e.set_defaults(func=cmd_enumerate)

    m = sub.add_parser("maximals", help="maximal members MF(c; h1..hn)")
    family_flags(m)
    m.set_defaults(func=cmd_maximals)

    v = sub.add_parser("verify", help="exhaustive check of a registered statement")
    v.add_argument("--id")
    v.add_argument("--bound", help="largest corner swept, e.g. 4,4")
    v.add_argument("--g1")
    v.add_argument("--g2")
    v.add_argument("--all", action="store_true", help="run every registered statement")
    v.add_argument("--list", action="store_true", help="list registered statements")
    v.add_argument("--timing", action="store_true", help="include elapsed ms in the report")
    v.add_argument("-o", "--output")
    v.set_defaults(func=cmd_verify)

    f = sub.add_parser("fixtures", help="write the worked examples as golden JSON files")
    f.add_argument("--out", default="fixtures")
    f.set_defaults(func=cmd_fixtures)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "verify" and not (args.list or args.all or args.id):
        parser.exit(EXIT_USAGE, "gnsatoms verify: error: give --id, --all or --list\n")
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"gnsatoms {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InvalidGapSet as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
