"""Command line front end.

Exit codes: 0 success or match found, 1 no match (or a failed check),
2 usage error, 3 computation budget exceeded.
"""
from __future__ import annotations

import argparse
import json
import sys

from .errors import BudgetExceeded, DuplicateId, ParseError
from .seqdb import load_db, lookup, superseek
from .tables import TABLES, render, table_data

EXIT_OK, EXIT_NO_MATCH, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _terms(text: str) -> list[int]:
    try:
        return [int(t) for t in text.replace(" ", ",").split(",") if t]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a list of integers: {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="machine-readable output")
    common.add_argument("--db", metavar="FILE", default=argparse.SUPPRESS, help="database file in stripped format")

    p = _Parser(prog="seqlab", description="Exact integer-sequence generator and lookup", parents=[common])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    g = sub.add_parser("gen", parents=[common], help="print terms of a sequence")
    g.add_argument("key", help="id such as A000435, or a name such as levine")
    g.add_argument("-n", "--count", type=int, default=None, help="number of terms")

    lk = sub.add_parser("lookup", parents=[common], help="find entries containing the terms")
    lk.add_argument("terms", type=_terms)

    ss = sub.add_parser("superseek", parents=[common], help="lookup after transform chains")
    ss.add_argument("terms", type=_terms)
    ss.add_argument("--max-chain", type=int, default=2, choices=(0, 1, 2))

    t = sub.add_parser("table", parents=[common], help="print one of the tables")
    t.add_argument("name", choices=TABLES)
    t.add_argument("--rows", type=int, default=None)

    c = sub.add_parser("check", parents=[common], help="run invariant suites")
    c.add_argument("--extended", action="store_true", help="include the long-running checks")

    d = sub.add_parser("db", parents=[common], help="summarize a database file")
    d.add_argument("--path", default=None, help="database file (default: bundled or $SEQLAB_DB)")
    return p


def _emit(args, payload, text: str) -> None:
    print(json.dumps(payload) if getattr(args, "json", False) else text)


def _cmd_gen(args) -> int:
    from .registry import resolve

    try:
        reg = resolve(args.key)
    except KeyError as exc:
        print(f"seqlab: {exc.args[0]}", file=sys.stderr)
        return EXIT_USAGE
    count = reg.desk if args.count is None else args.count
    if count < 1:
        print("seqlab: count must be >= 1", file=sys.stderr)
        return EXIT_USAGE
    seq = reg.sequence
    terms = seq.terms(count)
    payload = {"id": seq.id, "name": seq.name, "offset": seq.offset, "provenance": seq.provenance, "terms": terms}
    _emit(args, payload, ",".join(map(str, terms)))
    if len(terms) < count:
        print(f"seqlab: only {len(terms)} terms available", file=sys.stderr)
    return EXIT_OK


def _cmd_lookup(args, db) -> int:
    hits = lookup(db, args.terms)
    payload = [{"id": m.id, "position": m.position, "exact": m.exact, "low_confidence": m.low_confidence} for m in hits]
    lines = [f"{m.id}  {'prefix' if m.exact else f'at {m.position}'}  {','.join(map(str, db[m.id][:12]))}" for m in hits]
    if hits and hits[0].low_confidence:
        lines.insert(0, "(fewer than 3 terms: low confidence)")
    _emit(args, payload, "\n".join(lines) if hits else "no match")
    return EXIT_OK if hits else EXIT_NO_MATCH


def _cmd_superseek(args, db) -> int:
    hits = superseek(db, args.terms, args.max_chain)
    payload = [{"id": r.id, "chain": list(r.chain), "offset": r.offset} for r in hits]
    lines = [f"{r.id}  via {' -> '.join(r.chain) or '(direct)'}  at {r.offset}" for r in hits]
    _emit(args, payload, "\n".join(lines) if hits else "no match")
    return EXIT_OK if hits else EXIT_NO_MATCH


def _cmd_table(args) -> int:
    if args.rows is not None and args.rows < 1:
        print("seqlab: --rows must be >= 1", file=sys.stderr)
        return EXIT_USAGE
    header, data = table_data(args.name, args.rows)
    _emit(args, {"table": args.name, "header": list(header), "rows": data}, render(args.name, args.rows))
    return EXIT_OK


def _cmd_check(args, db) -> int:
    from .checks import run_checks

    results = run_checks(db, args.extended)
    payload = [{"name": r.name, "ok": r.ok, "detail": r.detail, "seconds": round(r.seconds, 3)} for r in results]
    text = "\n".join(f"{'PASS' if r.ok else 'FAIL'}  {r.name}: {r.detail} ({r.seconds:.1f}s)" for r in results)
    _emit(args, payload, text)
    return EXIT_OK if all(r.ok for r in results) else EXIT_NO_MATCH


def _cmd_db(args, db) -> int:
    sizes = sorted((len(t), i) for i, t in db.entries.items())
    payload = {"entries": len(db), "ids": sorted(db.entries)}
    text = f"{len(db)} entries"
    if sizes:
        text += f"; terms per entry {sizes[0][0]}..{sizes[-1][0]}"
    _emit(args, payload, text)
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    path = getattr(args, "path", None) or getattr(args, "db", None)
    try:
        if args.command == "gen":
            return _cmd_gen(args)
        if args.command == "table":
            return _cmd_table(args)
        db = load_db(path)
        handler = {"lookup": _cmd_lookup, "superseek": _cmd_superseek, "check": _cmd_check, "db": _cmd_db}
        return handler[args.command](args, db)
    except BudgetExceeded as exc:
        print(f"seqlab: budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (ParseError, DuplicateId, OSError) as exc:
        print(f"seqlab: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
