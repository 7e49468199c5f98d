"""Command line front end: ``thetarank <subcommand> ...``.

Output is JSON lines by default and tab-separated with ``--format tsv``.
Exit status is 0 on success, 1 for a domain error (reported as a JSON
object on stdout) and 2 for unparseable input or bad usage.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Iterable

from .branching import induced_set, successors
from .correspondence import CalibrationError, PairCase, underline_theta_full
from .datum import OrthoSympDatum, datum_from_json, datum_to_json, theta_rank_datum
from .families import (FamilyError, GroupFamily, Kind, UnipotentChar, enumerate_unipotent,
                       parse_family)
from .symbols import Symbol, SymbolError, defect, normalize, rank, rank_u, upsilon
from .theta import TOWERS, Tower, World, first_occurrence, theta_rank_char, theta_rank_symbol
from .verify import SUITES, run_suite
from .witnesses import witness_symbol

__all__ = ["main", "build_parser"]


class UsageError(Exception):
    """Bad input that should exit with status 2."""

    def __init__(self, message: str, token: str | None = None):
        super().__init__(message)
        self.token = token


def _emit(rows: Iterable[dict], fmt: str, out) -> None:
    rows = list(rows)
    if fmt == "tsv":
        if not rows:
            return
        keys = list(rows[0])
        out.write("\t".join(keys) + "\n")
        for row in rows:
            out.write("\t".join(_cell(row.get(k)) for k in keys) + "\n")
    else:
        for row in rows:
            out.write(json.dumps(row, ensure_ascii=False, separators=(",", ":")) + "\n")


def _cell(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if v is None:
        return ""
    if isinstance(v, (list, dict)):
        return json.dumps(v, ensure_ascii=False, separators=(",", ":"))
    return str(v)


def _symbol(text: str) -> Symbol:
    return Symbol.parse(text)


def _kind(text: str) -> Kind:
    try:
        return Kind(text.strip().lower())
    except ValueError:
        raise SymbolError(f"unknown family kind {text!r}", text) from None


def _char(family: GroupFamily, s: Symbol, sgn: bool) -> UnipotentChar:
    return UnipotentChar(family, s, sgn)


def _char_row(c: UnipotentChar, with_theta: bool = True) -> dict:
    row = {"family": str(c.family), "symbol": str(c.symbol), "sgn": c.sgn_flag}
    if with_theta:
        row["theta_rank"] = theta_rank_char(c)
    return row


# -- subcommands --------------------------------------------------------------

def cmd_rank(args) -> list[dict]:
    s = _symbol(args.symbol)
    b = upsilon(s)
    return [{"input": args.symbol, "symbol": str(normalize(s)), "rank": rank(s), "defect": defect(s),
             "rank_u": rank_u(s), "upsilon": [list(b.top), list(b.bottom)]}]


def cmd_theta_rank(args) -> list[dict]:
    s = _symbol(args.symbol)
    if args.family:
        c = _char(parse_family(args.family), s, args.sgn)
        return [{"input": args.symbol, "family": str(c.family), "theta_rank": theta_rank_char(c)}]
    world = World(args.world)
    return [{"input": args.symbol, "world": world.value, "theta_rank": theta_rank_symbol(world, s)}]


def cmd_theta_rank_general(args) -> list[dict]:
    if args.datum == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(args.datum, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise UsageError(f"cannot read datum file: {exc.strerror}", args.datum) from None
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        token = text[exc.pos:exc.pos + 10] or "<end of input>"
        raise UsageError(f"invalid JSON at position {exc.pos}", token) from None
    d = datum_from_json(payload)
    out = {"datum": datum_to_json(d), "theta_rank": theta_rank_datum(d)}
    if isinstance(d, OrthoSympDatum):
        out["n_zero"] = d.n_zero
    return [out]


def cmd_enumerate(args) -> list[dict]:
    fam = parse_family(args.family)
    with_theta = args.with_ == "theta-rank"
    return [_char_row(c, with_theta) for c in enumerate_unipotent(fam)]


def cmd_first_occurrence(args) -> list[dict]:
    fam = parse_family(args.family)
    try:
        tower = Tower(args.tower)
    except ValueError:
        raise SymbolError(f"unknown tower {args.tower!r}", args.tower) from None
    if tower not in TOWERS[fam.kind]:
        raise FamilyError(f"tower {tower.value} does not start from {fam.kind.value}")
    c = _char(fam, _symbol(args.symbol), args.sgn)
    return [{"input": args.symbol, "family": str(fam), "tower": tower.value,
             "dimension": first_occurrence(c, tower)}]


def cmd_underline_theta(args) -> list[dict]:
    try:
        case = PairCase(args.case.upper())
    except ValueError:
        raise SymbolError(f"unknown pair case {args.case!r}", args.case) from None
    img = underline_theta_full(case, _symbol(args.symbol), args.target)
    return [{"input": args.symbol, "case": case.value, "target": args.target,
             "lambda": str(img.symbol), "tau": img.tau, "defect": img.defect}]


def cmd_branch(args) -> list[dict]:
    fam = parse_family(args.family)
    c = _char(fam, _symbol(args.symbol), args.sgn)
    if args.steps < 0:
        raise FamilyError("--steps must be non-negative")
    if args.steps == 1:
        layer = successors(c)
    else:
        step = 2 if fam.kind is Kind.U else 1
        layer = induced_set(c, fam.n + step * args.steps)
    source = theta_rank_char(c)
    rows = []
    for x in layer:
        row = _char_row(x)
        row["jump"] = row["theta_rank"] - source
        rows.append(row)
    return [{"input": args.symbol, "family": str(fam), "theta_rank": source,
             "steps": args.steps, "successors": rows}]


def cmd_witness(args) -> list[dict]:
    text = args.family
    if ":" in text:
        fam = parse_family(text)
        kind, n = fam.kind, fam.n if args.n is None else args.n
    else:
        kind, n = _kind(text), args.n
    if n is None:
        raise UsageError("witness needs -n (or a family literal like sp:3)", "-n")
    w = witness_symbol(kind, n, args.k)
    if isinstance(w, UnipotentChar):
        payload = {"kind": "unipotent", "symbol": str(w.symbol), "sgn": w.sgn_flag}
        got = theta_rank_char(w)
    else:
        payload = {"kind": "datum", **datum_to_json(w)}
        got = theta_rank_datum(w)
    return [{"input": {"family": kind.value, "n": n, "k": args.k},
             "family": f"{kind.value}:{n}", "theta_rank": got, "witness": payload}]


def cmd_tables(args) -> list[dict]:
    kind = _kind(args.family.partition(":")[0])
    rows = []
    for n in range(args.max_n + 1):
        for c in enumerate_unipotent(GroupFamily(kind, n)):
            row = _char_row(c)
            for tower in TOWERS[kind]:
                row[tower.value] = first_occurrence(c, tower)
            rows.append(row)
    return rows


def cmd_verify(args) -> tuple[list[dict], bool]:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    for name in names:
        if name not in SUITES:
            raise UsageError(f"unknown suite {name!r}", name)
    reports = [run_suite(name, args.max_rank) for name in names]
    rows = [r.to_dict() for r in reports]
    if args.format == "tsv":
        rows = [{"suite": r["suite"], "passed": r["passed"], "cases": r["cases"],
                 "failure_count": r["failure_count"], "wall_time": r["wall_time"],
                 "bounds": r["bounds"]} for r in rows]
    return rows, all(r.passed for r in reports)


# -- parser -------------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="thetarank", description="Θ-rank of characters of finite classical groups.")
    p.add_argument("--format", choices=("json", "tsv"), default="json")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, fn, help_text):
        sp = sub.add_parser(name, help=help_text)
        sp.set_defaults(fn=fn)
        sp.add_argument("--format", choices=("json", "tsv"), default=argparse.SUPPRESS)
        return sp

    sp = add("rank", cmd_rank, "rank, defect, rank_U and Υ of a symbol")
    sp.add_argument("symbol")

    sp = add("theta-rank", cmd_theta_rank, "Θ-rank of a unipotent symbol")
    sp.add_argument("symbol")
    sp.add_argument("--world", choices=("spo", "u"), default="spo")
    sp.add_argument("--family", help="family literal; overrides --world and checks membership")
    sp.add_argument("--sgn", action="store_true", help="sign twist (odd orthogonal only)")

    sp = add("theta-rank-general", cmd_theta_rank_general, "Θ-rank of a Lusztig datum (JSON)")
    sp.add_argument("--datum", required=True, help="JSON file, or - for stdin")

    sp = add("enumerate", cmd_enumerate, "unipotent characters of a family")
    sp.add_argument("--family", required=True)
    sp.add_argument("--with", dest="with_", choices=("theta-rank", "none"), default="none")

    sp = add("first-occurrence", cmd_first_occurrence, "first occurrence in a Witt tower")
    sp.add_argument("symbol")
    sp.add_argument("--family", required=True)
    sp.add_argument("--tower", required=True, help=", ".join(t.value for t in Tower))
    sp.add_argument("--sgn", action="store_true")

    sp = add("underline-theta", cmd_underline_theta, "symbol-level theta image")
    sp.add_argument("symbol")
    sp.add_argument("--case", required=True, help="I, II, III or IV")
    sp.add_argument("--target", required=True, type=int, help="target rank (Sp/O) or dimension (U)")

    sp = add("branch", cmd_branch, "Witt-tower successors with Θ-ranks")
    sp.add_argument("symbol")
    sp.add_argument("--family", required=True)
    sp.add_argument("--steps", type=int, default=1)
    sp.add_argument("--sgn", action="store_true")

    sp = add("witness", cmd_witness, "a character of prescribed Θ-rank")
    sp.add_argument("--family", required=True, help="kind (sp, o+, o-, oodd, u) or family literal")
    sp.add_argument("-n", type=int)
    sp.add_argument("-k", type=int, required=True)

    sp = add("verify", cmd_verify, "run verification suites")
    sp.add_argument("--suite", default="all", help="all or one of: " + ", ".join(SUITES))
    sp.add_argument("--max-rank", type=int, default=None)

    sp = add("tables", cmd_tables, "Θ-rank and first-occurrence table for a family")
    sp.add_argument("--family", required=True, help="kind, e.g. sp or sp:4")
    sp.add_argument("--max-n", type=int, default=6)
    return p


def main(argv: list[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        result = args.fn(args)
        ok = True
        if isinstance(result, tuple):
            result, ok = result
        _emit(result, args.format, out)
        return 0 if ok else 1
    except (UsageError, SymbolError) as exc:
        token = getattr(exc, "token", None)
        suffix = f" (offending token: {token!r})" if token is not None else ""
        err.write(f"thetarank: error: {exc}{suffix}\n")
        return 2
    except (FamilyError, CalibrationError) as exc:
        out.write(json.dumps({"error": type(exc).__name__, "message": str(exc)},
                             ensure_ascii=False) + "\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
