"""Command-line front end.

    lassolink parse       --input FILE | --catalog NAME
    lassolink invariants  [--input FILE | --catalog NAME | --log FILE]
    lassolink transform   (--catalog NAME | --input FILE | --log FILE) MOVES...
    lassolink bounds      [... ] [--budget N]
    lassolink verify      [--budget N]
    lassolink catalog

Exit codes: 0 success, 1 parse/validation error, 2 move precondition failed.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import catalog as cat
from .diagram import DiagramError, UnknownCrossing, components
from .laurent import format_poly
from .moves import LogError, MoveError, TransformLog, anti_lasso
from .pdparse import PDSyntaxError, PDValidationError, parse_pd, parse_pd_file, serialize_pd
from .skein import alexander, conway
from .splitting import (
    BoundRuleInapplicable,
    Bound,
    SplitBounds,
    THEOREM_UPPER,
    diagram_bounds,
    is_algebraically_completely_splittable,
    linking_matrix,
    merge,
    split_bounds_from_log,
    warp_linking_degree,
)
from .verify import run_all


class InputError(Exception):
    pass


class _MoveAction(argparse.Action):
    """Collects moves in command-line order."""

    def __call__(self, parser, namespace, values, option_string=None):
        moves = getattr(namespace, "moves", None) or []
        moves.append((self.dest, values))
        namespace.moves = moves


def _value(v) -> str:
    if isinstance(v, bool):
        return str(v).lower()
    if isinstance(v, (list, dict)):
        return json.dumps(v, separators=(",", ":"))
    return str(v)


def emit(record: dict, as_json: bool, out=None):
    out = out or sys.stdout
    if as_json:
        out.write(json.dumps(record, indent=2) + "\n")
        return
    for k, v in record.items():
        out.write(f"{k}={_value(v)}\n")


def _load_log(path: str) -> TransformLog:
    with open(path, encoding="utf-8") as fh:
        return TransformLog.from_text(fh.read())


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def resolve(args, allow_log=True):
    """Returns (diagram, catalog name or None, log or None)."""
    if allow_log and args.log and os.path.exists(args.log):
        log = _load_log(args.log)
        return log.current, None if log.steps else log.base_name, log
    if args.catalog:
        return cat.catalog(args.catalog), cat.entry(args.catalog).name, None
    diagrams = parse_pd_file(_read_input(args.input or "-"))
    if not diagrams:
        raise InputError("no PD code in input")
    return diagrams[0], None, None


def invariants_record(d, name=None) -> dict:
    lk = linking_matrix(d)
    nabla = conway(d)
    rec = {}
    if name:
        rec["name"] = name
    rec.update(
        pd=serialize_pd(d),
        crossings=len(d.crossings),
        components=len(components(d)),
        conway=format_poly(nabla, "z"),
        alexander=format_poly(alexander(d), "t"),
        linking_matrix=lk.as_lists(),
        lasso_budget=lk.lasso_budget,
        algebraically_completely_splittable=is_algebraically_completely_splittable(d),
        ld=warp_linking_degree(d),
    )
    if name:
        notes = cat.entry(name).notes
        if notes:
            rec["note"] = "; ".join(notes)
    return rec


def cmd_parse(args):
    text = _read_input(args.input) if args.input else None
    diagrams = parse_pd_file(text) if text is not None else [resolve(args, allow_log=False)[0]]
    for d in diagrams:
        emit({"pd": serialize_pd(d), "crossings": len(d.crossings), "components": len(components(d))}, args.json)
    return 0


def cmd_invariants(args):
    d, name, _ = resolve(args)
    emit(invariants_record(d, name), args.json)
    return 0


def cmd_transform(args):
    if args.log and os.path.exists(args.log):
        log = _load_log(args.log)
    else:
        d, name, _ = resolve(args, allow_log=False)
        log = TransformLog(d, (), name)
    for kind, value in args.moves or []:
        if kind == "lasso":
            log = log.lasso(value)
        elif kind == "component_lasso":
            log = log.component_lasso(value)
        elif kind == "change":
            log = log.change(value)
        else:
            log = anti_lasso(log, value)
    if args.log:
        with open(args.log, "w", encoding="utf-8") as fh:
            fh.write(log.to_text())
    created = [rec.created for rec in log.records if rec.created is not None]
    emit(
        {
            "pd": serialize_pd(log.current),
            "components": len(components(log.current)),
            "r": log.r,
            "s": log.s,
            "created": created,
            "log": [f"{s.kind} {s.crossing}" for s in log.steps],
        },
        args.json,
    )
    return 0


def bounds_record(d, log, budget) -> dict:
    direct = diagram_bounds(d, budget)
    rec = {}
    if log is not None and log.steps:
        base = diagram_bounds(log.base, budget)
        try:
            bounds = merge(split_bounds_from_log(log, base), direct)
        except BoundRuleInapplicable as exc:
            rec["note"] = f"lasso lower-bound rule inapplicable: {exc}"
            moved = Bound(len(log.steps) + base.upper.value, THEOREM_UPPER)
            bounds = direct if direct.upper.value <= moved.value else SplitBounds(direct.lower, moved)
        rec.update(r=log.r, s=log.s)
    else:
        bounds = direct
    rec.update(bounds.as_dict())
    rec["summary"] = str(bounds)
    return rec


def cmd_bounds(args):
    d, _, log = resolve(args)
    emit(bounds_record(d, log, args.budget), args.json)
    return 0


def cmd_verify(args):
    checks = run_all(args.budget)
    suites = {}
    for ch in checks:
        passed, failed = suites.get(ch.suite, (0, 0))
        suites[ch.suite] = (passed + ch.ok, failed + (not ch.ok))
    rec = {}
    for name, (passed, failed) in suites.items():
        rec[name] = f"passed={passed} failed={failed}"
    failures = [f"{c.suite}:{c.case} {c.detail}".strip() for c in checks if not c.ok]
    rec["failures"] = failures
    rec["ok"] = not failures
    emit(rec, args.json)
    return 0 if not failures else 1


def cmd_catalog(args):
    rows = [
        {"name": e.name, "components": e.n_components, "crossings": e.max_crossings, "conway": e.conway}
        for e in cat.ENTRIES
    ]
    if args.json:
        emit({"links": rows}, True)
    else:
        for r in rows:
            sys.stdout.write("\t".join(f"{k}={v}" for k, v in r.items()) + "\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="lassolink", description=__doc__.splitlines()[0] if __doc__ else None)
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, budget=False):
        src = sp.add_mutually_exclusive_group()
        src.add_argument("--input", help="PD file ('-' for stdin)")
        src.add_argument("--catalog", help="catalog link name")
        sp.add_argument("--log", help="transform log sidecar file")
        sp.add_argument("--json", action="store_true", help="machine-readable output")
        if budget:
            sp.add_argument("--budget", type=int, default=2, help="crossing-change search size")

    common(sub.add_parser("parse", help="validate and echo canonical PD"))
    common(sub.add_parser("invariants", help="Conway, Alexander, linking matrix, ld"))
    t = sub.add_parser("transform", help="apply lassoings and crossing changes")
    common(t)
    for flag, dest in (
        ("--lasso", "lasso"),
        ("--component-lasso", "component_lasso"),
        ("--change", "change"),
        ("--anti-lasso", "anti_lasso"),
    ):
        t.add_argument(flag, dest=dest, type=int, action=_MoveAction, metavar="N")
    common(sub.add_parser("bounds", help="complete splitting number bounds"), budget=True)
    v = sub.add_parser("verify", help="run property suites")
    v.add_argument("--budget", type=int, default=3)
    v.add_argument("--json", action="store_true")
    c = sub.add_parser("catalog", help="list fixture links")
    c.add_argument("--json", action="store_true")
    return p


COMMANDS = {
    "parse": cmd_parse,
    "invariants": cmd_invariants,
    "transform": cmd_transform,
    "bounds": cmd_bounds,
    "verify": cmd_verify,
    "catalog": cmd_catalog,
}


def run(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (PDSyntaxError, PDValidationError, DiagramError, LogError, InputError, cat.UnknownLink, OSError) as exc:
        if isinstance(exc, UnknownCrossing):
            print(f"error: {exc}", file=sys.stderr)
            return 2
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except MoveError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main():
    sys.exit(run())
