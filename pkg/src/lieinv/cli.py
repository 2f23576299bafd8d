"""Command-line front end."""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .algebra import dump_algebra, load_algebra, validate
from .catalog import ENTRIES, catalog_get
from .classify import identify
from .contract import (GradedSetup, contraction_criteria, decide_contraction3,
                       decide_contraction_jordan2, format_scan, graded_apply,
                       limit_contraction, scan3, scan_jordan2)
from .errors import LieInvError, ParseError
from .functions import invariant_function, render_table
from .invariants import inv_tuple

SYMBOLS = {"psi": "ψ", "psi0": "ψ⁰", "phi": "φ", "phi0": "φ⁰"}


class UsageError(Exception):
    pass


def _threads():
    raw = os.environ.get("LIEINV_THREADS", "").strip()
    if not raw:
        return 1
    try:
        n = int(raw)
    except ValueError:
        raise UsageError(f"LIEINV_THREADS must be a positive integer, got {raw!r}") from None
    if n < 1:
        raise UsageError("LIEINV_THREADS must be at least 1")
    return n


def _params(pairs):
    out = {}
    for p in pairs or []:
        if "=" not in p:
            raise UsageError(f"--param expects k=v, got {p!r}")
        k, v = p.split("=", 1)
        out[k.strip()] = v.strip()
    return out


def _read_json(path):
    try:
        return json.loads(Path(path).read_text(encoding="utf-8"))
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path} is not valid JSON: {exc.msg}") from None


def _algebra(arg, params=None):
    """A JSON file, or a catalog label when no such file exists."""
    if Path(arg).is_file():
        return load_algebra(_read_json(arg), params or None)
    return catalog_get(arg, params or None)


def _emit(args, text, data):
    if args.format == "json":
        print(json.dumps(data, ensure_ascii=False, indent=2, sort_keys=True))
    else:
        print(text)


def _bracket_text(sc):
    rows = sc.brackets()
    if not rows:
        return "abelian"
    op = "[{}, {}] = {}" if sc.kind == "lie" else "{} ∘ {} = {}"
    return "\n".join(op.format(*r) for r in rows)


# ---------------------------------------------------------------------------
# commands


def cmd_check(args):
    if not Path(args.file).is_file():
        raise UsageError(f"no such file: {args.file}")
    sc = load_algebra(_read_json(args.file), _params(args.param) or None, check=False)
    rep = validate(sc)
    data = {"valid": rep.ok, "kind": sc.kind, "dim": sc.dim,
            "violations": [[k, list(idx)] for k, idx in rep.violations]}
    text = f"{'valid' if rep.ok else 'invalid'} {sc.kind} algebra, dim {sc.dim}"
    if not rep.ok:
        text += "".join(f"\n  {k} fails at {tuple(idx)}" for k, idx in rep.violations[:10])
    _emit(args, text, data)
    return 0


def cmd_inv(args):
    t = inv_tuple(_algebra(args.file, _params(args.param)))
    _emit(args, str(t), t.to_json())
    return 0


def cmd_fun(args):
    f = invariant_function(_algebra(args.file, _params(args.param)), args.which)
    data = dict(f.to_json(), which=args.which)
    _emit(args, render_table(f, SYMBOLS[args.which]), data)
    return 0


def cmd_identify(args):
    r = identify(_algebra(args.file, _params(args.param)))
    _emit(args, str(r), r.to_json())
    return 0


def cmd_contract(args):
    workers = _threads()
    if args.scan3 or args.scan_jordan2:
        if args.source or args.target:
            raise UsageError("--scan3/--scan-jordan2 take no algebra arguments")
        rows = scan3(workers=workers) if args.scan3 else scan_jordan2(workers=workers)
        data = [dict(v.to_json(), source=s, target=t) for s, t, v in rows]
        _emit(args, format_scan(rows), data)
        return 0
    if not (args.source and args.target):
        raise UsageError("contract needs FROM and TO, or --scan3 / --scan-jordan2")
    params = _params(args.param)
    l, l0 = _algebra(args.source, params), _algebra(args.target, params)
    if args.criteria_only:
        v = contraction_criteria(l, l0)
    elif l.kind == "lie" and l.dim == 3:
        v = decide_contraction3(l, l0)
    elif l.kind == "jordan" and l.dim == 2:
        v = decide_contraction_jordan2(l, l0)
    else:
        v = contraction_criteria(l, l0)
    _emit(args, str(v), v.to_json())
    return 0


def cmd_graded(args):
    host = _algebra(args.host, _params(args.param))
    setup = GradedSetup.from_json(_read_json(args.setup), host)
    out = graded_apply(host, setup)
    _emit(args, _bracket_text(out), out.to_dict())
    return 0


def cmd_limit(args):
    sc = _algebra(args.file, _params(args.param))
    u = _read_json(args.umatrix)
    if isinstance(u, dict):
        u = u.get("U") or u.get("matrix")
    if not isinstance(u, list):
        raise ParseError("UMATRIX must be a JSON matrix of rational-function texts")
    out = limit_contraction(sc, u)
    _emit(args, _bracket_text(out), out.to_dict())
    return 0


def cmd_catalog(args):
    if args.get:
        sc = catalog_get(args.get, _params(args.param) or None)
        if args.format == "json":
            print(dump_algebra(sc))
        else:
            print(f"{sc.name} ({sc.kind}, dim {sc.dim})\n{_bracket_text(sc)}")
        return 0
    rows = [{"label": e.label, "name": e.name, "dim": e.dim, "kind": e.kind,
             "parameters": list(e.params)} for e in ENTRIES]
    width = max(len(r["label"]) for r in rows)
    text = "\n".join(f"{r['label'].ljust(width)}  {r['name']}" for r in rows)
    _emit(args, text, rows)
    return 0


# ---------------------------------------------------------------------------


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--param", action="append", metavar="K=V",
                        help="parameter value for a catalog label or a parametrized file")
    p = argparse.ArgumentParser(prog="lieinv",
                                description="Invariant functions of small Lie and Jordan algebras.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("check", parents=[common], help="validate an algebra file")
    s.add_argument("file")
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("inv", parents=[common], help="series dimensions, tau and derivation dimensions")
    s.add_argument("file")
    s.set_defaults(func=cmd_inv)

    s = sub.add_parser("fun", parents=[common], help="table of an invariant function")
    s.add_argument("--which", choices=tuple(SYMBOLS), default="psi")
    s.add_argument("file")
    s.set_defaults(func=cmd_fun)

    s = sub.add_parser("identify", parents=[common], help="name a 3- or 4-dim Lie or small Jordan algebra")
    s.add_argument("file")
    s.set_defaults(func=cmd_identify)

    s = sub.add_parser("contract", parents=[common], help="contraction criteria and decisions")
    s.add_argument("source", nargs="?", metavar="FROM")
    s.add_argument("target", nargs="?", metavar="TO")
    s.add_argument("--criteria-only", action="store_true")
    g = s.add_mutually_exclusive_group()
    g.add_argument("--scan3", action="store_true")
    g.add_argument("--scan-jordan2", action="store_true")
    s.set_defaults(func=cmd_contract)

    s = sub.add_parser("graded", parents=[common], help="apply a graded contraction")
    s.add_argument("host")
    s.add_argument("setup")
    s.set_defaults(func=cmd_graded)

    s = sub.add_parser("limit", parents=[common], help="limit of U(ε)-transformed brackets as ε → 0")
    s.add_argument("file")
    s.add_argument("umatrix")
    s.set_defaults(func=cmd_limit)

    s = sub.add_parser("catalog", parents=[common], help="list or print catalog entries")
    g = s.add_mutually_exclusive_group()
    g.add_argument("--list", action="store_true")
    g.add_argument("--get", metavar="LABEL")
    s.set_defaults(func=cmd_catalog)
    return p


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"lieinv: {exc}", file=sys.stderr)
        return 2
    except LieInvError as exc:
        if args.format == "json":
            print(json.dumps(exc.to_json(), ensure_ascii=False, sort_keys=True))
        else:
            print(f"lieinv: {exc}", file=sys.stderr)
        return 1


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
