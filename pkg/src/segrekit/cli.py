"""Command-line front end.

Machine-readable JSON report on stdout, short human summary on stderr.
Exit codes: 0 success, 1 mathematical mismatch, 2 input error,
3 resource limit hit or result inconclusive."""

from __future__ import annotations

import argparse
import os
import sys
import time
from typing import List, Optional, Sequence

from . import ideal as ideal_mod
from .correspond import (AlgebraicMap, CorrespondenceError,
                         build_correspondence, fiber, splits_at)
from .gaussian import GaussianRational
from .ideal import ResourceLimitError
from .manifold import CRManifold, ManifoldError, levi_signature
from .parsing import ParseError, parse_poly
from .poly import VarTable
from .report import Report
from .segre import (InconclusiveError, SYMBOLIC, essential_finiteness,
                    inversion_set, minimality, segre_variety)

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_INPUT = 2
EXIT_INCONCLUSIVE = 3


class InputError(ValueError):
    pass


def parse_point(text: str) -> tuple:
    """Parse "1,0" or "1/2+1/2*i,0" into a tuple of Gaussian rationals."""
    table = VarTable.make([], conjugates=False)
    coords = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            raise InputError("empty coordinate in point " + repr(text))
        try:
            p = parse_poly(part, table)
        except ParseError as exc:
            raise InputError(f"bad coordinate {part!r}: {exc}") from exc
        coords.append(p.eval({}))
    return tuple(coords)


def _read_file(path: str) -> str:
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc


def _load_manifold(path: str, rep: Report, label: str = "manifold") -> CRManifold:
    text = _read_file(path)
    rep.add_input(label, text)
    try:
        return CRManifold.from_text(text)
    except (ParseError, ManifoldError, ValueError) as exc:
        raise InputError(f"bad manifold file {path}: {exc}") from exc


def _fmt_point(p) -> list:
    return [str(x) for x in p]


def cmd_segre(args, rep: Report) -> int:
    M = _load_manifold(args.manifold, rep)
    w = SYMBOLIC if args.symbolic else parse_point(args.point)
    if w is not SYMBOLIC and len(w) != M.n:
        raise InputError(f"point needs {M.n} coordinates")
    Q = segre_variety(M, w)
    rep.results["parameter"] = "symbolic" if args.symbolic else _fmt_point(w)
    rep.results["generators"] = sorted(str(g) for g in Q.ideal.generators)
    return EXIT_OK


def cmd_essfin(args, rep: Report) -> int:
    M = _load_manifold(args.manifold, rep)
    w = parse_point(args.point)
    if len(w) != M.n:
        raise InputError(f"point needs {M.n} coordinates")
    inv = inversion_set(M, w)
    rep.excluded.extend(sorted(str(e) for e in inv.excluded))
    finite, deg = essential_finiteness(M, w)
    rep.results["point"] = _fmt_point(w)
    rep.results["essentially_finite"] = finite
    rep.results["degree"] = deg
    rep.notes.append("degree counts the full inversion variety, "
                     "not a selected component")
    return EXIT_OK


def cmd_minimal(args, rep: Report) -> int:
    M = _load_manifold(args.manifold, rep)
    p = parse_point(args.point)
    if len(p) != M.n:
        raise InputError(f"point needs {M.n} coordinates")
    minimal, j = minimality(M, p, j_max=args.jmax)
    rep.results["point"] = _fmt_point(p)
    rep.results["minimal"] = minimal
    rep.results["index"] = j
    return EXIT_OK


def cmd_levi(args, rep: Report) -> int:
    M = _load_manifold(args.manifold, rep)
    p = parse_point(args.point)
    if len(p) != M.n:
        raise InputError(f"point needs {M.n} coordinates")
    conormal = [x for x in args.conormal.split(",")]
    try:
        from fractions import Fraction
        c = [Fraction(x.strip()) for x in conormal]
    except ValueError as exc:
        raise InputError(f"bad conormal {args.conormal!r}: {exc}") from exc
    lev = levi_signature(M, p, c)
    rep.results["point"] = _fmt_point(p)
    rep.results["conormal"] = [str(x) for x in c]
    rep.results["signature"] = list(lev.signature)
    rep.results["mixed"] = lev.mixed
    return EXIT_OK


def cmd_correspond(args, rep: Report) -> int:
    M = _load_manifold(args.source, rep, "source")
    Mp = _load_manifold(args.target, rep, "target")
    map_text = _read_file(args.map)
    rep.add_input("map", map_text)
    try:
        f = AlgebraicMap.from_text(map_text, M)
    except (ParseError, ValueError) as exc:
        raise InputError(f"bad map file {args.map}: {exc}") from exc
    C = build_correspondence(M, Mp, f)
    rep.excluded.extend(sorted(str(e) for e in C.excluded))
    rep.results["graph_generators"] = sorted(str(g) for g in C.graph.generators)
    if args.fiber is not None:
        w = parse_point(args.fiber)
        want = Mp.n if args.reverse else M.n
        if len(w) != want:
            raise InputError(f"fiber point needs {want} coordinates")
        res = fiber(C, w, reverse=args.reverse)
        key = "reverse_fiber" if args.reverse else "forward_fiber"
        rep.results[key + "_point"] = _fmt_point(w)
        rep.results[key + "_degree"] = res.degree
        if res.solutions is not None:
            rep.results[key + "_solutions"] = [
                {"point": _fmt_point(pt), "multiplicity": m}
                for pt, m in res.solutions]
        if args.splits and not args.reverse:
            rep.results["splits"] = splits_at(C, w)
    return EXIT_OK


def cmd_suite(args, rep: Report) -> int:
    from .catalog import load_catalog, run_suite

    catalog = load_catalog()
    if args.all:
        names = sorted(catalog)
    else:
        if args.entry is None:
            raise InputError("give a catalog entry name or --all")
        if args.entry not in catalog:
            raise InputError(f"unknown catalog entry {args.entry!r}; "
                             f"known: {', '.join(sorted(catalog))}")
        names = [args.entry]
    all_ok = True
    for name in names:
        srep = run_suite(catalog[name], seed=rep.seed)
        rep.results[name] = {
            "ok": srep.ok,
            "checks": {c.name: {"ok": c.ok, "detail": c.detail}
                       for c in srep.checks},
        }
        all_ok = all_ok and srep.ok
    rep.results["all_ok"] = all_ok
    return EXIT_OK if all_ok else EXIT_MISMATCH


def _env_int(name: str, fallback) -> int:
    val = os.environ.get(name)
    return int(val) if val is not None else fallback


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="segrekit",
        description="Exact Segre-variety computations for real-algebraic "
                    "CR manifolds.")
    ap.add_argument("--seed", type=int,
                    default=_env_int("SEGREKIT_SEED", 0),
                    help="seed for all randomized sampling (default 0)")
    ap.add_argument("--max-degree", type=int,
                    default=_env_int("SEGREKIT_MAX_DEGREE", None),
                    help="cap on intermediate polynomial degree")
    ap.add_argument("--max-basis", type=int,
                    default=_env_int("SEGREKIT_MAX_BASIS", None),
                    help="cap on Groebner basis size")
    sub = ap.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("segre", help="Segre variety of a manifold at a point")
    p.add_argument("manifold")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--point", help="comma-separated Gaussian rationals")
    g.add_argument("--symbolic", action="store_true")
    p.set_defaults(func=cmd_segre)

    p = sub.add_parser("essfin", help="essential finiteness at a point")
    p.add_argument("manifold")
    p.add_argument("--point", required=True)
    p.set_defaults(func=cmd_essfin)

    p = sub.add_parser("minimal", help="minimality via iterated Segre sets")
    p.add_argument("manifold")
    p.add_argument("--point", required=True)
    p.add_argument("--jmax", type=int, default=None)
    p.set_defaults(func=cmd_minimal)

    p = sub.add_parser("levi", help="exact Levi signature at a point")
    p.add_argument("manifold")
    p.add_argument("--point", required=True)
    p.add_argument("--conormal", default="1",
                   help="comma-separated rational coefficients")
    p.set_defaults(func=cmd_levi)

    p = sub.add_parser("correspond",
                       help="build the graph correspondence of a map")
    p.add_argument("source")
    p.add_argument("target")
    p.add_argument("map")
    p.add_argument("--fiber", help="point whose fiber to compute")
    p.add_argument("--reverse", action="store_true",
                   help="fiber over a target point instead")
    p.add_argument("--splits", action="store_true",
                   help="also decide splitting at the fiber point")
    p.set_defaults(func=cmd_correspond)

    p = sub.add_parser("suite", help="verify bundled catalog entries")
    p.add_argument("entry", nargs="?")
    p.add_argument("--all", action="store_true")
    p.set_defaults(func=cmd_suite)
    return ap


def main(argv: Optional[Sequence[str]] = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code not in (0, None) else 0
    if args.max_degree is not None:
        ideal_mod.DEFAULT_LIMITS.max_degree = args.max_degree
    if args.max_basis is not None:
        ideal_mod.DEFAULT_LIMITS.max_basis = args.max_basis
    rep = Report(command=args.cmd, seed=args.seed)
    rep.limits = {"max_degree": ideal_mod.DEFAULT_LIMITS.max_degree,
                  "max_basis": ideal_mod.DEFAULT_LIMITS.max_basis}
    start = time.monotonic()
    try:
        code = args.func(args, rep)
    except InputError as exc:
        rep.status = "input-error: " + str(exc)
        rep.emit(time.monotonic() - start)
        return EXIT_INPUT
    except ResourceLimitError as exc:
        rep.status = "resource-limit"
        rep.results["limit_stats"] = exc.stats
        rep.emit(time.monotonic() - start)
        return EXIT_INCONCLUSIVE
    except InconclusiveError as exc:
        rep.status = "inconclusive: " + str(exc)
        rep.emit(time.monotonic() - start)
        return EXIT_INCONCLUSIVE
    except (ManifoldError, CorrespondenceError) as exc:
        rep.status = "input-error: " + str(exc)
        rep.emit(time.monotonic() - start)
        return EXIT_INPUT
    if code != EXIT_OK:
        rep.status = "mismatch"
    rep.emit(time.monotonic() - start)
    return code


if __name__ == "__main__":
    sys.exit(main())
