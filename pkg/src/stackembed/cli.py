"""Command-line front end.

Reports go to stdout as JSON (CSV where asked); summaries and the run
manifest go to stderr.  Exit codes: 0 ok, 1 violations, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from collections import Counter
from importlib.metadata import PackageNotFoundError, version
from pathlib import Path
from typing import Optional, Sequence

from . import bounds as bnd
from . import verify as ver
from .embed import decide_embed_free, random_drawing, render_svg
from .family import FamilyError, family_parameters, family_size, graph_at
from .gadgets import FAMILY_SEVEN, FAMILY_THREE, CatalogError, load_catalog
from .iso import iso_histogram, write_histogram_csv
from .pointsets import OrderTypeError, points_from_json, trial_rng

EXIT_OK, EXIT_VIOLATIONS, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _version() -> str:
    try:
        return version("artifact")
    except PackageNotFoundError:
        return "unknown"


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj, indent=2, sort_keys=True) + "\n")


def _say(msg: str) -> None:
    print(msg, file=sys.stderr)


def cmd_params(args) -> tuple[int, dict]:
    spec = family_parameters(args.n)
    sys.stdout.write(spec.to_json() + "\n")
    return EXIT_OK, {"F1": spec.F1, "F2": spec.F2, "k": list(spec.k)}


def cmd_verify(args) -> tuple[int, dict]:
    cat = load_catalog(args.catalog)
    check = args.check
    if check in ("lemma7", "lemma8"):
        fam = FAMILY_THREE if check == "lemma7" else FAMILY_SEVEN
        limit = None if (args.exhaustive or args.otypes is None) else args.trials
        rep = ver.gadget_lemma(fam, args.trials, args.seed, args.extent, args.otypes, args.width, args.endian, limit, cat)
    elif check == "embedder":
        rep = ver.embedder_agreement(args.max_size, args.sets, args.seed)
    elif check == "apex":
        rep = ver.apex_uniqueness(args.trials, args.seed, args.max_interior)
    elif check == "degrees":
        rep = ver.degree_separation(args.n or 238, args.trials, args.seed, cat)
    else:
        rep = ver.catalog_check(cat)
    _emit(rep)
    _say(f"{check}: {rep['trials']} trials, {rep['skipped']} skipped, {rep['violations']} violations")
    return (EXIT_VIOLATIONS if rep["violations"] else EXIT_OK), {k: rep[k] for k in ("trials", "skipped", "violations", "max_embeddable")}


def cmd_conflict(args) -> tuple[int, dict]:
    cat = load_catalog(args.catalog)
    try:
        rep = ver.conflict_search(args.n, args.trials, args.seed, args.extent, args.cap, cat)
    except ver.EnumerationCapError as e:
        raise UsageError(str(e)) from None
    _emit(rep)
    _say(f"conflict n={args.n}: max embeddable {rep['max_embeddable']} of {rep['family_size']} (bound {rep['exact_upper']})")
    return (EXIT_VIOLATIONS if rep["violations"] else EXIT_OK), {"max_embeddable": rep["max_embeddable"], "violations": rep["violations"]}


def cmd_bounds(args) -> tuple[int, dict]:
    if args.range:
        lo, hi = args.range
        if lo < 22 or hi < lo:
            raise UsageError("range must satisfy 22 <= A <= B")
        ns = range(lo, hi + 1)
        if args.csv:
            bnd.write_bounds_csv(ns, sys.stdout)
        else:
            _emit([bnd.bounds_report(n).to_dict() for n in ns])
        bad = [n for n in ns if n >= 238 and not bnd.exact_upper_le_theorem(n)]
        return (EXIT_VIOLATIONS if bad else EXIT_OK), {"violations": len(bad)}
    if args.n is None:
        raise UsageError("give --n or --range")
    r = bnd.bounds_report(args.n)
    _emit(r.to_dict())
    _say(f"n={args.n}: exact_upper <= theorem_upper: {r.exact_le_theorem}")
    ok = r.exact_le_theorem or args.n < 238
    return (EXIT_OK if ok else EXIT_VIOLATIONS), {"exact_le_theorem": r.exact_le_theorem}


def cmd_corollary(args) -> tuple[int, dict]:
    c = bnd.corollary_ratio(args.tol)
    out = {"ratio": c, "rounded": round(c, 3), "residual": bnd.ratio_equation(c), "tolerance": args.tol}
    _emit(out)
    return EXIT_OK, out


def cmd_iso(args) -> tuple[int, dict]:
    cat = load_catalog(args.catalog)
    spec = family_parameters(args.n)
    size = family_size(spec)
    if size > args.cap:
        raise UsageError(f"family of size {size} exceeds enumeration cap {args.cap}")
    hist = iso_histogram(graph_at(spec, cat, i) for i in range(size))
    threshold = -(-size // 6)
    out = {
        "n": args.n,
        "family_size": size,
        "classes": len(hist),
        "threshold": threshold,
        "max_class_size": max(hist.values()),
        "class_size_histogram": {str(k): v for k, v in sorted(Counter(hist.values()).items())},
    }
    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            write_histogram_csv(hist, fh)
    _emit(out)
    return (EXIT_OK if len(hist) >= threshold else EXIT_VIOLATIONS), {"classes": len(hist)}


def cmd_render(args) -> tuple[int, dict]:
    cat = load_catalog(args.catalog)
    spec = family_parameters(args.n)
    g = graph_at(spec, cat, args.index)
    if args.points:
        res = decide_embed_free(g, points_from_json(Path(args.points).read_text()))
        if res is None:
            _say("no embedding on the given points")
            return EXIT_VIOLATIONS, {"embedded": False}
        witness, face = res.witness, list(res.face)
    else:
        witness, face = random_drawing(g, trial_rng(args.seed, 0), args.extent), [0, 1, 2]
    svg = render_svg(g, witness)
    if args.out:
        Path(args.out).write_text(svg)
    else:
        sys.stdout.write(svg)
    return EXIT_OK, {"embedded": True, "face": face}


def cmd_export(args) -> tuple[int, dict]:
    cat = load_catalog(args.catalog)
    spec = family_parameters(args.n)
    g = graph_at(spec, cat, args.index)
    sys.stdout.write(g.to_text())
    return EXIT_OK, {"vertices": g.n}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="stackembed", description=__doc__.splitlines()[0])
    p.add_argument("--catalog", default=None, help="gadget catalog (default: $STACKEMBED_CATALOG or bundled)")
    p.add_argument("--manifest", default=None, help="also write the run manifest to this file")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("params", help="family parameters for n")
    s.add_argument("--n", type=int, required=True)
    s.set_defaults(func=cmd_params)

    s = sub.add_parser("verify", help="run a property suite")
    s.add_argument("check", choices=["lemma7", "lemma8", "embedder", "apex", "degrees", "catalog"])
    s.add_argument("--trials", type=int, default=1000)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--extent", type=int, default=1 << 16)
    s.add_argument("--otypes", default=None, help="order-type database file")
    s.add_argument("--exhaustive", action="store_true", help="process every record of --otypes")
    s.add_argument("--width", type=int, choices=[8, 16], default=8)
    s.add_argument("--endian", choices=["little", "big"], default="little")
    s.add_argument("--max-size", type=int, default=6)
    s.add_argument("--sets", type=int, default=50)
    s.add_argument("--max-interior", type=int, default=50)
    s.add_argument("--n", type=int, default=None)
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("conflict", help="simultaneous embeddability over random point sets")
    s.add_argument("--n", type=int, default=22)
    s.add_argument("--trials", type=int, default=200)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--extent", type=int, default=1 << 20)
    s.add_argument("--cap", type=int, default=ver.ENUMERATION_CAP)
    s.set_defaults(func=cmd_conflict)

    s = sub.add_parser("bounds", help="counting bounds")
    s.add_argument("--n", type=int, default=None)
    s.add_argument("--range", type=int, nargs=2, metavar=("A", "B"))
    s.add_argument("--csv", action="store_true")
    s.set_defaults(func=cmd_bounds)

    s = sub.add_parser("corollary", help="limiting universal-set ratio")
    s.add_argument("--tol", type=float, default=1e-9)
    s.set_defaults(func=cmd_corollary)

    s = sub.add_parser("iso", help="isomorphism classes of a family")
    s.add_argument("--n", type=int, default=22)
    s.add_argument("--csv", default=None, help="write the class histogram here")
    s.add_argument("--cap", type=int, default=ver.ENUMERATION_CAP)
    s.set_defaults(func=cmd_iso)

    s = sub.add_parser("render", help="SVG drawing of a family member (random points, or embedded on --points)")
    s.add_argument("--n", type=int, default=22)
    s.add_argument("--index", type=int, default=0)
    s.add_argument("--points", default=None, help='JSON {"points": [[x, y], ...]}')
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--extent", type=int, default=1 << 20)
    s.add_argument("--out", default=None)
    s.set_defaults(func=cmd_render)

    s = sub.add_parser("export", help="stacking program of a family member")
    s.add_argument("--n", type=int, default=22)
    s.add_argument("--index", type=int, default=0)
    s.set_defaults(func=cmd_export)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    config = {k: v for k, v in vars(args).items() if k != "func"}
    t0 = time.perf_counter()
    try:
        code, summary = args.func(args)
    except (UsageError, FamilyError, CatalogError, OrderTypeError, ValueError, OSError) as e:
        _say(f"error: {e}")
        code, summary = EXIT_USAGE, {"error": str(e)}
    manifest = {
        "command": args.command,
        "config": config,
        "seed": config.get("seed"),
        "version": _version(),
        "wall_time": round(time.perf_counter() - t0, 3),
        "exit_code": code,
        "result": summary,
    }
    line = json.dumps(manifest, sort_keys=True, default=str)
    _say("manifest: " + line)
    if args.manifest:
        Path(args.manifest).write_text(line + "\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
