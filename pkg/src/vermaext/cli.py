"""Command-line front end.

Subcommands: group, kl, rpoly, prpoly, srpoly, bound, grid, triangle, scan,
predict, classes, verify.  Elements are written "e", "w0" or generator words
like "s1*s2*s1" (types A/D/E use s1..sn, B3 uses s0,s1,s2; A3 also accepts
the letters r, s, t).  Output is deterministic: elements are printed by their
canonical words, tables are sorted by (length, index), and JSON carries no
timestamps.  Exit codes: 0 success, 1 verification failure, 2 usage errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor

from . import refdata
from .coxeter import CoxeterSystem, build_system, DEFAULT_CAP
from .extbounds import (
    expected_dims,
    hom_grid,
    kl_bound_poly,
    r_determined,
    triangle_region,
)
from .hecke import KLTable
from .intervals import equiv_classes
from .poly import BiPoly, LaurentPoly
from .rpoly import ParabolicRTable, RTable
from .typea import predict_ext1
from .verify import SUITES, run_suite

CACHE_VERSION = 1
TABLE_EMIT_CAP = 120


def _build(args) -> CoxeterSystem:
    return build_system(args.type, cap=args.cap)


def _cache_path(cache_dir: str, system: CoxeterSystem) -> str:
    return os.path.join(cache_dir, "tables-%s-v%d.json" % (system.type_label, CACHE_VERSION))


def _tables(system: CoxeterSystem, cache_dir: str | None):
    """KL and R tables, prefilled from a cache snapshot when one exists."""
    kl = KLTable(system)
    rt = RTable(system)
    if cache_dir:
        path = _cache_path(cache_dir, system)
        if os.path.exists(path):
            with open(path) as fh:
                data = json.load(fh)
            if data.get("version") == CACHE_VERSION and data.get("type") == system.type_label:
                kl._basis.update(
                    {int(y): {int(x): LaurentPoly({int(k): int(c) for k, c in p})
                              for x, p in row.items()}
                     for y, row in data["kl"].items()}
                )
                rt._memo.update(
                    {(int(x), int(y)): LaurentPoly({int(k): int(c) for k, c in p})
                     for (x, y), p in ((key.split(","), p) for key, p in data["r"].items())}
                )
    return kl, rt


def _save_tables(system: CoxeterSystem, kl: KLTable, rt: RTable, cache_dir: str | None):
    if not cache_dir:
        return
    os.makedirs(cache_dir, exist_ok=True)
    data = {
        "version": CACHE_VERSION,
        "type": system.type_label,
        "kl": {str(y): {str(x): p.items() for x, p in row.items()}
               for y, row in kl._basis.items()},
        "r": {"%d,%d" % key: p.items() for key, p in rt._memo.items()},
    }
    path = _cache_path(cache_dir, system)
    with open(path + ".tmp", "w") as fh:
        json.dump(data, fh, sort_keys=True)
    os.replace(path + ".tmp", path)


def _emit(args, text: str):
    if getattr(args, "output", None):
        with open(args.output, "w") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


def _poly_out(args, poly) -> str:
    if args.format == "json":
        # to_json builds {"var": ..., "terms": ...} in the documented order
        return json.dumps(poly.to_json())
    return str(poly)


# -- table emission ------------------------------------------------------------


def emit_table(kind: str, system: CoxeterSystem, fmt: str, kl=None, rt=None) -> str:
    """Full matrix over W x W: kind 'rpoly' (R-polynomials) or 'expected'
    (expected-dimension generating polynomials in u, v).  Text output mirrors
    the reference layout: rows are the first index x, columns the second
    index y, both sorted by (length, index).
    """
    if system.order > TABLE_EMIT_CAP:
        raise ValueError(
            "full-table emission capped at order %d (got %d)"
            % (TABLE_EMIT_CAP, system.order)
        )
    rt = rt or RTable(system)
    order = sorted(range(system.order), key=lambda w: (system.lengths[w], w))

    def cell(x, y):
        if kind == "rpoly":
            return rt.r_poly(x, y)
        if not system.bruhat_leq(y, x):
            return None
        d = system.lengths[x] - system.lengths[y]
        grid = expected_dims(rt, x, y)
        return BiPoly({(d - a, a): v for (a, b), v in grid.cells.items()})

    if fmt == "json":
        rows = []
        for x in order:
            for y in order:
                value = cell(x, y)
                if value is None or not value:
                    continue
                rows.append(
                    {"x": system.word_name(x), "y": system.word_name(y),
                     "value": value.to_json()}
                )
        return json.dumps({"kind": kind, "type": system.type_label, "cells": rows},
                          sort_keys=True)
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["x", "y", "terms"])
        for x in order:
            for y in order:
                value = cell(x, y)
                if value is None or not value:
                    continue
                writer.writerow(
                    [system.word_name(x), system.word_name(y),
                     json.dumps(value.to_json()["terms"])]
                )
        return buf.getvalue().rstrip("\n")
    # text: markdown-ish grid
    names = [system.word_name(w) for w in order]
    header = ["x\\y"] + names
    lines = [" | ".join(header)]
    lines.append(" | ".join("---" for _ in header))
    for x in order:
        row = [system.word_name(x)]
        for y in order:
            value = cell(x, y)
            row.append("0" if (value is None or not value) else str(value))
        lines.append(" | ".join(row))
    return "\n".join(lines)


# -- subcommand handlers ---------------------------------------------------------


def cmd_group(args) -> int:
    sy = _build(args)
    info = {
        "type": sy.type_label,
        "rank": sy.rank,
        "generators": sy.gen_names,
        "order": sy.order,
        "longest_length": sy.lengths[sy.w0],
        "longest_word": sy.word_name(sy.w0),
    }
    if args.format == "json":
        _emit(args, json.dumps(info, sort_keys=True))
    else:
        _emit(args, "\n".join("%s: %s" % (k, v) for k, v in sorted(info.items())))
    return 0


def cmd_kl(args) -> int:
    sy = _build(args)
    kl, rt = _tables(sy, args.cache_dir)
    if args.nontrivial_from is not None:
        x = sy.element(args.nontrivial_from)
        rows = kl.nontrivial_from(x)
        if args.format == "json":
            payload = [
                {"y": sy.word_name(y), "p": p.to_json()} for y, p in rows
            ]
            _emit(args, json.dumps(payload, sort_keys=True))
        else:
            _emit(args, "\n".join("%s: %s" % (sy.word_name(y), p) for y, p in rows) or "(none)")
    else:
        x, y = sy.element(getattr(args, "from")), sy.element(args.to)
        _emit(args, _poly_out(args, kl.kl_poly(x, y)))
    _save_tables(sy, kl, rt, args.cache_dir)
    return 0


def cmd_rpoly(args) -> int:
    if args.type.strip().upper() == "E7":
        return _rpoly_e7_reference(args)
    sy = _build(args)
    kl, rt = _tables(sy, args.cache_dir)
    if args.table:
        kind = "expected" if args.expected else "rpoly"
        _emit(args, emit_table(kind, sy, args.format, kl=kl, rt=rt))
    else:
        x, y = sy.element(getattr(args, "from")), sy.element(args.to)
        _emit(args, _poly_out(args, rt.r_poly(x, y)))
    _save_tables(sy, kl, rt, args.cache_dir)
    return 0


def _rpoly_e7_reference(args) -> int:
    """E7 is far above the enumeration cap; the (w0, e) coefficient list is
    served from the stored reference data, never recomputed."""
    x, y = getattr(args, "from"), args.to
    if (x, y) != ("w0", "e"):
        print(
            "E7 is not enumerated (order 2903040 exceeds the cap); only the "
            "stored reference pair (w0, e) is available.",
            file=sys.stderr,
        )
        return 2
    coeffs = refdata.E7_R_W0_E
    poly = LaurentPoly({-63 + 2 * i: c for i, c in enumerate(coeffs)})
    out = _poly_out(args, poly)
    if args.format != "json":
        out += "\n(reference data; not recomputed)"
    _emit(args, out)
    return 0


def _parse_J(sy: CoxeterSystem, raw: str):
    if not raw:
        return ()
    return tuple(sorted(sy.gen_index(tok) for tok in raw.split(",")))


def cmd_prpoly(args) -> int:
    return _parabolic_common(args, "parabolic")


def cmd_srpoly(args) -> int:
    return _parabolic_common(args, "singular")


def _parabolic_common(args, kind: str) -> int:
    sy = _build(args)
    kl, rt = _tables(sy, args.cache_dir)
    par = sy.parabolic(_parse_J(sy, args.J))
    table = ParabolicRTable(rt, par, kind)
    if args.table:
        reps = sorted(table.reps, key=lambda w: (sy.lengths[w], w))
        if args.format == "json":
            rows = [
                {"x": sy.word_name(x), "y": sy.word_name(y), "value": table.poly(x, y).to_json()}
                for x in reps
                for y in reps
                if table.poly(x, y)
            ]
            _emit(args, json.dumps({"kind": kind, "J": args.J, "cells": rows}, sort_keys=True))
        else:
            lines = []
            for x in reps:
                for y in reps:
                    p = table.poly(x, y)
                    if p:
                        lines.append("%s , %s : %s" % (sy.word_name(x), sy.word_name(y), p))
            _emit(args, "\n".join(lines))
    else:
        x, y = sy.element(getattr(args, "from")), sy.element(args.to)
        _emit(args, _poly_out(args, table.poly(x, y)))
    _save_tables(sy, kl, rt, args.cache_dir)
    return 0


def cmd_bound(args) -> int:
    sy = _build(args)
    kl, rt = _tables(sy, args.cache_dir)
    bound = kl_bound_poly(kl, sy.element(args.target), sy.element(args.source))
    _emit(args, _poly_out(args, bound))
    _save_tables(sy, kl, rt, args.cache_dir)
    return 0


def cmd_grid(args) -> int:
    sy = _build(args)
    kl, rt = _tables(sy, args.cache_dir)
    grid = hom_grid(kl, sy.element(args.target), sy.element(args.source))
    cells = grid.nonzero()
    if args.format == "json":
        _emit(args, json.dumps(
            {"target": sy.word_name(grid.target), "source": sy.word_name(grid.source),
             "cells": [[a, b, v] for a, b, v in cells]},
            sort_keys=True))
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["a", "b", "dim"])
        writer.writerows(cells)
        _emit(args, buf.getvalue().rstrip("\n"))
    else:
        _emit(args, "\n".join("(%d, %d): %d" % c for c in cells))
    _save_tables(sy, kl, rt, args.cache_dir)
    return 0


def cmd_triangle(args) -> int:
    sy = _build(args)
    region = triangle_region(sy, sy.element(getattr(args, "from")), sy.element(args.to))
    rows = [
        {"a": p.a, "b": p.b,
         "kind": ("south" if p.south else "east" if p.east else
                  "expected" if p.expected else "interior")}
        for p in region.points
    ]
    if args.format == "json":
        _emit(args, json.dumps({"d": region.d, "points": rows}, sort_keys=True))
    else:
        _emit(args, "\n".join("(%d, %d) %s" % (r["a"], r["b"], r["kind"]) for r in rows))
    return 0


def cmd_scan(args) -> int:
    sy = _build(args)
    kl, rt = _tables(sy, args.cache_dir)
    partition = equiv_classes(sy)
    pairs = sy.comparable_pairs()

    def probe(chunk):
        out = []
        for x, y in chunk:
            bad = rt.sign_compatibility(x, y)
            cert = r_determined(sy, x, y, kl=kl, partition=partition)
            out.append((x, y, bad, cert.kind if cert else None))
        return out

    if args.threads > 1:
        step = max(1, len(pairs) // args.threads)
        chunks = [pairs[i:i + step] for i in range(0, len(pairs), step)]
        with ThreadPoolExecutor(max_workers=args.threads) as pool:
            results = [row for part in pool.map(probe, chunks) for row in part]
    else:
        results = probe(pairs)
    results.sort(key=lambda r: (r[0], r[1]))

    violations = [(x, y, bad) for x, y, bad, _ in results if bad]
    uncertified = [(x, y) for x, y, bad, cert in results if cert is None]
    verdict = not violations and not uncertified
    if args.format == "json":
        _emit(args, json.dumps({
            "type": sy.type_label,
            "pairs": len(pairs),
            "verdict": verdict,
            "sign_violations": [
                {"x": sy.word_name(x), "y": sy.word_name(y), "exponents": bad}
                for x, y, bad in violations
            ],
            "uncertified": [
                {"x": sy.word_name(x), "y": sy.word_name(y)} for x, y in uncertified
            ],
        }, sort_keys=True))
    else:
        lines = ["%s: %d comparable pairs" % (sy.type_label, len(pairs))]
        lines.append("all extensions expected: %s" % ("yes" if verdict else "no"))
        for x, y, bad in violations:
            lines.append("sign violation (%s, %s) at %s" % (sy.word_name(x), sy.word_name(y), bad))
        for x, y in uncertified:
            lines.append("no certificate for (%s, %s)" % (sy.word_name(x), sy.word_name(y)))
        _emit(args, "\n".join(lines))
    _save_tables(sy, kl, rt, args.cache_dir)
    return 0


def cmd_predict(args) -> int:
    sy = _build(args)
    w = sy.element(args.w)
    records = predict_ext1(sy, w)
    rows = [
        {"w": sy.word_name(r.w), "witness": sy.word_name(r.witness),
         "pair": [r.i, r.j], "pen": sy.word_name(r.w_pen),
         "degree": r.degree, "shift": r.shift,
         "flag": "expected" if r.expected else "additional"}
        for r in records
    ]
    if args.format == "json":
        _emit(args, json.dumps(rows, sort_keys=True))
    else:
        _emit(args, "\n".join(
            "%s: witness %s (i,j)=(%d,%d) degree %d shift %d [%s]"
            % (r["pen"], r["witness"], r["pair"][0], r["pair"][1],
               r["degree"], r["shift"], r["flag"])
            for r in rows
        ) or "(no records)")
    return 0


def cmd_classes(args) -> int:
    sy = _build(args)
    part = equiv_classes(sy)
    if args.pair:
        xw, yw = args.pair.split(",")
        members = part.class_of(sy.element(xw.strip()), sy.element(yw.strip()))
        rows = [[sy.word_name(x), sy.word_name(y)] for x, y in members]
        if args.format == "json":
            _emit(args, json.dumps(rows, sort_keys=True))
        else:
            _emit(args, "\n".join("(%s, %s)" % (a, b) for a, b in rows))
    else:
        info = {"type": sy.type_label, "pairs": len(part.pairs),
                "classes": len(part.classes), "sizes": part.class_sizes()}
        if args.format == "json":
            _emit(args, json.dumps(info, sort_keys=True))
        else:
            _emit(args, "\n".join("%s: %s" % (k, v) for k, v in sorted(info.items())))
    return 0


def cmd_verify(args) -> int:
    names = sorted(SUITES) if args.all else [args.suite]
    if not args.all and args.suite not in SUITES:
        print("unknown suite %r; available: %s" % (args.suite, ", ".join(sorted(SUITES))),
              file=sys.stderr)
        return 2
    failed = False
    out = []
    for name in names:
        result = run_suite(name)
        out.extend(result.report_lines())
        failed = failed or not result.passed
    _emit(args, "\n".join(out))
    return 1 if failed else 0


def _add_common(p, *, needs_type=True):
    if needs_type:
        p.add_argument("--type", required=True, help="Cartan type, e.g. A3, B3, D4")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP,
                   help="element-count safety cap (default %d)" % DEFAULT_CAP)
    p.add_argument("--format", choices=("text", "csv", "json"), default="text")
    p.add_argument("--output", help="write to a file instead of stdout")
    p.add_argument("--cache-dir", default=os.environ.get("VERMAEXT_CACHE_DIR"),
                   help="directory for KL/R table snapshots "
                        "(default from VERMAEXT_CACHE_DIR)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="vermaext",
        description="Exact Kazhdan-Lusztig / R-polynomial combinatorics for "
                    "graded Verma extension bounds.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("group", help="enumerate a Weyl group and print its basic data")
    _add_common(p)
    p.set_defaults(func=cmd_group)

    p = sub.add_parser("kl", help="Kazhdan-Lusztig polynomials")
    _add_common(p)
    p.add_argument("--from", dest="from", default="e")
    p.add_argument("--to", default="e")
    p.add_argument("--nontrivial-from", default=None,
                   help="list all nontrivial KL polynomials from this element")
    p.set_defaults(func=cmd_kl)

    p = sub.add_parser("rpoly", help="ordinary R-polynomials")
    _add_common(p)
    p.add_argument("--from", dest="from", default="w0")
    p.add_argument("--to", default="e")
    p.add_argument("--table", action="store_true", help="emit the full table")
    p.add_argument("--expected", action="store_true",
                   help="with --table: expected-dimension table instead of R")
    p.set_defaults(func=cmd_rpoly)

    p = sub.add_parser("prpoly", help="parabolic R-polynomials")
    _add_common(p)
    p.add_argument("--J", default="", help="comma-separated generators, e.g. s1,s2")
    p.add_argument("--from", dest="from", default="e")
    p.add_argument("--to", default="e")
    p.add_argument("--table", action="store_true")
    p.set_defaults(func=cmd_prpoly)

    p = sub.add_parser("srpoly", help="singular R-polynomials")
    _add_common(p)
    p.add_argument("--J", default="", help="comma-separated generators, e.g. s1,s2")
    p.add_argument("--from", dest="from", default="e")
    p.add_argument("--to", default="e")
    p.add_argument("--table", action="store_true")
    p.set_defaults(func=cmd_srpoly)

    p = sub.add_parser("bound", help="two-variable hom-dimension bound polynomial")
    _add_common(p)
    p.add_argument("--target", required=True)
    p.add_argument("--source", required=True)
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("grid", help="hom dimensions into a linear tilting coresolution")
    _add_common(p)
    p.add_argument("--target", required=True)
    p.add_argument("--source", required=True)
    p.set_defaults(func=cmd_grid)

    p = sub.add_parser("triangle", help="potential bidegrees for a pair")
    _add_common(p)
    p.add_argument("--from", dest="from", required=True)
    p.add_argument("--to", required=True)
    p.set_defaults(func=cmd_triangle)

    p = sub.add_parser("scan", help="sign-rule and certificate scan over all pairs")
    _add_common(p)
    p.add_argument("--threads", type=int, default=1)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("predict", help="type-A first-extension predictor")
    _add_common(p)
    p.add_argument("--w", required=True, help="element word, e.g. s3")
    p.set_defaults(func=cmd_predict)

    p = sub.add_parser("classes", help="equivalence classes of comparable pairs")
    _add_common(p)
    p.add_argument("--pair", default=None, help="list the class of 'x,y'")
    p.set_defaults(func=cmd_classes)

    p = sub.add_parser("verify", help="run a named verification suite")
    _add_common(p, needs_type=False)
    p.add_argument("--suite", default=None, help="suite name; see --all")
    p.add_argument("--all", action="store_true", help="run every suite")
    p.set_defaults(func=cmd_verify)

    return parser


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "verify" and not args.all and not args.suite:
        parser.error("verify needs --suite NAME or --all")
    try:
        return args.func(args)
    except (ValueError, KeyError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


def main():  # console entry point
    sys.exit(run())


if __name__ == "__main__":
    main()
