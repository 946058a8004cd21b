"""Command-line entry point: ``circulant-ddp <command> ...``.

Exit status is 0 on success, 1 on a domain error and 2 on a usage error.
Data goes to stdout; progress and notes go to stderr.
"""
from __future__ import annotations

import argparse
import json
import logging
import math
import os
import sys
from pathlib import Path

from . import analysis
from .bounds import BoundKind, circulant_upper_bound, moore_bound, triple_loop_max
from .combine import DEFAULT_BUDGET, combined_search, product_entry
from .constructions import cartesian_product
from .errors import CirculantError
from .graph import CirculantGraph, distances_from_zero, is_connected
from .grid import Grid
from .records import (
    RecordTable,
    order_grid,
    percentage_grid,
    render_table,
    seed_builtin,
    update_if_better,
    verify_entry,
    verify_table,
)
from .search import Mode, PruneConfig, brute_force_oracle, max_order_search, search

log = logging.getLogger("circulant_ddp")


class UsageError(Exception):
    pass


def _cell(text: str) -> tuple[int, int]:
    try:
        deg, diam = (int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected DEG,DIAM, got {text!r}")
    return deg, diam


def _global_flags(p: argparse.ArgumentParser, suppress: bool) -> None:
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    p.add_argument("--records", default=d("records.json"), help="record table JSON (default records.json)")
    p.add_argument("--format", choices=["text", "csv", "json"], default=d("text"))
    p.add_argument("--threads", type=int, default=d(os.cpu_count() or 1), help="search worker processes")
    p.add_argument("--seed-builtin", action="store_true", default=d(False),
                   help="write the built-in seeded record table to --records first")
    p.add_argument("-v", "--verbose", action="store_true", default=d(False), help="progress on stderr")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="circulant-ddp", description=__doc__.splitlines()[0])
    _global_flags(parser, suppress=False)
    common = argparse.ArgumentParser(add_help=False)
    _global_flags(common, suppress=True)
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")

    def add(name, help_):
        return sub.add_parser(name, help=help_, parents=[common])

    p = add("bounds", "upper bounds, one value or a CSV grid")
    p.add_argument("--kind", choices=["moore", "circulant", "triple"], default="circulant")
    p.add_argument("--deg", type=int, help="single degree (with --diam)")
    p.add_argument("--diam", type=int, help="single diameter (with --deg)")
    p.add_argument("--deg-min", type=int, default=3)
    p.add_argument("--deg-max", type=int, default=16)
    p.add_argument("--dmin", type=int, default=2)
    p.add_argument("--dmax", type=int, default=10)

    p = add("verify", "verify a connection set or the record table")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--set", dest="set_text", help="connection set 'n;s1,s2,...'")
    g.add_argument("--cell", type=_cell, help="only this DEG,DIAM cell of the record table")
    p.add_argument("--expect-diam", type=int)
    p.add_argument("--expect-deg", type=int)

    p = add("search", "pruned DFS for one order")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--deg", type=int, required=True)
    p.add_argument("--diam", type=int, required=True)
    g = p.add_mutually_exclusive_group()
    g.add_argument("--prune-file", type=Path, help="ceilings file ('i d c' and 'k K' lines)")
    g.add_argument("--exhaustive", action="store_true", help="no ceilings")
    p.add_argument("--all", action="store_true", help="all solutions instead of the first")
    p.add_argument("--free-s1", action="store_true", help="do not force s1 = 1")
    p.add_argument("--k", type=int, help="minimum gap between consecutive generators")
    p.add_argument("--max-nodes", type=int)
    p.add_argument("--distinct", action="store_true", help="collapse multiplicatively related sets")

    p = add("maxsearch", "largest order in a range admitting a solution")
    p.add_argument("--deg", type=int, required=True)
    p.add_argument("--diam", type=int, required=True)
    p.add_argument("--from", dest="n_lo", type=int, required=True)
    p.add_argument("--to", dest="n_hi", type=int, required=True)
    g = p.add_mutually_exclusive_group()
    g.add_argument("--prune-file", type=Path)
    g.add_argument("--exhaustive", action="store_true")
    p.add_argument("--free-s1", action="store_true")
    p.add_argument("--max-nodes", type=int)
    p.add_argument("--update", action="store_true", help="store an improvement in the record table")

    p = add("combine", "combined search through Cartesian products")
    p.add_argument("--deg", type=int, required=True)
    p.add_argument("--diam", type=int, required=True)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="nodes per factor sub-search (0: records only)")
    p.add_argument("--update", action="store_true", help="store an improvement in the record table")

    p = add("product", "Cartesian product of two circulants")
    p.add_argument("set1")
    p.add_argument("set2")

    add("table", "render the record table (order, source, bound, percentage)")

    p = add("fit", "polynomial least-squares fit over a grid")
    p.add_argument("--what", choices=["bounds", "records", "percent"], required=True)
    p.add_argument("--degree", type=int, choices=[3, 4], default=3)
    p.add_argument("--log", action="store_true", help="fit the natural log of the values")
    p.add_argument("--parity", choices=["all", "even", "odd"], default="all")
    p.add_argument("--wide", action="store_true", help="include the degree-16 row")
    p.add_argument("--out", type=Path)

    p = add("grid", "export a (degree, diameter) grid as CSV")
    p.add_argument("--what", choices=["bounds", "records", "percent", "diff"], required=True)
    p.add_argument("--of", dest="of_", choices=["bounds", "records", "percent"], default="bounds",
                   help="grid fitted for --what diff")
    p.add_argument("--degree", type=int, choices=[3, 4], default=3)
    p.add_argument("--log", action="store_true")
    p.add_argument("--normalize", action="store_true")
    p.add_argument("--wide", action="store_true")
    p.add_argument("--out", type=Path)

    p = add("oracle", "brute-force enumeration of every set with the given diameter")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--deg", type=int, required=True)
    p.add_argument("--diam", type=int, required=True)
    return parser


# -- helpers ---------------------------------------------------------------


def _emit(text: str, out: Path | None = None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        out.write_text(text)
        print(f"wrote {out}", file=sys.stderr)


def _load_records(args) -> RecordTable:
    path = Path(args.records)
    if path.exists():
        return RecordTable.load(path)
    print(f"note: {path} not found, using the built-in seeded table", file=sys.stderr)
    return seed_builtin()


def _prune_cfg(args) -> PruneConfig:
    kw = {"require_s1_eq_1": not getattr(args, "free_s1", False)}
    if getattr(args, "exhaustive", False):
        cfg = PruneConfig.unbounded(**kw)
    elif getattr(args, "prune_file", None) is not None:
        cfg = PruneConfig.load(args.prune_file, **kw)
    else:
        cfg = PruneConfig.default(**kw)
    if getattr(args, "k", None) is not None:
        cfg = cfg.tightened(k=args.k)
    return cfg


def _ranges(args):
    deg_hi = 16 if args.wide else analysis.FIT_DEGREES[1]
    return (analysis.FIT_DEGREES[0], deg_hi), analysis.FIT_DIAMETERS


def _data_grid(what: str, args) -> Grid:
    degs, diams = _ranges(args)
    if what == "bounds":
        return analysis.bound_grid(degs, diams)
    t = _load_records(args)
    return order_grid(t, degs, diams) if what == "records" else percentage_grid(t, degs, diams)


def _sets_out(sets, fmt: str) -> str:
    if fmt == "json":
        return json.dumps([S.to_text() for S in sets], indent=1) + "\n"
    if not sets:
        return "no solutions\n"
    return "".join(S.to_text() + "\n" for S in sets)


# -- commands --------------------------------------------------------------


def cmd_bounds(args) -> int:
    kind = {"moore": BoundKind.MOORE, "triple": BoundKind.TRIPLE_LOOP}.get(args.kind)

    def value(deg, diam):
        if kind is None:
            return circulant_upper_bound(deg, diam)
        if kind is BoundKind.MOORE:
            return moore_bound(deg, diam)
        return triple_loop_max(diam) if deg == 6 else None

    if (args.deg is None) != (args.diam is None):
        raise UsageError("--deg and --diam go together")
    if args.deg is not None:
        v = value(args.deg, args.diam)
        if v is None:
            raise UsageError("the triple-loop bound is defined for degree 6 only")
        print(v)
        return 0
    rows = [["degree"] + [str(d) for d in range(args.dmin, args.dmax + 1)]]
    for deg in range(args.deg_min, args.deg_max + 1):
        vals = [value(deg, diam) for diam in range(args.dmin, args.dmax + 1)]
        if kind is BoundKind.TRIPLE_LOOP and deg != 6:
            continue
        rows.append([str(deg)] + ["" if v is None else str(v) for v in vals])
    print("\n".join(",".join(r) for r in rows))
    return 0


def cmd_verify(args) -> int:
    if args.set_text:
        G = CirculantGraph.parse(args.set_text)
        prof = distances_from_zero(G)
        diam = "infinite" if math.isinf(prof.ecc) else int(prof.ecc)
        ok = is_connected(G)
        if args.expect_diam is not None and diam != args.expect_diam:
            ok = False
        if args.expect_deg is not None and G.degree != args.expect_deg:
            ok = False
        if args.format == "json":
            print(json.dumps({"set": G.S.to_text(), "order": G.n, "degree": G.degree, "diameter": diam, "ok": ok}))
        else:
            print(f"diameter {diam}, degree {G.degree}, order {G.n}" + ("" if ok else "  MISMATCH"))
        return 0 if ok else 1
    t = _load_records(args)
    if args.cell:
        reports = [verify_entry(e) for e in t.known_graphs(*args.cell)]
        if not reports:
            print(f"no connection set stored for cell {args.cell}", file=sys.stderr)
            return 1
    else:
        reports = verify_table(t)
    for r in reports:
        print(r)
    bad = sum(not r.passed for r in reports)
    print(f"{len(reports) - bad}/{len(reports)} verified", file=sys.stderr)
    return 1 if bad else 0


def cmd_search(args) -> int:
    cfg = _prune_cfg(args)
    mode = Mode.ALL if args.all else Mode.FIRST
    out = search(args.n, args.deg, args.diam, cfg, mode, max_nodes=args.max_nodes, workers=args.threads)
    sols = out.solutions
    if args.distinct:
        from .graph import least_multiplicative_image

        sols = sorted({least_multiplicative_image(S) for S in sols})
    print(f"{out.nodes_visited} nodes, {out.pruned} pruned, exhausted={out.exhausted}", file=sys.stderr)
    sys.stdout.write(_sets_out(sols, args.format))
    return 0


def cmd_maxsearch(args) -> int:
    cfg = _prune_cfg(args)
    res = max_order_search(args.deg, args.diam, args.n_lo, args.n_hi, cfg,
                           max_nodes=args.max_nodes, workers=args.threads)
    if res is None:
        print("no solutions")
        return 0
    n, S = res
    print(f"{n} {S.to_text()}")
    if args.update:
        from .records import RecordEntry

        t = _load_records(args)
        changed = update_if_better(t, RecordEntry(args.deg, args.diam, n, S, "search"))
        if changed:
            t.save(args.records)
        print("record updated" if changed else "record not improved", file=sys.stderr)
    return 0


def cmd_combine(args) -> int:
    t = _load_records(args)
    rep = combined_search(args.deg, args.diam, t, args.budget)
    w = rep.witness
    for deg, diam, n, how in rep.lookups:
        log.info("factor lookup (%d, %d, %d): %s", deg, diam, n, how)
    f1, f2 = rep.first, rep.second
    if args.format == "json":
        print(json.dumps({
            "order": w.order, "degree": w.degree, "diameter": w.diameter, "measured": w.measured,
            "set": w.product.S.to_text(), "factors": [f1.set.to_text(), f2.set.to_text()],
        }, indent=1))
    else:
        how = "measured" if w.measured else "asserted"
        print(f"{w.order} = {f1.order} x {f2.order}  degree {w.degree}, diameter {w.diameter} ({how})")
        print(w.product.S.to_text())
    if args.update:
        changed = update_if_better(t, product_entry(rep))
        if changed:
            t.save(args.records)
        print("record updated" if changed else "record not improved", file=sys.stderr)
    return 0


def cmd_product(args) -> int:
    G1, G2 = CirculantGraph.parse(args.set1), CirculantGraph.parse(args.set2)
    w = cartesian_product(G1, G2)
    how = "measured" if w.measured else "asserted"
    if args.format == "json":
        print(json.dumps({"set": w.product.S.to_text(), "order": w.order, "degree": w.degree,
                          "diameter": w.diameter, "measured": w.measured}))
    else:
        print(w.product.S.to_text())
        print(f"order {w.order}, degree {w.degree}, diameter {w.diameter} ({how})")
    return 0


def cmd_table(args) -> int:
    sys.stdout.write(render_table(_load_records(args), args.format))
    return 0


def cmd_fit(args) -> int:
    g = _data_grid(args.what, args)
    if args.parity != "all":
        g = analysis.parity_rows(g, odd=args.parity == "odd")
    fit = analysis.fit_poly(g, args.degree, "log" if args.log else "identity")
    if args.out or args.format == "json":
        _emit(fit.to_json(), args.out)
    else:
        print(fit)
    return 0


def cmd_grid(args) -> int:
    if args.what != "diff":
        g = _data_grid(args.what, args)
    else:
        actual = _data_grid(args.of_, args)
        fit = analysis.fit_poly(actual, args.degree, "log" if args.log else "identity")
        g = analysis.diff_grid(fit, actual, args.normalize)
    _emit(g.to_csv(), args.out)
    return 0


def cmd_oracle(args) -> int:
    sys.stdout.write(_sets_out(brute_force_oracle(args.n, args.deg, args.diam), args.format))
    return 0


COMMANDS = {
    "bounds": cmd_bounds,
    "verify": cmd_verify,
    "search": cmd_search,
    "maxsearch": cmd_maxsearch,
    "combine": cmd_combine,
    "product": cmd_product,
    "table": cmd_table,
    "fit": cmd_fit,
    "grid": cmd_grid,
    "oracle": cmd_oracle,
}


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(name)s: %(message)s", stream=sys.stderr)
    if args.seed_builtin:
        seed_builtin().save(args.records)
        print(f"wrote seeded record table to {args.records}", file=sys.stderr)
    if args.command is None:
        if args.seed_builtin:
            return 0
        parser.print_usage(sys.stderr)
        return 2
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except (CirculantError, ValueError, KeyError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
