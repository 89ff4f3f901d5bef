"""Command-line front end.

Verbs: ``invariants`` (per-graph report), ``family`` (build a named family
member), ``transform`` (pi/sigma surgery with before/after report),
``enumerate`` (graph6 dumps of the generated classes), ``scan`` (conjecture
verification over a class or an external catalog), ``refute-a100`` (the
minimum-degree-product counterexample table), and ``formulas`` (closed form
vs BFS tables).

Exit codes: 0 success; 1 usage error; 2 computation error; 3 when a scan
finds a violation of a conjecture whose catalog status is open or corrected
(a reportable discovery, distinct from a broken invocation).  Data goes to
stdout only; every diagnostic goes to stderr.
"""

import argparse
import json
import sys
from fractions import Fraction

from . import enumeration
from .conjectures import get as get_conjecture
from .conjectures import refute_a100, registry, scan, scan_stream
from .enumeration import EnumerationQuery, read_graph6_stream
from .families import PARAM_NAMES, FamilySpec, closed_form_ecc, make
from .graph import (
    average_eccentricity,
    decode_graph6,
    encode_graph6,
    parse_edge_list,
)
from .invariants import REPORT_FIELDS, invariant_report
from .transforms import pendant_paths_at, pi_transform, sigma_transform

_FAMILY_ALIASES = {"pc": "pc_graph"}


def _parse_range(text, what):
    """'7' -> (7, 7); '4..12' -> (4, 12)."""
    parts = text.split("..")
    try:
        if len(parts) == 1:
            lo = hi = int(parts[0])
        elif len(parts) == 2:
            lo, hi = int(parts[0]), int(parts[1])
        else:
            raise ValueError
    except ValueError:
        raise ValueError(f"bad {what} range {text!r}; use N or A..B") from None
    if lo > hi:
        raise ValueError(f"bad {what} range {text!r}: {lo} > {hi}")
    return lo, hi


def _input_graphs(args):
    """Collect input graphs from --g6 (literal or '-') or --edges."""
    if getattr(args, "g6", None):
        if args.g6 == "-":
            return list(read_graph6_stream(sys.stdin))
        return [decode_graph6(args.g6)]
    if getattr(args, "edges", None):
        with open(args.edges, "r", encoding="ascii") as fh:
            return [parse_edge_list(fh.read())]
    raise ValueError("no input graph: pass --g6 STRING, --g6 -, or --edges FILE")


def _fraction_text(value):
    if isinstance(value, (Fraction, int)):
        return str(value)
    return repr(float(value))


def _apply_paper_scale(args):
    if getattr(args, "paper_scale", False):
        enumeration.CAPS["trees"] = max(enumeration.CAPS["trees"], 20)
        enumeration.CAPS["connected_graphs"] = max(
            enumeration.CAPS["connected_graphs"], 10
        )
        print(
            "warning: paper scale raises the caps to 20-vertex trees and "
            "10-vertex connected graphs; the built-in connected enumerator "
            "is impractical beyond n=9 — supply an external catalog via "
            "--from-g6 for n=10",
            file=sys.stderr,
        )


# ---------------------------------------------------------------------------
# verb implementations
# ---------------------------------------------------------------------------


def _cmd_invariants(args):
    graphs = _input_graphs(args)
    reports = [invariant_report(g) for g in graphs]
    if args.format == "json":
        for rep in reports:
            print(rep.to_json())
    elif args.format == "csv":
        print(reports[0].csv_header())
        for rep in reports:
            print(rep.to_csv_row())
    else:
        for rep in reports:
            d = rep.to_dict()
            for field in REPORT_FIELDS:
                print(f"{field}: {d[field]}")
            print()
    return 0


def _family_spec_from_args(kind, pairs):
    kind = _FAMILY_ALIASES.get(kind, kind)
    if kind not in PARAM_NAMES:
        raise ValueError(
            f"unknown family {kind!r}; choose from {sorted(PARAM_NAMES)}"
        )
    kv = {}
    for pair in pairs:
        if "=" not in pair:
            raise ValueError(f"family parameters look like name=value, got {pair!r}")
        key, _, raw = pair.partition("=")
        kv[key.strip()] = raw.strip()
    names = PARAM_NAMES[kind]
    if names is None:  # starlike: parts=3,2,1
        if set(kv) != {"parts"}:
            raise ValueError("starlike takes a single parameter parts=L1,L2,...")
        params = tuple(int(x) for x in kv["parts"].split(","))
    else:
        if set(kv) != set(names):
            raise ValueError(f"{kind} expects parameters {names}, got {sorted(kv)}")
        params = tuple(int(kv[name]) for name in names)
    return FamilySpec(kind, params)


def _cmd_family(args):
    fam = _family_spec_from_args(args.kind, args.params)
    g = make(fam)
    print(encode_graph6(g))
    return 0


def _cmd_transform(args):
    graphs = _input_graphs(args)
    if len(graphs) != 1:
        raise ValueError("transform takes exactly one input graph")
    g = graphs[0]
    before = average_eccentricity(g)
    if args.op == "pi":
        if args.anchor is None:
            raise ValueError("transform pi needs --anchor VERTEX")
        paths = pendant_paths_at(g, args.anchor)
        if len(paths) < 2:
            raise ValueError(
                f"vertex {args.anchor} anchors {len(paths)} pendant paths; need two"
            )
        longer = paths[args.longer]
        shorter = paths[args.shorter]
        out = pi_transform(g, args.anchor, longer, shorter)
        detail = {
            "anchor": args.anchor,
            "longer": list(longer.vertices),
            "shorter": list(shorter.vertices),
        }
    else:
        if args.bridge is None:
            raise ValueError("transform sigma needs --bridge U,V")
        u, _, v = args.bridge.partition(",")
        out = sigma_transform(g, (int(u), int(v)))
        detail = {"bridge": [int(u), int(v)]}
    after = average_eccentricity(out)
    if args.format == "json":
        print(
            json.dumps(
                {
                    "op": args.op,
                    "input": encode_graph6(g),
                    "output": encode_graph6(out),
                    "ecc_before": str(before),
                    "ecc_before_float": float(before),
                    "ecc_after": str(after),
                    "ecc_after_float": float(after),
                    **detail,
                },
                indent=2,
            )
        )
    else:
        print(encode_graph6(out))
        print(f"ecc before: {before} ({float(before)})")
        print(f"ecc after: {after} ({float(after)})")
    return 0


def _cmd_enumerate(args):
    _apply_paper_scale(args)
    n_min, n_max = _parse_range(args.n, "--n")
    out = open(args.out, "w", encoding="ascii") if args.out else sys.stdout
    try:
        if args.klass == "starlike" and args.k is not None:
            if n_min != n_max:
                raise ValueError("starlike with --k takes a single --n")
            for g in enumeration.enumerate_starlike(n_min, args.k):
                print(encode_graph6(g), file=out)
        else:
            query = EnumerationQuery(
                args.klass, n_min, n_max, max_degree=args.max_degree,
                chemical=args.chemical,
            )
            for _, g in enumeration.graphs_for(query):
                print(encode_graph6(g), file=out)
    finally:
        if args.out:
            out.close()
    return 0


def _cmd_scan(args):
    _apply_paper_scale(args)
    spec = get_conjecture(args.conjecture)
    if args.from_g6:
        with open(args.from_g6, "r", encoding="ascii") as fh:
            report = scan_stream(
                spec, read_graph6_stream(fh), klass=f"graph6:{args.from_g6}",
                jobs=args.jobs,
            )
    else:
        if args.klass is None or args.n is None:
            raise ValueError("scan needs either --from-g6 FILE or --class and --n")
        n_min, n_max = _parse_range(args.n, "--n")
        query = EnumerationQuery(args.klass, n_min, n_max)
        report = scan(spec, query, jobs=args.jobs)
    if args.format == "json":
        print(report.to_json())
    elif args.format == "csv":
        print(report.to_csv(), end="")
    else:
        print(report.summary_text(), end="")
    if report.violations and spec.paper_status in ("open", "corrected"):
        print(
            f"note: {len(report.violations)} violation(s) of {spec.id} "
            f"(status {spec.paper_status}) — exit code 3 signals a discovery",
            file=sys.stderr,
        )
        return 3
    return 0


def _cmd_refute(args):
    k_lo, k_hi = _parse_range(args.k, "--k")
    d_lo, d_hi = _parse_range(args.delta, "--delta")
    ks = [k for k in range(k_lo, k_hi + 1) if k % 2 == 0]
    if not ks:
        raise ValueError(f"no even k in {args.k!r}; the closed form covers even k")
    report = refute_a100(
        ks, range(d_lo, d_hi + 1), bfs_check=not args.no_bfs_check
    )
    if args.format == "json":
        print(report.to_json())
    elif args.format == "csv":
        print(report.to_csv(), end="")
    else:
        print(report.summary_text(), end="")
    return 0


_FORMULA_GRIDS = {
    # kind -> (first flag, second flag or None)
    "path": ("n", None),
    "cycle": ("n", None),
    "star": ("n", None),
    "complete": ("n", None),
    "hypercube": ("d", None),
    "complete_bipartite": ("n", "m"),
    "broom": ("n", "delta"),
    "lollipop": ("n", "k"),
    "pc_graph": ("k", "delta"),
}


def _cmd_formulas(args):
    kind = _FAMILY_ALIASES.get(args.family, args.family)
    if kind not in _FORMULA_GRIDS:
        raise ValueError(
            f"no closed form table for {args.family!r}; choose from "
            f"{sorted(_FORMULA_GRIDS)}"
        )
    first, second = _FORMULA_GRIDS[kind]
    flags = {"n": args.n, "m": args.m, "d": args.n, "delta": args.delta, "k": args.k}
    if kind == "hypercube":
        if args.n is None:
            raise ValueError("formulas --family hypercube needs --n (the dimension)")
    elif flags.get(first) is None:
        raise ValueError(f"formulas --family {args.family} needs --{first}")
    axes = [_parse_range(flags[first], f"--{first}")]
    names = [first]
    if second is not None:
        if flags.get(second) is None:
            raise ValueError(
                f"formulas --family {args.family} needs --{first} and --{second}"
            )
        axes.append(_parse_range(flags[second], f"--{second}"))
        names.append(second)
    rows = []
    for a in range(axes[0][0], axes[0][1] + 1):
        seconds = [None] if second is None else range(axes[1][0], axes[1][1] + 1)
        for b in seconds:
            params = (a,) if b is None else (a, b)
            if kind == "pc_graph" and a % 2:
                continue  # closed form covers even block counts only
            try:
                fam = FamilySpec(kind, params)
                closed = closed_form_ecc(fam)
            except ValueError as exc:
                print(f"skip {dict(zip(names, params))}: {exc}", file=sys.stderr)
                continue
            bfs = average_eccentricity(make(fam))
            rows.append((params, closed, bfs))
    header = names + ["closed_form", "bfs", "match"]
    if args.format == "csv":
        print(",".join(header))
        for params, closed, bfs in rows:
            cells = [str(p) for p in params]
            cells += [str(closed), str(bfs), str(closed == bfs).lower()]
            print(",".join(cells))
    else:
        widths = None
        table = [header] + [
            [str(p) for p in params] + [str(closed), str(bfs), "yes" if closed == bfs else "NO"]
            for params, closed, bfs in rows
        ]
        widths = [max(len(r[i]) for r in table) for i in range(len(header))]
        for r in table:
            print("  ".join(cell.ljust(w) for cell, w in zip(r, widths)).rstrip())
    if any(closed != bfs for _, closed, bfs in rows):
        raise RuntimeError("closed form and BFS disagree; this is a bug")
    return 0


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="ecclib",
        description="average-eccentricity workbench: invariants, families, "
        "transformations, enumeration, and conjecture scans",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("invariants", help="full invariant report for input graphs")
    p.add_argument("--g6", help="graph6 string, or '-' to read graph6 lines from stdin")
    p.add_argument("--edges", help="edge list file ('n m' header, then 'u v' lines)")
    p.add_argument("--format", choices=("json", "csv", "text"), default="json")

    p = sub.add_parser("family", help="emit a named family member as graph6")
    p.add_argument("kind", help="family kind, e.g. broom, lollipop, pc")
    p.add_argument("params", nargs="*", help="name=value pairs, e.g. n=11 delta=6")

    p = sub.add_parser("transform", help="apply a pi or sigma surgery")
    p.add_argument("op", choices=("pi", "sigma"))
    p.add_argument("--g6", help="graph6 string, or '-' for stdin")
    p.add_argument("--edges", help="edge list file")
    p.add_argument("--anchor", type=int, help="pi: anchor vertex")
    p.add_argument(
        "--longer", type=int, default=0,
        help="pi: index into the anchor's pendant paths (longest first), default 0",
    )
    p.add_argument(
        "--shorter", type=int, default=-1,
        help="pi: index of the shorter path, default -1 (the shortest)",
    )
    p.add_argument("--bridge", help="sigma: bridge endpoints as U,V")
    p.add_argument("--format", choices=("json", "text"), default="json")

    p = sub.add_parser("enumerate", help="dump a generated class as graph6 lines")
    p.add_argument(
        "klass", choices=("trees", "connected_graphs", "unicyclic", "starlike"),
        metavar="class",
    )
    p.add_argument("--n", required=True, help="order N or range A..B")
    p.add_argument("--k", type=int, help="starlike: number of pendant paths")
    p.add_argument("--max-degree", type=int, help="keep graphs with max degree <= D")
    p.add_argument("--chemical", action="store_true", help="keep max degree <= 4")
    p.add_argument("--out", help="output file (default stdout)")
    p.add_argument("--paper-scale", action="store_true",
                   help="raise caps to 20-vertex trees / 10-vertex graphs")

    p = sub.add_parser("scan", help="verify one conjecture over a class")
    p.add_argument("--conjecture", required=True,
                   help="catalog id: " + ", ".join(s.id for s in registry()))
    p.add_argument("--class", dest="klass",
                   choices=("trees", "connected_graphs", "unicyclic", "starlike"))
    p.add_argument("--n", help="order range A..B (start at 4)")
    p.add_argument("--from-g6", help="scan an external graph6 catalog file instead")
    p.add_argument("--jobs", type=int, default=1, help="parallel worker processes")
    p.add_argument("--format", choices=("json", "csv", "text"), default="json")
    p.add_argument("--paper-scale", action="store_true",
                   help="raise caps to 20-vertex trees / 10-vertex graphs")

    p = sub.add_parser(
        "refute-a100",
        help="minimum-degree product vs 2n-2 over the chained near-clique family",
    )
    p.add_argument("--k", required=True, help="even block count K or range A..B")
    p.add_argument("--delta", required=True, help="minimum degree D or range A..B")
    p.add_argument("--no-bfs-check", action="store_true",
                   help="skip the BFS recomputation of each closed form")
    p.add_argument("--format", choices=("json", "csv", "text"), default="json")

    p = sub.add_parser("formulas", help="closed form vs BFS table for a family")
    p.add_argument("--family", required=True)
    p.add_argument("--n", help="order N or range A..B (dimension for hypercube)")
    p.add_argument("--m", help="second side for complete_bipartite")
    p.add_argument("--delta", help="broom/pc: maximum degree / block degree")
    p.add_argument("--k", help="lollipop clique size / pc block count")
    p.add_argument("--format", choices=("text", "csv"), default="text")

    return parser


_DISPATCH = {
    "invariants": _cmd_invariants,
    "family": _cmd_family,
    "transform": _cmd_transform,
    "enumerate": _cmd_enumerate,
    "scan": _cmd_scan,
    "refute-a100": _cmd_refute,
    "formulas": _cmd_formulas,
}


def run(argv):
    """Parse and execute; returns the process exit code."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 1
    try:
        return _DISPATCH[args.verb](args)
    except (ValueError, OSError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
