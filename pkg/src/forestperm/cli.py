"""Command line front end.

Exit status: 0 success, 1 domain error (bad permutation, word outside the
image, ...), 2 a verification check failed, 64 usage error.  Results go to
stdout, diagnostics to stderr.

Environment: ``FORESTPERM_ORDER`` sets the default series order (30),
``FORESTPERM_WORKERS`` the default census worker count (1).
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import __version__
from .bijections import BijectionError, PlaneTree, from_plane_tree, from_ud_word, to_plane_tree, to_ud_word
from .census import CENSUS_CLASSES, CensusLimitError, realizability_scan, run_census
from .classify import classify, cross_validate
from .core import PermGraph, PermutationError, build_bar_diagram, build_graph, parse_permutation
from .decompose import DecompositionError, phi, statistics_check, strip_last_one
from .series import (
    BIVARIATE_CLASSES,
    CLASSES,
    FIXPOINT_CLASSES,
    bivariate_closed_form,
    closed_form,
    functional_equation_fixed_point,
)
from .sorting import incidence_matrix, is_bijective, is_onto, sort_bars

EXIT_OK, EXIT_DOMAIN, EXIT_VERIFY, EXIT_USAGE = 0, 1, 2, 64

TREE_FORMAT_HELP = (
    "Plane trees are written as balanced parentheses: each child subtree of a node is "
    "'(' + its own children + ')', children left to right, and the tree is the "
    "concatenation of the root's children. The one-node tree is the empty string, "
    "a single edge is '()'."
)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EXIT_USAGE)


def _env_int(name, default):
    raw = os.environ.get(name)
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"{name} must be an integer, got {raw!r}") from None


def _emit(obj, as_json: bool, text: str | None = None):
    if as_json:
        print(json.dumps(obj))
    else:
        print(text if text is not None else json.dumps(obj))


# --- commands ----------------------------------------------------------------------


def cmd_classify(args):
    p = parse_permutation(args.perm)
    r = classify(p)
    if args.json:
        _emit(r.to_json(), True)
        return EXIT_OK
    lines = [f"permutation: {p}", f"n: {r.n}  edges: {r.e}  rl-minima: {r.m}  final ascent: {r.a}"]
    lines += [f"{k}: {'yes' if v else 'no'}" for k, v in r.flags().items()]
    for k, w in r.witnesses.items():
        lines.append(f"witness {k}: {' '.join(map(str, w))}")
    print("\n".join(lines))
    return EXIT_OK


def cmd_bars(args):
    p = parse_permutation(args.perm)
    d = build_bar_diagram(p)
    trace = sort_bars(d)
    m = incidence_matrix(d)
    onto = is_onto(m)
    if args.json:
        obj = {
            "n": p.n,
            "bars": [list(b) for b in d.bars],
            "moves": [{"bar": list(b), "divider": div} for b, div in trace.moves],
            "residual": [list(b) for b in trace.residual],
            "fully_sorted": trace.fully_sorted,
            "onto": onto,
            "bijective": is_bijective(m),
        }
        if args.matrix:
            obj["matrix"] = [list(r) for r in m.rows]
        _emit(obj, True)
        return EXIT_OK
    out = [f"permutation: {p}", f"bars ({len(d.bars)}):"]
    for i, j in d.bars:
        out.append(f"  {i}-{j}  " + " " * (i - 1) * 2 + "=" * ((j - i) * 2 + 1))
    out.append("sort trace:")
    for b, div in trace.moves:
        out.append(f"  move {b[0]}-{b[1]} (divider {div})")
    if trace.residual:
        out.append("  stuck with: " + ", ".join(f"{i}-{j}" for i, j in trace.residual))
    if args.matrix:
        out.append("matrix:")
        out += ["  " + " ".join(map(str, r)) for r in m.rows]
    out.append(f"fully sortable: {'yes' if trace.fully_sorted else 'no'}")
    out.append(f"onto: {'yes' if onto else 'no'}  bijective: {'yes' if is_bijective(m) else 'no'}")
    print("\n".join(out))
    return EXIT_OK


def cmd_decompose(args):
    p = parse_permutation(args.perm)
    if not build_graph(p).is_forest():
        raise DecompositionError(f"{p} is not forest-like")
    if p.values[-1] == 1 and p.n > 1:
        smaller = strip_last_one(p)
        obj = {"case": "last", "smaller": str(smaller)}
        _emit(obj, args.json, f"1 is last: {p} = {smaller} shifted up with 1 appended")
        return EXIT_OK
    if p.n == 1:
        _emit({"case": "single"}, args.json, "single entry: nothing to decompose")
        return EXIT_OK
    t = phi(p)
    rec = statistics_check(p, t, strict=False)
    obj = {"case": "triple", "tau": str(t.tau), "sigma": str(t.sigma), "k": t.k, "statistics": rec.as_dict()}
    text = f"tau: {t.tau}\nsigma: {t.sigma}\nk: {t.k}\n" + "\n".join(
        f"{k}: {v}" for k, v in rec.as_dict().items()
    )
    _emit(obj, args.json, text)
    return EXIT_OK if rec.ok else EXIT_VERIFY


def cmd_bijection(args):
    if args.kind == "plane-tree":
        if args.inverse:
            p = from_plane_tree(PlaneTree.parse(args.value))
            _emit({"tree": args.value.strip(), "perm": str(p)}, args.json, str(p))
        else:
            p = parse_permutation(args.value)
            t = to_plane_tree(p)
            _emit({"perm": str(p), "tree": t.serialize()}, args.json, t.serialize())
    else:
        if args.inverse:
            p = from_ud_word(args.value)
            _emit({"word": args.value.strip().upper(), "perm": str(p)}, args.json, str(p))
        else:
            p = parse_permutation(args.value)
            w = to_ud_word(p)
            _emit({"perm": str(p), "word": w}, args.json, w)
    return EXIT_OK


def _series_payload(s, bivariate):
    return s.table() if bivariate else s.to_list()


def cmd_series(args):
    cls, order, biv, method = args.cls, args.order, args.bivariate, args.method
    if order is None:
        order = _env_int("FORESTPERM_ORDER", 30)
    if order < 1:
        raise UsageError("--order must be >= 1")
    if method in ("closed", "both"):
        if biv and cls not in BIVARIATE_CLASSES:
            raise UsageError(f"no bivariate closed form for {cls!r}; choose from {', '.join(BIVARIATE_CLASSES)}")
        if not biv and cls not in CLASSES:
            raise UsageError(f"no univariate closed form for {cls!r}; choose from {', '.join(CLASSES)}")
    if biv and cls == "path":
        raise UsageError("path-like permutations have no bivariate refinement")
    results = []
    if method in ("closed", "both"):
        s = bivariate_closed_form(cls, order) if biv else closed_form(cls, order)
        results.append(_series_payload(s, biv))
    if method in ("fixpoint", "both"):
        s = functional_equation_fixed_point(cls, order)
        results.append(_series_payload(s if biv else s.at_one(), biv))
    if method == "both" and results[0] != results[1]:
        print(json.dumps(results[0]))
        print("closed form and fixed point disagree", file=sys.stderr)
        return EXIT_VERIFY
    print(json.dumps(results[0]))
    return EXIT_OK


def cmd_enumerate(args):
    workers = args.workers if args.workers is not None else _env_int("FORESTPERM_WORKERS", 1)
    if args.by and not args.cls:
        raise UsageError("--by needs --class")
    row = run_census(args.n, workers=workers)
    if args.json:
        obj = row.to_json()
        if args.cls:
            obj = {"n": row.n, "total": row.total, "class": args.cls, "count": row.counts[args.cls]}
            if args.by:
                obj["by"] = args.by
                obj["table"] = row.refined[args.cls][args.by]
        _emit(obj, True)
        return EXIT_OK
    if args.cls:
        lines = [f"n={row.n} {args.cls}: {row.counts[args.cls]}"]
        if args.by:
            lines += [f"  {args.by}={i}: {c}" for i, c in enumerate(row.refined[args.cls][args.by]) if i]
    else:
        lines = [f"n={row.n} permutations: {row.total}"]
        lines += [f"{c}: {row.counts[c]}" for c in CENSUS_CLASSES]
        lines.append(f"total edges: {row.total_edges}")
        lines.append(f"max edges: {row.max_edges}")
    print("\n".join(lines))
    return EXIT_OK


def cmd_verify(args):
    from .verify import verify

    workers = args.workers if args.workers is not None else _env_int("FORESTPERM_WORKERS", 1)
    checks = verify(args.n, workers=workers, bruhat_max=args.n if args.long else 7)
    failed = [c for c in checks if not c.ok]
    if args.json:
        _emit({"n": args.n, "checks": [{"name": c.name, "ok": c.ok, "detail": c.detail} for c in checks],
               "failed": len(failed)}, True)
    else:
        for c in checks:
            print(c.line())
        print(f"{len(checks) - len(failed)}/{len(checks)} checks passed")
    return EXIT_OK if not failed else EXIT_VERIFY


def read_edge_list(path: str) -> list[tuple[int, int]]:
    edges = []
    with open(path) as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            parts = line.split()
            if len(parts) != 2:
                raise UsageError(f"{path}:{lineno}: expected 'i j'")
            try:
                a, b = int(parts[0]), int(parts[1])
            except ValueError:
                raise UsageError(f"{path}:{lineno}: expected two integers") from None
            if a < 1 or b < 1 or a == b:
                raise UsageError(f"{path}:{lineno}: vertices are distinct 1-based labels")
            edges.append((a, b))
    return edges


def cmd_realize(args):
    edges = read_edge_list(args.graph)
    top = max((max(e) for e in edges), default=0)
    if top > args.n:
        raise UsageError(f"edge list mentions vertex {top} but --n is {args.n}")
    if args.n > 8:
        raise UsageError("realize scans S_n exhaustively and is limited to n <= 8")
    target = PermGraph.from_edges(args.n, edges)
    p = realizability_scan(args.n, target)
    obj = {"n": args.n, "edges": len(target.edges), "realizable": p is not None, "witness": str(p) if p else None}
    _emit(obj, args.json, f"realized by {p}" if p else "not realizable")
    return EXIT_OK


# --- parser ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="forestperm", description="Forest-like permutations: graphs, bars, classes, series.")
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    perm_help = "permutation, e.g. '6 4 3 7 5 1 8 2', '6,4,3' or compact '64375182' (n <= 9)"

    c = sub.add_parser("classify", help="class membership with witnesses")
    c.add_argument("perm", help=perm_help)
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=cmd_classify)

    c = sub.add_parser("bars", help="bar diagram, sort trace and surjectivity verdict")
    c.add_argument("perm", help=perm_help)
    c.add_argument("--matrix", action="store_true", help="also print the incidence matrix rows")
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=cmd_bars)

    c = sub.add_parser("decompose", help="split a forest-like permutation into (tau, sigma, k)")
    c.add_argument("perm", help=perm_help)
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=cmd_decompose)

    c = sub.add_parser("bijection", help="plane-tree / U-D word encodings", epilog=TREE_FORMAT_HELP)
    c.add_argument("kind", choices=("plane-tree", "ud-word"))
    c.add_argument("value", help="permutation, or with --inverse a tree string / U-D word")
    c.add_argument("--inverse", action="store_true", help="decode the encoding back to a permutation")
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=cmd_bijection)

    c = sub.add_parser("series", help="coefficients of a generating function as a JSON array")
    c.add_argument("--class", dest="cls", required=True, choices=FIXPOINT_CLASSES)
    c.add_argument("--order", type=int, default=None, help="truncation order (default 30 or $FORESTPERM_ORDER)")
    c.add_argument("--bivariate", action="store_true", help="rows by power of x, columns by degree in u")
    c.add_argument("--method", choices=("closed", "fixpoint", "both"), default="closed")
    c.set_defaults(func=cmd_series)

    c = sub.add_parser("enumerate", help="exhaustive census of S_n")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--class", dest="cls", choices=CENSUS_CLASSES)
    c.add_argument("--by", choices=("rl-minima", "final-ascent"))
    c.add_argument("--workers", type=int)
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=cmd_enumerate)

    c = sub.add_parser("verify", help="run every cross-check over S_1..S_n")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--workers", type=int)
    c.add_argument("--long", action="store_true", help="also compare Bruhat covers above n = 7")
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=cmd_verify)

    c = sub.add_parser("realize", help="search S_n for a permutation with a given unlabelled graph")
    c.add_argument("--graph", required=True, help="edge list file, one 'i j' per line, 1-based")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=cmd_realize)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        if getattr(args, "n", None) is not None and args.n < 1:
            raise UsageError("--n must be >= 1")
        return args.func(args)
    except UsageError as exc:
        print(f"forestperm: usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (PermutationError, BijectionError, DecompositionError, CensusLimitError) as exc:
        print(f"forestperm: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except OSError as exc:
        print(f"forestperm: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
