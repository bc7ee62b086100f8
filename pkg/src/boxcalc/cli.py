"""Command-line front end.

Exit codes: 0 success, 1 failed verification, 2 usage or bad input,
3 resource limit, 4 numerical failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import mpmath

from . import __version__
from . import boxpoly as bp
from . import excedance as ex
from . import ffop
from . import roots as rt
from . import setpart as sp
from .errors import SizeLimitError
from .experiments import EXPERIMENTS, run_experiment
from .graphs import Graph
from .numbers import bell, stirling2
from .poly import format_rational, parse_rational
from .verify import SUITES, run_suite

EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_LIMIT, EXIT_NUMERIC = 0, 1, 2, 3, 4


def _emit(text: str, out) -> None:
    out.write(text if text.endswith("\n") else text + "\n")


def _num(x, digits: int, radius) -> str:
    if abs(x) <= radius:
        return "0"
    s = mpmath.nstr(x, digits)
    return s[:-2] if s.endswith(".0") else s


def _root_text(r: rt.ComplexRoot, digits: int) -> str:
    re_s = _num(r.value.real, digits, r.radius)
    if abs(r.value.imag) <= r.radius:
        return re_s
    im = r.value.imag
    im_s = _num(abs(im), digits, r.radius)
    sign = "-" if im < 0 else "+"
    return f"{re_s}{sign}{im_s}i"


# box

def cmd_box(args, out) -> int:
    p = bp.box_poly(args.m, args.n)
    if args.eval is not None:
        v = p(parse_rational(args.eval))
        _emit(json.dumps(format_rational(v)) if args.format == "json" else format_rational(v), out)
    else:
        _emit(p.to_json() if args.format == "json" else p.to_text(), out)
    return EXIT_OK


# excedance

def cmd_excedance(args, out) -> int:
    if args.tnn:
        rep = ex.total_nonnegativity_scan(args.m, args.n)
        if args.format == "json":  # the scan defaults to text
            _emit(json.dumps({"m": rep.m, "n": rep.n, "tnn": rep.is_tnn,
                              "minors_checked": rep.minors_checked,
                              "zero_minors": len(rep.zero_minors),
                              "violating_minor": rep.violating_minor}), out)
        else:
            _emit(f"TNN: {str(rep.is_tnn).lower()}", out)
            _emit(f"minors checked: {rep.minors_checked}", out)
            _emit(f"zero minors: {len(rep.zero_minors)}", out)
            if rep.violating_minor is not None:
                _emit(f"violating minor: {rep.violating_minor}", out)
        return EXIT_OK
    M = ex.excedance_matrix(args.m, args.n)
    if args.format in (None, "json"):
        _emit(json.dumps([list(r) for r in M.rows()], separators=(",", ":")), out)
    else:
        for row in M.rows():
            _emit(" ".join(str(v) for v in row), out)
    return EXIT_OK


# roots

def cmd_roots(args, out) -> int:
    if args.m < 1:
        raise ValueError("roots needs m >= 1")
    digits = args.digits
    if args.matrix_columns:
        cols = rt.column_roots(args.m, args.n, bits=args.bits)
        _emit(f"# column polynomials of M({args.m},{args.n}), bits={args.bits}", out)
        for k, rs in cols.items():
            _emit(f"column {k}: " + ", ".join(_root_text(r, digits) for r in rs), out)
        _emit("k,min_re,max_re,max_abs", out)
        for k, lo, hi, top in rt.column_trend(cols):
            _emit(f"{k},{lo:.12g},{hi:.12g},{top:.12g}", out)
        rows = [(args.m, k, rs) for k, rs in cols.items()]
    else:
        rs = rt.box_roots(args.m, args.n, args.bits)
        for r in rs:
            _emit(_root_text(r, digits), out)
        worst_res = max(r.residual for r in rs)
        worst_rad = max(r.radius for r in rs)
        _emit(f"# {len(rs)} roots, bits={args.bits}, max residual {mpmath.nstr(worst_res, 5)}, "
              f"max inclusion radius {mpmath.nstr(worst_rad, 5)}", out)
        rows = [(args.m, args.n, rs)]
    if args.csv:
        Path(args.csv).write_text(rt.roots_csv(rows, args.bits))
    return EXIT_OK


# verify

def cmd_verify(args, out) -> int:
    checks = run_suite(args.suite, args.max_size)
    ok = all(c.ok for c in checks)
    if args.json:
        data = []
        for c in checks:
            d = c.as_dict()
            if not args.timings:
                d.pop("seconds")
            data.append(d)
        _emit(json.dumps({"ok": ok, "checks": data}, indent=2), out)
    else:
        for c in checks:
            line = f"{'PASS' if c.ok else 'FAIL'} {c.suite}: {c.name} ({c.cases} cases)"
            if args.timings:
                line += f" {c.seconds:.2f}s"
            if c.detail:
                line += f" {c.detail}"
            _emit(line, out)
        _emit(f"{sum(c.ok for c in checks)}/{len(checks)} checks passed", out)
    return EXIT_OK if ok else EXIT_FAILED


# experiment

_EXPERIMENT_FLAGS = {
    "tnn-sweep": {"max": "max_size"},
    "phi-counterexample": {"max_cache": "max_cache"},
    "im-scaling": {"m_max": "m_max", "n_max": "n_max", "bits": "bits"},
    "ladder-partitions": {"n": "n"},
    "chebyshev-n2": {"m_max": "m_max", "bits": "bits"},
}


def cmd_experiment(args, out) -> int:
    params = {}
    for flag, key in _EXPERIMENT_FLAGS[args.name].items():
        v = getattr(args, flag)
        if v is not None:
            params[key] = v
    given = {f for f in ("max", "max_cache", "m_max", "n_max", "bits", "n") if getattr(args, f) is not None}
    stray = given - set(_EXPERIMENT_FLAGS[args.name])
    if stray:
        raise ValueError(f"experiment {args.name} does not take " + ", ".join("--" + s.replace("_", "-") for s in sorted(stray)))
    res = run_experiment(args.name, **params)
    if args.output:
        Path(args.output).write_text(res.text())
    else:
        _emit(res.text(), out)
    return EXIT_OK if res.complete else EXIT_LIMIT


# partitions

def cmd_partitions(args, out) -> int:
    kind, o = args.kind, args.oracle
    if kind == "stirling":
        val = stirling2(args.N, args.K)
        ref = sp.census_count(args.N, args.K) if o else None
    elif kind == "bell":
        val = bell(args.N)
        ref = sp.census_count(args.N) if o else None
    elif kind == "cyclic":
        val = sp.cyclic_adjacency_count(args.N, args.K)
        ref = sp.cyclic_adjacency_oracle(args.N, args.K) if o else None
    elif kind == "distance":
        val = sp.distance_s_count(args.N, args.K, args.S)
        ref = sp.distance_s_oracle(args.N, args.K, args.S) if o else None
    elif kind == "separated":
        val = sp.first_r_separated_count(args.M, args.N, args.R)
        ref = sp.first_r_separated_oracle(args.M, args.N, args.R) if o else None
    elif kind == "parity":
        val = sp.parity_minima_count(args.M, args.N, args.R)
        ref = sp.parity_minima_oracle(args.M, args.N, args.R, corrected=args.corrected) if o else None
    elif kind == "odd":
        if args.K > args.N:
            val = 0
        else:
            v = bp.box_at_minus_half_n_scaled(args.N - args.K, args.K)
            val = int(v)
        ref = sp.odd_block_count_oracle(args.N, args.K) if o else None
    elif kind == "mod":
        val = ffop.mod_r_block_count(args.N, args.K, args.R)
        ref = sp.mod_r_block_oracle(args.N, args.K, args.R) if o else None
    elif kind == "no-singleton":
        val = sp.no_singleton_count(args.N)
        ref = sp.no_singleton_oracle(args.N) if o else None
    elif kind == "graph":
        g = Graph.from_edge_list(Path(args.graph_file).read_text(), args.vertices)
        val = sp.graph_partition_count(g, args.k)
        ref = sp.graph_partition_count_oracle(g, args.k) if o else None
    elif kind == "psi":
        p = sp.SetPartition.parse(args.partition)
        _emit(str(sp.psi_map(p, "backward" if args.backward else "forward")), out)
        return EXIT_OK
    else:  # pragma: no cover - argparse restricts the choices
        raise ValueError(kind)
    if ref is None:
        _emit(str(val), out)
        return EXIT_OK
    _emit(f"formula {val}", out)
    _emit(f"oracle  {ref}", out)
    _emit("agree" if val == ref else "DISAGREE", out)
    return EXIT_OK if val == ref else EXIT_FAILED


def _nonneg(s: str) -> int:
    v = int(s)
    if v < 0:
        raise argparse.ArgumentTypeError("must be non-negative")
    return v


def _positive(s: str) -> int:
    v = int(s)
    if v < 1:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="boxcalc", description="Box polynomials, excedance matrices and set-partition counts.")
    ap.add_argument("--version", action="version", version=f"boxcalc {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("box", help="print B_{m,n} or evaluate it")
    p.add_argument("m", type=_nonneg)
    p.add_argument("n", type=_nonneg)
    p.add_argument("--eval", metavar="X", help="exact rational point, e.g. -1 or 3/2")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_box)

    p = sub.add_parser("excedance", help="print the excedance matrix M(m,n)")
    p.add_argument("m", type=_nonneg)
    p.add_argument("n", type=_nonneg)
    p.add_argument("--tnn", action="store_true", help="scan all minors for total nonnegativity")
    p.add_argument("--format", choices=("text", "json"),
                   help="default: json for the matrix, text for the scan")
    p.set_defaults(func=cmd_excedance)

    p = sub.add_parser("roots", help="certified roots of B_{m,n} or of the columns of M(m,n)")
    p.add_argument("m", type=int)
    p.add_argument("n", type=_nonneg)
    p.add_argument("--bits", type=_positive, default=rt.DEFAULT_BITS)
    p.add_argument("--digits", type=_positive, default=20, help="significant digits shown")
    p.add_argument("--csv", metavar="PATH")
    p.add_argument("--matrix-columns", action="store_true",
                   help="solve the column polynomials k = 1..n; the CSV n field holds k")
    p.set_defaults(func=cmd_roots)

    p = sub.add_parser("verify", help="run invariant suites")
    p.add_argument("--suite", choices=tuple(SUITES) + ("all",), default="all")
    p.add_argument("--max-size", type=_nonneg)
    p.add_argument("--json", action="store_true")
    p.add_argument("--timings", action="store_true", help="include wall-clock times (output no longer reproducible)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("experiment", help="exploratory runs with a reproducibility header")
    p.add_argument("name", choices=tuple(EXPERIMENTS))
    p.add_argument("--max", type=_nonneg, help="tnn-sweep size")
    p.add_argument("--max-cache", type=_positive, help="phi-counterexample memo cap (entries)")
    p.add_argument("--m-max", type=_positive)
    p.add_argument("--n-max", type=_positive)
    p.add_argument("--bits", type=_positive)
    p.add_argument("--n", type=_positive, help="ladder size")
    p.add_argument("--output", metavar="PATH")
    p.set_defaults(func=cmd_experiment)

    p = sub.add_parser("partitions", help="set-partition counts, optionally against enumeration")
    kinds = p.add_subparsers(dest="kind", required=True)

    def kind(name, params, help_):
        q = kinds.add_parser(name, help=help_)
        for prm in params:
            q.add_argument(prm, type=_nonneg)
        q.add_argument("--oracle", action="store_true", help="also count by exhaustive enumeration")
        return q

    kind("stirling", ["N", "K"], "S(N,K)")
    kind("bell", ["N"], "Bell number")
    kind("cyclic", ["N", "K"], "no two cyclically consecutive elements share a block")
    kind("distance", ["N", "K", "S"], "elements in a block differ by more than S")
    kind("separated", ["M", "N", "R"], "1..R in distinct blocks of a partition of [M+N+R] into N+R blocks")
    q = kind("parity", ["M", "N", "R"], "block minima alternate in parity")
    q.add_argument("--corrected", action="store_true", help="oracle counts the phantom block minimum when R = N/2")
    kind("odd", ["N", "K"], "K blocks of odd size")
    kind("mod", ["N", "K", "R"], "K blocks of size 1 mod R")
    kind("no-singleton", ["N"], "no singleton blocks")
    q = kind("graph", [], "blocks independent in a graph")
    q.add_argument("--graph-file", required=True, help="edge list, one 'u v' pair per line")
    q.add_argument("--k", type=_nonneg, required=True)
    q.add_argument("--vertices", type=_nonneg, help="vertex count if larger than the top label")
    q = kinds.add_parser("psi", help="bijection between cyclic-adjacency-free and singleton-free partitions")
    q.add_argument("partition", help="e.g. 13|24 or 1,3|2,4")
    q.add_argument("--backward", action="store_true")
    p.set_defaults(func=cmd_partitions, oracle=False)
    return ap


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, out)
    except (SizeLimitError, MemoryError) as exc:
        print(f"boxcalc: resource limit: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except rt.RootFindingError as exc:
        print(f"boxcalc: numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except (ValueError, OSError) as exc:
        print(f"boxcalc: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
