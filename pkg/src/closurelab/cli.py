"""Command line entry point: closurelab <command> ...

Exit codes: 0 ok, 1 a verification found a failure, 2 unreadable input,
3 a cap was hit, 4 a precondition does not hold.
"""
from __future__ import annotations

import argparse
import csv
import io
import random
import sys
import time

from . import __version__
from .blowup import enumerate_maximal_blowups, is_blowup
from .bounds import (clique_bound_floor, induced_polynomial_bound, maximal_blowup_bound,
                     transversal_lower_bound)
from .errors import ClosureLabError, GraphParseError, InvalidArgument
from .fast import enumerate_maximal_fast
from .graph import Graph, closure_number, graph_stats, is_c_closed, maximal_cliques, read_graph
from .pattern import POLYNOMIAL, classify_dichotomy, read_pattern, twin_decomposition
from .constructions import (CASE_TAGS, build_bounded_degree_gadget, build_doubling_gadget,
                            build_induced_exponential_gadget, degree_excess_holds,
                            doubling_transversal, doubling_transversal_count, dump_gadget,
                            gadget_case, layout_from_gadget, naive_blowups, read_gadget,
                            verify_unifying_conditions)

CSV_HEADER = ["case", "k", "K", "n", "count", "seconds", "seed"]


def parse_range(text: str) -> tuple[int, int]:
    """'3:5' -> (3, 5); '4' -> (4, 4)."""
    lo, sep, hi = text.partition(":")
    try:
        a = int(lo)
        b = int(hi) if sep else a
    except ValueError:
        raise InvalidArgument(f"bad K range {text!r}; use e.g. 3:5") from None
    if a < 1 or b < a:
        raise InvalidArgument(f"bad K range {text!r}")
    return a, b


def _fmt_set(s) -> str:
    return " ".join(map(str, s))


def _fmt_pattern_bound(p, verdict, n=None, c=None) -> str:
    k = p.k
    if verdict.kind == POLYNOMIAL:
        out = f"bound: (2n)^{k} (n^2 2^c)^{k} maximal induced blow-ups in c-closed hosts"
        if n is not None:
            out += f"; here n={n}, c={c}: {induced_polynomial_bound(n, k, c)}"
        return out
    return (f"bound: some {k + 1}-closed host on n vertices has at least "
            f"2^(n/2 - {3 * k * k + 2 * k}) maximal induced blow-ups")


def _print_twins(p, out):
    td = twin_decomposition(p.h)
    for grp in td.groups:
        shape = "clique" if grp.is_clique_group else "independent"
        if len(grp.members) == 1:
            shape = "single"
        flag = " bad" if grp.is_bad else ""
        print(f"  twin group {_fmt_set(grp.members)} ({shape}){flag}", file=out)


# --- commands -------------------------------------------------------------------

def cmd_analyze(args, out):
    if args.graph is None and args.pattern is None:
        raise InvalidArgument("analyze needs a graph, a pattern, or both")
    n = c = None
    if args.graph is not None:
        g = read_graph(args.graph)
        rep = closure_number(g)
        n, c = g.n, rep.closure
        print(f"graph: n={g.n} m={g.m}", file=out)
        print(f"closure {rep.closure}" + (f" (witness pair {rep.witness_pair[0]} {rep.witness_pair[1]})"
                                          if rep.witness_pair else ""), file=out)
        st = graph_stats(g)
        alpha = st.independence_number if st.independence_number is not None else "skipped"
        print(f"degrees: min {st.min_degree} max {st.max_degree}; matching {st.maximum_matching_size}; "
              f"independence {alpha}; connected {st.distances_available}", file=out)
        if g.n <= 200:
            cl = len(maximal_cliques(g))
            print(f"maximal cliques {cl} (bound {clique_bound_floor(g.n, rep.closure)})", file=out)
    if args.pattern is not None:
        p = read_pattern(args.pattern)
        print(f"pattern: k={p.k} edges={p.h.m} U+={sorted(p.clique_prescribed)} "
              f"U-={sorted(p.indep_prescribed)}", file=out)
        _print_twins(p, out)
        verdict = classify_dichotomy(p)
        print(f"verdict {verdict}", file=out)
        print(_fmt_pattern_bound(p, verdict, n, c), file=out)
        if n is not None and not p.indep_prescribed:
            print(f"non-induced bound: {maximal_blowup_bound(n, p.k, c)}", file=out)
    return 0


def cmd_closure(args, out):
    g = read_graph(args.graph)
    rep = closure_number(g)
    print(f"closure {rep.closure}", file=out)
    if rep.witness_pair:
        u, v = rep.witness_pair
        print(f"witness {u} {v}", file=out)
    if args.c is not None:
        print(f"{args.c}-closed {'yes' if is_c_closed(g, args.c) else 'no'}", file=out)
    return 0


def cmd_cliques(args, out):
    g = read_graph(args.graph)
    cl = maximal_cliques(g)
    c = args.c or closure_number(g).closure
    print(f"maximal cliques {len(cl)}", file=out)
    print(f"bound {clique_bound_floor(g.n, c)} (c={c})", file=out)
    if args.list:
        for q in cl:
            print(_fmt_set(q), file=out)
    return 0


def cmd_classify(args, out):
    p = read_pattern(args.pattern)
    verdict = classify_dichotomy(p)
    print(f"verdict {verdict}", file=out)
    _print_twins(p, out)
    if verdict.bad_group:
        print(f"deciding bad group {_fmt_set(verdict.bad_group)}", file=out)
    print(_fmt_pattern_bound(p, verdict), file=out)
    return 0


def cmd_enumerate(args, out):
    g = read_graph(args.graph)
    p = read_pattern(args.pattern)
    if args.mode == "fast":
        if args.induced:
            raise InvalidArgument("fast mode handles non-induced blow-ups only")
        c = args.c or closure_number(g).closure
        res = enumerate_maximal_fast(g, p, c, workers=args.workers)
        extra = f" c={c} candidates={res.diagnostics['candidates']}"
    else:
        res = enumerate_maximal_blowups(g, p, args.induced, workers=args.workers)
        extra = ""
    print(f"count {res.count}", file=out)
    print(f"mode {res.mode} induced={'yes' if args.induced else 'no'}{extra}", file=out)
    print(f"elapsed {res.elapsed:.3f}s", file=out)
    if args.list:
        for s in res.sets:
            print(_fmt_set(s), file=out)
    return 0


def _build(args):
    tag = args.case
    if tag == "doubling":
        return build_doubling_gadget(read_graph(args.pattern))
    if tag == "bounded_degree":
        gad, _ = build_bounded_degree_gadget(read_graph(args.pattern), args.copies, args.blocks,
                                             args.separation)
        return gad
    p = read_pattern(args.pattern)
    if args.K is None and args.n is None:
        raise InvalidArgument("give --K (pairs) or --n (target size)")
    K = parse_range(args.K)[0] if args.K else None
    return build_induced_exponential_gadget(p, args.n or 0, sharp=args.sharp,
                                            case=None if tag == "auto" else tag, K=K)


def cmd_construct(args, out):
    text = dump_gadget(_build(args))
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        out.write(text)
    return 0


def cmd_verify(args, out):
    gad = read_gadget(args.gadget)
    g = gad.graph
    measured = closure_number(g).closure
    ok = measured <= gad.claimed_closure
    print(f"case {gad.case_tag}: n={g.n}, closure {measured} (claimed {gad.claimed_closure})", file=out)
    if gad.case_tag in CASE_TAGS:
        rep = verify_unifying_conditions(gad, sample_budget=args.samples, seed=args.seed)
        print(f"every mixed transversal is a blow-up: {rep.condition_i} "
              f"({rep.condition_i_checked} checked)", file=out)
        print(f"no blow-up uses more than K + 3k^2 pair vertices: {rep.condition_ii} "
              f"({rep.condition_ii_checked} checked)", file=out)
        print(f"maximal blow-ups {rep.maximal_count}, lower bound {rep.lower_bound}", file=out)
        ok = ok and rep.passed
    elif gad.case_tag == "doubling":
        total = doubling_transversal_count(gad)
        rng = random.Random(args.seed)
        codes = sorted(rng.sample(range(total), min(total, args.samples)))
        good = sum(is_blowup(g, doubling_transversal(gad, code), gad.pattern, False) for code in codes)
        print(f"designated transversals {total}; sampled {len(codes)}, blow-ups {good}", file=out)
        ok = ok and good == len(codes)
    elif gad.case_tag == "bounded_degree":
        layout = layout_from_gadget(gad)
        sets = naive_blowups(gad, layout)
        induced_ok = all(g.induced(s)[0] == _relabelled(gad, s) for s in sets)
        excess = degree_excess_holds(gad, layout)
        print(f"naive blow-ups {len(sets)} (distinct {len(set(sets))}); induced copies: {induced_ok}",
              file=out)
        print(f"degree excess next to duplicated vertices: {excess}", file=out)
        ok = ok and induced_ok and excess and len(set(sets)) == len(sets)
    else:
        raise InvalidArgument(f"no verifier for case {gad.case_tag}")
    print("PASS" if ok else "FAIL", file=out)
    return 0 if ok else 1


def _relabelled(gad, s):
    """H with vertices renamed to positions in sorted(s) via the copy map."""
    h = gad.pattern.h
    pos = {gad.origin[w]: i for i, w in enumerate(sorted(s))}
    return Graph(len(s), [(pos[a], pos[b]) for a, b in h.edges()])


def run_growth(pattern, case, k_lo, k_hi, seed, workers=1):
    """Rows of the growth table (count by oracle) and the ratio summary lines."""
    actual = gadget_case(pattern)
    if case not in (None, "auto") and case != actual:
        raise InvalidArgument(f"pattern needs {actual}, not {case}")
    rows = []
    for K in range(k_lo, k_hi + 1):
        gad = build_induced_exponential_gadget(pattern, 0, K=K)
        t0 = time.perf_counter()
        res = enumerate_maximal_blowups(gad.graph, pattern, True, workers=workers)
        rows.append([actual, pattern.k, K, gad.graph.n, res.count,
                     f"{time.perf_counter() - t0:.3f}", seed])
    notes = []
    for a, b in zip(rows, rows[1:]):
        notes.append(f"ratio K={b[2]}/K={a[2]}: {b[4] / a[4]:.3f}" if a[4] else f"ratio K={b[2]}: n/a")
    for r in rows:
        notes.append(f"K={r[2]}: count {r[4]} vs lower bound {transversal_lower_bound(r[2], pattern.k)}")
    return rows, notes


def cmd_growth(args, out):
    p = read_pattern(args.pattern)
    k_lo, k_hi = parse_range(args.K or "3:5")
    rows, notes = run_growth(p, args.case, k_lo, k_hi, args.seed, args.workers)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    w.writerows(rows)
    for line in notes:
        buf.write(f"# {line}\n")
    buf.write(f"# generated {time.strftime('%Y-%m-%dT%H:%M:%S')}\n")
    if args.csv:
        with open(args.csv, "w") as fh:
            fh.write(buf.getvalue())
        print(f"wrote {len(rows)} rows to {args.csv}", file=out)
        for line in notes:
            print(line, file=out)
    else:
        out.write(buf.getvalue())
    return 0


# --- parser ---------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="closurelab",
                                 description="c-closed graphs and maximal prescribed blow-ups")
    ap.add_argument("--version", action="version", version=f"closurelab {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    s = sub.add_parser("analyze", help="closure, stats, twins and dichotomy verdict")
    s.add_argument("graph", nargs="?")
    s.add_argument("pattern", nargs="?")
    s.add_argument("--pattern", dest="pattern_opt", help="pattern file (when no graph is given)")
    s.set_defaults(func=cmd_analyze)

    s = sub.add_parser("closure", help="closure number of a graph")
    s.add_argument("graph")
    s.add_argument("--c", type=int, help="also test c-closedness")
    s.set_defaults(func=cmd_closure)

    s = sub.add_parser("cliques", help="count (and list) maximal cliques")
    s.add_argument("graph")
    s.add_argument("--c", type=int, help="closure value for the bound (default: measured)")
    s.add_argument("--list", action="store_true")
    s.set_defaults(func=cmd_cliques)

    s = sub.add_parser("classify", help="polynomial/exponential verdict for a pattern")
    s.add_argument("pattern")
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("enumerate", help="all maximal blow-ups of a pattern in a graph")
    s.add_argument("graph")
    s.add_argument("pattern")
    s.add_argument("--mode", choices=("oracle", "fast"), default="oracle")
    s.add_argument("--induced", action="store_true")
    s.add_argument("--c", type=int, help="closure value for fast mode (default: measured)")
    s.add_argument("--list", action="store_true")
    s.add_argument("--workers", type=int, default=1)
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("construct", help="build a gadget host and print it in gadget format")
    s.add_argument("pattern", help="pattern file (a plain graph for doubling/bounded_degree)")
    s.add_argument("--case", default="auto",
                   choices=("auto",) + CASE_TAGS + ("doubling", "bounded_degree"))
    s.add_argument("--K", help="number of matched pairs")
    s.add_argument("--n", type=int, help="target host size (alternative to --K)")
    s.add_argument("--sharp", action="store_true", help="claim the sharper closure bound")
    s.add_argument("--copies", type=int, default=2, help="copy layers (bounded_degree)")
    s.add_argument("--blocks", type=int, default=1, help="block budget (bounded_degree)")
    s.add_argument("--separation", type=int, default=0, help="block separation (bounded_degree)")
    s.add_argument("--out", help="write here instead of stdout")
    s.set_defaults(func=cmd_construct)

    s = sub.add_parser("verify", help="check the claimed properties of a gadget file")
    s.add_argument("gadget")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--samples", type=int, default=1000, help="sample budget for large checks")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("growth", help="CSV of maximal induced blow-up counts against K")
    s.add_argument("pattern")
    s.add_argument("--case", default="auto", choices=("auto",) + CASE_TAGS)
    s.add_argument("--K", default="3:5", help="range lo:hi")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--workers", type=int, default=1)
    s.add_argument("--csv", help="output path (default stdout)")
    s.set_defaults(func=cmd_growth)
    return ap


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    if args.command == "analyze" and args.pattern_opt:
        args.pattern = args.pattern_opt
    try:
        return args.func(args, out)
    except ClosureLabError as exc:
        print(f"closurelab: error: {exc}", file=sys.stderr)
        return exc.exit_code
    except OSError as exc:
        print(f"closurelab: error: {exc}", file=sys.stderr)
        return GraphParseError.exit_code


if __name__ == "__main__":
    sys.exit(main())
