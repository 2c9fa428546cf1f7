"""Acceptance suite: eleven numbered criteria, one test each.

Each check returns (ok, detail).  The test prints a `criterion N: PASS|FAIL ...`
line, stores it for the terminal summary, and asserts.  Run directly with
`python3 tests/test_acceptance.py` to get just the eleven lines.
"""
import random
import re
import sys
import time
from functools import lru_cache
from itertools import combinations
from pathlib import Path

import networkx as nx

sys.path.insert(0, str(Path(__file__).parent))

from closurelab.blowup import (enumerate_maximal_blowups, is_blowup, is_blowup_small_excess,
                               is_maximal_blowup)
from closurelab.bounds import (clique_bound_floor, induced_polynomial_bound, maximal_blowup_bound,
                               star_bound, transversal_lower_bound)
from closurelab.constructions import (build_ary_tree, build_bounded_degree_gadget,
                                      build_doubling_gadget, build_induced_exponential_gadget,
                                      count_star_blowups, coverage_subgraph, doubling_transversal,
                                      doubling_transversal_count, naive_blowups, subtree_form_blowups,
                                      verify_unifying_conditions)
from closurelab.fast import enumerate_maximal_fast
from closurelab.generators import (cycle_graph, pentagon_pentagram_graph, petersen_graph,
                                   random_c_closed, random_graph)
from closurelab.graph import (Graph, closure_number, girth, is_c_closed, maximal_cliques,
                              maximum_matching, read_graph)
from closurelab.pattern import EXPONENTIAL, POLYNOMIAL, Pattern, bad_twin_groups, classify_dichotomy

from conftest import DATA, atlas, to_nx

RESULTS = {}


def _record(n, ok, detail):
    line = f"criterion {n}: {'PASS' if ok else 'FAIL'} {detail}"
    RESULTS[n] = line
    print(line)
    assert ok, line


# --- criteria 1 and 2: fast vs oracle grid ---------------------------------------

def _connected_patterns(max_k=4):
    out = []
    for h in atlas(max_k):
        if not nx.is_connected(to_nx(h)):
            continue
        for r in range(h.n + 1):
            for plus in combinations(range(h.n), r):
                out.append(Pattern(h, set(plus)))
    return out


@lru_cache(maxsize=None)
def _grid():
    """(n, k, c, fast sets, oracle sets) over every pattern times two hosts."""
    rng = random.Random(2024)
    rows = []
    start = time.perf_counter()
    for i, p in enumerate(_connected_patterns()):
        for j in range(2):
            c = 1 + (2 * i + j) % 4
            # seeds grow like n^((c-1)k): keep the heaviest cells small
            n = rng.randint(6, 12 if c * p.k <= 8 else 9)
            g = random_c_closed(n, c, rng.uniform(0.15, 0.6), rng.randint(0, 10 ** 6))
            fast = enumerate_maximal_fast(g, p, c).sets
            oracle = enumerate_maximal_blowups(g, p, False).sets
            rows.append((g.n, p.k, c, tuple(fast), tuple(oracle)))
    return rows, time.perf_counter() - start


def criterion_1():
    rows, secs = _grid()
    bad = sum(1 for *_, f, o in rows if set(f) != set(o))
    ok = len(rows) >= 200 and bad == 0 and secs < 300
    return ok, f"{len(rows)} instances, {bad} mismatches, {secs:.1f}s"


def criterion_2():
    rows, _ = _grid()
    worst, bad = 0.0, 0
    for n, k, c, f, _ in rows:
        b = maximal_blowup_bound(n, k, c)
        bad += len(f) > b
        worst = max(worst, len(f) / b)
    return bad == 0, f"{len(rows)} counts, {bad} violations, max count/bound {worst:.2e}"


# --- criterion 3: clique bound ---------------------------------------------------

def criterion_3():
    rng = random.Random(3)
    bad, worst = 0, 0.0
    for _ in range(100):
        c = rng.randint(1, 5)
        n = rng.randint(5, 60)
        g = random_c_closed(n, c, rng.uniform(0.05, 0.5), rng.randint(0, 10 ** 6))
        assert is_c_closed(g, c)
        cnt, b = len(maximal_cliques(g)), clique_bound_floor(n, c)
        bad += cnt > b
        worst = max(worst, cnt / b)
    return bad == 0, f"100 graphs, {bad} violations, max count/bound {worst:.3f}"


# --- criterion 4: classifier totality ---------------------------------------------

def _prescriptions(k):
    for code in range(3 ** k):
        plus, minus = set(), set()
        for v in range(k):
            t = code // 3 ** v % 3
            if t == 1:
                plus.add(v)
            elif t == 2:
                minus.add(v)
        yield plus, minus


def criterion_4():
    calls, bad, adjacent = 0, 0, 0
    graphs = atlas(5)
    for h in graphs:
        groups = bad_twin_groups(h)
        for a, b in combinations(groups, 2):
            if any(h.has_edge(x, y) for x in a for y in b):
                adjacent += 1
        for plus, minus in _prescriptions(h.n):
            calls += 1
            v = classify_dichotomy(Pattern(h, plus, minus))
            if v.kind not in (POLYNOMIAL, EXPONENTIAL) or not v.case_tag:
                bad += 1
    ok = bad == 0 and adjacent == 0
    return ok, f"{len(graphs)} graphs, {calls} verdicts, {bad} malformed, {adjacent} adjacent bad-group pairs"


# --- criterion 5: exponential side -----------------------------------------------

EXPONENTIAL_REPS = {
    "2a": Pattern(Graph(1, []), set(), {0}),
    "2b": Pattern(Graph(2, []), {1}, {0}),
    "2c": Pattern(Graph(2, [])),
    "multi-bad": Pattern(Graph(3, [(0, 1)])),
}


def criterion_5():
    notes, ok = [], True
    for tag, p in EXPONENTIAL_REPS.items():
        assert classify_dichotomy(p).case_tag == tag
        counts = {}
        for K in (3, 4, 5, 6):
            gad = build_induced_exponential_gadget(p, 0, K=K)
            if K <= 5:
                rep = verify_unifying_conditions(gad, sample_budget=2 ** K)
                counts[K] = rep.maximal_count
                lb = transversal_lower_bound(K, p.k)
                ok &= rep.condition_i and rep.condition_ii and rep.maximal_count >= lb
                ok &= rep.measured_closure <= rep.claimed_closure
            else:
                counts[K] = enumerate_maximal_blowups(gad.graph, p, True).count
        ok &= all(counts[K + 1] >= 1.5 * counts[K] for K in (3, 4, 5))
        notes.append(f"{tag}:" + "/".join(str(counts[K]) for K in sorted(counts)))
    return ok, "counts K=3..6 " + " ".join(notes)


# --- criterion 6: polynomial side -------------------------------------------------

POLYNOMIAL_REPS = {
    "no-bad": Pattern(cycle_graph(4)),
    "1a": Pattern(Graph(2, [(0, 1)])),
    "1b": Pattern(Graph(1, []), {0}),
    "1c": Pattern(Graph(2, []), set(), {0}),
}


def criterion_6():
    rng = random.Random(6)
    bad, hosts, top = 0, 0, 0
    for tag, p in POLYNOMIAL_REPS.items():
        assert classify_dichotomy(p).case_tag == tag
        for _ in range(15):
            c = rng.randint(1, 3)
            n = rng.randint(6, 14)
            g = random_c_closed(n, c, rng.uniform(0.15, 0.6), rng.randint(0, 10 ** 6))
            cnt = enumerate_maximal_blowups(g, p, True).count
            bad += cnt > induced_polynomial_bound(n, p.k, c)
            hosts += 1
            top = max(top, cnt)
    return bad == 0, f"{hosts} hosts over 4 tags, {bad} violations, largest count {top}"


# --- criterion 7: tree family -------------------------------------------------------

def criterion_7():
    start = time.perf_counter()
    f4 = build_ary_tree(4, 2)
    f2 = Pattern(build_ary_tree(2, 2))
    sets = subtree_form_blowups(2, 2)
    maximal = sum(is_blowup(f4, s, f2, False) and is_maximal_blowup(f4, s, f2, False) for s in sets)
    secs = time.perf_counter() - start
    ok = f4.n == 21 and len(sets) == 6 and maximal == 6 and secs < 60
    return ok, f"F_4 on {f4.n} vertices, {len(sets)} sets, {maximal} maximal, {secs:.1f}s"


# --- criterion 8: star bound --------------------------------------------------------

def criterion_8():
    rng = random.Random(8)
    bad, not_clique, large = 0, 0, 0
    for _ in range(100):
        c = rng.choice((2, 3))
        n = rng.randint(c + 2, 14)
        g = random_c_closed(n, c, rng.uniform(0.2, 0.7), rng.randint(0, 10 ** 6))
        r = count_star_blowups(g, c + 1, c)
        bad += r.count > star_bound(n, c)
        large += r.large_centre_sets
        not_clique += not r.large_centre_are_maximal_cliques
    ok = bad == 0 and not_clique == 0
    return ok, f"100 hosts, {bad} violations, {large} large-centre sets, {not_clique} hosts with a non-clique"


# --- criterion 9: doubling gadget ---------------------------------------------------

def _no_isolated(limit):
    rng = random.Random(9)
    for h in atlas(7, 2):
        if all(h.adj[v] for v in range(h.n)):
            yield h
    for _ in range(limit):
        h = random_graph(rng.randint(8, 12), rng.uniform(0.15, 0.6), rng.randint(0, 10 ** 6))
        if all(h.adj[v] for v in range(h.n)):
            yield h


def criterion_9():
    rng = random.Random(90)
    forests = mismatch = 0
    for h in _no_isolated(400):
        forests += 1
        t = coverage_subgraph(h)
        mismatch += h.n - len(t) != len(maximum_matching(h))
    h = pentagon_pentagram_graph(3)
    shape = h.n == 30 and set(h.degrees()) == {5} and girth(h) == 5
    gad = build_doubling_gadget(h)
    c = closure_number(h).closure
    closed = is_c_closed(gad.graph, 2 * c + 1)
    total = doubling_transversal_count(gad)
    trans = [doubling_transversal(gad, code) for code in range(total)]
    distinct = total == 2 ** 15 and len(set(trans)) == total
    p = Pattern(h)
    sample = rng.sample(trans, 1000)
    blowups = sum(is_blowup(gad.graph, s, p, False) for s in sample)
    extendable = 0
    for s in rng.sample(trans, 100):
        rest = sorted(set(range(gad.graph.n)) - set(s))
        if any(is_blowup_small_excess(gad.graph, list(s) + [v], p) for v in rest):
            extendable += 1
        elif any(is_blowup_small_excess(gad.graph, list(s) + [v, w], p) for v, w in combinations(rest, 2)):
            extendable += 1
    ok = mismatch == 0 and shape and closed and distinct and blowups == 1000 and extendable == 0
    return ok, (f"{forests} forests ({mismatch} off), H 5-regular girth 5: {shape}, "
                f"G {2 * c + 1}-closed: {closed}, {len(set(trans))} distinct transversals, "
                f"{blowups}/1000 blow-ups, {extendable}/100 extendable")


# --- criterion 10: bounded-degree gadget ------------------------------------------

def criterion_10():
    cases = [("C6", cycle_graph(6), 1, 0), ("C6", cycle_graph(6), 2, 0),
             ("C8", cycle_graph(8), 2, 3), ("Petersen", petersen_graph(), 2, 0)]
    ok, notes = True, []
    for name, h, blocks, sep in cases:
        gad, lay = build_bounded_degree_gadget(h, copy_count=2, block_budget=blocks, separation=sep)
        g = gad.graph
        naive = naive_blowups(gad, lay)
        copies = all(nx.is_isomorphic(to_nx(g.induced(s)[0]), to_nx(h)) for s in naive)
        found = enumerate_maximal_blowups(g, Pattern(h), False)
        covered = all(any(set(s) <= set(t) for t in found.sets) for s in naive)
        good = copies and len(set(naive)) == len(naive) and covered and 2 * found.count >= len(naive)
        ok &= good
        notes.append(f"{name}/{lay.block_count}b: {found.count} maximal vs {len(naive)} naive")
    return ok, "; ".join(notes)


# --- criterion 11: regrouping fixture ---------------------------------------------

def _fixture(path):
    sets = {}
    for line in path.read_text().splitlines():
        m = re.fullmatch(r"#\s*([A-Z]):\s*([\d\s]+)", line.strip())
        if m:
            sets[m.group(1)] = [int(t) for t in m.group(2).split()]
    return read_graph(path), sets


def criterion_11():
    p = Pattern(cycle_graph(4))
    ok, notes = True, []
    for name, induced in (("regroup_c4.txt", False), ("regroup_c4_induced.txt", True)):
        g, sets = _fixture(DATA / name)
        a, b, c = sets["A"], sets["B"], sets["C"]
        chain = set(a) < set(b) < set(c)
        verdicts = [is_blowup(g, s, p, induced) for s in (a, b, c)]
        ok &= chain and verdicts == [True, False, True]
        notes.append(f"{'induced' if induced else 'non-induced'}: A<B<C {chain}, A/B/C {verdicts}")
    return ok, "; ".join(notes)


CRITERIA = {i: globals()[f"criterion_{i}"] for i in range(1, 12)}


def _run(n):
    ok, detail = CRITERIA[n]()
    _record(n, ok, detail)


def test_criterion_1():
    _run(1)


def test_criterion_2():
    _run(2)


def test_criterion_3():
    _run(3)


def test_criterion_4():
    _run(4)


def test_criterion_5():
    _run(5)


def test_criterion_6():
    _run(6)


def test_criterion_7():
    _run(7)


def test_criterion_8():
    _run(8)


def test_criterion_9():
    _run(9)


def test_criterion_10():
    _run(10)


def test_criterion_11():
    _run(11)


if __name__ == "__main__":
    failed = 0
    for n in CRITERIA:
        try:
            _run(n)
        except AssertionError:
            failed += 1
    sys.exit(1 if failed else 0)
