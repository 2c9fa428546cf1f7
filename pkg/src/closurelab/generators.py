"""Named graphs and seeded random instances used by tests, CLI and builders."""
from __future__ import annotations

import random

from .graph import Graph, c_closure_repair


def empty_graph(n: int) -> Graph:
    return Graph(n)


def complete_graph(n: int) -> Graph:
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves: int) -> Graph:
    """Star with centre 0 and leaves 1..leaves."""
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def matching_graph(pairs: int) -> Graph:
    return Graph(2 * pairs, [(2 * i, 2 * i + 1) for i in range(pairs)])


def disjoint_union(*graphs: Graph) -> Graph:
    edges, offset = [], 0
    for g in graphs:
        edges += [(u + offset, v + offset) for u, v in g.edges()]
        offset += g.n
    return Graph(offset, edges)


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)


def pentagon_pentagram_graph(pentagons: int = 5) -> Graph:
    """Hoffman-Singleton style graph built from `pentagons` pentagons and as many pentagrams.

    Vertex P(h, j) is adjacent to P(h, j+-1), Q(i, j) to Q(i, j+-2), and P(h, j) to
    Q(i, h*i + j) (all mod 5), for h, i ranging over the first `pentagons` residues.
    With 5 of each this is the Hoffman-Singleton graph (7-regular, girth 5); with 3 of
    each every vertex loses exactly two neighbours, giving a 5-regular graph of girth 5
    on 30 vertices.
    """
    r = pentagons

    def P(h, j):
        return 5 * h + j % 5

    def Q(i, j):
        return 5 * r + 5 * i + j % 5

    edges = []
    for h in range(r):
        for j in range(5):
            edges.append((P(h, j), P(h, j + 1)))
            edges.append((Q(h, j), Q(h, j + 2)))
    for h in range(r):
        for i in range(r):
            for j in range(5):
                edges.append((P(h, j), Q(i, h * i + j)))
    return Graph(10 * r, edges)


def random_graph(n: int, p: float, seed: int) -> Graph:
    rng = random.Random(seed)
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def random_c_closed(n: int, c: int, p: float, seed: int) -> Graph:
    """G(n, p) repaired to be c-closed."""
    return c_closure_repair(random_graph(n, p, seed), c, seed)


def random_regular(n: int, d: int, seed: int, tries: int = 1000) -> Graph:
    """Uniform-ish d-regular simple graph by rejection of random pairings."""
    rng = random.Random(seed)
    for _ in range(tries):
        stubs = [v for v in range(n) for _ in range(d)]
        rng.shuffle(stubs)
        pairs = set()
        ok = True
        for a, b in zip(stubs[::2], stubs[1::2]):
            e = (min(a, b), max(a, b))
            if a == b or e in pairs:
                ok = False
                break
            pairs.add(e)
        if ok:
            return Graph(n, sorted(pairs))
    raise RuntimeError(f"no simple {d}-regular graph on {n} vertices found in {tries} tries")
