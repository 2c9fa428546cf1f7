"""Star, m-ary tree and doubling families."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from math import comb

from ..blowup import enumerate_maximal_blowups
from ..bounds import star_bound
from ..config import current_caps
from ..errors import CapacityError, InvalidArgument, PreconditionError
from ..generators import star_graph
from ..graph import Graph, closure_number, is_c_closed, maximal_cliques, maximum_matching
from ..pattern import Pattern
from .gadget import GadgetGraph


# --- trees ---------------------------------------------------------------------

def build_ary_tree(m: int, h: int) -> Graph:
    """Complete m-ary tree of depth h, root 0, breadth-first labels (children of v: m*v+1..m*v+m)."""
    if m < 1 or h < 1:
        raise InvalidArgument("need m >= 1 and h >= 1")
    n = sum(m ** i for i in range(h + 1))
    return Graph(n, [((v - 1) // m, v) for v in range(1, n)])


def tree_children(m: int, v: int) -> list[int]:
    return list(range(m * v + 1, m * v + m + 1))


def subtree_form_count(m: int, h: int) -> int:
    out = 1
    for i in range(1, h):
        out *= comb(2 * m, m) ** (m ** (i - 1))
    return out


def subtree_form_blowups(m: int, h: int, cap: int | None = None) -> list[tuple[int, ...]]:
    """Sets in the (2m)-ary depth-h tree made of an m-ary depth-(h-1) subtree at the root
    plus all children of its deepest vertices."""
    if m < 2 or h < 2:
        raise InvalidArgument("need m >= 2 and h >= 2")
    cap = cap or current_caps().tree_sets
    total = subtree_form_count(m, h)
    if total > cap:
        raise CapacityError(f"{total} subtree-form sets exceed cap {cap}", "tree_sets")
    wide = 2 * m

    def grow(level_vertices, depth):
        # level_vertices: chosen vertices at this depth; returns list of vertex lists below
        if depth == h - 1:
            return [[c for v in level_vertices for c in tree_children(wide, v)]]
        out = []
        per_vertex = [list(combinations(tree_children(wide, v), m)) for v in level_vertices]
        for pick in product(*per_vertex):
            nxt = [c for grp in pick for c in grp]
            for rest in grow(nxt, depth + 1):
                out.append(nxt + rest)
        return out

    sets = [tuple(sorted([0] + below)) for below in grow([0], 0)]
    return sorted(sets)


# --- star ----------------------------------------------------------------------

@dataclass(frozen=True)
class StarCount:
    count: int
    bound: int
    large_centre_sets: int
    large_centre_are_maximal_cliques: bool


def _centre_sizes(g: Graph, w) -> set[int]:
    """Possible sizes of a centre part for a star blow-up on vertex set w.

    A centre part must be complete to everything else in w, so it is a union of
    components of the complement of G[w].
    """
    ws = set(w)
    comps, seen = [], set()
    for s in w:
        if s in seen:
            continue
        comp, stack = 0, [s]
        seen.add(s)
        while stack:
            x = stack.pop()
            comp += 1
            for y in ws - g.adj[x] - {x}:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        comps.append(comp)
    sums = {0}
    for c in comps:
        sums |= {s + c for s in sums}
    return sums


def count_star_blowups(g: Graph, leaf_count: int, c: int, cap: int | None = None) -> StarCount:
    """Count maximal non-induced blow-ups of the star with leaf_count leaves, and check
    that those admitting a centre part with more than c vertices are maximal cliques."""
    N = leaf_count
    if N <= c:
        raise InvalidArgument(f"need more leaves than c (got N={N}, c={c})")
    if not is_c_closed(g, c):
        raise PreconditionError(f"host graph is not {c}-closed")
    p = Pattern(star_graph(N))
    result = enumerate_maximal_blowups(g, p, False, cap=cap)
    cliques = set(maximal_cliques(g))
    large, ok = 0, True
    for w in result.sets:
        sums = _centre_sizes(g, w)
        best = max(s for s in sums if 1 <= s <= len(w) - N)
        if best > c:
            large += 1
            if w not in cliques:
                ok = False
    return StarCount(result.count, star_bound(g.n, c), large, ok)


# --- doubling ------------------------------------------------------------------

def coverage_subgraph(h: Graph) -> list[tuple[int, int]]:
    """A maximum matching plus, for each unmatched vertex, the edge to its
    smallest-index neighbour (all of which are matched).  The result is a forest
    with exactly |V| - (matching size) edges and no isolated vertices."""
    matching = maximum_matching(h)
    matched = {v for e in matching for v in e}
    edges = list(matching)
    for v in range(h.n):
        if v not in matched:
            u = min(h.adj[v])
            edges.append((min(u, v), max(u, v)))
    return sorted(edges)


def _components(n, edges):
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in edges:
        parent[find(u)] = find(v)
    roots = sorted({find(v) for v in range(n)}, key=lambda r: min(v for v in range(n) if find(v) == r))
    label = {r: i for i, r in enumerate(roots)}
    return [label[find(v)] for v in range(n)]


def build_doubling_gadget(h: Graph) -> GadgetGraph:
    """Two copies v, v+n of every pattern vertex, joined to each other.  Non-edges of h stay
    non-edges; an edge of the coverage forest joins equal copies only; any other edge of
    h joins all four copy pairs."""
    if h.n == 0 or any(not h.adj[v] for v in range(h.n)):
        raise InvalidArgument("pattern graph must have no isolated vertices")
    n = h.n
    forest = coverage_subgraph(h)
    fset = set(forest)
    edges = [(v, v + n) for v in range(n)]
    for u, v in h.edges():
        edges += [(u, v), (u + n, v + n)]
        if (u, v) not in fset:
            edges += [(u, v + n), (u + n, v)]
    g = Graph(2 * n, edges)
    c = closure_number(h).closure
    comp = _components(n, forest)
    gad = GadgetGraph(
        graph=g,
        matched_pairs=[(v, v + n) for v in range(n)],
        core_set=frozenset(),
        claimed_closure=2 * c + 1,
        case_tag="doubling",
        pattern=Pattern(h),
        measured_closure=closure_number(g).closure,
        origin={**{v: v for v in range(n)}, **{v + n: v for v in range(n)}},
        extras={"coverage_subgraph": forest, "components": comp},
    )
    return gad


def doubling_transversal_count(gad: GadgetGraph) -> int:
    return 2 ** (max(_doubling_components(gad)) + 1)


def _doubling_components(gad):
    comp = gad.extras.get("components")
    if comp is None:
        comp = _components(gad.pattern.k, gad.extras["coverage_subgraph"])
        gad.extras["components"] = comp
    return comp


def doubling_transversal(gad: GadgetGraph, code: int) -> tuple[int, ...]:
    """Transversal picking copy (code >> component) & 1 for every vertex, so that
    the two ends of each coverage-forest edge use the same copy."""
    comp = _doubling_components(gad)
    n = gad.pattern.k
    return tuple(sorted(v + n * (code >> comp[v] & 1) for v in range(n)))
