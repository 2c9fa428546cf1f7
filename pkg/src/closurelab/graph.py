"""Immutable simple graphs and the basic c-closure primitives.

Vertices are 0..n-1.  Adjacency is kept both as frozensets (for readable
set algebra) and as int bitmasks (for the hot loops in the searches).
"""
from __future__ import annotations

import math
import random
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Optional

from .errors import GraphParseError, InvalidArgument


def bits(mask: int):
    """Yield the indices of the set bits of mask in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class Graph:
    """Simple undirected graph on vertices 0..n-1."""

    __slots__ = ("n", "adj", "masks", "_edges")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise InvalidArgument("vertex count must be nonnegative")
        nbrs = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidArgument(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise InvalidArgument(f"self-loop at {u}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        self.n = n
        self.adj = tuple(frozenset(s) for s in nbrs)
        self.masks = tuple(to_mask(s) for s in nbrs)
        self._edges = None

    @classmethod
    def from_masks(cls, masks) -> "Graph":
        n = len(masks)
        edges = [(u, v) for u in range(n) for v in bits(masks[u]) if u < v]
        return cls(n, edges)

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.masks == other.masks

    def __hash__(self):
        return hash((self.n, self.masks))

    def __getstate__(self):
        return (self.n, self.edges())

    def __setstate__(self, state):
        n, edges = state
        fresh = Graph(n, edges)
        for name in Graph.__slots__:
            object.__setattr__(self, name, getattr(fresh, name))

    @property
    def m(self) -> int:
        return len(self.edges())

    def edges(self) -> list[tuple[int, int]]:
        if self._edges is None:
            self._edges = [(u, v) for u in range(self.n) for v in sorted(self.adj[u]) if u < v]
        return self._edges

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adj]

    def vertices(self) -> range:
        return range(self.n)

    def induced(self, vertices) -> tuple["Graph", list[int]]:
        """Induced subgraph, relabelled 0..len-1 in sorted order.  Returns (graph, old labels)."""
        order = sorted(vertices)
        index = {v: i for i, v in enumerate(order)}
        edges = [(index[u], index[v]) for u in order for v in self.adj[u] if v in index and u < v]
        return Graph(len(order), edges), order

    def relabel(self, perm) -> "Graph":
        """Graph with vertex v renamed perm[v]."""
        return Graph(self.n, [(perm[u], perm[v]) for u, v in self.edges()])

    def is_clique(self, vertices) -> bool:
        vs = list(vertices)
        return all(vs[j] in self.adj[vs[i]] for i in range(len(vs)) for j in range(i + 1, len(vs)))

    def is_independent(self, vertices) -> bool:
        vs = list(vertices)
        return not any(vs[j] in self.adj[vs[i]] for i in range(len(vs)) for j in range(i + 1, len(vs)))


# --- file format -----------------------------------------------------------

def load_graph(text: str, source: Optional[str] = None) -> Graph:
    """Parse the edge-list format: header `n m`, then m lines `u v`; `#` lines are comments."""
    g, rest = _parse_graph_block(text.splitlines(), source)
    for lineno, line in rest:
        raise GraphParseError(f"unexpected trailing content {line!r}", lineno, source)
    return g


def _parse_graph_block(lines, source=None):
    """Parse a graph block and return (graph, remaining (lineno, text) pairs)."""
    content = []
    for i, raw in enumerate(lines, 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        content.append((i, line))
    if not content:
        raise GraphParseError("missing header line 'n m'", None, source)
    lineno, header = content[0]
    parts = header.split()
    if len(parts) != 2 or not all(p.isdigit() for p in parts):
        raise GraphParseError(f"malformed header {header!r}, expected 'n m'", lineno, source)
    n, m = int(parts[0]), int(parts[1])
    if len(content) - 1 < m:
        raise GraphParseError(f"header promises {m} edges but only {len(content) - 1} lines follow",
                              lineno, source)
    edges = []
    for lineno, line in content[1:m + 1]:
        parts = line.split()
        if len(parts) != 2 or not all(p.lstrip("-").isdigit() for p in parts):
            raise GraphParseError(f"malformed edge line {line!r}", lineno, source)
        u, v = int(parts[0]), int(parts[1])
        if not (0 <= u < n and 0 <= v < n):
            raise GraphParseError(f"vertex index out of range [0, {n}) in {line!r}", lineno, source)
        if u == v:
            raise GraphParseError(f"self-loop {line!r}", lineno, source)
        edges.append((u, v))
    return Graph(n, edges), content[m + 1:]


def dump_graph(g: Graph) -> str:
    out = [f"{g.n} {g.m}"]
    out += [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(out) + "\n"


def read_graph(path) -> Graph:
    with open(path) as fh:
        return load_graph(fh.read(), source=str(path))


# --- closure -----------------------------------------------------------------

def _check_vertex(g: Graph, v: int):
    if not isinstance(v, int) or not 0 <= v < g.n:
        raise InvalidArgument(f"vertex {v!r} out of range [0, {g.n})")


def common_neighbors(g: Graph, u: int, v: int) -> frozenset:
    _check_vertex(g, u)
    _check_vertex(g, v)
    if u == v:
        raise InvalidArgument("common_neighbors needs two distinct vertices")
    return (g.adj[u] & g.adj[v]) - {u, v}


@dataclass(frozen=True)
class ClosureReport:
    closure: int
    witness_pair: Optional[tuple[int, int]] = None


def closure_number(g: Graph) -> ClosureReport:
    best, witness = -1, None
    masks = g.masks
    for u in range(g.n):
        mu = masks[u]
        for v in range(u + 1, g.n):
            if mu >> v & 1:
                continue
            cn = (mu & masks[v]).bit_count()
            if cn > best:
                best, witness = cn, (u, v)
    if witness is None or best == 0:
        # no nonadjacent pair, or no nonadjacent pair shares a neighbour
        return ClosureReport(1)
    return ClosureReport(best + 1, witness)


def is_c_closed(g: Graph, c: int) -> bool:
    if c < 1:
        raise InvalidArgument("c must be at least 1")
    masks = g.masks
    for u in range(g.n):
        mu = masks[u]
        for v in range(u + 1, g.n):
            if not mu >> v & 1 and (mu & masks[v]).bit_count() >= c:
                return False
    return True


def c_closure_repair(g: Graph, c: int, seed: int = 0) -> Graph:
    """Add edges between nonadjacent pairs with >= c common neighbours until g is c-closed.

    The added pairs are processed in a seeded shuffled order each round.  Adding an
    edge never lowers a common-neighbour count, so the final graph does not actually
    depend on the order; the seed only fixes the intermediate sequence.
    """
    if c < 1:
        raise InvalidArgument("c must be at least 1")
    rng = random.Random(seed)
    masks = list(g.masks)
    n = g.n
    while True:
        pending = [(u, v) for u in range(n) for v in range(u + 1, n)
                   if not masks[u] >> v & 1 and (masks[u] & masks[v]).bit_count() >= c]
        if not pending:
            break
        rng.shuffle(pending)
        for u, v in pending:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
    return Graph.from_masks(masks)


# --- cliques -----------------------------------------------------------------

def maximal_cliques(g: Graph) -> list[tuple[int, ...]]:
    """All maximal cliques via pivoting Bron-Kerbosch on bitmasks, canonically sorted."""
    if g.n == 0:
        return []
    masks = g.masks
    found = []

    def expand(r, p, x):
        if not p and not x:
            found.append(r)
            return
        pivot, most = -1, -1
        for u in bits(p | x):
            cnt = (p & masks[u]).bit_count()
            if cnt > most:
                pivot, most = u, cnt
        for v in bits(p & ~masks[pivot]):
            low = 1 << v
            expand(r | low, p & masks[v], x & masks[v])
            p &= ~low
            x |= low

    expand(0, (1 << g.n) - 1, 0)
    return sorted(tuple(bits(r)) for r in found)


# --- distances and statistics ------------------------------------------------

def bfs_distances(g: Graph, source) -> dict[int, int]:
    """Distances from a vertex or from a set of vertices (multi-source BFS)."""
    starts = [source] if isinstance(source, int) else list(source)
    dist = {s: 0 for s in starts}
    queue = deque(starts)
    while queue:
        u = queue.popleft()
        for w in g.adj[u]:
            if w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def is_connected(g: Graph) -> bool:
    return g.n == 0 or len(bfs_distances(g, 0)) == g.n


def maximum_matching(g: Graph) -> list[tuple[int, int]]:
    """A maximum-cardinality matching (Edmonds blossom algorithm from networkx)."""
    import networkx as nx

    ng = nx.Graph()
    ng.add_nodes_from(range(g.n))
    ng.add_edges_from(g.edges())
    pairs = nx.max_weight_matching(ng, maxcardinality=True)
    return sorted(tuple(sorted(e)) for e in pairs)


def independence_number(g: Graph) -> int:
    """Exact alpha(G) by branching on a minimum-degree vertex's closed neighbourhood."""
    masks = g.masks
    best = 0

    def rec(cand, size):
        nonlocal best
        if size + cand.bit_count() <= best:
            return
        if not cand:
            best = size
            return
        v, dv = -1, None
        for u in bits(cand):
            du = (masks[u] & cand).bit_count()
            if dv is None or du < dv:
                v, dv = u, du
                if du <= 1:
                    break
        if dv <= 1:
            # a vertex of degree <= 1 is always in some maximum independent set
            rec(cand & ~(1 << v) & ~masks[v], size + 1)
            return
        for u in bits((masks[v] | 1 << v) & cand):
            rec(cand & ~(1 << u) & ~masks[u], size + 1)
            cand &= ~(1 << u)

    rec((1 << g.n) - 1, 0)
    return best


@dataclass(frozen=True)
class GraphStats:
    min_degree: int
    max_degree: int
    maximum_matching_size: int
    independence_number: Optional[int]
    distances_available: bool


def graph_stats(g: Graph, alpha_cap: int = 40) -> GraphStats:
    """Degree range, matching number, alpha (only when n <= alpha_cap), connectivity.

    distances_available is True when every pair of vertices is at finite distance.
    """
    degs = g.degrees() or [0]
    alpha = independence_number(g) if g.n <= alpha_cap else None
    return GraphStats(min(degs), max(degs), len(maximum_matching(g)), alpha, is_connected(g))


def max_codegree(g: Graph) -> int:
    masks = g.masks
    return max(((masks[u] & masks[v]).bit_count()
                 for u in range(g.n) for v in range(u + 1, g.n)), default=0)


def girth(g: Graph) -> float:
    best = math.inf
    for s in range(g.n):
        dist, parent = {s: 0}, {s: -1}
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if w not in dist:
                    dist[w], parent[w] = dist[u] + 1, u
                    queue.append(w)
                elif parent[u] != w:
                    best = min(best, dist[u] + dist[w] + 1)
    return best
