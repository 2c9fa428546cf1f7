"""Top-block gadgets for connected bounded-degree patterns.

Around a few well separated twin groups of a common degree i*, some vertices of
H are duplicated into extra copy layers.  Taking one layer per block, plus every
vertex that was never duplicated, gives an induced copy of H (a naive blow-up),
so the host has copy_count ** blocks of them.

Duplication rule, shared by all block types: a copy of a duplicated vertex a is
adjacent to every non-duplicated neighbour of a, and to the copies (in the same
layer) of duplicated neighbours of a.  Layers never touch each other.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from ..errors import ConstructionError, InvalidArgument
from ..graph import Graph, bfs_distances, closure_number, is_connected
from ..pattern import Pattern, twin_decomposition
from .gadget import GadgetGraph

TYPE_IA, TYPE_IB, TYPE_II = "I(a)", "I(b)", "II"


@dataclass
class TopBlock:
    group: tuple            # the chosen twin group [x]
    kind: str               # I(a) | I(b) | II
    top: tuple              # [v]
    special: tuple          # [u]
    second: tuple           # S (Type II only)
    layers: list            # layers[j]: dict original -> vertex in layer j (layer 0 is H itself)

    @property
    def duplicated(self) -> tuple:
        return tuple(sorted(set(self.top) | set(self.special) | set(self.second)))


@dataclass
class TopBlockLayout:
    blocks: list
    copy_count: int
    i_star: int
    virtual_degree: dict
    origin: dict = field(default_factory=dict)

    @property
    def block_count(self) -> int:
        return len(self.blocks)


def default_class_fraction(d: int, i: int) -> float:
    return float(d) ** -(20 * (d - i + 1) - 1)


def select_degree(h: Graph, class_fraction=None) -> int:
    """Smallest degree i whose class has more than fraction(i) * N vertices;
    falls back to the minimum degree when no class qualifies."""
    degs = h.degrees()
    d = max(degs)
    n = h.n
    for i in sorted(set(degs)):
        frac = class_fraction if class_fraction is not None else default_class_fraction(d, i)
        if callable(frac):
            frac = frac(d, i)
        if degs.count(i) > frac * n:
            return i
    return min(degs)


def _classify(h: Graph, td, x: int, i_star: int):
    """Type and (v, u, S) for the twin group of x."""
    deg = h.degrees()
    grp = set(td.group(x).members)
    dist = bfs_distances(h, sorted(grp))
    near = sorted((w for w, r in dist.items() if r <= 2), key=lambda w: (dist[w], w))
    for v in near:
        if deg[v] != i_star:
            continue
        vg = set(td.group(v).members)
        us = sorted(u for u in h.adj[v] if u not in vg and deg[u] == i_star)
        if us:
            return TYPE_IA, v, us[0], ()
    outside = sorted(h.adj[x] - grp)
    if not outside:
        raise ConstructionError(f"twin group of {x} has no outside neighbour; pattern must be connected")
    for u in outside:
        if not any(deg[w] == i_star and w not in grp for w in h.adj[u]):
            return TYPE_IB, x, u, ()
    u = outside[0]
    s = tuple(sorted(w for w in h.adj[u] if w not in grp and deg[w] == i_star))
    return TYPE_II, x, u, s


def build_bounded_degree_gadget(h: Graph, copy_count: int = 2, block_budget: int = 1,
                                separation: int = 0, class_fraction=None):
    """Duplicate top blocks of h; returns (GadgetGraph, TopBlockLayout).

    copy_count is the number of layers for Type I(a) blocks; Type I(b) and II
    blocks always get two.  Chosen groups have representatives at distance more
    than `separation`, and duplicated sets of different blocks are disjoint and
    non-adjacent.
    """
    if copy_count < 2:
        raise InvalidArgument("copy_count must be at least 2")
    if block_budget < 1:
        raise InvalidArgument("block_budget must be at least 1")
    if separation < 0:
        raise InvalidArgument("separation must be non-negative")
    if h.n == 0 or not is_connected(h):
        raise InvalidArgument("pattern graph must be connected")
    d = max(h.degrees())
    if d < 2:
        raise InvalidArgument("pattern graph needs maximum degree at least 2")
    i_star = select_degree(h, class_fraction)
    td = twin_decomposition(h)
    deg = h.degrees()

    chosen, reps, taken, blocked = [], [], set(), set()
    for grp in sorted((g.members for g in td.groups), key=min):
        if len(chosen) == block_budget:
            break
        x = grp[0]
        if deg[x] != i_star:
            continue
        if reps:
            dist = bfs_distances(h, x)
            if any(dist.get(r, h.n + 1) <= separation for r in reps):
                continue
        kind, v, u, s = _classify(h, td, x, i_star)
        dup = set(td.group(v).members) | set(td.group(u).members) | set(s)
        if dup & blocked:
            continue
        chosen.append((grp, kind, v, u, s, dup))
        reps.append(x)
        taken |= dup
        blocked |= dup
        for w in dup:
            blocked |= h.adj[w]
    if not chosen:
        raise ConstructionError(
            f"no twin group of degree {i_star} can host a top block; relax separation or block_budget")

    edges = list(h.edges())
    origin = {v: v for v in range(h.n)}
    nxt = h.n
    blocks = []
    for grp, kind, v, u, s, dup in chosen:
        layers = [{a: a for a in sorted(dup)}]
        count = copy_count if kind == TYPE_IA else 2
        for _ in range(1, count):
            layer = {}
            for a in sorted(dup):
                layer[a] = nxt
                origin[nxt] = a
                nxt += 1
            for a in sorted(dup):
                for b in h.adj[a]:
                    if b in dup:
                        if a < b:
                            edges.append((layer[a], layer[b]))
                    else:
                        edges.append((layer[a], b))
            layers.append(layer)
        blocks.append(TopBlock(tuple(grp), kind, td.group(v).members, td.group(u).members,
                               tuple(s), layers))
    g = Graph(nxt, edges)
    layout = TopBlockLayout(
        blocks=blocks,
        copy_count=max(len(b.layers) for b in blocks),
        i_star=i_star,
        virtual_degree={w: deg[origin[w]] for w in range(nxt)},
        origin=origin,
    )
    gad = GadgetGraph(
        graph=g,
        matched_pairs=[],
        core_set=frozenset(range(h.n)) - taken,
        claimed_closure=closure_number(g).closure,
        case_tag="bounded_degree",
        pattern=Pattern(h),
        measured_closure=closure_number(g).closure,
        origin=origin,
        extras={"block_layers": [(b.kind, b.layers) for b in blocks]},
    )
    return gad, layout


def layout_from_gadget(gad: GadgetGraph) -> TopBlockLayout:
    """Rebuild the layout of a loaded gadget from its recorded copy layers."""
    if gad.case_tag != "bounded_degree" or "block_layers" not in gad.extras:
        raise InvalidArgument("gadget carries no top-block layers")
    h = gad.pattern.h
    td = twin_decomposition(h)
    deg = h.degrees()
    blocks = []
    for kind, layers in gad.extras["block_layers"]:
        dup = sorted(layers[0])
        blocks.append(TopBlock(td.group(dup[0]).members, kind, (), (), (), layers))
    origin = gad.origin or {w: w for w in range(gad.graph.n)}
    degs = {deg[a] for _, layers in gad.extras["block_layers"] for a in layers[0]}
    return TopBlockLayout(blocks, max(len(b.layers) for b in blocks), min(degs),
                          {w: deg[origin[w]] for w in range(gad.graph.n)}, origin)


def naive_blowups(gad: GadgetGraph, layout: TopBlockLayout) -> list[tuple[int, ...]]:
    """All sets made of one layer per block plus every non-duplicated vertex."""
    if gad.case_tag != "bounded_degree":
        raise InvalidArgument("naive blow-ups are defined for bounded-degree gadgets only")
    out = [set(gad.core_set)]
    for blk in layout.blocks:
        out = [acc | set(layer.values()) for acc in out for layer in blk.layers]
    return sorted(tuple(sorted(s)) for s in out)


def degree_excess_holds(gad: GadgetGraph, layout: TopBlockLayout) -> bool:
    """Vertices touching a duplicated vertex (or copy) without being one have degree
    above their virtual degree; every other vertex has degree equal to it."""
    g = gad.graph
    dup = set()
    for blk in layout.blocks:
        for layer in blk.layers:
            dup |= set(layer.values())
    for w in range(g.n):
        touches = w not in dup and bool(g.adj[w] & dup)
        vd = layout.virtual_degree[w]
        if touches and not g.degree(w) > vd:
            return False
        if not touches and g.degree(w) != vd:
            return False
    return True
