"""Prescribed blow-ups: assignment search, maximality test and the brute-force enumerator.

A set S is a blow-up of the pattern H when some surjection phi: S -> V(H) makes
every part of an H-edge complete to each other, every U+ part a clique, and, in
induced mode, leaves parts of H-non-edges anticomplete and U- parts independent.
"""
from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional

import networkx as nx
from networkx.algorithms.isomorphism import GraphMatcher

from .config import current_caps
from .errors import CapacityError, InvalidArgument, PreconditionError
from .graph import Graph, bits, to_mask
from .pattern import Pattern, twin_decomposition


@dataclass(frozen=True)
class BlowupAssignment:
    host_set: frozenset
    phi: dict
    induced: bool

    def parts(self) -> list[tuple[int, ...]]:
        k = max(self.phi.values()) + 1 if self.phi else 0
        out = [[] for _ in range(k)]
        for v in sorted(self.phi):
            out[self.phi[v]].append(v)
        return [tuple(p) for p in out]


@dataclass
class EnumerationResult:
    sets: list
    count: int
    elapsed: float
    mode: str
    diagnostics: dict = field(default_factory=dict)


def check_assignment(g: Graph, phi: dict, p: Pattern, induced: bool) -> bool:
    """Direct check of the blow-up conditions for an explicit map phi (no search)."""
    if set(phi.values()) != set(range(p.k)):
        return False
    hs = sorted(phi)
    for a in range(len(hs)):
        x = hs[a]
        for b in range(a + 1, len(hs)):
            y = hs[b]
            i, j = phi[x], phi[y]
            edge = y in g.adj[x]
            if i == j:
                if i in p.clique_prescribed and not edge:
                    return False
                if induced and i in p.indep_prescribed and edge:
                    return False
            elif j in p.h.adj[i]:
                if not edge:
                    return False
            elif induced and edge:
                return False
    return True


def _check_mode(p: Pattern, induced: bool):
    if not induced and p.indep_prescribed:
        raise InvalidArgument("independent prescriptions (U-) only make sense for induced blow-ups")


class _Search:
    """Backtracking over phi on the hosts of one set.

    State is one bitmask per pattern label: the hosts that may still receive it.
    While some label is unused we branch on the unused label with the fewest
    candidate hosts ("which host is the first to get it"); once all labels are in
    use we branch on the host with the fewest options.  Twin labels with the same
    prescription are interchangeable, so their first occurrences are ordered.
    """

    def __init__(self, g: Graph, hosts, p: Pattern, induced: bool, surjective: bool = True):
        self.k = k = p.k
        self.induced = induced
        self.surjective = surjective
        smask = to_mask(hosts)
        deg = {v: (g.masks[v] & smask).bit_count() for v in hosts}
        order = sorted(hosts, key=lambda v: (-deg[v], v))
        self.order = order
        s = self.s = len(order)
        pos = {v: i for i, v in enumerate(order)}
        adj = []
        for v in order:
            m = 0
            for w in bits(g.masks[v] & smask):
                m |= 1 << pos[w]
            adj.append(m)
        full = (1 << s) - 1
        self.adj = adj
        self.nonadj = [full & ~adj[x] & ~(1 << x) for x in range(s)]
        h = p.h
        self.hmask = h.masks
        hdeg = [h.degree(i) for i in range(k)]
        plus, minus = p.clique_prescribed, p.indep_prescribed
        self.all_labels = (1 << k) - 1

        # hosts y that may share label i with host x
        cn_rows = None
        if surjective:
            cn_rows = [[(adj[x] & adj[y]).bit_count() for y in range(s)] for x in range(s)]
        share_cache = {}
        self.share = []
        for i in range(k):
            key = (i in plus, induced and i in minus, hdeg[i] if surjective else 0)
            if key not in share_cache:
                rows = []
                for x in range(s):
                    m = full & ~(1 << x)
                    if key[0]:
                        m &= adj[x]
                    if key[1]:
                        m &= self.nonadj[x]
                    if key[2]:
                        row = cn_rows[x]
                        m &= to_mask(y for y in range(s) if row[y] >= key[2])
                    rows.append(m)
                share_cache[key] = rows
            self.share.append(share_cache[key])

        if surjective:
            degs = [adj[x].bit_count() for x in range(s)]
            self.start = [to_mask(x for x in range(s) if degs[x] >= hdeg[i]) for i in range(k)]
        else:
            self.start = [full] * k
        self.shareable = [any(self.share[i][x] & self.start[i] for x in bits(self.start[i]))
                          for i in range(k)]

        # interchangeable labels: twins with identical prescription status
        td = twin_decomposition(h)
        self.classmates = [0] * k
        for grp in td.groups:
            for status in (plus, minus, None):
                if status is None:
                    cls = [v for v in grp.members if v not in plus and v not in minus]
                else:
                    cls = [v for v in grp.members if v in status]
                m = to_mask(cls)
                for v in cls:
                    self.classmates[v] = m
        self.assign = [-1] * s
        self.nodes = 0
        self._reach_memo = {}

    def run(self) -> Optional[dict]:
        if self.surjective and self.s < self.k:
            return None
        if self._rec(list(self.start), (1 << self.s) - 1, 0):
            return {self.order[x]: self.assign[x] for x in range(self.s)}
        return None

    def _place(self, sup, x, i):
        hn = self.hmask[i]
        a, na = self.adj[x], self.nonadj[x]
        keep = ~(1 << x)
        out = []
        for j in range(self.k):
            m = sup[j] & keep
            if j == i:
                m &= self.share[i][x]
            elif hn >> j & 1:
                m &= a
            elif self.induced:
                m &= na
            out.append(m)
        return out

    def _reach(self, mask):
        out = self._reach_memo.get(mask)
        if out is None:
            out = 0
            for y in bits(mask):
                out |= self.adj[y]
            self._reach_memo[mask] = out
        return out

    def _propagate(self, sup, used):
        """Every host of an unused label l must be adjacent to the hosts of each
        H-neighbour j of l, so j keeps only hosts next to some candidate of l."""
        hm = self.hmask
        unused = self.all_labels & ~used
        todo = unused
        while todo:
            l = (todo & -todo).bit_length() - 1
            todo &= todo - 1
            reach = self._reach(sup[l])
            for j in bits(hm[l]):
                m = sup[j] & reach
                if m != sup[j]:
                    sup[j] = m
                    todo |= (1 << j) & unused
        return sup

    def _rec(self, sup, unassigned, used) -> bool:
        self.nodes += 1
        if not unassigned:
            return used == self.all_labels or not self.surjective
        if self.surjective and used != self.all_labels:
            sup = self._propagate(list(sup), used)
        cover = 0
        for m in sup:
            cover |= m
        if unassigned & ~cover:
            return False
        k = self.k
        unused = self.all_labels & ~used
        if self.surjective and unused:
            left = unassigned.bit_count()
            if unused.bit_count() > left:
                return False
            cap, best, best_c = 0, -1, 0
            for l in range(k):
                c = sup[l].bit_count()
                if used >> l & 1:
                    if self.shareable[l]:
                        cap += c
                else:
                    if c == 0:
                        return False
                    cap += c if self.shareable[l] else 1
                    if best < 0 or c < best_c:
                        best, best_c = l, c
            if cap < left:
                return False
            # branch on the first unused label of best's interchangeable class
            mates = self.classmates[best] & unused
            lab = (mates & -mates).bit_length() - 1
            later = mates & ~(1 << lab)
            for x in bits(sup[lab]):
                nsup = self._place(sup, x, lab)
                below = ~((1 << (x + 1)) - 1)
                nsup[lab] &= below
                for l2 in bits(later):
                    nsup[l2] &= below
                self.assign[x] = lab
                if self._rec(nsup, unassigned & ~(1 << x), used | 1 << lab):
                    return True
            return False

        best_x, best_dom, best_c = -1, 0, k + 1
        for x in bits(unassigned):
            dom = 0
            for l in range(k):
                if sup[l] >> x & 1:
                    dom |= 1 << l
            c = dom.bit_count()
            if c < best_c:
                best_x, best_dom, best_c = x, dom, c
                if c <= 1:
                    break
        x = best_x
        if not self.surjective:
            # among unused interchangeable labels only the first needs trying
            dom = best_dom & used
            for l in bits(best_dom & unused):
                mates = self.classmates[l] & unused
                if (mates & -mates).bit_length() - 1 == l:
                    dom |= 1 << l
            best_dom = dom
        for l in bits(best_dom):
            self.assign[x] = l
            if self._rec(self._place(sup, x, l), unassigned & ~(1 << x), used | 1 << l):
                return True
        return False


def find_blowup_assignment(g: Graph, s, p: Pattern, induced: bool) -> Optional[BlowupAssignment]:
    _check_mode(p, induced)
    hosts = sorted(set(s))
    for v in hosts:
        if not 0 <= v < g.n:
            raise InvalidArgument(f"vertex {v} not in the host graph")
    phi = _Search(g, hosts, p, induced).run()
    if phi is None:
        return None
    return BlowupAssignment(frozenset(hosts), phi, induced)


def is_blowup(g: Graph, s, p: Pattern, induced: bool) -> bool:
    return find_blowup_assignment(g, s, p, induced) is not None


def _mask_is_blowup(g, mask, p, induced):
    return _Search(g, list(bits(mask)), p, induced).run() is not None


def _mask_is_partial(g, mask, p, induced):
    return _Search(g, list(bits(mask)), p, induced, surjective=False).run() is not None


def _partial_is_trivial(p: Pattern, induced: bool) -> bool:
    """True when every vertex set admits a (not necessarily onto) consistent labelling."""
    return bool(p.unprescribed) or (not induced and len(p.clique_prescribed) < p.k)


def is_maximal_blowup(g: Graph, s, p: Pattern, induced: bool, cap_bits: Optional[int] = None) -> bool:
    """Full superset search: True iff no strict superset of s is a blow-up.

    Supersets are pruned only by the hereditary test "some labelling, not
    necessarily onto, satisfies all pairwise rules": a set failing it has no
    blow-up superset.  One-vertex extensions are tried first as a fast path.
    """
    _check_mode(p, induced)
    cap_bits = cap_bits or current_caps().superset_bits
    base = to_mask(s)
    if not _mask_is_blowup(g, base, p, induced):
        raise PreconditionError(f"{sorted(s)} is not a blow-up of the pattern")
    rest = [v for v in range(g.n) if not base >> v & 1]
    if len(rest) > cap_bits:
        raise CapacityError(f"superset search over 2^{len(rest)} sets exceeds 2^{cap_bits}",
                            "superset_bits")
    for v in rest:
        if _mask_is_blowup(g, base | 1 << v, p, induced):
            return False
    trivial = _partial_is_trivial(p, induced)

    def extend(mask, start, added):
        for idx in range(start, len(rest)):
            m2 = mask | 1 << rest[idx]
            if not trivial and not _mask_is_partial(g, m2, p, induced):
                continue
            if added >= 1 and _mask_is_blowup(g, m2, p, induced):
                return True
            if extend(m2, idx + 1, added + 1):
                return True
        return False

    return not extend(base, 0, 0)


def maximal_sets(masks) -> list[int]:
    """Inclusion-maximal members of a family of bitmasks."""
    keep = []
    for m in sorted(set(masks), key=lambda m: -m.bit_count()):
        if not any(m & ~f == 0 for f in keep):
            keep.append(m)
    return keep


def canonical(masks) -> list[tuple[int, ...]]:
    return sorted(tuple(bits(m)) for m in masks)


def _family(g: Graph, p: Pattern, induced: bool):
    """Vertex sets worth testing, largest first: all sets of size >= k, or (when the
    pairwise rules alone are restrictive) only the hereditary family of consistently
    labellable sets, found by depth-first growth."""
    n, k = g.n, p.k
    if _partial_is_trivial(p, induced):
        for size in range(n, k - 1, -1):
            for combo in combinations(range(n), size):
                yield to_mask(combo)
        return
    found = []

    def grow(mask, start):
        for v in range(start, n):
            m2 = mask | 1 << v
            if _mask_is_partial(g, m2, p, induced):
                found.append(m2)
                grow(m2, v + 1)

    grow(0, 0)
    found = [m for m in found if m.bit_count() >= k]
    found.sort(key=lambda m: (-m.bit_count(), m))
    yield from found


def _blowup_flags(args):
    g, p, induced, chunk = args
    return [_mask_is_blowup(g, m, p, induced) for m in chunk]


def enumerate_maximal_blowups(g: Graph, p: Pattern, induced: bool, cap: Optional[int] = None,
                              workers: int = 1) -> EnumerationResult:
    """Brute-force oracle: every maximal blow-up vertex set of p in g."""
    _check_mode(p, induced)
    cap = cap or current_caps().oracle_n
    if g.n > cap:
        raise CapacityError(f"oracle enumeration on {g.n} vertices exceeds cap {cap}", "oracle_n")
    t0 = time.perf_counter()
    if p.k > g.n:
        return EnumerationResult([], 0, time.perf_counter() - t0, "oracle", {"tested": 0})
    tested = skipped = 0
    if workers > 1:
        family = list(_family(g, p, induced))
        size = max(1, len(family) // (workers * 8))
        chunks = [family[i:i + size] for i in range(0, len(family), size)]
        with ProcessPoolExecutor(workers) as pool:
            flags = [f for part in pool.map(_blowup_flags, [(g, p, induced, c) for c in chunks])
                     for f in part]
        tested = len(family)
        found = maximal_sets(m for m, ok in zip(family, flags) if ok)
    else:
        # largest first: an untested set not inside a found blow-up that is itself
        # a blow-up has no blow-up superset, so it is maximal
        found = []
        for m in _family(g, p, induced):
            if any(m & ~f == 0 for f in found):
                skipped += 1
                continue
            tested += 1
            if _mask_is_blowup(g, m, p, induced):
                found.append(m)
    sets = canonical(found)
    return EnumerationResult(sets, len(sets), time.perf_counter() - t0, "oracle",
                             {"tested": tested, "skipped": skipped})


def is_blowup_small_excess(g: Graph, s, p: Pattern) -> bool:
    """Non-induced, unprescribed blow-up test for sets with at most k + 2 vertices.

    All parts but at most two are singletons, so it is enough to try every way of
    merging hosts (two pairs, one triple or one pair) whose members share at least
    min-degree(H) neighbours in s, and ask whether H is a spanning subgraph of the
    quotient.  Much faster than the general search on large sparse patterns.
    """
    if p.clique_prescribed or p.indep_prescribed:
        raise InvalidArgument("small-excess test handles unprescribed patterns only")
    xs = sorted(set(s))
    k = p.k
    extra = len(xs) - k
    if extra < 0:
        return False
    if extra > 2:
        raise InvalidArgument("small-excess test needs |s| <= k + 2")
    xset = set(xs)
    low = min(p.h.degrees())
    share = {x: {y for y in xs if y != x and len(g.adj[x] & g.adj[y] & xset) >= low} for x in xs}
    pairs = [(x, y) for x in xs for y in sorted(share[x]) if x < y]
    if extra == 0:
        merges = [[]]
    elif extra == 1:
        merges = [[pr] for pr in pairs]
    else:
        merges = [[a, b] for a, b in combinations(pairs, 2) if not set(a) & set(b)]
        merges += [[(x, y, z)] for x, y in pairs for z in sorted(share[x] & share[y]) if z > y]
    target = nx.Graph(p.h.edges())
    target.add_nodes_from(range(k))
    for parts in merges:
        merged = {v for part in parts for v in part}
        blocks = list(parts) + [(v,) for v in xs if v not in merged]
        quotient = nx.Graph()
        quotient.add_nodes_from(range(len(blocks)))
        for i, j in combinations(range(len(blocks)), 2):
            if all(b in g.adj[a] for a in blocks[i] for b in blocks[j]):
                quotient.add_edge(i, j)
        if quotient.number_of_edges() < p.h.m:
            continue
        if GraphMatcher(quotient, target).subgraph_is_monomorphic():
            return True
    return False
