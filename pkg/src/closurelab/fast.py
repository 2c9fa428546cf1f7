"""Candidate-family enumeration of maximal non-induced prescribed blow-ups in c-closed hosts.

Fix a maximal blow-up S and, among its partitions, one maximising the sum of
squared part sizes.  Call a part big when it has more than max(c-1, 1)
vertices, and let T be the labels of the big parts.  Two non-adjacent vertices
complete to a big part would share >= c neighbours, so the parts next to a big
part span a clique; moving all but one vertex of such a part into the big part
would increase the sum of squares.  Hence those parts are singletons, T is
independent in H, and by maximality

    big part i (unprescribed) == common neighbourhood of its neighbouring parts
    big part i (in U)         == that neighbourhood intersected with a maximal clique

So S is the union of the small parts plus these neighbourhoods, and it is
enough to enumerate T, the small parts and one maximal clique per prescribed
big label.  Every maximal blow-up shows up as a candidate; the inclusion-maximal
candidates that are blow-ups are exactly the maximal blow-ups.
"""
from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations, product

from .blowup import EnumerationResult, _mask_is_blowup, canonical, maximal_sets
from .config import current_caps
from .errors import CapacityError, InvalidArgument, PreconditionError
from .graph import Graph, bits, is_c_closed, maximal_cliques, to_mask
from .pattern import Pattern, twin_decomposition


@dataclass(frozen=True)
class CandidateSeed:
    t_set: tuple[int, ...]
    small_parts: dict           # label -> tuple of host vertices, for labels outside t_set
    clique_choices: dict        # label in t_set and U -> maximal clique (tuple)


def _independent_label_sets(h: Graph):
    """Independent sets of h by increasing size, then lexicographically."""
    out = []
    for size in range(h.n + 1):
        for combo in combinations(range(h.n), size):
            if h.is_independent(combo):
                out.append(combo)
    return out


def _check(g: Graph, p: Pattern, c: int):
    if c < 1:
        raise InvalidArgument("c must be at least 1")
    if p.indep_prescribed:
        raise InvalidArgument("candidate enumeration handles clique prescriptions only (U- must be empty)")
    if not is_c_closed(g, c):
        raise PreconditionError(f"host graph is not {c}-closed")


class _Seeds:
    def __init__(self, g: Graph, p: Pattern, c: int, seed_cap: int):
        self.g, self.p, self.c = g, p, c
        self.small = max(c - 1, 1)
        self.big = self.small + 1
        self.full = (1 << g.n) - 1
        self.cliques = [to_mask(q) for q in maximal_cliques(g)] if p.clique_prescribed else []
        self.seed_cap = seed_cap
        # interchangeable labels: twins with the same prescription status
        td = twin_decomposition(p.h)
        self.earlier_mates = {}
        for grp in td.groups:
            for i in grp.members:
                same = [j for j in grp.members
                        if j < i and (j in p.clique_prescribed) == (i in p.clique_prescribed)]
                self.earlier_mates[i] = same

    def common(self, mask):
        out = self.full
        for v in bits(mask):
            out &= self.g.masks[v]
        return out & ~mask

    def run(self, t_set, emit):
        """Call emit(candidate_mask, seed) for every seed with this T."""
        g, p = self.g, self.p
        h = p.h
        t = set(t_set)
        forced = set()
        for i in t_set:
            forced |= h.adj[i]
        labels = [i for i in range(p.k) if i not in t]
        parts = {}
        count = 0

        def finish():
            nonlocal count
            count += 1
            if count > self.seed_cap:
                raise CapacityError(f"more than {self.seed_cap} seeds", "seeds")
            base = 0
            for m in parts.values():
                base |= m
            fixed = base
            options = []
            for i in t_set:
                nb = 0
                for j in h.adj[i]:
                    nb |= parts[j]
                cn = self.common(nb)
                if i in p.clique_prescribed:
                    opts = {}
                    for q in self.cliques:
                        m = q & cn
                        if m.bit_count() >= self.big and m not in opts:
                            opts[m] = q
                    if not opts:
                        return
                    options.append([(i, m, q) for m, q in opts.items()])
                else:
                    if cn.bit_count() < self.big:
                        return
                    fixed |= cn
            for combo in product(*options):
                cand = fixed
                for _, m, _ in combo:
                    cand |= m
                emit(cand, lambda combo=combo: CandidateSeed(
                    tuple(t_set), {i: tuple(bits(parts[i])) for i in labels},
                    {i: tuple(bits(q)) for i, _, q in combo}))

        def choose(idx, used):
            if idx == len(labels):
                finish()
                return
            i = labels[idx]
            pool = self.full & ~used
            for j in h.adj[i]:
                if j in parts:
                    for v in bits(parts[j]):
                        pool &= g.masks[v]
            floor = -1
            for j in self.earlier_mates[i]:
                if j in parts:
                    floor = max(floor, (parts[j] & -parts[j]).bit_length() - 1)
            pool &= ~((1 << (floor + 1)) - 1)
            limit = 1 if i in forced else self.small
            verts = list(bits(pool))
            clique = i in p.clique_prescribed
            for size in range(1, limit + 1):
                for combo in combinations(verts, size):
                    if clique and not g.is_clique(combo):
                        continue
                    parts[i] = to_mask(combo)
                    choose(idx + 1, used | parts[i])
                    del parts[i]

        choose(0, 0)
        return count


def _run_shard(args):
    g, p, c, seed_cap, t_sets = args
    seeds = _Seeds(g, p, c, seed_cap)
    found = {}
    total = 0
    for t_set in t_sets:
        total += seeds.run(t_set, lambda m, _s: found.setdefault(m, None))
    return list(found), total


def _candidate_masks(g, p, c, workers=1, seed_cap=None):
    seed_cap = seed_cap or current_caps().seeds
    t_sets = _independent_label_sets(p.h)
    if workers > 1 and len(t_sets) > 1:
        shards = [t_sets[i::workers] for i in range(workers)]
        with ProcessPoolExecutor(workers) as pool:
            results = list(pool.map(_run_shard, [(g, p, c, seed_cap, s) for s in shards]))
    else:
        results = [_run_shard((g, p, c, seed_cap, t_sets))]
    masks = set()
    seeds = 0
    for found, total in results:
        masks.update(found)
        seeds += total
    return sorted(masks, key=lambda m: tuple(bits(m))), seeds


def generate_candidates(g: Graph, p: Pattern, c: int, workers: int = 1) -> list[tuple[int, ...]]:
    """Deduplicated candidate vertex sets, canonically ordered."""
    _check(g, p, c)
    masks, _ = _candidate_masks(g, p, c, workers)
    return canonical(masks)


def iter_seeds(g: Graph, p: Pattern, c: int):
    """List of (candidate set, CandidateSeed) for every seed, in generation order."""
    _check(g, p, c)
    seeds = _Seeds(g, p, c, current_caps().seeds)
    out = []
    for t_set in _independent_label_sets(p.h):
        seeds.run(t_set, lambda m, mk: out.append((tuple(bits(m)), mk())))
    return out


def enumerate_maximal_fast(g: Graph, p: Pattern, c: int, workers: int = 1) -> EnumerationResult:
    _check(g, p, c)
    t0 = time.perf_counter()
    masks, seeds = _candidate_masks(g, p, c, workers)
    good = [m for m in masks if _mask_is_blowup(g, m, p, False)]
    found = maximal_sets(good)
    sets = canonical(found)
    diag = {
        "seeds": seeds,
        "candidates": len(masks),
        "blowup_candidates": len(good),
        "yield": (len(good) / len(masks)) if masks else 0.0,
    }
    return EnumerationResult(sets, len(sets), time.perf_counter() - t0, "fast", diag)
