"""Pattern graphs with clique/independent prescriptions, twin structure and the
polynomial/exponential classifier for induced prescribed blow-ups."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .errors import GraphParseError, InvalidArgument
from .graph import Graph, _parse_graph_block, dump_graph


@dataclass(frozen=True)
class Pattern:
    """Base graph h with U+ (parts forced to be cliques) and U- (parts forced independent)."""

    h: Graph
    clique_prescribed: frozenset = frozenset()
    indep_prescribed: frozenset = frozenset()

    def __post_init__(self):
        plus = frozenset(self.clique_prescribed)
        minus = frozenset(self.indep_prescribed)
        object.__setattr__(self, "clique_prescribed", plus)
        object.__setattr__(self, "indep_prescribed", minus)
        if self.h.n < 1:
            raise InvalidArgument("pattern needs at least one vertex")
        if plus & minus:
            raise InvalidArgument(f"U+ and U- overlap in {sorted(plus & minus)}")
        for v in plus | minus:
            if not 0 <= v < self.h.n:
                raise InvalidArgument(f"prescribed vertex {v} out of range")

    @property
    def k(self) -> int:
        return self.h.n

    @property
    def unprescribed(self) -> frozenset:
        return frozenset(range(self.k)) - self.clique_prescribed - self.indep_prescribed

    def __str__(self):
        return (f"Pattern(k={self.k}, edges={self.h.edges()}, "
                f"U+={sorted(self.clique_prescribed)}, U-={sorted(self.indep_prescribed)})")


def load_pattern(text: str, source: Optional[str] = None) -> Pattern:
    """Graph block followed by optional `U+ i j ...` and `U- i j ...` lines."""
    h, rest = _parse_graph_block(text.splitlines(), source)
    plus, minus = set(), set()
    for lineno, line in rest:
        head, *tail = line.split()
        if head not in ("U+", "U-"):
            raise GraphParseError(f"expected 'U+ ...' or 'U- ...', got {line!r}", lineno, source)
        try:
            vs = [int(t) for t in tail]
        except ValueError:
            raise GraphParseError(f"non-integer vertex in {line!r}", lineno, source) from None
        for v in vs:
            if not 0 <= v < h.n:
                raise GraphParseError(f"prescribed vertex {v} out of range [0, {h.n})", lineno, source)
        (plus if head == "U+" else minus).update(vs)
    if plus & minus:
        raise GraphParseError(f"vertices {sorted(plus & minus)} are in both U+ and U-", None, source)
    if h.n == 0:
        raise GraphParseError("pattern graph has no vertices", None, source)
    return Pattern(h, frozenset(plus), frozenset(minus))


def dump_pattern(p: Pattern) -> str:
    out = dump_graph(p.h)
    if p.clique_prescribed:
        out += "U+ " + " ".join(map(str, sorted(p.clique_prescribed))) + "\n"
    if p.indep_prescribed:
        out += "U- " + " ".join(map(str, sorted(p.indep_prescribed))) + "\n"
    return out


def read_pattern(path) -> Pattern:
    with open(path) as fh:
        return load_pattern(fh.read(), source=str(path))


# --- twins ---------------------------------------------------------------------

@dataclass(frozen=True)
class TwinGroup:
    members: tuple[int, ...]
    is_clique_group: bool
    is_independent_group: bool
    is_bad: bool


@dataclass(frozen=True)
class TwinDecomposition:
    groups: tuple[TwinGroup, ...]
    plus_groups: tuple[tuple[int, ...], ...]
    group_of: tuple[int, ...] = field(repr=False)

    def group(self, v: int) -> TwinGroup:
        return self.groups[self.group_of[v]]


def is_bad_vertex(h: Graph, v: int) -> bool:
    """A vertex is bad when its neighbourhood is a clique (vacuously for degree <= 1)."""
    return h.is_clique(h.adj[v])


def twin_decomposition(h: Graph) -> TwinDecomposition:
    # false twins share N(v), true twins share N[v]; a vertex cannot have both kinds
    by_open, by_closed = {}, {}
    for v in range(h.n):
        by_open.setdefault(h.masks[v], []).append(v)
        by_closed.setdefault(h.masks[v] | 1 << v, []).append(v)
    assigned = {}
    raw = []
    for v in range(h.n):
        if v in assigned:
            continue
        cls = by_open[h.masks[v]]
        if len(cls) == 1:
            cls = by_closed[h.masks[v] | 1 << v]
        for w in cls:
            assigned[w] = len(raw)
        raw.append(tuple(cls))
    groups = []
    for members in raw:
        single = len(members) == 1
        adjacent = not single and members[1] in h.adj[members[0]]
        groups.append(TwinGroup(
            members=members,
            is_clique_group=single or adjacent,
            is_independent_group=single or not adjacent,
            is_bad=is_bad_vertex(h, members[0]),
        ))
    plus = []
    for grp in groups:
        if grp.is_clique_group:
            plus.append(grp.members)
        else:
            plus.extend((v,) for v in grp.members)
    plus.sort()
    group_of = tuple(assigned[v] for v in range(h.n))
    return TwinDecomposition(tuple(groups), tuple(plus), group_of)


def are_twins(h: Graph, u: int, v: int) -> bool:
    return h.adj[u] - {v} == h.adj[v] - {u}


def bad_twin_groups(h: Graph) -> list[tuple[int, ...]]:
    return [g.members for g in twin_decomposition(h).groups if g.is_bad]


# --- classifier ----------------------------------------------------------------

POLYNOMIAL = "Polynomial"
EXPONENTIAL = "Exponential"
POLYNOMIAL_TAGS = ("no-bad", "1a", "1b", "1c")
EXPONENTIAL_TAGS = ("2a", "2b", "2c", "multi-bad")


@dataclass(frozen=True)
class DichotomyVerdict:
    kind: str
    case_tag: str
    bad_group: Optional[tuple[int, ...]]
    bound_note: str

    def __str__(self):
        return f"{self.kind} ({self.case_tag})"


_POLY_NOTE = "at most (2n)^k (n^2 2^c)^k maximal induced prescribed blow-ups in any c-closed n-vertex host"
_EXP_NOTE = ("some (k+1)-closed n-vertex host has at least 2^(n/2 - 3k^2 - 2k) maximal induced "
             "prescribed blow-ups")


def classify_dichotomy(p: Pattern) -> DichotomyVerdict:
    bad = bad_twin_groups(p.h)
    plus, minus = p.clique_prescribed, p.indep_prescribed

    def verdict(tag, group=None):
        poly = tag in POLYNOMIAL_TAGS
        return DichotomyVerdict(POLYNOMIAL if poly else EXPONENTIAL, tag, group,
                                _POLY_NOTE if poly else _EXP_NOTE)

    if not bad:
        return verdict("no-bad")
    if len(bad) >= 2:
        return verdict("multi-bad")
    group = bad[0]
    members = set(group)
    free = members - plus - minus
    if len(group) == 1 or group[1] in p.h.adj[group[0]]:
        if free:
            return verdict("1a", group)
        if members <= plus:
            return verdict("1b", group)
        return verdict("2a", group)
    not_minus = members - minus
    if len(free) == 1 and len(not_minus) == 1:
        return verdict("1c", group)
    if not free and members & minus:
        return verdict("2b", group)
    if len(not_minus) >= 2:
        return verdict("2c", group)
    raise AssertionError(f"classifier fell through for {p}")  # cases are exhaustive

