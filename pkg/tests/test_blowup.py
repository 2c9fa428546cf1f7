import random
import pytest
from hypothesis import given, settings, strategies as st

from closurelab.blowup import (check_assignment, enumerate_maximal_blowups, find_blowup_assignment,
                               is_blowup, is_maximal_blowup, maximal_sets)
from closurelab.errors import CapacityError, InvalidArgument, PreconditionError
from closurelab.generators import (complete_graph, cycle_graph, disjoint_union, empty_graph,
                                   matching_graph, path_graph, random_graph)
from closurelab.graph import Graph, read_graph
from closurelab.pattern import Pattern

from conftest import DATA, atlas, naive_is_blowup, naive_maximal_blowups

SMALL_H = [h for h in atlas(3)] + [cycle_graph(4), path_graph(4)]


def random_pattern(rng, induced, max_k=3):
    h = rng.choice([h for h in SMALL_H if h.n <= max_k])
    labels = [rng.choice((0, 1, 2) if induced else (0, 1)) for _ in range(h.n)]
    return Pattern(h, {i for i, x in enumerate(labels) if x == 1}, {i for i, x in enumerate(labels) if x == 2})


# --- assignment search ---

def test_assignment_examples():
    c4 = cycle_graph(4)
    a = find_blowup_assignment(c4, range(4), Pattern(c4), True)
    assert a is not None and check_assignment(c4, a.phi, Pattern(c4), True)

    g = Graph(5, c4.edges() + [(4, 1), (4, 3)])
    a = find_blowup_assignment(g, range(5), Pattern(c4), True)
    assert a is not None
    assert sorted(a.parts(), key=len)[-1] in ((0, 4), (2, 4))

    p3 = path_graph(3)
    assert find_blowup_assignment(p3, range(3), Pattern(c4), False) is None
    assert find_blowup_assignment(p3, range(3), Pattern(complete_graph(3)), False) is None


def test_non_induced_rejects_independent_prescription():
    with pytest.raises(InvalidArgument):
        is_blowup(cycle_graph(4), range(4), Pattern(Graph(1, []), set(), {0}), False)


def test_out_of_range_host_vertex():
    with pytest.raises(InvalidArgument):
        is_blowup(cycle_graph(4), [0, 9], Pattern(complete_graph(2)), False)


def test_search_matches_all_maps_oracle():
    rng = random.Random(7)
    for _ in range(400):
        induced = rng.random() < 0.5
        p = random_pattern(rng, induced)
        g = random_graph(rng.randint(1, 7), rng.random(), rng.randint(0, 10 ** 6))
        s = [v for v in range(g.n) if rng.random() < 0.7]
        a = find_blowup_assignment(g, s, p, induced)
        assert (a is not None) == naive_is_blowup(g, s, p, induced)
        if a is not None:
            assert check_assignment(g, a.phi, p, induced) and a.host_set == frozenset(s)


# --- maximality ---

def test_maximality_examples():
    c4 = cycle_graph(4)
    g = disjoint_union(c4, Graph(1, []))
    assert is_maximal_blowup(g, range(4), Pattern(c4), True)
    assert not is_maximal_blowup(c4, [0, 1], Pattern(complete_graph(2)), False)
    assert is_maximal_blowup(complete_graph(4), range(4), Pattern(Graph(1, []), {0}), False)


def test_maximality_requires_a_blowup():
    with pytest.raises(PreconditionError):
        is_maximal_blowup(cycle_graph(4), [0, 2], Pattern(complete_graph(2)), False)


def test_maximality_cap():
    g = matching_graph(12)
    with pytest.raises(CapacityError) as err:
        is_maximal_blowup(g, [0, 1], Pattern(complete_graph(2)), False, cap_bits=10)
    assert err.value.cap_name == "superset_bits"


# --- enumeration ---

def test_enumeration_examples():
    r = enumerate_maximal_blowups(matching_graph(3), Pattern(Graph(1, []), set(), {0}), True)
    assert r.count == 8 and all(len(s) == 3 for s in r.sets)
    r = enumerate_maximal_blowups(cycle_graph(5), Pattern(complete_graph(2)), False)
    assert r.sets == [(0, 1, 2), (0, 1, 4), (0, 3, 4), (1, 2, 3), (2, 3, 4)]
    assert r.mode == "oracle"


def test_pattern_larger_than_host_gives_nothing():
    r = enumerate_maximal_blowups(path_graph(3), Pattern(cycle_graph(4)), True)
    assert r.count == 0 and r.sets == []


def test_oracle_cap():
    with pytest.raises(CapacityError) as err:
        enumerate_maximal_blowups(empty_graph(30), Pattern(Graph(1, [])), False)
    assert err.value.cap_name == "oracle_n"
    with pytest.raises(CapacityError):
        enumerate_maximal_blowups(empty_graph(12), Pattern(Graph(1, [])), False, cap=11)
    r = enumerate_maximal_blowups(empty_graph(12), Pattern(Graph(1, [])), False, cap=12)
    assert r.sets == [tuple(range(12))]


def test_enumeration_matches_subset_oracle():
    rng = random.Random(19)
    for _ in range(150):
        induced = rng.random() < 0.5
        p = random_pattern(rng, induced)
        g = random_graph(rng.randint(1, 7), rng.random(), rng.randint(0, 10 ** 6))
        assert enumerate_maximal_blowups(g, p, induced).sets == naive_maximal_blowups(g, p, induced)


def test_enumeration_is_sound_and_an_antichain():
    rng = random.Random(23)
    for _ in range(60):
        induced = rng.random() < 0.5
        p = random_pattern(rng, induced)
        g = random_graph(rng.randint(3, 10), rng.random(), rng.randint(0, 10 ** 6))
        sets = enumerate_maximal_blowups(g, p, induced).sets
        for s in sets:
            assert is_blowup(g, s, p, induced) and is_maximal_blowup(g, s, p, induced)
        assert not any(set(a) < set(b) for a in sets for b in sets)


def test_relabelling_permutes_output():
    rng = random.Random(29)
    for _ in range(40):
        induced = rng.random() < 0.5
        p = random_pattern(rng, induced)
        g = random_graph(rng.randint(3, 10), rng.random(), rng.randint(0, 10 ** 6))
        perm = list(range(g.n))
        rng.shuffle(perm)
        before = enumerate_maximal_blowups(g, p, induced).sets
        after = enumerate_maximal_blowups(g.relabel(perm), p, induced).sets
        assert sorted(tuple(sorted(perm[v] for v in s)) for s in before) == after


def test_prescriptions_only_remove_sets():
    rng = random.Random(31)
    for _ in range(40):
        induced = rng.random() < 0.5
        p = random_pattern(rng, induced)
        bare = Pattern(p.h)
        g = random_graph(rng.randint(3, 10), rng.random(), rng.randint(0, 10 ** 6))
        with_rules = set(enumerate_maximal_blowups(g, p, induced).sets)
        for s in enumerate_maximal_blowups(g, bare, induced).sets:
            if is_blowup(g, s, p, induced):
                assert s in with_rules


def test_workers_do_not_change_output():
    g = random_graph(11, 0.4, 5)
    p = Pattern(path_graph(3))
    assert (enumerate_maximal_blowups(g, p, True, workers=2).sets
            == enumerate_maximal_blowups(g, p, True).sets)


@settings(max_examples=100, deadline=None)
@given(st.lists(st.integers(0, 2 ** 8 - 1), max_size=12))
def test_maximal_sets_is_the_antichain(masks):
    keep = maximal_sets(masks)
    assert set(keep) <= set(masks)
    for m in masks:
        assert any(m & ~f == 0 for f in keep)
    assert not any(a != b and a & ~b == 0 for a in keep for b in keep)


@pytest.mark.parametrize("name, induced", [("regroup_c4.txt", False), ("regroup_c4_induced.txt", True)])
def test_regrouping_fixture(name, induced):
    path = DATA / name
    g = read_graph(path)
    sets = {}
    for line in path.read_text().splitlines():
        if line[:4] in ("# A:", "# B:", "# C:"):
            sets[line[2]] = [int(x) for x in line[4:].split()]
    p = Pattern(cycle_graph(4))
    a, b, c = sets["A"], sets["B"], sets["C"]
    assert set(a) < set(b) < set(c)
    assert is_blowup(g, a, p, induced) and not is_blowup(g, b, p, induced) and is_blowup(g, c, p, induced)
    assert naive_is_blowup(g, c, p, induced) and not naive_is_blowup(g, b, p, induced)


def test_small_excess_matches_search():
    from closurelab.blowup import is_blowup_small_excess
    rng = random.Random(37)
    hs = [h for h in atlas(5) if h.n >= 2 and h.m]
    for _ in range(300):
        h = rng.choice(hs)
        p = Pattern(h)
        g = random_graph(rng.randint(h.n, h.n + 4), rng.uniform(0.3, 0.9), rng.randint(0, 10 ** 6))
        size = min(g.n, h.n + rng.randint(0, 2))
        s = rng.sample(range(g.n), size)
        assert is_blowup_small_excess(g, s, p) == is_blowup(g, s, p, False) == naive_is_blowup(g, s, p, False)
    with pytest.raises(InvalidArgument):
        is_blowup_small_excess(cycle_graph(6), range(6), Pattern(complete_graph(2)))
    with pytest.raises(InvalidArgument):
        is_blowup_small_excess(cycle_graph(4), range(4), Pattern(complete_graph(2), {0}))
