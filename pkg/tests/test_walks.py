import random
from itertools import product

import pytest
from hypothesis import given, strategies as st

from invbaxter.errors import CapacityError, ContractError
from invbaxter.perm_core import ParameterProfile, profile_census
from invbaxter.walks import (
    TUPLE_STARTS,
    BinaryWalk,
    LatticePoint,
    RelaxedTuple,
    WalkTuple,
    count_disjoint_routings,
    disjoint,
    enumerate_disjoint_triples,
    enumerate_walk_tuples,
    is_relaxed_tuple,
    lgv_count_3,
    lgv_matrix,
    tuple_ends,
    walk_count,
    walk_tuple_count,
)


def brute_walks(a, b):
    """Every E/N word, filtered by endpoint."""
    dx, dy = b[0] - a[0], b[1] - a[1]
    if dx + dy < 0:
        return []
    out = []
    for letters in product("EN", repeat=dx + dy):
        w = BinaryWalk(LatticePoint(*a), "".join(letters))
        if w.end == tuple(b):
            out.append(w)
    return out


def brute_triples(starts, ends):
    """Cartesian product of all walks, filtered by disjointness."""
    pools = [brute_walks(a, b) for a, b in zip(starts, ends)]
    return [t for t in product(*pools) if disjoint(*t)]


def test_walk_count_examples():
    assert walk_count((0, 0), (2, 1)) == 3
    assert {w.steps for w in brute_walks((0, 0), (2, 1))} == {"EEN", "ENE", "NEE"}
    assert walk_count((0, 0), (0, 0)) == 1
    assert walk_count((0, 0), (-1, 5)) == 0


@given(st.integers(-3, 3), st.integers(-3, 3), st.integers(-3, 6), st.integers(-3, 6))
def test_walk_count_brute(ax, ay, bx, by):
    assert walk_count((ax, ay), (bx, by)) == len(brute_walks((ax, ay), (bx, by)))


@given(st.integers(-5, 5), st.integers(-5, 5), st.integers(0, 8), st.integers(0, 8))
def test_walk_count_pascal(ax, ay, dx, dy):
    a, b = (ax, ay), (ax + dx, ay + dy)
    if (dx, dy) != (0, 0):
        assert walk_count(a, b) == walk_count((ax + 1, ay), b) + walk_count((ax, ay + 1), b)


def test_lgv_examples():
    ends = [(-1, 2), (0, 1), (1, -1)]
    assert lgv_matrix(TUPLE_STARTS, ends) == [[1, 1, 0], [0, 1, 0], [0, 1, 1]]
    assert lgv_count_3(TUPLE_STARTS, ends) == 1
    assert len(list(enumerate_disjoint_triples(TUPLE_STARTS, ends))) == 1
    pts = [(0, 0), (3, 1), (5, -2)]
    assert lgv_count_3(pts, pts) == 1
    ends = [(-1, 1), (0, 0), (1, -1)]
    assert lgv_count_3(TUPLE_STARTS, ends) == len(brute_triples(TUPLE_STARTS, ends)) == 1


def test_lgv_negative_determinant_raises():
    # only the crossed routing exists: first start can reach only the
    # second end, and vice versa
    starts = [(0, 0), (1, -3), (20, -20)]
    ends = [(2, -2), (0, 3), (20, -20)]
    assert lgv_matrix(starts, ends) == [[0, 1, 0], [2, 0, 0], [0, 0, 1]]
    with pytest.raises(ContractError):
        lgv_count_3(starts, ends)


def test_enumeration_empty_and_bound():
    assert list(enumerate_disjoint_triples(TUPLE_STARTS, [(-1, 0), (0, -1), (0, -2)])) == []
    with pytest.raises(CapacityError):
        list(enumerate_disjoint_triples(TUPLE_STARTS, [(5, 6), (6, 5), (7, 3)], max_steps=10))


def test_enumeration_matches_brute_and_is_ordered():
    ends = tuple_ends(ParameterProfile(3, 1, 1, 1))
    got = list(enumerate_disjoint_triples(TUPLE_STARTS, ends))
    expected = sorted(brute_triples(TUPLE_STARTS, ends), key=lambda t: tuple(w.steps for w in t))
    assert got == expected
    assert len(got) == lgv_count_3(TUPLE_STARTS, ends)


def test_random_configurations_against_brute():
    rng = random.Random(7)
    checked = 0
    while checked < 40:
        starts = [(0, 0)]
        ends = [(rng.randint(0, 4), rng.randint(0, 4))]
        for _ in range(2):
            starts.append((starts[-1][0] + rng.randint(0, 2), starts[-1][1] - rng.randint(1, 2)))
            ends.append((ends[-1][0] + rng.randint(1, 2), ends[-1][1] - rng.randint(0, 2)))
        if sum(abs(b[0] - a[0]) + abs(b[1] - a[1]) for a, b in zip(starts, ends)) > 12:
            continue
        routings = count_disjoint_routings(starts, ends)
        assert routings[(0, 1, 2)] == len(brute_triples(starts, ends))
        assert sum(v for s, v in routings.items() if s != (0, 1, 2)) == 0
        assert lgv_count_3(starts, ends) == routings[(0, 1, 2)]
        checked += 1


@pytest.mark.parametrize(
    "prof, expected",
    [((1, 0, 0, 1), 1), ((1, 0, 1, 1), 2), ((1, 1, 1, 0), 1), ((1, 2, 0, 0), 0), ((2, 0, -1, 0), 0)],
)
def test_walk_tuple_count_examples(prof, expected):
    assert walk_tuple_count(prof) == expected
    assert len(list(enumerate_walk_tuples(prof))) == expected


def test_walk_tuple_examples():
    (t,) = enumerate_walk_tuples((1, 0, 0, 1))
    assert (t.w1.steps, t.w2.steps, t.w3.steps, t.s) == ("", "", "E", (0, 0))
    tuples = list(enumerate_walk_tuples((1, 0, 1, 1)))
    assert [t.s for t in tuples] == [(0, 1), (1, 0)]
    assert len({(t.w1, t.w2, t.w3) for t in tuples}) == 1


@pytest.mark.parametrize("m", range(1, 9))
def test_tuple_counts_match_census(m):
    census = profile_census(m)
    for n in range(1, m // 2 + 1):
        p = m - 2 * n
        for k in range(n + p + 1):
            for r in range(n + 2):
                prof = ParameterProfile(n, k, p, r)
                tuples = list(enumerate_walk_tuples(prof))
                assert len(tuples) == walk_tuple_count(prof) == census.get(prof, 0), prof
                for t in tuples:
                    assert t.is_valid(prof)
                    assert t.profile() == prof
                    if p == 0:
                        assert t.w3.steps.startswith("E")


def test_walk_tuples_are_relaxed_tuples():
    for t in enumerate_walk_tuples((3, 1, 2, 1)):
        assert is_relaxed_tuple(t.w1, t.w2, t.w3, t.s)
        e = RelaxedTuple(t.w1, t.w2, t.w3, t.s)
        assert (e.a, e.b) == (1, 2)


def test_relaxed_tuple_rejects_bad_weights():
    t = next(enumerate_walk_tuples((2, 0, 1, 1)))
    with pytest.raises(ContractError):
        RelaxedTuple(t.w1, t.w2, t.w3, t.s + (0,))


def test_walk_tuple_serialization():
    t = next(enumerate_walk_tuples((2, 1, 1, 1)))
    assert WalkTuple.from_dict(t.to_dict()) == t
    assert t.to_dict()["w1"]["start"] == [-1, 1]
