from collections import Counter

import pytest
from hypothesis import given, strategies as st

from invbaxter.errors import ContractError, FormatError
from invbaxter.perm_core import ParameterProfile
from invbaxter.sink_code import (
    SinkCodePair,
    SinkDecoration,
    attach_decoration,
    decode,
    encode,
    enumerate_codes,
    enumerate_decorations,
    markable_edges,
    splice,
    strip_decoration,
    unsplice,
)
from invbaxter.walks import BinaryWalk, disjoint, enumerate_walk_tuples

M, U = True, False


def deco(corners, edges):
    return SinkDecoration(tuple(corners), tuple(edges))


def test_markable_edges():
    assert markable_edges(()) == {0}
    assert markable_edges((M, U)) == {0}
    assert markable_edges((M, M)) == {0, 1, 2}
    assert markable_edges((U, M, U)) == set()


def test_decoration_rejects_bad_edge():
    with pytest.raises(ContractError):
        deco((M, U), (False, True, False))


@pytest.mark.parametrize(
    "d, code",
    [
        (deco((), (False,)), SinkCodePair("E", (0, 0))),
        (deco((), (True,)), SinkCodePair("", (1,))),
        (deco((M, U), (True, False, False)), SinkCodePair("EN", (1, 0))),
    ],
)
def test_encode_decode_examples(d, code):
    assert encode(d) == code
    assert decode(code, d.i) == d


@pytest.mark.parametrize(
    "code, i",
    [
        (SinkCodePair("NE", (0, 0)), 1),       # starts with North
        (SinkCodePair("E", (0,)), 0),          # one weight short
        (SinkCodePair("E", (1, 1)), 0),        # length + weight too big
        (SinkCodePair("EX", (0, 0)), 1),
        (SinkCodePair("E", (-1, 1)), 0),
    ],
)
def test_decode_rejects_malformed(code, i):
    with pytest.raises(FormatError):
        decode(code, i)


def brute_decorations(i):
    """All boolean vectors, filtered by the incidence rule."""
    out = []
    for cb in range(1 << i):
        corners = [bool(cb >> j & 1) for j in range(i)]
        for eb in range(1 << (i + 1)):
            edges = [bool(eb >> j & 1) for j in range(i + 1)]
            ok = all(
                not edges[j] or ((j == 0 or corners[j - 1]) and (j == i or corners[j]))
                for j in range(i + 1)
            )
            if ok:
                out.append(deco(corners, edges))
    return out


@pytest.mark.parametrize("i", range(0, 9))
def test_round_trips_exhaustive(i):
    decorations = list(enumerate_decorations(i))
    assert set(decorations) == set(brute_decorations(i))
    assert len(set(decorations)) == len(decorations)
    codes = list(enumerate_codes(i))
    assert len(set(codes)) == len(codes) == len(decorations)
    for d in decorations:
        assert decode(encode(d), i) == d
    for c in codes:
        assert encode(decode(c, i)) == c


@pytest.mark.parametrize("i", range(0, 9))
def test_encode_counts(i):
    by_stats = Counter()
    code_stats = Counter()
    for d in enumerate_decorations(i):
        c = encode(d)
        p, q = d.p, d.q
        assert len(c.s) == q + 2 - p
        assert sum(c.s) == p
        assert c.w.count("E") == q + 1 - p
        assert c.w.count("N") == i - q
        assert len(c.w) == i + 1 - p
        assert (c.w == "") == all(d.edge_marks)
        assert c.w == "" or c.w[0] == "E"
        by_stats[p, q] += 1
    for c in enumerate_codes(i):
        p = sum(c.s)
        code_stats[p, c.w.count("E") + p - 1] += 1
    assert by_stats == code_stats


@st.composite
def decorations(draw):
    i = draw(st.integers(0, 40))
    corners = draw(st.lists(st.booleans(), min_size=i, max_size=i))
    allowed = markable_edges(corners)
    edges = [j in allowed and draw(st.booleans()) for j in range(i + 1)]
    return deco(corners, edges)


@given(decorations())
def test_round_trip_large(d):
    assert decode(encode(d), d.i) == d


@pytest.mark.parametrize(
    "steps, i, w, expected",
    [("NE", 0, "E", "NE"), ("EN", 1, "E", "E"), ("ENN", 2, "", "")],
)
def test_splice_examples(steps, i, w, expected):
    start = (0, -1)
    assert splice(BinaryWalk(start, steps), i, w) == BinaryWalk(start, expected)


def test_splice_requires_exact_suffix():
    with pytest.raises(ContractError):
        splice(BinaryWalk((0, -1), "ENN"), 1, "E")
    with pytest.raises(ContractError):
        splice(BinaryWalk((0, -1), "NN"), 2, "")


@pytest.mark.parametrize(
    "steps, w2_end, expected",
    [("E", (0, 1), "EN"), ("", (0, 2), "ENN"), ("NE", (0, 1), "NE")],
)
def test_unsplice_examples(steps, w2_end, expected):
    start = (0, -1)
    assert unsplice(BinaryWalk(start, steps), w2_end) == BinaryWalk(start, expected)


def test_unsplice_without_completion():
    with pytest.raises(ContractError):
        unsplice(BinaryWalk((0, -1), "NNN"), (0, 0))


@pytest.mark.parametrize("m", range(1, 9))
def test_strip_attach_round_trip(m):
    for n in range(1, m // 2 + 1):
        p = m - 2 * n
        for k in range(n + p):
            for r in range(n - k + 1):
                prof = ParameterProfile(n, k, p, r)
                for t in enumerate_walk_tuples(prof):
                    w3, d = strip_decoration(t)
                    assert attach_decoration(t.w1, t.w2, w3, d) == t
                    assert (d.p, d.q) == (p, p + r - 1)
                    # undecorated third walk: length n + p, k + 1 East steps
                    assert len(w3) == n + p and w3.east == k + 1
                    assert disjoint(t.w1, t.w2, w3)


def test_serialization():
    d = deco((M, U, M), (True, False, False, True))
    assert d.to_strings() == ("101", "1001")
    assert SinkDecoration.from_strings(*d.to_strings()) == d
