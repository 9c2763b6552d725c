"""Word combinatorics: Lyndon tests and factorizations against brute force,
the computed convex orders against the printed per-type lists, minimal pairs,
convexity and the telescopic structure."""

from __future__ import annotations

import itertools

import pytest

from conftest import order
from rsqg.lyndon import (
    ConvexOrder,
    canonical_factorization,
    check_minimal,
    is_convex,
    is_lyndon,
    minimal_pair,
    standard_factorization,
    telescoped,
)

ALL = [("A", r) for r in range(1, 6)] + [(f, r) for f in "BC" for r in range(2, 6)] + [
    ("D", r) for r in range(2, 6)
]


def brute_lyndon(w):
    return all(tuple(w) < tuple(w[a:]) for a in range(1, len(w)))


def test_is_lyndon_examples():
    assert is_lyndon((1, 2))
    assert not is_lyndon((2, 1))
    assert is_lyndon((1, 2, 2))
    assert not is_lyndon((1, 2, 1))
    with pytest.raises(ValueError):
        is_lyndon(())


def test_is_lyndon_brute_force():
    for length in range(1, 6):
        for w in itertools.product((1, 2, 3), repeat=length):
            assert is_lyndon(w) == brute_lyndon(w)


def brute_standard_factorization(w):
    """Longest proper prefix that is Lyndon, by scanning."""
    for a in range(len(w) - 1, 0, -1):
        if brute_lyndon(w[:a]):
            return w[:a], w[a:]
    raise AssertionError


def test_standard_factorization_examples():
    assert standard_factorization((1, 1, 2)) == ((1,), (1, 2))
    assert standard_factorization((1, 2)) == ((1,), (2,))
    assert standard_factorization((1, 2, 2)) == ((1, 2), (2,))
    with pytest.raises(ValueError):
        standard_factorization((2, 1))


def test_standard_factorization_brute_force():
    for length in range(2, 7):
        for w in itertools.product((1, 2, 3), repeat=length):
            if brute_lyndon(w):
                assert standard_factorization(w) == brute_standard_factorization(w)


def test_canonical_factorization_examples():
    assert canonical_factorization((2, 1)) == [(2,), (1,)]
    assert canonical_factorization((1, 2)) == [(1, 2)]
    factors = canonical_factorization((2, 1, 2, 1, 1))
    assert factors == [(2,), (1, 2), (1,), (1,)]


def test_canonical_factorization_properties():
    for length in range(1, 7):
        for w in itertools.product((1, 2), repeat=length):
            factors = canonical_factorization(w)
            assert tuple(x for f in factors for x in f) == w
            assert all(is_lyndon(f) for f in factors)
            assert all(a >= b for a, b in zip(factors, factors[1:]))


from hypothesis import given, settings
from hypothesis import strategies as st

words = st.lists(st.integers(1, 5), min_size=1, max_size=10).map(tuple)


@settings(max_examples=200, deadline=None)
@given(words)
def test_lyndon_matches_brute_force(w):
    assert is_lyndon(w) == brute_lyndon(w)


@settings(max_examples=200, deadline=None)
@given(words)
def test_canonical_factorization_random(w):
    factors = canonical_factorization(w)
    assert tuple(x for f in factors for x in f) == w
    assert all(is_lyndon(f) for f in factors)
    assert all(a >= b for a, b in zip(factors, factors[1:]))


@settings(max_examples=200, deadline=None)
@given(words.filter(lambda w: len(w) >= 2))
def test_standard_factorization_random(w):
    if not is_lyndon(w):
        return
    w1, w2 = standard_factorization(w)
    assert w1 + w2 == w
    assert brute_standard_factorization(w) == (w1, w2)


# -- the printed convex orders, verbatim --------------------------------------


def expected_labels(family, n):
    out = []
    if family == "A":
        for i in range(1, n + 1):
            out += [("g", i, j) for j in range(i, n + 1)]
    elif family == "B":
        for i in range(1, n + 1):
            out += [("g", i, j) for j in range(i, n + 1)]
            out += [("b", i, j) for j in range(n, i, -1)]
    elif family == "C":
        for i in range(1, n):
            out += [("g", i, j) for j in range(i, n)]
            out += [("b", i, i), ("g", i, n)]
            out += [("b", i, j) for j in range(n - 1, i, -1)]
        out += [("g", n, n)]
    else:
        for i in range(1, n):
            out += [("g", i, j) for j in range(i, n)]
            out += [("b", i, n)]
            out += [("b", i, j) for j in range(n - 1, i, -1)]
    return out


@pytest.mark.parametrize(
    "family,rank", [(f, r) for f in "ABCD" for r in range(2 if f != "D" else 2, 5)]
)
def test_order_matches_printed_lists(family, rank):
    o = order(family, rank)
    got = [(rt.kind, rt.i, rt.j) for rt in o.roots]
    assert got == expected_labels(family, rank)


def test_known_small_orders():
    a2 = order("A", 2)
    assert [rt.label() for rt in a2.roots] == ["gamma[1,1]", "gamma[1,2]", "gamma[2,2]"]
    assert a2.word(a2.rs.by_label[("g", 1, 2)]) == (1, 2)
    b2 = order("B", 2)
    assert [o for o in map(lambda rt: rt.label(), b2.roots)] == [
        "gamma[1,1]",
        "gamma[1,2]",
        "beta[1,2]",
        "gamma[2,2]",
    ]
    assert [b2.word(rt) for rt in b2.roots] == [(1,), (1, 2), (1, 2, 2), (2,)]
    c2 = order("C", 2)
    assert [rt.label() for rt in c2.roots] == [
        "gamma[1,1]",
        "beta[1,1]",
        "gamma[1,2]",
        "gamma[2,2]",
    ]


@pytest.mark.parametrize("family,rank", ALL)
def test_words_are_standard(family, rank):
    o = order(family, rank)
    for rt in o.roots:
        w = o.word(rt)
        assert is_lyndon(w)
        degree = [0] * o.rs.n
        for letter in w:
            degree[letter - 1] += 1
        assert tuple(degree) == rt.alpha


@pytest.mark.parametrize("family,rank", ALL)
def test_convexity(family, rank):
    assert is_convex(order(family, rank))


def test_reversed_order_is_convex():
    o = order("A", 2)
    rev = ConvexOrder(o.rs, list(reversed(o.roots)), o.word_of)
    assert is_convex(rev)


def test_non_convex_permutation_detected():
    o = order("A", 2)
    rs = o.rs
    bad = ConvexOrder(
        rs,
        [rs.by_label[("g", 1, 1)], rs.by_label[("g", 2, 2)], rs.by_label[("g", 1, 2)]],
        o.word_of,
    )
    assert not is_convex(bad)


# -- minimal pairs ------------------------------------------------------------


def test_minimal_pair_printed_lists():
    b3 = order("B", 3)
    rs = b3.rs
    # γ = β_{in}: pair (γ_{in}, α_n)
    for i in (1, 2):
        a, b = minimal_pair(b3, rs.by_label[("b", i, 3)])
        assert (a.kind, a.i, a.j) == ("g", i, 3) and (b.kind, b.i, b.j) == ("g", 3, 3)
    # γ = β_{ij}, j < n: pair (β_{i,j+1}, α_j)
    a, b = minimal_pair(b3, rs.by_label[("b", 1, 2)])
    assert (a.kind, a.i, a.j) == ("b", 1, 3) and (b.kind, b.i, b.j) == ("g", 2, 2)
    a3 = order("A", 3)
    for i in range(1, 3):
        for j in range(i + 1, 4):
            a, b = minimal_pair(a3, a3.rs.by_label[("g", i, j)])
            assert (a.kind, a.i, a.j) == ("g", i, j - 1) and (b.kind, b.i, b.j) == ("g", j, j)
    c3 = order("C", 3)
    for i in (1, 2):
        a, b = minimal_pair(c3, c3.rs.by_label[("b", i, i)])
        assert (a.kind, a.i, a.j) == ("g", i, 2) and (b.kind, b.i, b.j) == ("g", i, 3)
    # γ = β_{i,n-1}, i < n-1: pair (γ_{in}, α_{n-1})
    a, b = minimal_pair(c3, c3.rs.by_label[("b", 1, 2)])
    assert (a.kind, a.i, a.j) == ("g", 1, 3) and (b.kind, b.i, b.j) == ("g", 2, 2)
    d4 = order("D", 4)
    a, b = minimal_pair(d4, d4.rs.by_label[("b", 1, 4)])
    assert (a.kind, a.i, a.j) == ("g", 1, 2) and b.alpha == (0, 0, 0, 1)
    a, b = minimal_pair(d4, d4.rs.by_label[("b", 1, 2)])
    assert (a.kind, a.i, a.j) == ("b", 1, 3) and (b.kind, b.i, b.j) == ("g", 2, 2)


@pytest.mark.parametrize("family,rank", ALL)
def test_minimal_pairs_are_minimal(family, rank):
    o = order(family, rank)
    for rt in o.roots:
        if rt.is_simple():
            with pytest.raises(ValueError):
                minimal_pair(o, rt)
            continue
        pair = minimal_pair(o, rt)
        assert tuple(x + y for x, y in zip(pair[0].alpha, pair[1].alpha)) == rt.alpha
        assert check_minimal(o, rt, pair)


@pytest.mark.parametrize(
    "family,rank",
    [("A", r) for r in range(2, 6)]
    + [("B", r) for r in range(3, 6)]
    + [("C", r) for r in range(3, 6)]
    + [("D", r) for r in range(3, 6)],
)
def test_telescopic_structure(family, rank):
    o = order(family, rank)
    small = order(family, rank - 1)
    got = telescoped(o)
    expect = [(rt.alpha, small.word(rt)) for rt in small.roots]
    assert got == expect
