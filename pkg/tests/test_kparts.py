from collections import Counter

import pytest
from hypothesis import given, strategies as st

from copatt.compositions import Composition, enumerate_marked_kparts, format_marked, parse_marked
from copatt.counting import f_closed, total_kparts
from copatt.errors import OutOfClassError
from copatt.kparts import (SPermutation, TElement, decode, decode_marked, encode, encode_marked,
                           enumerate_S)


def test_worked_example():
    t = TElement(12, 6, (3, 1), (2,))
    p = encode(t)
    assert p.entries == (4, 5, 3, 0, 1, 2, 6)
    assert (p.s, p.l) == (4, 3)
    assert decode(p, n=12) == t
    assert format_marked(decode_marked(p, 6)) == "3+1+[6]+2"
    assert str(encode_marked(parse_marked("3+1+[6]+2"))) == "4 5 3 0 1 2 6"


@pytest.mark.parametrize("t,entries", [
    (TElement(2, 1, (), (1,)), (0, 1)),
    (TElement(3, 1, (2,), ()), (2, 0, 1)),
])
def test_small_cases(t, entries):
    assert encode(t).entries == entries
    assert decode(SPermutation(entries), k=t.k) == t


def test_telement_validation():
    with pytest.raises(OutOfClassError):
        TElement(3, 3, (), ())
    with pytest.raises(OutOfClassError):
        TElement(5, 2, (1,), (1,))


@pytest.mark.parametrize("entries", [(0, 0), (1, 0, 2), (0, 2, 3, 1), (2, 0, 1, 3), (3,)])
def test_spermutation_rejects(entries):
    with pytest.raises(OutOfClassError):
        SPermutation(entries)


def test_decode_needs_a_size():
    with pytest.raises(ValueError):
        decode(SPermutation((0, 1)))
    with pytest.raises(OutOfClassError):
        decode(SPermutation((0, 1)), n=5, k=1)


@pytest.mark.parametrize("n,k,size", [(3, 1, 5), (2, 1, 2), (5, 4, 2), (9, 8, 2)])
def test_enumerate_S_sizes(n, k, size):
    assert len(list(enumerate_S(n, k))) == size


@pytest.mark.parametrize("n", range(2, 10))
def test_bijection_onto_S(n):
    for k in range(1, n):
        cells = Counter()
        image = set()
        for m in enumerate_marked_kparts(n, k):
            t = TElement.from_marked(m)
            p = encode(t)
            assert decode(p, n=n) == t
            assert t.to_marked() == m
            cells[p.l, p.s] += 1
            image.add(p.entries)
        listed = [p.entries for p in enumerate_S(n, k)]
        assert sorted(image) == listed
        assert len(listed) == total_kparts(n, k)
        for (l, s), count in cells.items():
            assert count == f_closed(n, k, l, s)


@pytest.mark.parametrize("n", range(2, 9))
def test_encode_inverts_decode(n):
    for k in range(1, n):
        for p in enumerate_S(n, k):
            assert encode(decode(p, n=n)) == p


@pytest.mark.parametrize("n", range(3, 9))
def test_boundary_prefix_sums(n):
    # s at either end exactly when s+1 is the smallest residue other than s
    for k in range(1, n):
        M = n - k + 1
        for p in enumerate_S(n, k):
            low = min(x for x in range(M) if x != p.s)
            assert (p.s in (0, n - k)) == ((p.s + 1) % M == low)


@given(st.lists(st.integers(1, 4), max_size=5), st.lists(st.integers(1, 4), max_size=5),
       st.integers(1, 6))
def test_round_trip_on_random_marked_parts(alpha, beta, k):
    if not alpha and not beta:
        beta = [1]
    n = sum(alpha) + sum(beta) + k
    t = TElement(n, k, Composition(tuple(alpha)), Composition(tuple(beta)))
    assert decode(encode(t), k=k) == t
