from math import comb

import pytest

from copatt import gallery
from copatt.errors import OutOfClassError
from copatt.gallery import (BitonicBinary, LinePair, NoSingletonBinary, OneDescentAvoider,
                            enumerate_class, expected_size, fibonacci, s1_backward, s1_forward,
                            s2_backward, s2_forward, s3_backward, s3_forward, s4_backward,
                            s4_forward, tail_of_tiling, tiling_of_tail)

import oracles


def p(text):
    return tuple(int(t) for t in text.split())


def test_fibonacci_convention():
    assert [fibonacci(n) for n in range(7)] == [1, 1, 2, 3, 5, 8, 13]


@pytest.mark.parametrize("perm,bits", [("4 5 1 3 2", "010"), ("4 5 3 1 2", "001"),
                                       ("5 4 1 3 2", "101"), ("4 5 3 2 1", "000")])
def test_s1_fixtures(perm, bits):
    assert str(s1_forward(p(perm))) == bits
    assert s1_backward(bits) == p(perm)


@pytest.mark.parametrize("perm,bits", [("8 9 6 7 5 3 4 1 2", "110001100"), ("2 3 1", "000"),
                                       ("3 2 1", "111")])
def test_s2_fixtures(perm, bits):
    assert str(s2_forward(p(perm))) == bits
    assert s2_backward(bits) == p(perm)


def test_s3_fixtures():
    assert s3_forward(p("2 3 1")) == p("1 3 4 2")
    assert s3_backward(p("1 3 4 2")).entries == p("2 3 1")
    # B empty puts n+2, n+3 ascending in the third and fourth slots
    for a in enumerate_class("avoiders", 1):
        if not a.blocks[1]:
            q = s3_forward(a)
            assert q[2:4] == (3, 4)


def test_avoider_blocks():
    a = OneDescentAvoider(p("3 4 7 1 2 5 6"))
    assert a.blocks == ((3, 4), (7,), (1, 2), (5, 6))
    with pytest.raises(OutOfClassError):
        OneDescentAvoider(p("1 3 2 4"))


@pytest.mark.parametrize("n,pair,perm", [(4, ((1, 2), (3, 4)), "4 3 1 2"),
                                         (4, ((1, 3), (2, 4)), "4 2 1 3"),
                                         (5, ((2, 3), (1, 4)), "4 1 2 3 5")])
def test_s4_fixtures(n, pair, perm):
    lp = LinePair(n, *pair)
    assert s4_forward(lp) == p(perm)
    assert s4_backward(p(perm)) == lp
    assert gallery.in_s4(p(perm), n)


def test_line_pair_normalization():
    assert LinePair(6, (4, 3), (6, 1)) == LinePair(6, (1, 6), (3, 4))
    assert str(LinePair(6, (6, 1), (4, 3))) == "((3,4),(1,6))"
    assert LinePair.parse("((3,4),(1,6))", 6).second == (1, 6)
    with pytest.raises(OutOfClassError):
        LinePair(4, (1, 2), (2, 3))
    with pytest.raises(OutOfClassError):
        LinePair(4, (1, 2), (3, 5))


@pytest.mark.parametrize("name,n,size", [("S1", 3, 8), ("S2", 2, 4), ("S4", 5, 15), ("S3", 2, 10),
                                         ("avoiders", 2, 10)])
def test_class_sizes(name, n, size):
    assert len(enumerate_class(name, n)) == size


@pytest.mark.parametrize("name", ["S1", "S2", "S3", "S4"])
def test_pruned_enumeration_matches_filtering(name):
    for n in range(0, 6 if name != "S4" else 8):
        assert enumerate_class(name, n) == oracles.s_class(name, n)


def test_partner_classes_by_definition():
    for n in range(0, 9):
        bitonic = [b.bits for b in enumerate_class("bitonic", n)]
        assert bitonic == [b for b in oracles.bit_strings(n) if len(oracles.runs(b)) <= 3]
        nos = [b.bits for b in enumerate_class("nosingleton", n)]
        assert nos == [b for b in oracles.bit_strings(n + 2)
                       if all(size >= 2 for _, size in oracles.runs(b))]
        assert [a.entries for a in enumerate_class("avoiders", n)] == oracles.one_descent_avoiders(n + 2)
        assert len(enumerate_class("linepairs", n)) == 3 * comb(n, 4)


@pytest.mark.parametrize("n", range(0, 11))
def test_cardinalities(n):
    assert len(enumerate_class("S1", n)) == n * n - n + 2
    assert len(enumerate_class("S2", n)) == 2 * fibonacci(n)
    assert len(enumerate_class("S4", n)) == 3 * comb(n, 4)
    if n <= 8:
        assert len(enumerate_class("S3", n)) == comb(n + 3, 3)
    small = ("S3", "avoiders")
    for name in gallery.CLASS_NAMES:
        if name not in small or n <= 8:
            assert len(enumerate_class(name, n)) == expected_size(name, n)


MAPS = [("S1", s1_forward, s1_backward), ("S2", s2_forward, s2_backward)]


@pytest.mark.parametrize("name,fwd,back", MAPS)
@pytest.mark.parametrize("n", range(1, 11))
def test_binary_bijections(name, fwd, back, n):
    members = enumerate_class(name, n)
    images = [fwd(q) for q in members]
    partner = enumerate_class(gallery.PARTNERS[name], n)
    assert sorted(b.bits for b in images) == sorted(b.bits for b in partner)
    for q, b in zip(members, images):
        assert back(b) == q
        assert back(b.bits) == q


@pytest.mark.parametrize("n", range(0, 9))
def test_s3_bijection(n):
    avoiders = enumerate_class("avoiders", n)
    images = sorted(s3_forward(a) for a in avoiders)
    assert images == enumerate_class("S3", n)
    for q in images:
        assert s3_forward(s3_backward(q)) == q


@pytest.mark.parametrize("n", range(4, 11))
def test_s4_bijection(n):
    pairs = enumerate_class("linepairs", n)
    images = sorted(s4_forward(lp) for lp in pairs)
    assert images == enumerate_class("S4", n)
    for lp in pairs:
        assert s4_backward(s4_forward(lp)) == lp


@pytest.mark.parametrize("n", range(1, 9))
def test_complement_swaps_prefix(n):
    for q in enumerate_class("S1", n):
        swapped = (q[1], q[0]) + q[2:]
        a, b = s1_forward(q).bits, s1_forward(swapped).bits
        assert a == b.translate(str.maketrans("01", "10"))
    for q in enumerate_class("S2", n):
        swapped = (q[1], q[0]) + q[2:]
        a, b = s2_forward(q).bits, s2_forward(swapped).bits
        assert a == b.translate(str.maketrans("01", "10"))


@pytest.mark.parametrize("n", range(0, 10))
def test_tails_are_tilings(n):
    tails = {q[2:] for q in enumerate_class("S2", n)}
    assert len(tails) == fibonacci(n)
    for tail in tails:
        assert tail_of_tiling(tiling_of_tail(tail)) == tail


@pytest.mark.parametrize("bad", ["0110", "01", "2", "0011x"])
def test_no_singleton_rejects(bad):
    with pytest.raises(OutOfClassError):
        NoSingletonBinary(bad)


@pytest.mark.parametrize("bad", ["0101", "10101", "ab"])
def test_bitonic_rejects(bad):
    with pytest.raises(OutOfClassError):
        BitonicBinary(bad)


def test_s1_encoding_needs_positive_n():
    assert len(enumerate_class("S1", 0)) == 2
    assert [b.bits for b in enumerate_class("bitonic", 0)] == [""]
    with pytest.raises(OutOfClassError):
        s1_forward((1, 2))


@pytest.mark.parametrize("fn,arg", [(s1_forward, (1, 2, 3)), (s2_forward, (4, 5, 1, 2, 3)),
                                    (s3_forward, (1, 2, 3)), (s3_backward, (2, 1, 3, 4)),
                                    (s4_backward, (1, 2, 3, 4))])
def test_maps_reject_outsiders(fn, arg):
    with pytest.raises(OutOfClassError):
        fn(arg)
