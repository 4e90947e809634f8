"""Four encodings of combinatorial families by restricted permutations.

* S1 <-> binary bitonic strings of length n
* S2 <-> binary strings of length n+2 whose maximal runs all have length >= 2
* S3 <-> permutations of [n+2] with one descent avoiding 1-3-2-4
* S4 <-> lines through two intersection points of n lines in general position

Permutations are 1-based tuples.  Pattern avoidance is classical: a pattern
occurs if some (not necessarily adjacent) subsequence is order-isomorphic
to it.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, groupby, product
from math import comb

from .errors import OutOfClassError
from .limits import check_cap

AVOID_S1 = ((1, 2, 3), (2, 3, 1))
AVOID_S2 = ((1, 2, 3), (1, 3, 2), (2, 1, 3))
PATTERN_1324 = (1, 3, 2, 4)


def fibonacci(n: int) -> int:
    """F_n with F_0 = F_1 = 1."""
    a, b = 1, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def _shape(values):
    """Positions in increasing order of value; equal shapes mean order-isomorphic."""
    return tuple(sorted(range(len(values)), key=values.__getitem__))


def _isomorphic(values, pattern):
    return _shape(values) == _shape(pattern)


def contains_pattern(seq, pattern) -> bool:
    seq = tuple(seq)
    return any(_isomorphic([seq[i] for i in idx], pattern)
               for idx in combinations(range(len(seq)), len(pattern)))


def _ends_pattern(seq, pattern):
    """Does an occurrence of ``pattern`` use the last entry of ``seq``?"""
    last = len(seq) - 1
    target = _shape(pattern)
    return any(_shape([seq[i] for i in idx] + [seq[last]]) == target
               for idx in combinations(range(last), len(pattern) - 1))


def avoids(seq, patterns) -> bool:
    return not any(contains_pattern(seq, p) for p in patterns)


def descents(seq) -> int:
    return sum(1 for a, b in zip(seq, seq[1:]) if a > b)


def pruned_permutations(m: int, extend_ok):
    """Permutations of [m] built left to right, keeping only prefixes for which
    ``extend_ok(prefix)`` holds after each new entry.  ``extend_ok`` must be a
    prefix-closed property.  Output is lexicographic."""
    prefix, used = [], [False] * (m + 1)

    def grow():
        if len(prefix) == m:
            yield tuple(prefix)
            return
        for v in range(1, m + 1):
            if not used[v]:
                prefix.append(v)
                used[v] = True
                if extend_ok(prefix):
                    yield from grow()
                used[v] = False
                prefix.pop()

    return grow()


def _runs(bits):
    return [(b, len(list(g))) for b, g in groupby(bits)]


def _complement(bits):
    return bits.translate(str.maketrans("01", "10"))


def _check_bits(bits):
    if not isinstance(bits, str) or set(bits) - {"0", "1"}:
        raise OutOfClassError(f"expected a 0/1 string, got {bits!r}")


@dataclass(frozen=True)
class BitonicBinary:
    bits: str

    def __post_init__(self):
        _check_bits(self.bits)
        if len(_runs(self.bits)) > 3:
            raise OutOfClassError(f"{self.bits} has more than three runs")

    def __str__(self):
        return self.bits


@dataclass(frozen=True)
class NoSingletonBinary:
    bits: str

    def __post_init__(self):
        _check_bits(self.bits)
        if any(size < 2 for _, size in _runs(self.bits)):
            raise OutOfClassError(f"{self.bits} has a run of length 1")

    def __str__(self):
        return self.bits


@dataclass(frozen=True)
class LinePair:
    """Two disjoint pairs of line labels, normalized as ((x, y), (z, v)) with
    x < y, z < v and y < v."""

    n: int
    first: tuple[int, int]
    second: tuple[int, int]

    def __post_init__(self):
        p, q = tuple(sorted(self.first)), tuple(sorted(self.second))
        labels = p + q
        if len(p) != 2 or len(q) != 2 or len(set(labels)) != 4:
            raise OutOfClassError(f"need two disjoint pairs of labels, got {self.first}, {self.second}")
        if not all(1 <= a <= self.n for a in labels):
            raise OutOfClassError(f"labels must lie in [1, {self.n}], got {labels}")
        if p[1] > q[1]:
            p, q = q, p
        object.__setattr__(self, "first", p)
        object.__setattr__(self, "second", q)

    @classmethod
    def parse(cls, text: str, n: int) -> "LinePair":
        digits = [int(tok) for tok in text.replace("(", " ").replace(")", " ").replace(",", " ").split()]
        if len(digits) != 4:
            raise ValueError(f"cannot parse line pair {text!r}; write ((x,y),(z,v))")
        return cls(n, tuple(digits[:2]), tuple(digits[2:]))

    def __str__(self):
        (x, y), (z, v) = self.first, self.second
        return f"(({x},{y}),({z},{v}))"


def canonical_text(x) -> str:
    """Permutations as space-separated values, everything else via str."""
    return " ".join(map(str, x)) if isinstance(x, tuple) else str(x)


# -- class membership ---------------------------------------------------------

def _is_perm(p, m):
    return len(p) == m and sorted(p) == list(range(1, m + 1))


def in_s1(p, n) -> bool:
    p = tuple(p)
    return (_is_perm(p, n + 2) and p[:2] in ((n + 1, n + 2), (n + 2, n + 1))
            and avoids(p[2:], AVOID_S1))


def in_s2(p, n) -> bool:
    p = tuple(p)
    return (_is_perm(p, n + 2) and p[:2] in ((n + 1, n + 2), (n + 2, n + 1))
            and avoids(p[2:], AVOID_S2))


def in_s3(p, n) -> bool:
    p = tuple(p)
    return (_is_perm(p, n + 3) and p[0] < p[1] < p[2]
            and all(a > b for a, b in zip(p[3:], p[4:])))


def in_s4(p, n) -> bool:
    p = tuple(p)
    return (n >= 4 and _is_perm(p, n) and p[0] == max(p[:4]) and p[2] < p[3]
            and all(a > b for a, b in zip(p[4:], p[5:])))


def is_one_descent_avoider(p) -> bool:
    p = tuple(p)
    return _is_perm(p, len(p)) and descents(p) == 1 and not contains_pattern(p, PATTERN_1324)


def _perm_tuple(p, what, check, n):
    p = tuple(int(v) for v in p)
    if not check(p, n):
        raise OutOfClassError(f"{' '.join(map(str, p))} is not in {what} for n={n}")
    return p


# -- Bijection 1: S1 <-> bitonic binary strings of length n --------------------
#
# Tails avoiding 1-2-3 and 2-3-1 are n..1 (-> 0^n), i..1 n..(i+1) with
# 1 <= i <= n-1 (-> 0 1^i 0^(n-i-1)), or
# n..(n-i+1) (j+1)..1 (n-i)..(j+2) with a nonempty last block
# (-> 0^(i+1) 1^(n-i-j-1) 0^j).  Prefix (n+2)(n+1) complements the bits.

def _decreasing_runs(tail):
    runs = [[tail[0]]]
    for v in tail[1:]:
        if v == runs[-1][-1] - 1:
            runs[-1].append(v)
        else:
            runs.append([v])
    return runs


def _s1_tail(n, family, i=0, j=0):
    if family == 0:
        return tuple(range(n, 0, -1))
    if family == 1:
        return tuple(range(i, 0, -1)) + tuple(range(n, i, -1))
    return tuple(range(n, n - i, -1)) + tuple(range(j + 1, 0, -1)) + tuple(range(n - i, j + 1, -1))


def s1_forward(p) -> BitonicBinary:
    n = len(p) - 2
    p = _perm_tuple(p, "S1", in_s1, n)
    if n == 0:
        # both elements of S1 at n = 0 would need the one empty string
        raise OutOfClassError("the S1 encoding needs n >= 1")
    tail = p[2:]
    runs = _decreasing_runs(tail)
    if len(runs) == 1:
        params = (0,)
        bits = "0" * n
    elif len(runs) == 2:
        i = len(runs[0])
        params = (1, i)
        bits = "0" + "1" * i + "0" * (n - i - 1)
    elif len(runs) == 3:
        i, j = len(runs[0]), len(runs[1]) - 1
        params = (2, i, j)
        bits = "0" * (i + 1) + "1" * (n - i - j - 1) + "0" * j
    else:
        raise AssertionError(f"S1 tail {tail} has {len(runs)} decreasing runs")
    if _s1_tail(n, *params) != tail:
        raise AssertionError(f"S1 tail {tail} does not match its parametrization {params}")
    if p[0] == n + 2:
        bits = _complement(bits)
    return BitonicBinary(bits)


def s1_backward(b, n: int | None = None) -> tuple[int, ...]:
    bits = b.bits if isinstance(b, BitonicBinary) else BitonicBinary(b).bits
    n = len(bits) if n is None else n
    if len(bits) != n or n < 1:
        raise OutOfClassError(f"expected a bitonic string of length n={n}, got {bits!r}")
    head = (n + 1, n + 2)
    if bits[0] == "1":
        bits, head = _complement(bits), (n + 2, n + 1)
    runs = _runs(bits)
    if len(runs) == 1:
        tail = _s1_tail(n, 0)
    elif runs[0][1] == 1:
        tail = _s1_tail(n, 1, runs[1][1])
    else:
        i = runs[0][1] - 1
        j = runs[2][1] if len(runs) == 3 else 0
        tail = _s1_tail(n, 2, i, j)
    return head + tail


# -- Bijection 2: S2 <-> binary strings of length n+2 without singletons -------
#
# Tails avoiding 1-2-3, 1-3-2, 2-1-3 are filled right to left with 1, 2, ...
# either one value at a time (monomino) or as an increasing pair (domino).
# Reading tiles right to left from a virtual bit 0, a monomino repeats the
# previous bit and a domino writes two complemented bits.

def tiling_of_tail(tail):
    """Right-to-left tile sizes (1 or 2) of an S2 tail."""
    tiles = []
    pos, value = len(tail) - 1, 1
    while pos >= 0:
        if tail[pos] == value:
            tiles.append(1)
            pos, value = pos - 1, value + 1
        elif pos >= 1 and tail[pos - 1] == value and tail[pos] == value + 1:
            tiles.append(2)
            pos, value = pos - 2, value + 2
        else:
            raise OutOfClassError(f"tail {tail} is not a monomino/domino filling")
    return tiles


def tail_of_tiling(tiles):
    out = []
    value = 1
    for size in tiles:
        out[:0] = list(range(value, value + size))
        value += size
    return tuple(out)


def s2_forward(p) -> NoSingletonBinary:
    n = len(p) - 2
    p = _perm_tuple(p, "S2", in_s2, n)
    bits = []
    last = "0"
    for size in tiling_of_tail(p[2:]):
        if size == 2:
            last = "1" if last == "0" else "0"
        bits[:0] = [last] * size
    text = "".join(bits) + "00"
    if p[0] == n + 2:
        text = _complement(text)
    return NoSingletonBinary(text)


def s2_backward(b) -> tuple[int, ...]:
    bits = b.bits if isinstance(b, NoSingletonBinary) else NoSingletonBinary(b).bits
    n = len(bits) - 2
    if n < 0:
        raise OutOfClassError(f"string {bits!r} is shorter than 2")
    head = (n + 1, n + 2)
    if bits.endswith("11"):
        bits, head = _complement(bits), (n + 2, n + 1)
    tiles = []
    i, last = n - 1, "0"
    while i >= 0:
        if bits[i] == last:
            tiles.append(1)
            i -= 1
        elif i >= 1 and bits[i - 1] == bits[i]:
            tiles.append(2)
            last = bits[i]
            i -= 2
        else:
            raise OutOfClassError(f"{b}: singleton at position {i + 1}")
    return head + tail_of_tiling(tiles)


# -- Bijection 3: one-descent 1-3-2-4 avoiders of [n+2] <-> S3 -----------------
#
# An avoider is A B C D with C = 1..i1, A = i1+1..i2, D = i2+1..i3,
# B = i3+1..n+2, in one of four shapes:
#   1: all blocks nonempty    -> i1 i2 i3 | rest decreasing
#   2: C empty                -> i2 i3 (n+3) | ...
#   3: B empty                -> i1 i2 (n+2) | ...
#   4: A and C empty          -> i3 (n+2) (n+3) | ...

def abcd(n, i1, i2, i3):
    A = tuple(range(i1 + 1, i2 + 1))
    B = tuple(range(i3 + 1, n + 3))
    C = tuple(range(1, i1 + 1))
    D = tuple(range(i2 + 1, i3 + 1))
    return A + B + C + D


def _s3_head_to_cuts(n, head):
    a = head
    if n + 2 in a and n + 3 in a:
        return 4, (0, 0, a[0])
    if n + 3 in a:
        return 2, (0, a[0], a[1])
    if n + 2 in a:
        return 3, (a[0], a[1], n + 2)
    return 1, tuple(a)


def _cuts_to_s3_head(n, case, cuts):
    i1, i2, i3 = cuts
    return {1: (i1, i2, i3), 2: (i2, i3, n + 3), 3: (i1, i2, n + 2), 4: (i3, n + 2, n + 3)}[case]


def avoider_cuts(p):
    """(case, (i1, i2, i3)) for a one-descent 1-3-2-4 avoider."""
    p = tuple(p)
    n = len(p) - 2
    if not is_one_descent_avoider(p):
        raise OutOfClassError(f"{' '.join(map(str, p))} is not a one-descent 1-3-2-4 avoider")
    d = next(q for q in range(len(p) - 1) if p[q] > p[q + 1]) + 1
    X, Y = p[:d], p[d:]

    def run_from(seq, start):
        size = 0
        while size < len(seq) and seq[size] == start + size:
            size += 1
        return size

    if X[0] == 1:
        case, cuts = 2, (0, run_from(X, 1), max(Y))
    elif Y[0] != 1:
        raise AssertionError(f"{p}: second run does not start with 1")
    elif X[-1] == n + 2 and run_from(X, X[0]) == len(X):
        case, cuts = 4, (0, 0, X[0] - 1)
    elif X[-1] == n + 2:
        i1 = run_from(Y, 1)
        a_len = run_from(X, i1 + 1)
        case, cuts = 1, (i1, i1 + a_len, X[a_len] - 1)
    else:
        case, cuts = 3, (X[0] - 1, X[-1], n + 2)
    if abcd(n, *cuts) != p:
        raise AssertionError(f"{p}: block decomposition {case} {cuts} does not rebuild it")
    return case, cuts


@dataclass(frozen=True)
class OneDescentAvoider:
    entries: tuple[int, ...]

    def __post_init__(self):
        entries = tuple(int(v) for v in self.entries)
        object.__setattr__(self, "entries", entries)
        avoider_cuts(entries)

    @property
    def n(self):
        return len(self.entries) - 2

    @property
    def cuts(self):
        return avoider_cuts(self.entries)[1]

    @property
    def blocks(self):
        """(A, B, C, D)."""
        i1, i2, i3 = self.cuts
        n = self.n
        return (tuple(range(i1 + 1, i2 + 1)), tuple(range(i3 + 1, n + 3)),
                tuple(range(1, i1 + 1)), tuple(range(i2 + 1, i3 + 1)))

    def __str__(self):
        return " ".join(map(str, self.entries))


def s3_forward(p) -> tuple[int, ...]:
    entries = p.entries if isinstance(p, OneDescentAvoider) else tuple(p)
    n = len(entries) - 2
    case, cuts = avoider_cuts(entries)
    head = _cuts_to_s3_head(n, case, cuts)
    rest = sorted(set(range(1, n + 4)) - set(head), reverse=True)
    return head + tuple(rest)


def s3_backward(q) -> OneDescentAvoider:
    n = len(q) - 3
    q = _perm_tuple(q, "S3", in_s3, n)
    case, cuts = _s3_head_to_cuts(n, q[:3])
    return OneDescentAvoider(abcd(n, *cuts))


# -- Bijection 4: S4 <-> pairs of disjoint pairs of lines ----------------------

def s4_forward(lp: LinePair) -> tuple[int, ...]:
    (x, y), (z, v) = lp.first, lp.second
    rest = sorted(set(range(1, lp.n + 1)) - {x, y, z, v}, reverse=True)
    return (v, z, x, y) + tuple(rest)


def s4_backward(p) -> LinePair:
    n = len(p)
    p = _perm_tuple(p, "S4", in_s4, n)
    v, z, x, y = p[:4]
    return LinePair(n, (x, y), (z, v))


# -- enumeration ---------------------------------------------------------------

def _head_and_tail_ok(n, avoid):
    heads = ((n + 1, n + 2), (n + 2, n + 1))

    def ok(prefix):
        q = len(prefix)
        if q <= 2:
            return prefix[:q] == list(heads[0][:q]) or prefix[:q] == list(heads[1][:q])
        return not any(_ends_pattern(prefix[2:], pat) for pat in avoid)

    return ok


def _s3_ok(prefix):
    q = len(prefix)
    if q <= 3:
        return all(a < b for a, b in zip(prefix, prefix[1:]))
    return q == 4 or prefix[-2] > prefix[-1]


def _s4_ok(n):
    def ok(prefix):
        q = len(prefix)
        if q == 4:
            return prefix[0] == max(prefix) and prefix[2] < prefix[3]
        if q >= 6:
            return prefix[-2] > prefix[-1]
        return True
    return ok


def _avoider_ok(prefix):
    return descents(prefix) <= 1 and not _ends_pattern(prefix, PATTERN_1324)


def enumerate_class(name: str, n: int) -> list:
    """Exhaustive, duplicate-free listing of a class for parameter n."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    check_cap(n)
    if name == "S1":
        return list(pruned_permutations(n + 2, _head_and_tail_ok(n, AVOID_S1)))
    if name == "S2":
        return list(pruned_permutations(n + 2, _head_and_tail_ok(n, AVOID_S2)))
    if name == "S3":
        return list(pruned_permutations(n + 3, _s3_ok))
    if name == "S4":
        return list(pruned_permutations(n, _s4_ok(n))) if n >= 4 else []
    if name == "bitonic":
        return [BitonicBinary(s) for s in _strings(n) if len(_runs(s)) <= 3]
    if name == "nosingleton":
        return [NoSingletonBinary(s) for s in _strings(n + 2)
                if all(size >= 2 for _, size in _runs(s))]
    if name == "avoiders":
        return [OneDescentAvoider(p) for p in pruned_permutations(n + 2, _avoider_ok)
                if descents(p) == 1]
    if name == "linepairs":
        found = set()
        for p in combinations(range(1, n + 1), 2):
            for q in combinations(range(1, n + 1), 2):
                if not set(p) & set(q):
                    found.add(LinePair(n, p, q))
        return sorted(found, key=lambda lp: (lp.first, lp.second))
    raise ValueError(f"unknown class {name!r}")


CLASS_NAMES = ("S1", "S2", "S3", "S4", "bitonic", "nosingleton", "avoiders", "linepairs")

PARTNERS = {"S1": "bitonic", "S2": "nosingleton", "S3": "avoiders", "S4": "linepairs"}


def _strings(length):
    return ["".join(bits) for bits in product("01", repeat=length)]


def expected_size(name: str, n: int) -> int:
    """Closed-form cardinality of a class.  Each S-class has its partner's size,
    except S1 at n = 0 (two permutations, one empty bitonic string)."""
    if name == "bitonic" and n == 0:
        return 1
    key = {v: k for k, v in PARTNERS.items()}.get(name, name)
    if key == "S1":
        return n * n - n + 2
    if key == "S2":
        return 2 * fibonacci(n)
    if key == "S3":
        return comb(n + 3, 3)
    if key == "S4":
        return 3 * comb(n, 4)
    raise ValueError(f"unknown class {name!r}")
