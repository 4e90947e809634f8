"""Two encodings of odd k-parts in palindromic compositions of N = 2(n-1)
by permutations ``w_1 ... w_{n-k+1}`` of [n-k+1] with
``w_2 > ... > w_l < ... < w_{n-k+1}``.

Throughout, r = n - k.  A marked palindrome is viewed through its left half
as ``C k D | x | rev(D) k rev(C)`` with an even center x = 2t (t = 0 when the
palindrome has an even number of parts), so |C| + |D| + t = r - 1.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import accumulate, combinations

from .compositions import Composition, enumerate_palindromes, format_marked, MarkedKPart
from .errors import OutOfClassError


@dataclass(frozen=True)
class MarkedPalindrome:
    palindrome: Composition
    index: int

    def __post_init__(self):
        if not isinstance(self.palindrome, Composition):
            object.__setattr__(self, "palindrome", Composition(tuple(self.palindrome)))
        parts = self.palindrome.parts
        if parts != parts[::-1]:
            raise OutOfClassError(f"{parts} is not a palindrome")
        if not 0 <= self.index < len(parts):
            raise OutOfClassError(f"index {self.index} out of range for {len(parts)} parts")
        if self.N % 2:
            raise OutOfClassError(f"palindrome weight {self.N} must be even")
        if self.k % 2 == 0:
            raise OutOfClassError(f"marked part {self.k} must be odd")

    @property
    def k(self):
        return self.palindrome[self.index]

    @property
    def N(self):
        return self.palindrome.weight

    @property
    def n(self):
        return self.N // 2 + 1

    @classmethod
    def from_marked(cls, m: MarkedKPart) -> "MarkedPalindrome":
        return cls(m.composition, m.index)

    def __str__(self):
        return format_marked(MarkedKPart(self.palindrome, self.index))


@dataclass(frozen=True)
class DownUpPermutation:
    entries: tuple[int, ...]

    def __post_init__(self):
        entries = tuple(int(e) for e in self.entries)
        object.__setattr__(self, "entries", entries)
        if len(entries) < 2 or sorted(entries) != list(range(1, len(entries) + 1)):
            raise OutOfClassError(f"{entries} is not a permutation of [m] with m >= 2")
        tail = entries[1:]
        v = tail.index(min(tail))
        if any(tail[i] <= tail[i + 1] for i in range(v)) or \
                any(tail[i] >= tail[i + 1] for i in range(v, len(tail) - 1)):
            raise OutOfClassError(f"{entries}: w_2 .. w_m is not decreasing-then-increasing")

    @property
    def l(self):
        """1-based position of the valley (minimum of w_2 .. w_m)."""
        tail = self.entries[1:]
        return tail.index(min(tail)) + 2

    @property
    def r(self):
        return len(self.entries) - 1

    @classmethod
    def parse(cls, text: str) -> "DownUpPermutation":
        try:
            values = tuple(int(tok) for tok in text.split())
        except ValueError:
            raise ValueError(f"cannot parse permutation {text!r}") from None
        return cls(values)

    def __str__(self):
        return " ".join(map(str, self.entries))


def enumerate_downup(m: int):
    """All down-up permutations of [m] (m >= 2), lexicographically."""
    found = []
    for w1 in range(1, m + 1):
        others = [x for x in range(1, m + 1) if x != w1]
        low, free = others[0], others[1:]
        for size in range(len(free) + 1):
            for left in combinations(free, size):
                right = sorted(set(free) - set(left))
                found.append((w1, *sorted(left, reverse=True), low, *right))
    found.sort()
    return [DownUpPermutation(e) for e in found]


def enumerate_marked_palindromes(N: int, k: int):
    for p in enumerate_palindromes(N):
        for i, part in enumerate(p.parts):
            if part == k:
                yield MarkedPalindrome(p, i)


def _halves(mp: MarkedPalindrome):
    """Split into (C, D, t, right_side) relative to the mirror-left copy of the mark."""
    parts = mp.palindrome.parts
    size = len(parts)
    if size % 2 and mp.index == size // 2:
        raise OutOfClassError(f"{mp}: the marked part is the center")
    right = mp.index >= (size + 1) // 2
    i = size - 1 - mp.index if right else mp.index
    half = parts[:size // 2]
    center = parts[size // 2] if size % 2 else 0
    return half[:i], half[i + 1:], center // 2, right


def _assemble(C, D, t, k, right):
    C, D = tuple(C), tuple(D)
    middle = (2 * t,) if t else ()
    parts = C + (k,) + D + middle + D[::-1] + (k,) + C[::-1]
    index = len(parts) - 1 - len(C) if right else len(C)
    return MarkedPalindrome(Composition(parts), index)


def _check_params(r, k):
    if r < 1:
        raise OutOfClassError(f"need n - k >= 1, got n - k = {r}")
    if k < 1 or k % 2 == 0:
        raise OutOfClassError(f"k must be a positive odd integer, got {k}")


# -- first encoding ---------------------------------------------------------

def enc1_perm_to_pair(p: DownUpPermutation):
    """Permutation -> (w_1, alpha) with alpha a composition of r in l - 1 parts.

    The values strictly between w_1 and the valley, relabelled into [1, r-1],
    are the interior splits of alpha.
    """
    w, r = p.entries, p.r
    w1, l = w[0], p.l
    if l == 2:
        return w1, Composition((r,))
    wbar = [w[i] - 1 if w[i] < w1 else w[i] - 2 for i in range(1, l - 1)]
    # wbar (0-based list) holds wbar_2 > ... > wbar_{l-1}; alpha_1 = wbar_{l-1}
    interior = wbar[::-1]
    alpha = [interior[0]] + [b - a for a, b in zip(interior, interior[1:])] + [r - wbar[0]]
    return w1, Composition(tuple(alpha))


def enc1_pair_to_perm(w1: int, alpha: Composition) -> DownUpPermutation:
    alpha = Composition(tuple(alpha))
    r = alpha.weight
    if not 1 <= w1 <= r + 1:
        raise OutOfClassError(f"w_1 = {w1} not in [1, {r + 1}]")
    interior = list(accumulate(alpha.parts))[:-1]
    others = [x for x in range(1, r + 2) if x != w1]
    low, free = others[0], others[1:]
    relabel = {(v - 1 if v < w1 else v - 2): v for v in free}
    left = sorted((relabel[b] for b in interior), reverse=True)
    right = sorted(set(free) - set(left))
    return DownUpPermutation((w1, *left, low, *right))


def enc1_case(w1: int, alpha: Composition) -> str:
    """Which of the cases I, II, IIIA, IIIB the pair falls into."""
    alpha = Composition(tuple(alpha))
    r = alpha.weight
    if w1 in (1, r + 1):
        return "I"
    g = w1 - 1
    sp = list(accumulate(alpha.parts, initial=0))
    if g in sp:
        return "II"
    return "IIIA" if g > sp[-2] else "IIIB"


def enc1_pair_to_marked(w1: int, alpha: Composition, k: int) -> MarkedPalindrome:
    alpha = Composition(tuple(alpha))
    parts, r = alpha.parts, alpha.weight
    _check_params(r, k)
    if not 1 <= w1 <= r + 1:
        raise OutOfClassError(f"w_1 = {w1} not in [1, {r + 1}]")
    case = enc1_case(w1, alpha)
    if case == "I":
        return _assemble((), parts[:-1], parts[-1] - 1, k, right=(w1 == r + 1))
    g = w1 - 1
    sp = list(accumulate(parts, initial=0))
    if case == "II":
        j = sp.index(g)
        return _assemble(parts[:j], parts[j:-1], parts[-1] - 1, k, right=False)
    # g falls strictly inside part j (0-based); cut it into a' + a''
    j = max(i for i in range(len(parts)) if sp[i] < g)
    a1 = g - sp[j]
    a2 = parts[j] - a1
    C = parts[:j] + (a1,)
    if case == "IIIA":
        return _assemble(C, (), a2 - 1, k, right=True)
    return _assemble(C, (a2,) + parts[j + 1:-1], parts[-1] - 1, k, right=True)


def enc1_marked_to_pair(mp: MarkedPalindrome):
    C, D, t, right = _halves(mp)
    r = mp.n - mp.k
    if not C:
        return (r + 1 if right else 1), Composition(D + (t + 1,))
    if not right:
        return sum(C) + 1, Composition(C + D + (t + 1,))
    if not D:
        return sum(C) + 1, Composition(C[:-1] + (C[-1] + t + 1,))
    return sum(C) + 1, Composition(C[:-1] + (C[-1] + D[0],) + D[1:] + (t + 1,))


def enc1_forward(mp: MarkedPalindrome) -> DownUpPermutation:
    return enc1_pair_to_perm(*enc1_marked_to_pair(mp))


def enc1_inverse(p: DownUpPermutation, k: int, N: int | None = None) -> MarkedPalindrome:
    _check_target(p, k, N)
    return enc1_pair_to_marked(*enc1_perm_to_pair(p), k)


def _check_target(p, k, N):
    _check_params(p.r, k)
    if N is not None and N != 2 * (p.r + k - 1):
        raise OutOfClassError(
            f"a permutation of [{p.r + 1}] with k={k} encodes palindromes of "
            f"{2 * (p.r + k - 1)}, not N={N}")


# -- second encoding --------------------------------------------------------
#
# Numbers r+1, r, ..., 3 are inserted in decreasing order, each into the
# leftmost free slot after w_1 (L), the rightmost free slot (R) or w_1 (W).
# The parts right of the mark, D followed by the center part t + 1, are read
# right to left: a part a contributes R^(a-1) then L, except the part next
# to the mark, which contributes R^(a-1) then W.  C contributes its vector
# 0^(a_1-1) 1 0^(a_2-1) ... 1 0^(a_c-1) read right to left (0 -> L, 1 -> R).
# 1 and 2 are reserved: they fill the last two free slots, 1 first, and
# are swapped when the mark lies right of the center.


def _enc2_actions(C, D, t):
    actions = []
    right_of_mark = D + (t + 1,)
    for pos in range(len(right_of_mark) - 1, -1, -1):
        actions += ["R"] * (right_of_mark[pos] - 1)
        actions.append("W" if pos == 0 else "L")
    if C:
        vector = "1".join("0" * (a - 1) for a in C)
        actions += ["L" if bit == "0" else "R" for bit in reversed(vector)]
    return actions


def enc2_forward(mp: MarkedPalindrome) -> DownUpPermutation:
    C, D, t, right = _halves(mp)
    r = mp.n - mp.k
    slots = [None] * (r + 1)
    number = r + 1
    for action in _enc2_actions(C, D, t):
        if number < 3:
            break
        if action == "W":
            slots[0] = number
        elif action == "L":
            slots[slots.index(None, 1)] = number
        else:
            slots[len(slots) - 1 - slots[::-1].index(None)] = number
        number -= 1
    free = [i for i, v in enumerate(slots) if v is None]
    if len(free) != 2 or number != 2:
        raise AssertionError(f"{mp}: slot filling ended with free slots {free}")
    low, high = (2, 1) if right else (1, 2)
    slots[free[0]], slots[free[1]] = low, high
    return DownUpPermutation(tuple(slots))


def _runs_between(text, sep):
    return [len(g) + 1 for g in text.split(sep)]


def enc2_inverse(p: DownUpPermutation, k: int, N: int | None = None) -> MarkedPalindrome:
    _check_target(p, k, N)
    w = list(p.entries)
    r = p.r
    right = w.index(2) < w.index(1)
    if right:
        i1, i2 = w.index(1), w.index(2)
        w[i1], w[i2] = 2, 1
    w1 = w[0]
    valley = w.index(min(w[1:]), 1)
    actions = []
    for number in range(r + 1, 2, -1):
        pos = w.index(number)
        actions.append("W" if pos == 0 else ("L" if pos < valley else "R"))
    trace = "".join(actions)
    if w1 == 1:
        before, after = trace, None
    else:
        if w1 == 2 or trace.count("W") != 1:
            raise OutOfClassError(f"{p}: w_1 does not identify a unique insertion step")
        before, after = trace.split("W")
    right_of_mark = tuple(reversed(_runs_between(before, "L")))
    D, t = right_of_mark[:-1], right_of_mark[-1] - 1
    if after is None:
        C = ()
    else:
        vector = "".join("0" if a == "L" else "1" for a in reversed(after))
        C = tuple(_runs_between(vector, "1"))
    mp = _assemble(C, D, t, k, right)
    if enc2_forward(mp) != p:
        raise OutOfClassError(f"{p}: reconstruction {mp} does not re-encode to the input")
    return mp
