"""Marked k-parts of compositions encoded as restricted permutations of
Z/(n-k+1)Z.

A marked k-part of a composition of n is the pair (alpha, beta) of the parts
to its left and right.  Its code is the word ``s w_1 ... w_{n-k}`` listing
every residue once, where s = |alpha|, ``w_1 > ... > w_l < ... < w_{n-k}``
and (s + 1) mod (n-k+1) is among ``w_1 .. w_l``.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import accumulate, combinations

from .compositions import Composition, MarkedKPart, enumerate_marked_kparts
from .errors import OutOfClassError
from .limits import check_cap


@dataclass(frozen=True)
class TElement:
    n: int
    k: int
    alpha: Composition
    beta: Composition

    def __post_init__(self):
        for name in ("alpha", "beta"):
            value = getattr(self, name)
            if not isinstance(value, Composition):
                object.__setattr__(self, name, Composition(tuple(value)))
        if not 1 <= self.k <= self.n - 1:
            raise OutOfClassError(f"need 1 <= k <= n-1, got n={self.n}, k={self.k}")
        if self.alpha.weight + self.beta.weight != self.n - self.k:
            raise OutOfClassError(
                f"|alpha| + |beta| must be n-k={self.n - self.k}, "
                f"got {self.alpha.weight + self.beta.weight}")

    @property
    def s(self):
        return self.alpha.weight

    @property
    def l(self):
        return len(self.alpha) + len(self.beta)

    @classmethod
    def from_marked(cls, m: MarkedKPart) -> "TElement":
        parts = m.composition.parts
        return cls(m.n, m.k, Composition(parts[:m.index]), Composition(parts[m.index + 1:]))

    def to_marked(self) -> MarkedKPart:
        parts = self.alpha.parts + (self.k,) + self.beta.parts
        return MarkedKPart(Composition(parts), len(self.alpha))


def _down_prefix_length(ws):
    """Length l of the strictly decreasing run that starts ``ws``."""
    l = 1
    while l < len(ws) and ws[l] < ws[l - 1]:
        l += 1
    return l


@dataclass(frozen=True)
class SPermutation:
    entries: tuple[int, ...]

    def __post_init__(self):
        entries = tuple(int(e) for e in self.entries)
        object.__setattr__(self, "entries", entries)
        M = len(entries)
        if M < 2:
            raise OutOfClassError(f"need at least two entries, got {entries}")
        if sorted(entries) != list(range(M)):
            raise OutOfClassError(f"{entries} is not a permutation of 0..{M - 1}")
        ws = entries[1:]
        l = _down_prefix_length(ws)
        if any(ws[i] >= ws[i + 1] for i in range(l - 1, len(ws) - 1)):
            raise OutOfClassError(f"{entries}: entries after s are not decreasing-then-increasing")
        if (entries[0] + 1) % M not in ws[:l]:
            raise OutOfClassError(f"{entries}: s+1 is not in the decreasing prefix")

    @property
    def modulus(self):
        return len(self.entries)

    @property
    def s(self):
        return self.entries[0]

    @property
    def w(self):
        return self.entries[1:]

    @property
    def l(self):
        return _down_prefix_length(self.w)

    @classmethod
    def parse(cls, text: str) -> "SPermutation":
        try:
            return cls(tuple(int(tok) for tok in text.split()))
        except ValueError as exc:
            if isinstance(exc, OutOfClassError):
                raise
            raise ValueError(f"cannot parse permutation {text!r}") from None

    def __str__(self):
        return " ".join(map(str, self.entries))


def encode(t: TElement) -> SPermutation:
    gamma = t.alpha.parts + t.beta.parts
    l, s, r = len(gamma), t.s, t.n - t.k
    # wbar_l = 0 and wbar_{l-i} = gamma_1 + ... + gamma_i
    wbar = [0] * l
    for i, total in enumerate(accumulate(gamma[:l - 1]), start=1):
        wbar[l - i - 1] = total
    prefix = [x if x < s else x + 1 for x in wbar]
    rest = sorted(set(range(r + 1)) - {s} - set(prefix))
    return SPermutation((s, *prefix, *rest))


def decode(p: SPermutation, n: int | None = None, k: int | None = None) -> TElement:
    """Inverse of ``encode``.  Supply ``n`` or ``k``; the modulus fixes n - k."""
    r = p.modulus - 1
    if n is None and k is None:
        raise ValueError("decode needs n or k to recover the marked part value")
    if n is None:
        n = k + r
    if k is None:
        k = n - r
    if n - k != r:
        raise OutOfClassError(f"n-k={n - k} does not match the modulus {p.modulus}")
    s, l = p.s, p.l
    wbar = [x if x < s else x - 1 for x in p.w[:l]]
    # boundary conventions: wbar_l = 0 on the right, wbar_0 = n-k on the left
    padded = [r] + wbar
    gamma = [padded[l - i] - padded[l - i + 1] for i in range(1, l + 1)]
    sums = list(accumulate(gamma, initial=0))
    if s not in sums:
        raise OutOfClassError(f"{p}: no prefix of the recovered parts {gamma} sums to s={s}")
    cut = sums.index(s)
    return TElement(n, k, Composition(tuple(gamma[:cut])), Composition(tuple(gamma[cut:])))


def encode_marked(m: MarkedKPart) -> SPermutation:
    return encode(TElement.from_marked(m))


def decode_marked(p: SPermutation, k: int) -> MarkedKPart:
    return decode(p, k=k).to_marked()


def enumerate_S(n: int, k: int):
    """All code words for marked k-parts of compositions of n, sorted.

    Built directly from the defining conditions, independently of ``encode``.
    """
    if not 1 <= k <= n - 1:
        raise ValueError(f"need 1 <= k <= n-1, got n={n}, k={k}")
    check_cap(n)
    r = n - k
    M = r + 1
    found = []
    for s in range(M):
        others = [x for x in range(M) if x != s]
        forced = {(s + 1) % M, others[0]}
        free = [x for x in others if x not in forced]
        for size in range(len(free) + 1):
            for extra in combinations(free, size):
                prefix = sorted(forced | set(extra), reverse=True)
                rest = sorted(set(others) - set(prefix))
                found.append((s, *prefix, *rest))
    found.sort()
    for entries in found:
        yield SPermutation(entries)


def marked_kparts(n: int, k: int):
    """Every k-part of every composition of n, as a MarkedKPart."""
    return enumerate_marked_kparts(n, k)
