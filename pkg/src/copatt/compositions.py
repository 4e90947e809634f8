"""Integer compositions, their basic statistics and enumeration oracles.

A composition of n is a finite sequence of positive integers summing to n.
The empty sequence is the unique composition of 0.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import accumulate
from typing import Iterator

from .limits import check_cap


@dataclass(frozen=True, order=True)
class Composition:
    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(self.parts)
        for p in parts:
            if isinstance(p, bool) or not isinstance(p, int):
                raise TypeError(f"parts must be integers, got {p!r}")
            if p < 1:
                raise ValueError(f"parts must be positive, got {parts}")
        object.__setattr__(self, "parts", parts)

    @property
    def weight(self) -> int:
        return sum(self.parts)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __str__(self):
        return format_composition(self)


@dataclass(frozen=True)
class MarkedKPart:
    """A composition with one distinguished part (0-based ``index``)."""

    composition: Composition
    index: int

    def __post_init__(self):
        if not isinstance(self.composition, Composition):
            object.__setattr__(self, "composition", Composition(tuple(self.composition)))
        if not 0 <= self.index < len(self.composition):
            raise ValueError(
                f"index {self.index} out of range for {len(self.composition)} parts")

    @property
    def k(self) -> int:
        return self.composition[self.index]

    @property
    def s(self) -> int:
        """Sum of the parts before the marked one."""
        return sum(self.composition.parts[:self.index])

    @property
    def l(self) -> int:
        """Number of unmarked parts."""
        return len(self.composition) - 1

    @property
    def n(self) -> int:
        return self.composition.weight

    def __str__(self):
        return format_marked(self)


def splits(c) -> tuple[int, ...]:
    """Prefix sums of ``c``, including 0 and the total weight."""
    return (0,) + tuple(accumulate(c))


def reverse(c: Composition) -> Composition:
    return Composition(tuple(reversed(tuple(c))))


def is_palindrome(c) -> bool:
    parts = tuple(c)
    return parts == parts[::-1]


def _lex_compositions(n):
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in _lex_compositions(n - first):
            yield (first,) + rest


def _lex_compositions_with_parts(n, l):
    if l == 0:
        if n == 0:
            yield ()
        return
    # remaining l-1 parts need at least l-1 units
    for first in range(1, n - l + 2):
        for rest in _lex_compositions_with_parts(n - first, l - 1):
            yield (first,) + rest


def enumerate_compositions(n: int) -> Iterator[Composition]:
    """All compositions of ``n`` in lexicographic order."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    check_cap(n)
    for parts in _lex_compositions(n):
        yield Composition(parts)


def enumerate_compositions_with_parts(n: int, l: int) -> Iterator[Composition]:
    """All compositions of ``n`` with exactly ``l`` parts, lexicographically."""
    if n < 0 or l < 0:
        raise ValueError(f"n and l must be nonnegative, got n={n}, l={l}")
    check_cap(n)
    for parts in _lex_compositions_with_parts(n, l):
        yield Composition(parts)


def enumerate_palindromes(N: int) -> Iterator[Composition]:
    """All palindromic compositions of ``N`` in lexicographic order.

    Built from half-compositions (plus an optional central part), so the cost
    is proportional to the output size rather than to 2^(N-1).
    """
    if N < 0:
        raise ValueError(f"N must be nonnegative, got {N}")
    check_cap(N, "N")
    found = []
    for half in range(N // 2 + 1):
        center = N - 2 * half
        for h in _lex_compositions(half):
            if center == 0:
                found.append(h + h[::-1])
            else:
                found.append(h + (center,) + h[::-1])
    found.sort()
    for parts in found:
        yield Composition(parts)


def enumerate_marked_kparts(n: int, k: int | None = None) -> Iterator[MarkedKPart]:
    """Every (composition of n, part index) pair, optionally only k-parts."""
    for c in enumerate_compositions(n):
        for i, part in enumerate(c.parts):
            if k is None or part == k:
                yield MarkedKPart(c, i)


# text forms: "3+1+1+2", "0" for the empty composition, "3+1+[6]+2" when marked

_MARK = re.compile(r"^\[(\d+)\]$")


def format_composition(c) -> str:
    parts = tuple(c)
    if not parts:
        return "0"
    return "+".join(str(p) for p in parts)


def format_marked(m: MarkedKPart) -> str:
    return "+".join(
        f"[{p}]" if i == m.index else str(p) for i, p in enumerate(m.composition.parts))


def parse_composition(text: str) -> Composition:
    text = text.strip()
    if text == "0":
        return Composition(())
    if not text:
        raise ValueError("empty composition text; write the empty composition as '0'")
    try:
        parts = tuple(int(tok) for tok in text.split("+"))
    except ValueError:
        raise ValueError(f"cannot parse composition {text!r}") from None
    return Composition(parts)


def parse_marked(text: str) -> MarkedKPart:
    tokens = text.strip().split("+")
    parts = []
    index = None
    for i, tok in enumerate(tokens):
        m = _MARK.match(tok)
        if m:
            if index is not None:
                raise ValueError(f"more than one marked part in {text!r}")
            index = i
            tok = m.group(1)
        if not tok.isdigit():
            raise ValueError(f"cannot parse marked composition {text!r}")
        parts.append(int(tok))
    if index is None:
        raise ValueError(f"no marked part in {text!r}; wrap one part in brackets")
    return MarkedKPart(Composition(tuple(parts)), index)
