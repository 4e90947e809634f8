"""Segmented patterns, segmented partially ordered patterns (SPOPs) and
brute-force occurrence counting in compositions.
"""
from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple, Sequence

from .limits import check_cap


@dataclass(frozen=True, order=True)
class SegmentedPattern:
    """A word over {1, ..., j} that uses every letter up to its maximum j."""

    letters: tuple[int, ...]

    def __post_init__(self):
        letters = tuple(int(a) for a in self.letters)
        if not letters:
            raise ValueError("a segmented pattern must be nonempty")
        used = set(letters)
        if used != set(range(1, max(letters) + 1)):
            raise ValueError(f"letters {letters} do not form an order ideal {{1..j}}")
        object.__setattr__(self, "letters", letters)

    @classmethod
    def parse(cls, text: str) -> "SegmentedPattern":
        text = text.strip()
        if not text.isdigit():
            raise ValueError(f"pattern literal must be a digit string, got {text!r}")
        return cls(tuple(int(ch) for ch in text))

    @property
    def j(self) -> int:
        return max(self.letters)

    @property
    def content(self) -> tuple[int, ...]:
        """Multiplicity of each letter 1..j."""
        counts = Counter(self.letters)
        return tuple(counts[a] for a in range(1, self.j + 1))

    def __len__(self):
        return len(self.letters)

    def __str__(self):
        if self.j < 10:
            return "".join(map(str, self.letters))
        return " ".join(map(str, self.letters))


@dataclass(frozen=True)
class PosetAlphabet:
    """Finite labels with a strict order, stored transitively closed."""

    labels: tuple
    less: frozenset

    @classmethod
    def from_relations(cls, labels, pairs=()) -> "PosetAlphabet":
        labels = tuple(labels)
        if len(set(labels)) != len(labels):
            raise ValueError(f"duplicate labels in {labels}")
        known = set(labels)
        closure = set()
        for a, b in pairs:
            if a not in known or b not in known:
                raise ValueError(f"relation ({a!r}, {b!r}) uses an unknown label")
            closure.add((a, b))
        # Warshall
        for mid in labels:
            below = [a for (a, b) in closure if b == mid]
            above = [b for (a, b) in closure if a == mid]
            for a in below:
                for b in above:
                    closure.add((a, b))
        for a in labels:
            if (a, a) in closure:
                raise ValueError(f"order relation has a cycle through {a!r}")
        return cls(labels, frozenset(closure))

    @classmethod
    def chain(cls, labels) -> "PosetAlphabet":
        labels = tuple(labels)
        return cls(labels, frozenset(
            (labels[i], labels[j]) for i in range(len(labels)) for j in range(i + 1, len(labels))))

    def lt(self, a, b) -> bool:
        return (a, b) in self.less


@dataclass(frozen=True)
class Spop:
    """A word over a poset alphabet whose letters form an order ideal."""

    alphabet: PosetAlphabet
    word: tuple

    def __post_init__(self):
        word = tuple(self.word)
        if not word:
            raise ValueError("a SPOP must be nonempty")
        labels = set(self.alphabet.labels)
        for a in word:
            if a not in labels:
                raise ValueError(f"word letter {a!r} is not in the alphabet")
        used = set(word)
        for a, b in self.alphabet.less:
            if b in used and a not in used:
                raise ValueError(
                    f"letters of the word are not an order ideal: {b!r} used but {a!r} is not")
        object.__setattr__(self, "word", word)

    @classmethod
    def from_pattern(cls, v: SegmentedPattern) -> "Spop":
        return cls(PosetAlphabet.chain(range(1, v.j + 1)), v.letters)

    @classmethod
    def from_dict(cls, doc: dict) -> "Spop":
        try:
            elements, less, word = doc["elements"], doc.get("less", []), doc["word"]
        except KeyError as exc:
            raise ValueError(f"SPOP document is missing field {exc.args[0]!r}") from None
        elements = [_hashable(e) for e in elements]
        pairs = []
        for pair in less:
            if len(pair) != 2:
                raise ValueError(f"'less' entries must be label pairs, got {pair!r}")
            pairs.append((_hashable(pair[0]), _hashable(pair[1])))
        return cls(PosetAlphabet.from_relations(elements, pairs), tuple(_hashable(a) for a in word))

    @classmethod
    def from_json(cls, text: str) -> "Spop":
        return cls.from_dict(json.loads(text))

    def __len__(self):
        return len(self.word)

    def __str__(self):
        return " ".join(str(a) for a in self.word)


def _hashable(x):
    return tuple(x) if isinstance(x, list) else x


class OccurrenceRecord(NamedTuple):
    start: int
    s: int  # sum of parts strictly before the occurrence
    l: int  # parts outside the occurrence


def as_spop(w) -> Spop:
    if isinstance(w, Spop):
        return w
    if isinstance(w, SegmentedPattern):
        return Spop.from_pattern(w)
    if isinstance(w, str):
        return Spop.from_pattern(SegmentedPattern.parse(w))
    raise TypeError(f"expected a Spop or SegmentedPattern, got {type(w).__name__}")


def standardize(values: Sequence[int]) -> SegmentedPattern:
    """Replace each value by the rank of its value among the distinct values."""
    values = tuple(values)
    if not values:
        raise ValueError("cannot standardize an empty sequence")
    rank = {v: i + 1 for i, v in enumerate(sorted(set(values)))}
    return SegmentedPattern(tuple(rank[v] for v in values))


def linear_extensions(w) -> tuple[SegmentedPattern, ...]:
    """Segmented patterns refining the order of ``w``, sorted lexicographically.

    Distinct alphabet elements get distinct letters; repeated elements of the
    word get equal letters.
    """
    return _linear_extensions(as_spop(w))


@lru_cache(maxsize=None)
def _linear_extensions(w: Spop) -> tuple[SegmentedPattern, ...]:
    elements = list(dict.fromkeys(w.word))
    below = {e: {a for a in elements if w.alphabet.lt(a, e)} for e in elements}
    found = []
    rank = {}

    def place(letter):
        if letter > len(elements):
            found.append(SegmentedPattern(tuple(rank[a] for a in w.word)))
            return
        for e in elements:
            if e not in rank and below[e] <= rank.keys():
                rank[e] = letter
                place(letter + 1)
                del rank[e]

    place(1)
    return tuple(sorted(set(found)))


def count_occurrences(c, w) -> list[OccurrenceRecord]:
    """Occurrences of ``w`` as order-isomorphic contiguous factors of ``c``."""
    parts = tuple(c)
    targets = {v.letters for v in linear_extensions(w)}
    m = len(next(iter(targets)))
    records = []
    prefix = 0
    for start in range(len(parts) - m + 1):
        if standardize(parts[start:start + m]).letters in targets:
            records.append(OccurrenceRecord(start, prefix, len(parts) - m))
        prefix += parts[start]
    return records


def pattern_count_oracle(v: SegmentedPattern, n: int) -> int:
    """Number of compositions of ``n`` order-isomorphic to ``v``.

    Counts integer solutions of mu_1 t_1 + ... + mu_j t_j = n with
    0 < t_1 < ... < t_j, where mu is the content of ``v``.
    """
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    check_cap(n)
    mu = v.content
    j = len(mu)

    def solutions(i, low, remaining):
        if i == j:
            return 1 if remaining == 0 else 0
        total = 0
        t = low
        # the cheapest completion sets t_{i+1..j} to t+1, t+2, ...
        while mu[i] * t + sum(mu[q] * (t + q - i) for q in range(i + 1, j)) <= remaining:
            total += solutions(i + 1, t + 1, remaining - mu[i] * t)
            t += 1
        return total

    return solutions(0, 1, n)
