"""Self-checks behind ``copatt verify``.

Each check compares a fast path against brute-force enumeration for every
size up to a bound and returns the first counterexample it finds.
"""
from __future__ import annotations

import random
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from . import gallery
from .compositions import (enumerate_compositions, enumerate_marked_kparts, enumerate_palindromes,
                           format_marked)
from .counting import (binom, c_w, composition_count, count_occurrences_total, f_closed,
                       palindrome_kpart_count, pattern_gf, total_kparts)
from .kparts import TElement, decode, encode, enumerate_S
from .limits import check_cap
from .palindromes import (enc1_forward, enc1_inverse, enc2_forward, enc2_inverse,
                          enumerate_downup, enumerate_marked_palindromes)
from .patterns import PosetAlphabet, SegmentedPattern, Spop, count_occurrences
from .series import RationalGF, TruncatedSeries3, expand, invert_unit, poly, poly_mul


@dataclass
class CheckResult:
    name: str
    params: str
    passed: bool
    counterexample: str | None = None
    elapsed: float = 0.0


@dataclass
class VerifyReport:
    results: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self):
        return all(r.passed for r in self.results)

    def lines(self, verbose=False):
        out = []
        for r in self.results:
            line = f"{'pass' if r.passed else 'FAIL'}  {r.name}  [{r.params}]"
            if verbose:
                line += f"  {r.elapsed:.2f}s"
            if r.counterexample:
                line += f"\n      counterexample: {r.counterexample}"
            out.append(line)
        return out

    def as_dict(self, verbose=False):
        rows = []
        for r in self.results:
            row = {"check": r.name, "params": r.params,
                   "status": "pass" if r.passed else "fail",
                   "counterexample": r.counterexample}
            if verbose:
                row["elapsed"] = round(r.elapsed, 3)
            rows.append(row)
        return {"passed": self.passed, "checks": rows}


def sample_spop():
    """The SPOP 1 1'2' with 1' < 2' and 1 incomparable to both."""
    return Spop(PosetAlphabet.from_relations(["1", "1'", "2'"], [("1'", "2'")]),
                ("1", "1'", "2'"))


GF_PATTERNS = ("11", "12", "21", "112", "1112", "11112")


def _gf_patterns():
    return [(p, p) for p in GF_PATTERNS] + [("1 1'2'", sample_spop())]


# -- checks: each takes a size bound and returns a counterexample or None ------

def check_baseline(max_n):
    for n in range(1, max_n + 1):
        got = sum(1 for _ in enumerate_compositions(n))
        if got != 2 ** (n - 1):
            return f"|compositions({n})| = {got}"
        for l in range(n + 1):
            if composition_count(n, l) != binom(n - 1, l - 1):
                return f"composition_count({n}, {l}) = {composition_count(n, l)}"
    for N in range(max_n + 1):
        got = sum(1 for _ in enumerate_palindromes(N))
        if got != 2 ** (N // 2):
            return f"|palindromes({N})| = {got}"
    return None


def check_gf_totals(max_n):
    for label, w in _gf_patterns():
        for n in range(max_n + 1):
            oracle = sum(len(count_occurrences(c, w)) for c in enumerate_compositions(n))
            got = count_occurrences_total(w, n)
            if got != oracle:
                return f"w={label} n={n}: series {got}, enumeration {oracle}"
    return None


def check_trivariate(max_n):
    for w in ("11", "12", "21"):
        for n in range(max_n + 1):
            oracle = Counter()
            for c in enumerate_compositions(n):
                for rec in count_occurrences(c, w):
                    oracle[rec.l, rec.s] += 1
            for l in range(max_n + 1):
                for s in range(max_n + 1):
                    if c_w(w, n, l, s) != oracle[l, s]:
                        return (f"w={w} n={n} l={l} s={s}: series {c_w(w, n, l, s)}, "
                                f"enumeration {oracle[l, s]}")
    return None


def check_level_then_rise(max_n):
    for m in range(3):
        v = SegmentedPattern((1,) * (m + 1) + (2,))
        caps = (max_n, 0, 0)
        target = RationalGF(poly({m + 3: 1}), poly_mul(poly({0: 1, 1: -1}), poly({0: 1, m + 2: -1})))
        got, want = expand(pattern_gf(v), caps), expand(target, caps)
        for a in range(max_n + 1):
            if got.coeff(a) != want.coeff(a):
                return f"m={m} degree {a}: {got.coeff(a)} vs {want.coeff(a)}"
    return None


def check_kparts(max_n):
    for n in range(2, max_n + 1):
        for k in range(1, n):
            oracle = Counter((m.l, m.s) for m in enumerate_marked_kparts(n, k))
            for l in range(n + 1):
                for s in range(n + 1):
                    if f_closed(n, k, l, s) != oracle[l, s]:
                        return f"n={n} k={k} l={l} s={s}: {f_closed(n, k, l, s)} vs {oracle[l, s]}"
            total = sum(oracle.values())
            if total != total_kparts(n, k):
                return f"n={n} k={k}: total {total_kparts(n, k)} vs {total}"
    return None


def check_kpart_bijection(max_n):
    for n in range(2, max_n + 1):
        for k in range(1, n):
            image = []
            per_cell = Counter()
            for m in enumerate_marked_kparts(n, k):
                t = TElement.from_marked(m)
                p = encode(t)
                if decode(p, n=n) != t:
                    return f"{format_marked(m)} -> {p} does not decode back"
                image.append(p.entries)
                per_cell[t.l, t.s] += 1
            if sorted(image) != [p.entries for p in enumerate_S(n, k)]:
                return f"n={n} k={k}: image differs from S"
            for (l, s), count in per_cell.items():
                if count != f_closed(n, k, l, s):
                    return f"n={n} k={k} l={l} s={s}: {count} vs {f_closed(n, k, l, s)}"
    return None


def _check_palindrome_encoding(forward, inverse, max_n):
    for n in range(2, max_n + 1):
        N = 2 * (n - 1)
        for k in range(1, n, 2):
            image = []
            for mp in enumerate_marked_palindromes(N, k):
                p = forward(mp)
                if inverse(p, k, N) != mp:
                    return f"{mp} -> {p} does not invert"
                image.append(p.entries)
            if len(image) != palindrome_kpart_count(N, k):
                return f"N={N} k={k}: {len(image)} images, expected {palindrome_kpart_count(N, k)}"
            if sorted(image) != [p.entries for p in enumerate_downup(n - k + 1)]:
                return f"N={N} k={k}: image is not all down-up permutations of [{n - k + 1}]"
    return None


def check_pal1(max_n):
    return _check_palindrome_encoding(enc1_forward, enc1_inverse, max_n)


def check_pal2(max_n):
    return _check_palindrome_encoding(enc2_forward, enc2_inverse, max_n)


_GALLERY = {
    "S1": (gallery.s1_forward, gallery.s1_backward),
    "S2": (gallery.s2_forward, gallery.s2_backward),
    "S3": (gallery.s3_backward, gallery.s3_forward),
    "S4": (gallery.s4_backward, gallery.s4_forward),
}


def check_gallery_class(name, max_n):
    to_partner, from_partner = _GALLERY[name]
    for n in range(1 if name == "S1" else 0, max_n + 1):
        members = gallery.enumerate_class(name, n)
        partners = gallery.enumerate_class(gallery.PARTNERS[name], n)
        want = gallery.expected_size(name, n)
        if len(members) != want or len(partners) != gallery.expected_size(gallery.PARTNERS[name], n):
            return f"n={n}: |{name}| = {len(members)}, partner {len(partners)}, expected {want}"
        image = []
        for p in members:
            q = to_partner(p)
            back = from_partner(q)
            if gallery.canonical_text(back) != gallery.canonical_text(p):
                return f"n={n}: {gallery.canonical_text(p)} -> {gallery.canonical_text(q)} -> {gallery.canonical_text(back)}"
            image.append(gallery.canonical_text(q))
        if sorted(image) != sorted(gallery.canonical_text(q) for q in partners):
            return f"n={n}: image of {name} differs from its partner class"
    return None


def check_series_algebra(max_n, cases=200, seed=0):
    rng = random.Random(seed)
    caps = (max_n, max_n, max_n)

    def rand_series(unit=False):
        terms = {(rng.randint(0, max_n), rng.randint(0, max_n), rng.randint(0, max_n)):
                 rng.randint(-5, 5) for _ in range(6)}
        if unit:
            terms[0, 0, 0] = rng.choice((1, -1))
        return TruncatedSeries3.from_terms(terms, caps, exact=False)

    one = TruncatedSeries3.one(caps, exact=False)
    for i in range(cases):
        f, g, h = rand_series(), rand_series(), rand_series()
        if (f + g) * h != f * h + g * h or f * (g * h) != (f * g) * h or f * g != g * f:
            return f"case {i}: ring law fails for f={f!r}"
        u = rand_series(unit=True)
        inv = invert_unit(u)
        if u * inv != one or inv * u != one:
            return f"case {i}: invert_unit fails for {u!r}"
        small = tuple(max(c - 2, 0) for c in caps)
        if (f * g).restrict(small) != f.restrict(small) * g.restrict(small):
            return f"case {i}: truncation is not a ring map"
    return None


CHECKS = {
    "baseline": (check_baseline, 16),
    "gf": (check_gf_totals, 12),
    "trivariate": (check_trivariate, 10),
    "example": (check_level_then_rise, 16),
    "kparts": (check_kparts, 14),
    "kpart-bijection": (check_kpart_bijection, 12),
    "pal1": (check_pal1, 12),
    "pal2": (check_pal2, 12),
    "s1": (lambda m: check_gallery_class("S1", m), 10),
    "s2": (lambda m: check_gallery_class("S2", m), 10),
    "s3": (lambda m: check_gallery_class("S3", m), 8),
    "s4": (lambda m: check_gallery_class("S4", m), 10),
    "series": (check_series_algebra, 8),
}

SUITES = {"all": sorted(CHECKS), "gallery": ["s1", "s2", "s3", "s4"],
          "palindromes": ["pal1", "pal2"], **{name: [name] for name in CHECKS}}


def _run_one(name, bound):
    fn, _ = CHECKS[name]
    start = time.perf_counter()
    try:
        counterexample = fn(bound)
    except Exception as exc:  # a crash is a failure with its message as witness
        counterexample = f"{type(exc).__name__}: {exc}"
    return CheckResult(name, f"n <= {bound}", counterexample is None, counterexample,
                       time.perf_counter() - start)


def run_suite(suite="all", max_n=None, jobs=1) -> VerifyReport:
    """Run a suite.  ``max_n`` replaces every check's default size bound."""
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; choose from {', '.join(sorted(SUITES))}")
    names = sorted(SUITES[suite])
    bounds = {name: CHECKS[name][1] if max_n is None else max_n for name in names}
    for bound in bounds.values():
        check_cap(bound)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_one, names, [bounds[n] for n in names]))
    else:
        results = [_run_one(name, bounds[name]) for name in names]
    return VerifyReport(sorted(results, key=lambda r: r.name))
