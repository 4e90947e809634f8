"""Generating functions and closed forms for pattern and k-part counts.

Every count is an exact integer: rational generating functions are expanded
by ``series.expand`` and read off coefficient by coefficient.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from math import comb

from .patterns import SegmentedPattern, as_spop, linear_extensions
from .series import RationalGF, expand, poly, poly_mul, poly_pow, TruncatedSeries3


def binom(a, b):
    """Binomial coefficient, zero whenever a < 0, b < 0 or b > a."""
    if a < 0 or b < 0 or b > a:
        return 0
    return comb(a, b)


@dataclass(frozen=True)
class KPartQuery:
    n: int
    k: int
    l: int
    s: int

    def __post_init__(self):
        if min(self.n, self.k, self.l, self.s) < 0:
            raise ValueError(f"all of n, k, l, s must be nonnegative: {self}")
        if self.s > self.n:
            raise ValueError(f"prefix sum s={self.s} exceeds n={self.n}")

    def value(self):
        return f_closed(self.n, self.k, self.l, self.s)


def _one_minus_x_pow(m):
    return poly({0: 1, m: -1})


def composition_count(n: int, l: int) -> int:
    """C(n, l) read off the expansion of x^l / (1-x)^l."""
    if n < 0 or l < 0:
        raise ValueError(f"n and l must be nonnegative, got n={n}, l={l}")
    gf = RationalGF(poly({l: 1}), poly_pow(_one_minus_x_pow(1), l))
    return expand(gf, (n, 0, 0)).coeff(n)


def _suffix_weights(v: SegmentedPattern):
    """m_k = mu_{j-k+1} + ... + mu_j for k = 1..j."""
    mu = v.content
    j = len(mu)
    return tuple(sum(mu[j - k:]) for k in range(1, j + 1))


def pattern_gf(v: SegmentedPattern) -> RationalGF:
    """Generating function of compositions order-isomorphic to ``v``.

    Product over k of x^{m_k} / (1 - x^{m_k}).
    """
    ms = _suffix_weights(v)
    den = TruncatedSeries3.one()
    for m in ms:
        den = poly_mul(den, _one_minus_x_pow(m))
    return RationalGF(poly({sum(ms): 1}), den)


# (1-x)(1-xz) / ((1-x-xy)(1-xz-xyz)): parts left and right of an occurrence
_FRAME_NUM = poly({(0, 0, 0): 1, (1, 0, 0): -1, (1, 0, 1): -1, (2, 0, 1): 1})
_FRAME_DEN = poly_mul(poly({(0, 0, 0): 1, (1, 0, 0): -1, (1, 1, 0): -1}),
                      poly({(0, 0, 0): 1, (1, 0, 1): -1, (1, 1, 1): -1}))


def omega(w) -> RationalGF:
    """Trivariate generating function of occurrences of ``w``.

    The coefficient of x^n y^l z^s counts occurrences among compositions of
    n with l parts outside the occurrence and prefix sum s before it.  The
    linear-extension terms share the least common multiple of their
    (1 - x^m) denominators.
    """
    w = as_spop(w)
    factor_sets = [Counter(_suffix_weights(v)) for v in linear_extensions(w)]
    common = Counter()
    for fs in factor_sets:
        common |= fs
    numerator = poly({})
    for fs in factor_sets:
        term = poly({sum(fs.elements()): 1})
        for m, mult in sorted((common - fs).items()):
            term = poly_mul(term, poly_pow(_one_minus_x_pow(m), mult))
        numerator = _padded_add(numerator, term)
    denominator = TruncatedSeries3.one()
    for m, mult in sorted(common.items()):
        denominator = poly_mul(denominator, poly_pow(_one_minus_x_pow(m), mult))
    return RationalGF(poly_mul(numerator, _FRAME_NUM), poly_mul(denominator, _FRAME_DEN))


def _padded_add(p, q):
    caps = tuple(max(a, b) for a, b in zip(p.caps, q.caps))
    return p.restrict(caps) + q.restrict(caps)


@lru_cache(maxsize=256)
def omega_series(w, caps) -> TruncatedSeries3:
    """Expansion of ``omega(w)`` truncated at ``caps`` (cached)."""
    return expand(omega(w), tuple(caps))


@lru_cache(maxsize=256)
def _total_series(w, n_cap):
    return expand(omega(w).specialize(y=1, z=1), (n_cap, 0, 0))


def count_occurrences_total(w, n: int) -> int:
    """Occurrences of ``w`` summed over all compositions of ``n``."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    return _total_series(as_spop(w), n).coeff(n)


def c_w(w, n: int, l: int, s: int, caps=None) -> int:
    """Occurrences of ``w`` with ``l`` outside parts and prefix sum ``s`` among
    compositions of ``n``.

    Without explicit ``caps`` the expansion is sized to the query.  With
    explicit caps, indices beyond them are an error.
    """
    w = as_spop(w)
    if caps is None:
        # s > n or l > n can never occur: those coefficients are zero
        if s > n or l > n:
            return 0
        caps = (n, n, n)
    return omega_series(w, tuple(caps)).coeff(n, l, s)


def f_closed(n: int, k: int, l: int, s: int) -> int:
    """Number of k-parts at prefix sum ``s`` among compositions of ``n`` with
    ``l + 1`` parts."""
    if min(n, k, l, s) < 0:
        raise ValueError(f"arguments must be nonnegative: n={n}, k={k}, l={l}, s={s}")
    if n == 0 or k == 0 or k > n:
        return 0
    if k == n:
        return 1 if l == 0 and s == 0 else 0
    r = n - k
    if s in (0, r) and 1 <= l <= r:
        return binom(r - 1, l - 1)
    if 1 <= s <= r - 1 and 2 <= l <= r:
        return binom(r - 2, l - 2)
    return 0


def total_kparts(n: int, k: int) -> int:
    """Number of k-parts among all compositions of ``n``, for 1 <= k <= n-1."""
    if n < 1 or not 1 <= k <= n - 1:
        raise ValueError(f"need n >= 1 and 1 <= k <= n-1, got n={n}, k={k}")
    # 2^(r-2) (r+3) with the power taken after the multiplication so r = 1 stays integral
    r = n - k
    return ((r + 3) << r) >> 2


def palindrome_kpart_count(N: int, k: int) -> int:
    """Number of k-parts, k odd, among palindromic compositions of even N.

    Equals (n-k+1) 2^(n-k-1) with n = N/2 + 1 for k <= n-1; a palindrome of N
    cannot hold an odd part k >= n, so those counts are 0.
    """
    if N < 0 or N % 2:
        raise ValueError(f"N must be even and nonnegative, got {N}")
    if k % 2 == 0:
        raise ValueError(f"k must be odd, got {k}")
    if not 1 <= k <= N:
        raise ValueError(f"need 1 <= k <= N, got k={k}, N={N}")
    n = N // 2 + 1
    if k >= n:
        return 0
    r = n - k
    return (r + 1) << (r - 1)
