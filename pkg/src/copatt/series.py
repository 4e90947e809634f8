"""Truncated power series in x, y, z with exact integer coefficients.

Coefficients live in a dense numpy array of Python ints (``dtype=object``),
so nothing ever overflows.  A series with ``exact=True`` is a polynomial
whose terms all fit inside its caps; only exact series may be zero-padded
to larger caps.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import CapMismatchError


def _table(caps):
    return np.zeros(tuple(c + 1 for c in caps), dtype=object)


class TruncatedSeries3:
    __slots__ = ("_c", "exact")

    def __init__(self, coeffs, exact=False):
        arr = np.array(coeffs, dtype=object)
        while arr.ndim < 3:
            arr = arr[..., np.newaxis]
        if arr.ndim != 3:
            raise ValueError(f"coefficient table must have at most 3 axes, got {arr.ndim}")
        if not (isinstance(coeffs, np.ndarray) and coeffs.dtype == object) and arr.size:
            arr = np.vectorize(int, otypes=[object])(arr)
        self._c = arr
        self.exact = bool(exact)

    @classmethod
    def zero(cls, caps, exact=False):
        return cls(_table(caps), exact)

    @classmethod
    def one(cls, caps=(0, 0, 0), exact=True):
        return cls.from_terms({(0, 0, 0): 1}, caps, exact)

    @classmethod
    def from_terms(cls, terms, caps=None, exact=None):
        """Build from ``{(a, b, c): coeff}``; default caps are the tight degree box."""
        terms = {tuple(k): int(v) for k, v in terms.items() if v}
        if caps is None:
            caps = tuple(max((k[i] for k in terms), default=0) for i in range(3))
            exact = True if exact is None else exact
        caps = tuple(caps)
        arr = _table(caps)
        fits = True
        for (a, b, c), v in terms.items():
            if min(a, b, c) < 0:
                raise ValueError(f"negative exponent in {(a, b, c)}")
            if a <= caps[0] and b <= caps[1] and c <= caps[2]:
                arr[a, b, c] += v
            else:
                fits = False
        if exact is None:
            exact = fits
        return cls(arr, exact and fits)

    @classmethod
    def geometric(cls, caps):
        """1/(1-x) truncated at ``caps``."""
        arr = _table(caps)
        arr[:, 0, 0] = 1
        return cls(arr)

    @property
    def caps(self):
        return tuple(d - 1 for d in self._c.shape)

    @property
    def table(self):
        return self._c.copy()

    def coeff(self, a, b=0, c=0):
        if min(a, b, c) < 0:
            raise IndexError(f"negative exponent {(a, b, c)}")
        nx, ny, nz = self.caps
        if a > nx or b > ny or c > nz:
            raise IndexError(f"coefficient {(a, b, c)} lies outside caps {self.caps}")
        return int(self._c[a, b, c])

    def constant_term(self):
        return int(self._c[0, 0, 0])

    def terms(self):
        """Nonzero coefficients as ``((a, b, c), value)`` in lexicographic order."""
        idx = np.argwhere(self._c != 0)
        return [((int(a), int(b), int(c)), int(self._c[a, b, c])) for a, b, c in idx]

    def dump(self):
        return "\n".join(f"{a} {b} {c} {v}" for (a, b, c), v in self.terms())

    def restrict(self, caps):
        """Truncate to ``caps``; growing a cap is allowed only for exact series."""
        caps = tuple(caps)
        out = _table(caps)
        box = tuple(slice(0, min(c, d) + 1) for c, d in zip(caps, self.caps))
        out[box] = self._c[box]
        grows = any(c > d for c, d in zip(caps, self.caps))
        if grows and not self.exact:
            raise CapMismatchError(
                f"cannot extend a truncated series from caps {self.caps} to {caps}")
        return TruncatedSeries3(out, self.exact and _fits(self, caps))

    def degree_box(self):
        """Largest exponent per variable among nonzero terms."""
        terms = self.terms()
        return tuple(max((k[i] for k, _ in terms), default=0) for i in range(3))

    def _same_caps(self, other, op):
        if not isinstance(other, TruncatedSeries3):
            return NotImplemented
        if self.caps != other.caps:
            raise CapMismatchError(f"cannot {op} series with caps {self.caps} and {other.caps}")
        return None

    def __add__(self, other):
        if isinstance(other, int):
            other = TruncatedSeries3.from_terms({(0, 0, 0): other}, self.caps, True)
        bad = self._same_caps(other, "add")
        if bad is NotImplemented:
            return bad
        return TruncatedSeries3(self._c + other._c, self.exact and other.exact)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries3(-self._c, self.exact)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return TruncatedSeries3(self._c * other, self.exact)
        bad = self._same_caps(other, "multiply")
        if bad is NotImplemented:
            return bad
        nx, ny, nz = self.caps
        out = _table(self.caps)
        g = other._c
        for a, b, c in np.argwhere(self._c != 0):
            out[a:, b:, c:] += self._c[a, b, c] * g[:nx + 1 - a, :ny + 1 - b, :nz + 1 - c]
        result = TruncatedSeries3(out)
        if self.exact and other.exact:
            da, db = self.degree_box(), other.degree_box()
            result.exact = all(p + q <= cap for p, q, cap in zip(da, db, self.caps))
        return result

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, int):
            other = TruncatedSeries3.from_terms({(0, 0, 0): other}, self.caps)
        if not isinstance(other, TruncatedSeries3):
            return NotImplemented
        box = tuple(slice(0, min(c, d) + 1) for c, d in zip(self.caps, other.caps))
        return bool(np.all(self._c[box] == other._c[box]))

    __hash__ = None

    def __repr__(self):
        shown = ", ".join(f"{v}*x^{a}y^{b}z^{c}" for (a, b, c), v in self.terms()[:8])
        more = ", ..." if len(self.terms()) > 8 else ""
        return f"TruncatedSeries3(caps={self.caps}, exact={self.exact}, [{shown}{more}])"


def _fits(f, caps):
    return all(d <= c for d, c in zip(f.degree_box(), caps))


def add(f, g):
    return f + g


def mul(f, g):
    return f * g


def coeff(f, a, b=0, c=0):
    return f.coeff(a, b, c)


def invert_unit(f: TruncatedSeries3) -> TruncatedSeries3:
    """Multiplicative inverse of ``f`` up to its caps; needs constant term +1 or -1."""
    f0 = f.constant_term()
    if f0 not in (1, -1):
        raise ValueError(f"constant term must be 1 or -1 to invert over the integers, got {f0}")
    nx, ny, nz = f.caps
    fc = f._c
    g = _table(f.caps)
    # g[idx] = f0 * (delta - sum_{0 != j <= idx} f[j] g[idx - j]), lexicographic order
    for a in range(nx + 1):
        for b in range(ny + 1):
            for c in range(nz + 1):
                acc = fc[:a + 1, :b + 1, :c + 1] * g[a::-1, b::-1, c::-1]
                total = int(acc.sum()) if acc.size else 0
                delta = 1 if (a, b, c) == (0, 0, 0) else 0
                g[a, b, c] = f0 * (delta - total)
    return TruncatedSeries3(g)


def poly(terms) -> TruncatedSeries3:
    """Exact polynomial from ``{(a, b, c): coeff}`` or ``{a: coeff}``."""
    norm = {}
    for k, v in terms.items():
        key = (k, 0, 0) if isinstance(k, int) else tuple(k) + (0,) * (3 - len(k))
        norm[key] = norm.get(key, 0) + v
    return TruncatedSeries3.from_terms(norm)


def _require_exact(*ps):
    for p in ps:
        if not p.exact:
            raise ValueError("polynomial arithmetic needs exact (untruncated) operands")


def poly_add(p, q):
    _require_exact(p, q)
    caps = tuple(max(a, b) for a, b in zip(p.caps, q.caps))
    return p.restrict(caps) + q.restrict(caps)


def poly_mul(p, q):
    _require_exact(p, q)
    caps = tuple(a + b for a, b in zip(p.degree_box(), q.degree_box()))
    out = p.restrict(caps) * q.restrict(caps)
    return out.restrict(out.degree_box())


def poly_pow(p, e):
    out = TruncatedSeries3.one()
    for _ in range(e):
        out = poly_mul(out, p)
    return out


def specialize_poly(p, y=None, z=None):
    """Substitute integer values for y and/or z in an exact polynomial."""
    _require_exact(p)
    arr = p.table
    if y is not None:
        weights = np.array([y ** b for b in range(arr.shape[1])], dtype=object)
        arr = (arr * weights[np.newaxis, :, np.newaxis]).sum(axis=1, keepdims=True)
    if z is not None:
        weights = np.array([z ** c for c in range(arr.shape[2])], dtype=object)
        arr = (arr * weights[np.newaxis, np.newaxis, :]).sum(axis=2, keepdims=True)
    out = TruncatedSeries3(arr, exact=True)
    return out.restrict(out.degree_box())


@dataclass(frozen=True)
class RationalGF:
    """numerator / denominator with exact polynomial parts and unit denominator."""

    numerator: TruncatedSeries3
    denominator: TruncatedSeries3

    def __post_init__(self):
        _require_exact(self.numerator, self.denominator)
        if self.denominator.constant_term() != 1:
            raise ValueError(
                f"denominator must have constant term 1, got {self.denominator.constant_term()}")

    def __add__(self, other):
        if not isinstance(other, RationalGF):
            return NotImplemented
        num = poly_add(poly_mul(self.numerator, other.denominator),
                       poly_mul(other.numerator, self.denominator))
        return RationalGF(num, poly_mul(self.denominator, other.denominator))

    def __mul__(self, other):
        if not isinstance(other, RationalGF):
            return NotImplemented
        return RationalGF(poly_mul(self.numerator, other.numerator),
                          poly_mul(self.denominator, other.denominator))

    def specialize(self, y=None, z=None):
        return RationalGF(specialize_poly(self.numerator, y, z),
                          specialize_poly(self.denominator, y, z))


def expand(r: RationalGF, caps) -> TruncatedSeries3:
    """Power-series expansion of ``r`` truncated at ``caps``."""
    caps = tuple(caps)
    if r.denominator.constant_term() != 1:
        raise ValueError("denominator must have constant term 1")
    num = r.numerator.restrict(caps)
    den = r.denominator.restrict(caps)
    out = num * invert_unit(den)
    out.exact = False
    return out
