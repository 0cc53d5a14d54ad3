"""Exact integer polynomial arithmetic (univariate and bivariate).

Everything here is immutable and uses plain ints; no floating point.
"""

from __future__ import annotations

from itertools import zip_longest


class UnivariatePolynomial:
    """Integer polynomial in one variable, stored as a coefficient tuple."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def monomial(cls, degree, coeff=1):
        return cls([0] * degree + [coeff])

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def __bool__(self):
        return bool(self.coeffs)

    def __add__(self, other):
        other = _as_uni(other)
        return UnivariatePolynomial(
            a + b for a, b in zip_longest(self.coeffs, other.coeffs, fillvalue=0)
        )

    def __sub__(self, other):
        other = _as_uni(other)
        return UnivariatePolynomial(
            a - b for a, b in zip_longest(self.coeffs, other.coeffs, fillvalue=0)
        )

    def __mul__(self, other):
        other = _as_uni(other)
        if not self.coeffs or not other.coeffs:
            return UnivariatePolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return UnivariatePolynomial(out)

    __rmul__ = __mul__
    __radd__ = __add__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative power")
        out = UnivariatePolynomial([1])
        for _ in range(k):
            out = out * self
        return out

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def coefficient(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def padded(self, length):
        """Coefficient list padded with zeros up to the given length."""
        return list(self.coeffs) + [0] * (length - len(self.coeffs))

    def __eq__(self, other):
        if isinstance(other, int):
            other = UnivariatePolynomial([other])
        if not isinstance(other, UnivariatePolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"UnivariatePolynomial({list(self.coeffs)})"


def _as_uni(p):
    if isinstance(p, UnivariatePolynomial):
        return p
    if isinstance(p, int):
        return UnivariatePolynomial([p])
    raise TypeError(f"cannot coerce {p!r} to a univariate polynomial")


X = UnivariatePolynomial([0, 1])
ONE = UnivariatePolynomial([1])


class BivariatePolynomial:
    """Integer polynomial in two variables as a {(xdeg, ydeg): coeff} map."""

    __slots__ = ("coefficients",)

    def __init__(self, coefficients=None):
        cleaned = {}
        for key, value in (coefficients or {}).items():
            if value != 0:
                cleaned[(int(key[0]), int(key[1]))] = value
        self.coefficients = cleaned

    @classmethod
    def term(cls, xdeg, ydeg, coeff=1):
        return cls({(xdeg, ydeg): coeff})

    def __add__(self, other):
        out = dict(self.coefficients)
        for key, value in other.coefficients.items():
            out[key] = out.get(key, 0) + value
        return BivariatePolynomial(out)

    def __sub__(self, other):
        out = dict(self.coefficients)
        for key, value in other.coefficients.items():
            out[key] = out.get(key, 0) - value
        return BivariatePolynomial(out)

    def __mul__(self, other):
        if isinstance(other, int):
            other = BivariatePolynomial({(0, 0): other})
        out = {}
        for (i, j), a in self.coefficients.items():
            for (k, l), b in other.coefficients.items():
                key = (i + k, j + l)
                out[key] = out.get(key, 0) + a * b
        return BivariatePolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k):
        out = BivariatePolynomial({(0, 0): 1})
        for _ in range(k):
            out = out * self
        return out

    def __call__(self, x, y):
        acc = 0
        for (i, j), c in self.coefficients.items():
            acc += c * x**i * y**j
        return acc

    def substitute_y(self, y):
        """Evaluate the second variable at an integer, leaving a univariate."""
        out = {}
        for (i, j), c in self.coefficients.items():
            out[i] = out.get(i, 0) + c * y**j
        size = max(out, default=-1) + 1
        coeffs = [0] * size
        for i, c in out.items():
            coeffs[i] = c
        return UnivariatePolynomial(coeffs)

    def __eq__(self, other):
        if not isinstance(other, BivariatePolynomial):
            return NotImplemented
        return self.coefficients == other.coefficients

    def __hash__(self):
        return hash(frozenset(self.coefficients.items()))

    def __bool__(self):
        return bool(self.coefficients)

    def to_json(self):
        """Coefficient map keyed by "xdeg,ydeg" strings, deterministic order."""
        return {
            f"{i},{j}": self.coefficients[(i, j)]
            for i, j in sorted(self.coefficients)
        }

    @classmethod
    def from_json(cls, data):
        out = {}
        for key, value in data.items():
            i, j = key.split(",")
            out[(int(i), int(j))] = int(value)
        return cls(out)

    def __repr__(self):
        return f"BivariatePolynomial({self.coefficients})"


def reciprocal_in_x(p: BivariatePolynomial, r: int) -> BivariatePolynomial:
    """x^r * p(1/x, y), exact; requires every x-degree of p to be <= r."""
    out = {}
    for (i, j), c in p.coefficients.items():
        if i > r:
            raise ValueError("x-degree exceeds reversal degree")
        out[(r - i, j)] = c
    return BivariatePolynomial(out)
