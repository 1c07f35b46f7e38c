"""Arithmetic in the prime field F_p and in F_p[x].

Polynomials are dense coefficient tuples in ascending degree with no
trailing zeros, the empty tuple being the zero polynomial.  The degree of
the zero polynomial is the sentinel MINUS_INFINITY, which compares below
every integer, so degree bounds like deg(r) < deg(g) hold uniformly.

Division, gcd, the expansion of (x-1)^t through its base-p digits, and the
extraction of the monic generator of a shift-closed subspace of F_p^n all
live here; they are the scalar layer under every generator polynomial
f_i, f_{i,j} used elsewhere.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from .linalg import SpanBasis, inverse_table

MINUS_INFINITY = float("-inf")


@lru_cache(maxsize=None)
def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def _check_prime(p: int) -> int:
    if not is_prime(p):
        raise ValueError(f"modulus {p} is not prime")
    return p


@dataclass(frozen=True)
class FieldElem:
    """A residue in F_p with field operations.

    Scalar-level convenience type; bulk code paths keep plain int residues.
    """

    value: int
    p: int

    def __post_init__(self):
        _check_prime(self.p)
        object.__setattr__(self, "value", self.value % self.p)

    def _coerce(self, other) -> "FieldElem":
        if isinstance(other, FieldElem):
            if other.p != self.p:
                raise ValueError(f"modulus mismatch: {self.p} vs {other.p}")
            return other
        if isinstance(other, int):
            return FieldElem(other, self.p)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        return FieldElem((self.value + other.value) % self.p, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        return FieldElem((self.value - other.value) % self.p, self.p)

    def __mul__(self, other):
        other = self._coerce(other)
        return FieldElem((self.value * other.value) % self.p, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return FieldElem(-self.value % self.p, self.p)

    def inverse(self) -> "FieldElem":
        if self.value == 0:
            raise ZeroDivisionError("0 has no inverse")
        return FieldElem(pow(self.value, self.p - 2, self.p), self.p)

    def __truediv__(self, other):
        other = self._coerce(other)
        return self * other.inverse()

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"FieldElem({self.value} mod {self.p})"


class FpPoly:
    """Dense polynomial over F_p, canonical form (no trailing zeros)."""

    __slots__ = ("p", "coeffs")

    def __init__(self, p: int, coeffs: Iterable[int] = ()):
        _check_prime(p)
        cs = [c % p for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, *_):
        raise AttributeError("FpPoly is immutable")

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, p: int) -> "FpPoly":
        return cls(p, ())

    @classmethod
    def one(cls, p: int) -> "FpPoly":
        return cls(p, (1,))

    @classmethod
    def x(cls, p: int) -> "FpPoly":
        return cls(p, (0, 1))

    @classmethod
    def monomial(cls, p: int, k: int, c: int = 1) -> "FpPoly":
        return cls(p, (0,) * k + (c,))

    @classmethod
    def x_pow_n_minus_1(cls, p: int, n: int) -> "FpPoly":
        return cls(p, (-1,) + (0,) * (n - 1) + (1,))

    # -- basic structure ----------------------------------------------

    @property
    def degree(self):
        """Degree, or MINUS_INFINITY for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else MINUS_INFINITY

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        return (
            isinstance(other, FpPoly)
            and self.p == other.p
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.p, self.coeffs))

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def _check(self, other: "FpPoly") -> "FpPoly":
        if not isinstance(other, FpPoly):
            raise TypeError(f"FpPoly expected, got {type(other).__name__}")
        if other.p != self.p:
            raise ValueError(f"modulus mismatch: {self.p} vs {other.p}")
        return other

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other):
        other = self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return FpPoly(self.p, [self[k] + other[k] for k in range(n)])

    def __sub__(self, other):
        other = self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return FpPoly(self.p, [self[k] - other[k] for k in range(n)])

    def __neg__(self):
        return FpPoly(self.p, [-c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, int):
            return FpPoly(self.p, [c * other for c in self.coeffs])
        other = self._check(other)
        if not self.coeffs or not other.coeffs:
            return FpPoly.zero(self.p)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return FpPoly(self.p, out)

    __rmul__ = __mul__

    def __divmod__(self, other):
        return poly_divmod(self, other)

    def __floordiv__(self, other):
        return poly_divmod(self, other)[0]

    def __mod__(self, other):
        return poly_divmod(self, other)[1]

    def monic(self) -> "FpPoly":
        if not self.coeffs:
            return self
        lead = self.coeffs[-1]
        if lead == 1:
            return self
        inv = pow(lead, self.p - 2, self.p)
        return FpPoly(self.p, [c * inv for c in self.coeffs])

    def shift(self, k: int) -> "FpPoly":
        """Multiply by x^k."""
        if not self.coeffs:
            return self
        return FpPoly(self.p, (0,) * k + self.coeffs)

    def divides(self, other: "FpPoly") -> bool:
        """True if self | other exactly (self nonzero), or other == 0."""
        if other.is_zero():
            return True
        if self.is_zero():
            return False
        return (other % self).is_zero()

    # -- presentation ---------------------------------------------------

    def to_json(self) -> list[int]:
        return list(self.coeffs)

    def __repr__(self):
        return f"FpPoly(p={self.p}, {self!s})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            if k == 0:
                terms.append(str(c))
            elif k == 1:
                terms.append("x" if c == 1 else f"{c}x")
            else:
                terms.append(f"x^{k}" if c == 1 else f"{c}x^{k}")
        return " + ".join(terms)


def poly_divmod(f: FpPoly, g: FpPoly) -> tuple[FpPoly, FpPoly]:
    """Quotient and remainder with deg(r) < deg(g); g must be nonzero."""
    f._check(g)
    if g.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    p = f.p
    if f.degree < g.degree:
        return FpPoly.zero(p), f
    rem = list(f.coeffs)
    div = g.coeffs
    dg = len(div) - 1
    lead_inv = pow(div[-1], p - 2, p)
    q = [0] * (len(rem) - dg)
    for k in range(len(rem) - 1, dg - 1, -1):
        c = rem[k] % p
        if c:
            factor = (c * lead_inv) % p
            q[k - dg] = factor
            for j in range(dg + 1):
                rem[k - dg + j] = (rem[k - dg + j] - factor * div[j]) % p
    return FpPoly(p, q), FpPoly(p, rem[:dg])


def poly_gcd(a: FpPoly, b: FpPoly) -> FpPoly:
    """Monic greatest common divisor; undefined for (0, 0)."""
    a._check(b)
    if a.is_zero() and b.is_zero():
        raise ValueError("gcd(0, 0) is undefined")
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def exact_div(a: FpPoly, b: FpPoly) -> FpPoly | None:
    """a / b when the division is exact, else None (b == 0 gives None)."""
    if b.is_zero():
        return FpPoly.zero(a.p) if a.is_zero() else None
    q, r = poly_divmod(a, b)
    return q if r.is_zero() else None


def frobenius_binomial(p: int, t: int) -> FpPoly:
    """Expansion of (x-1)^t over F_p via the base-p digits of t.

    Writing t = sum b_j p^j, the result is prod_j (x^(p^j) - 1)^(b_j);
    each factor expands by binomial coefficients taken mod p (b_j < p).
    """
    _check_prime(p)
    if t < 0:
        raise ValueError("exponent must be nonnegative")
    result = FpPoly.one(p)
    step = 1  # p^j
    while t:
        b = t % p
        if b:
            # (x^step - 1)^b, sparse in x^step
            coeffs = [0] * (step * b + 1)
            for k in range(b + 1):
                coeffs[step * k] = ((-1) ** (b - k)) * math.comb(b, k)
            result = result * FpPoly(p, coeffs)
        t //= p
        step *= p
    return result


def cyclic_generator(vectors: Sequence[Sequence[int]] | np.ndarray, n: int, p: int) -> FpPoly:
    """Monic generator of a shift-closed subspace of F_p^n read as an ideal.

    Vectors are coefficient rows (ascending degree).  The generator is
    gcd(x^n - 1, all rows); the zero subspace maps to x^n - 1 by the
    zero-ideal convention.  The claimed shift-closure is verified through
    the dimension identity dim = n - deg(g); a mismatch raises ValueError.
    """
    _check_prime(p)
    xn1 = FpPoly.x_pow_n_minus_1(p, n)
    basis = SpanBasis(n, p)
    g = xn1
    for row in vectors:
        vec = np.asarray(row, dtype=np.int64) % p
        if len(vec) != n:
            raise ValueError(f"vector length {len(vec)} != n = {n}")
        if basis.add(vec):
            poly = FpPoly(p, vec.tolist())
            g = poly_gcd(g, poly)
    if basis.dim == 0:
        return xn1
    if n - g.degree != basis.dim:
        raise ValueError("span is not closed under cyclic shift")
    return g
