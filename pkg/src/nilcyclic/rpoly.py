"""The quotient algebra R_n = R[x]/(x^n - 1): codewords and generators.

An RPoly keeps one FpPoly per ring basis monomial, each reduced mod
x^n - 1 eagerly.  Flattening to F_p^(8n) is component-major: block c of
length n holds the coefficients of the monomial MONOMIALS[c] component.
That block order matches the residue/torsion tower, which the code module
relies on when it reads tower ideals straight off echelon pivots.

The Gray image uses the other natural layout, n groups of 8: position j
of a codeword is one ring element, and its 8 Gray coordinates land at
[8j, 8j+8).  Hamming weight of the Gray image equals the Lee weight.
"""

from __future__ import annotations

from typing import Iterable, Mapping, Sequence

import numpy as np

from .gfpoly import MINUS_INFINITY, FpPoly, _check_prime
from .ring import GRAY_MATRIX, MONOMIAL_INDEX, MONOMIALS, RingElem


def _reduce_cyclic(coeffs: Sequence[int], n: int, p: int) -> list[int]:
    out = [0] * n
    for k, c in enumerate(coeffs):
        out[k % n] = (out[k % n] + c) % p
    return out


class RPoly:
    """Element of R_n stored as 8 components of degree < n."""

    __slots__ = ("p", "n", "components")

    def __init__(self, p: int, n: int, components: Iterable[FpPoly] | None = None):
        _check_prime(p)
        if n < 1:
            raise ValueError("length n must be >= 1")
        comps = list(components) if components is not None else []
        if len(comps) > 8:
            raise ValueError("at most 8 components")
        comps += [FpPoly.zero(p)] * (8 - len(comps))
        fixed = []
        for c in comps:
            if c.p != p:
                raise ValueError(f"modulus mismatch: {p} vs {c.p}")
            if c.degree != MINUS_INFINITY and c.degree >= n:
                c = FpPoly(p, _reduce_cyclic(c.coeffs, n, p))
            fixed.append(c)
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "components", tuple(fixed))

    def __setattr__(self, *_):
        raise AttributeError("RPoly is immutable")

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls, p: int, n: int) -> "RPoly":
        return cls(p, n)

    @classmethod
    def one(cls, p: int, n: int) -> "RPoly":
        return cls.from_component(p, n, 0, FpPoly.one(p))

    @classmethod
    def x(cls, p: int, n: int) -> "RPoly":
        return cls.from_component(p, n, 0, FpPoly.x(p))

    @classmethod
    def from_component(cls, p: int, n: int, mask: int, poly: FpPoly) -> "RPoly":
        comps = [FpPoly.zero(p)] * 8
        comps[mask] = poly
        return cls(p, n, comps)

    @classmethod
    def from_components(cls, p: int, n: int, named: Mapping[str, FpPoly]) -> "RPoly":
        comps = [FpPoly.zero(p)] * 8
        for name, poly in named.items():
            comps[MONOMIAL_INDEX[name]] = poly
        return cls(p, n, comps)

    @classmethod
    def from_ring_elem(cls, a: RingElem, n: int) -> "RPoly":
        return cls(a.p, n, [FpPoly(a.p, (c,)) for c in a.coords])

    @classmethod
    def from_vector(cls, vec: Sequence[int] | np.ndarray, p: int, n: int) -> "RPoly":
        arr = np.asarray(vec, dtype=np.int64) % p
        if arr.shape != (8 * n,):
            raise ValueError(f"vector of length {8 * n} expected")
        comps = [FpPoly(p, arr[c * n : (c + 1) * n].tolist()) for c in range(8)]
        return cls(p, n, comps)

    # -- structure -------------------------------------------------------

    def _check(self, other: "RPoly") -> "RPoly":
        if not isinstance(other, RPoly):
            raise TypeError(f"RPoly expected, got {type(other).__name__}")
        if (other.p, other.n) != (self.p, self.n):
            raise ValueError(
                f"dimension mismatch: (p={self.p}, n={self.n}) vs (p={other.p}, n={other.n})"
            )
        return other

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.components)

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        return (
            isinstance(other, RPoly)
            and (self.p, self.n) == (other.p, other.n)
            and self.components == other.components
        )

    def __hash__(self):
        return hash((self.p, self.n, self.components))

    def degree(self):
        """Max component degree (MINUS_INFINITY for zero).

        The division-algorithm degree from the underlying theory is the
        degree of the designated leading component; this convenience view
        over mixed elements is a convention, not that notion.
        """
        return max((c.degree for c in self.components), default=MINUS_INFINITY)

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        other = self._check(other)
        return RPoly(self.p, self.n, [a + b for a, b in zip(self.components, other.components)])

    def __sub__(self, other):
        other = self._check(other)
        return RPoly(self.p, self.n, [a - b for a, b in zip(self.components, other.components)])

    def __neg__(self):
        return RPoly(self.p, self.n, [-a for a in self.components])

    def __mul__(self, other):
        if isinstance(other, int):
            return RPoly(self.p, self.n, [c * other for c in self.components])
        if isinstance(other, FpPoly):
            return RPoly(self.p, self.n, [c * other for c in self.components])
        if isinstance(other, RingElem):
            other = RPoly.from_ring_elem(other, self.n)
        other = self._check(other)
        comps = [FpPoly.zero(self.p)] * 8
        for a, ca in enumerate(self.components):
            if ca.is_zero():
                continue
            for b, cb in enumerate(other.components):
                if cb.is_zero() or (a & b):
                    continue
                comps[a | b] = comps[a | b] + ca * cb
        return RPoly(self.p, self.n, comps)

    __rmul__ = __mul__

    def times_x(self, k: int = 1) -> "RPoly":
        """Cyclic shift: multiplication by x^k."""
        k %= self.n
        if k == 0:
            return self
        return self * FpPoly.monomial(self.p, k)

    # -- vector and Gray views ---------------------------------------------

    def to_vector(self) -> np.ndarray:
        vec = np.zeros(8 * self.n, dtype=np.int64)
        for c, poly in enumerate(self.components):
            for k, coeff in enumerate(poly.coeffs):
                vec[c * self.n + k] = coeff
        return vec

    def coefficient(self, j: int) -> RingElem:
        """The ring element at position j (coefficient of x^j)."""
        return RingElem(self.p, (comp[j] for comp in self.components))

    def gray_image(self) -> np.ndarray:
        """Coordinate-wise Gray map, F_p^(8n), n groups of 8."""
        return gray_image_of_vector(self.to_vector(), self.p, self.n)

    def lee_weight(self) -> int:
        return int(np.count_nonzero(self.gray_image()))

    def hamming_weight(self) -> int:
        """Number of positions whose ring coefficient is nonzero."""
        mat = self.to_vector().reshape(8, self.n)
        return int(mat.any(axis=0).sum())

    def __repr__(self):
        return f"RPoly(p={self.p}, n={self.n}, {self!s})"

    def __str__(self):
        terms = []
        for c, poly in enumerate(self.components):
            if poly.is_zero():
                continue
            body = str(poly)
            if c == 0:
                terms.append(f"({body})" if "+" in body else body)
            elif body == "1":
                terms.append(MONOMIALS[c])
            else:
                terms.append(f"{MONOMIALS[c]}*({body})")
        return " + ".join(terms) if terms else "0"


def gray_image_of_vector(vec: np.ndarray, p: int, n: int) -> np.ndarray:
    """Gray image of a flattened codeword (component-major in, n groups of 8 out)."""
    mat = np.asarray(vec, dtype=np.int64).reshape(8, n)
    out = (GRAY_MATRIX @ mat) % p
    return out.T.reshape(8 * n)


def mul_x_vector(vec: np.ndarray, n: int) -> np.ndarray:
    """Flattened-vector form of multiplication by x (blockwise cyclic shift)."""
    return np.roll(vec.reshape(8, n), 1, axis=1).reshape(8 * n)


def mul_monomial_vector(vec: np.ndarray, mask: int, n: int) -> np.ndarray:
    """Flattened-vector form of multiplication by the basis monomial `mask`."""
    mat = vec.reshape(8, n)
    out = np.zeros_like(mat)
    for c in range(8):
        if not (c & mask):
            out[c | mask] = mat[c]
    return out.reshape(8 * n)


def rp_mul(a: RPoly, b: RPoly) -> RPoly:
    return a * b


def rp_degree(a: RPoly):
    return a.degree()


def to_vector(a: RPoly) -> np.ndarray:
    return a.to_vector()


def from_vector(vec, p: int, n: int) -> RPoly:
    return RPoly.from_vector(vec, p, n)


def gray_image(a: RPoly) -> np.ndarray:
    return a.gray_image()
