"""The 8-dimensional local algebra R = F_p[u,v,w]/(u^2, v^2, w^2).

Elements are stored on the ordered basis (1, u, v, uv, w, uw, vw, uvw).
Indexing the basis by the bitmask (bit 0 = u, bit 1 = v, bit 2 = w) makes
monomial products trivial: m_a * m_b = m_(a|b) when a & b == 0, else 0.
The maximal ideal is <u, v, w>, so an element is a unit exactly when its
constant coordinate is nonzero, and every non-unit is nilpotent with
fourth power zero.

The Gray map to F_p^8 and the Lee weight it induces are also defined here.
All serialization and vector layouts elsewhere use the same basis order.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from .gfpoly import _check_prime
from .linalg import gf_rref

MONOMIALS = ("1", "u", "v", "uv", "w", "uw", "vw", "uvw")
MONOMIAL_INDEX = {name: i for i, name in enumerate(MONOMIALS)}

# Gray map matrix: row r gives the r-th output coordinate as a 0/1
# combination of the input coordinates (alpha_1 .. alpha_8 in basis order).
GRAY_MATRIX = np.array(
    [
        [0, 0, 0, 0, 0, 0, 0, 1],
        [0, 0, 0, 0, 0, 1, 0, 1],
        [0, 0, 0, 0, 0, 0, 1, 1],
        [0, 0, 0, 1, 0, 0, 0, 1],
        [0, 0, 0, 0, 1, 1, 1, 1],
        [0, 1, 0, 1, 0, 1, 0, 1],
        [0, 0, 1, 1, 0, 0, 1, 1],
        [1, 1, 1, 1, 1, 1, 1, 1],
    ],
    dtype=np.int64,
)


@lru_cache(maxsize=None)
def gray_matrix_inverse(p: int) -> np.ndarray:
    """Inverse of the Gray matrix over F_p; existence is asserted per p."""
    _check_prime(p)
    aug = np.hstack([GRAY_MATRIX % p, np.eye(8, dtype=np.int64)])
    red, pivots = gf_rref(aug, p)
    if pivots != tuple(range(8)):
        raise ArithmeticError(f"Gray matrix is singular mod {p}")
    return red[:, 8:]


class RingElem:
    """Element of R with coordinates on (1, u, v, uv, w, uw, vw, uvw)."""

    __slots__ = ("p", "coords")

    def __init__(self, p: int, coords: Iterable[int]):
        _check_prime(p)
        cs = tuple(c % p for c in coords)
        if len(cs) != 8:
            raise ValueError("exactly 8 coordinates expected")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "coords", cs)

    def __setattr__(self, *_):
        raise AttributeError("RingElem is immutable")

    @classmethod
    def zero(cls, p: int) -> "RingElem":
        return cls(p, (0,) * 8)

    @classmethod
    def one(cls, p: int) -> "RingElem":
        return cls(p, (1,) + (0,) * 7)

    @classmethod
    def monomial(cls, p: int, mask: int, c: int = 1) -> "RingElem":
        coords = [0] * 8
        coords[mask] = c
        return cls(p, coords)

    def _check(self, other: "RingElem") -> "RingElem":
        if not isinstance(other, RingElem):
            raise TypeError(f"RingElem expected, got {type(other).__name__}")
        if other.p != self.p:
            raise ValueError(f"modulus mismatch: {self.p} vs {other.p}")
        return other

    def __add__(self, other):
        other = self._check(other)
        return RingElem(self.p, (a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other):
        other = self._check(other)
        return RingElem(self.p, (a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self):
        return RingElem(self.p, (-a for a in self.coords))

    def __mul__(self, other):
        if isinstance(other, int):
            return RingElem(self.p, (a * other for a in self.coords))
        other = self._check(other)
        out = [0] * 8
        for a, ca in enumerate(self.coords):
            if ca:
                for b, cb in enumerate(other.coords):
                    if cb and not (a & b):
                        out[a | b] += ca * cb
        return RingElem(self.p, out)

    __rmul__ = __mul__

    def __eq__(self, other):
        return (
            isinstance(other, RingElem)
            and self.p == other.p
            and self.coords == other.coords
        )

    def __hash__(self):
        return hash((self.p, self.coords))

    def is_zero(self) -> bool:
        return not any(self.coords)

    @property
    def is_unit(self) -> bool:
        """Units of the local ring are exactly the elements with alpha_1 != 0."""
        return self.coords[0] != 0

    def inverse(self) -> "RingElem":
        """Inverse by geometric series: a = c(1 + m) with m nilpotent, m^4 = 0."""
        if not self.is_unit:
            raise ZeroDivisionError("not a unit (constant coordinate is 0)")
        p = self.p
        c_inv = pow(self.coords[0], p - 2, p)
        m = RingElem(p, (0,) + tuple(c * c_inv for c in self.coords[1:]))
        m2 = m * m
        acc = RingElem.one(p) - m + m2 - m2 * m
        return acc * c_inv

    def gray(self) -> tuple[int, ...]:
        vec = (GRAY_MATRIX @ np.array(self.coords, dtype=np.int64)) % self.p
        return tuple(int(x) for x in vec)

    def lee_weight(self) -> int:
        return sum(1 for x in self.gray() if x)

    def __repr__(self):
        return f"RingElem(p={self.p}, {self!s})"

    def __str__(self):
        terms = []
        for i, c in enumerate(self.coords):
            if not c:
                continue
            if i == 0:
                terms.append(str(c))
            elif c == 1:
                terms.append(MONOMIALS[i])
            else:
                terms.append(f"{c}{MONOMIALS[i]}")
        return " + ".join(terms) if terms else "0"


def r_mul(a: RingElem, b: RingElem) -> RingElem:
    return a * b


def r_is_unit(a: RingElem) -> bool:
    return a.is_unit


def r_inverse(a: RingElem) -> RingElem:
    return a.inverse()


def gray_map(a: RingElem) -> tuple[int, ...]:
    """Image of a in F_p^8 under the fixed Gray isometry."""
    return a.gray()


def gray_inverse(vec: Sequence[int], p: int) -> RingElem:
    """The unique preimage of an F_p^8 vector under the Gray map."""
    if len(vec) != 8:
        raise ValueError("Gray vectors have 8 coordinates")
    inv = gray_matrix_inverse(p)
    coords = (inv @ (np.array(vec, dtype=np.int64) % p)) % p
    return RingElem(p, coords.tolist())


def lee_weight(a: RingElem) -> int:
    return a.lee_weight()
