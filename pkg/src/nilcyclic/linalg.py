"""Dense exact linear algebra over the prime field F_p.

Everything here works on numpy int64 arrays with entries reduced into
[0, p).  Matrices stay small at desk scale (at most 8n x 8n with n <= 64),
so plain row-reduction loops are fast enough and keep the arithmetic exact.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np


@lru_cache(maxsize=None)
def inverse_table(p: int) -> tuple[int, ...]:
    """Multiplicative inverses mod p as a lookup tuple; index 0 maps to 0."""
    return tuple(0 if a == 0 else pow(a, p - 2, p) for a in range(p))


def gf_rref(mat: np.ndarray, p: int) -> tuple[np.ndarray, tuple[int, ...]]:
    """Reduced row echelon form of `mat` over F_p.

    Returns the RREF with zero rows dropped, plus the pivot column of each
    surviving row (strictly increasing).
    """
    a = np.array(mat, dtype=np.int64) % p
    if a.ndim != 2:
        raise ValueError("matrix expected")
    nrows, ncols = a.shape
    inv = inverse_table(p)
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        k = r + int(nz[0])
        if k != r:
            a[[r, k]] = a[[k, r]]
        a[r] = (a[r] * inv[int(a[r, c])]) % p
        hits = np.nonzero(a[:, c])[0]
        for j in hits:
            if j != r:
                a[j] = (a[j] - a[j, c] * a[r]) % p
        pivots.append(c)
        r += 1
    return a[:r], tuple(pivots)


class SpanBasis:
    """Incrementally built F_p subspace basis kept in reduced row echelon form.

    Rows are stored sorted by pivot column and fully reduced against each
    other, so `matrix()` is a canonical form: two spans are equal iff their
    matrices are identical.
    """

    __slots__ = ("width", "p", "rows", "pivots", "_inv")

    def __init__(self, width: int, p: int):
        self.width = width
        self.p = p
        self.rows: list[np.ndarray] = []
        self.pivots: list[int] = []
        self._inv = inverse_table(p)

    @property
    def dim(self) -> int:
        return len(self.rows)

    def reduce(self, vec: np.ndarray) -> np.ndarray:
        """Residual of `vec` after elimination against the basis (a copy)."""
        v = np.array(vec, dtype=np.int64) % self.p
        for row, piv in zip(self.rows, self.pivots):
            c = int(v[piv])
            if c:
                v = (v - c * row) % self.p
        return v

    def contains(self, vec: np.ndarray) -> bool:
        return not self.reduce(vec).any()

    def express(self, vec: np.ndarray) -> tuple[np.ndarray, list[int]] :
        """Residual plus the elimination coefficient taken at each pivot.

        If the residual is zero, `vec` equals sum(coeff[i] * rows[i]) mod p.
        """
        v = np.array(vec, dtype=np.int64) % self.p
        coeffs = []
        for row, piv in zip(self.rows, self.pivots):
            c = int(v[piv])
            coeffs.append(c)
            if c:
                v = (v - c * row) % self.p
        return v, coeffs

    def add(self, vec: np.ndarray) -> bool:
        """Insert `vec` into the span; True if it enlarged the subspace."""
        v = self.reduce(vec)
        nz = np.nonzero(v)[0]
        if nz.size == 0:
            return False
        piv = int(nz[0])
        v = (v * self._inv[int(v[piv])]) % self.p
        for i, row in enumerate(self.rows):
            c = int(row[piv])
            if c:
                self.rows[i] = (row - c * v) % self.p
        at = int(np.searchsorted(np.array(self.pivots, dtype=np.int64), piv)) if self.pivots else 0
        self.rows.insert(at, v)
        self.pivots.insert(at, piv)
        return True

    def matrix(self) -> np.ndarray:
        """Canonical RREF matrix of the span (dim x width)."""
        if not self.rows:
            return np.zeros((0, self.width), dtype=np.int64)
        return np.vstack(self.rows)

    def copy(self) -> "SpanBasis":
        other = SpanBasis(self.width, self.p)
        other.rows = [row.copy() for row in self.rows]
        other.pivots = list(self.pivots)
        return other


def solve_linear(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray | None:
    """One solution x of a x = b over F_p, or None if inconsistent."""
    a = np.array(a, dtype=np.int64) % p
    b = np.array(b, dtype=np.int64) % p
    aug = np.hstack([a, b.reshape(-1, 1)])
    red, pivots = gf_rref(aug, p)
    ncols = a.shape[1]
    x = np.zeros(ncols, dtype=np.int64)
    for row, piv in zip(red, pivots):
        if piv == ncols:
            return None
        x[piv] = row[ncols]
    return x
