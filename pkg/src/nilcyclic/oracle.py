"""Brute-force ground truth: enumeration, minimum weights, span checks.

Exact enumeration walks every F_p combination of the cached echelon basis.
The weight scans run chunked through numpy (a meet-in-the-middle split of
the basis), which keeps 40M-codeword scans in seconds while staying
deterministic: chunk boundaries never affect a minimum.

Beyond the budget the scans fall back to seeded random sampling and the
result is flagged inexact, never silently approximated.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator, Sequence

import numpy as np

from .code import CyclicCode, span_closure
from .linalg import SpanBasis
from .rpoly import RPoly, gray_image_of_vector, mul_monomial_vector

DEFAULT_BUDGET = 1 << 22
DEFAULT_SAMPLE_SEED = 12345
_CHUNK_TARGET = 1 << 16


@dataclass(frozen=True)
class EnumBudget:
    """Cap on the number of codewords an enumeration may touch."""

    max_codewords: int = DEFAULT_BUDGET


def budget_value(budget) -> int:
    if budget is None:
        return DEFAULT_BUDGET
    if isinstance(budget, EnumBudget):
        return budget.max_codewords
    return int(budget)


class BudgetExceededError(Exception):
    """Enumeration would exceed the codeword budget.

    When a sampling pass already produced a bound, `upper_bound` carries it.
    """

    def __init__(self, message: str, upper_bound: int | None = None,
                 budget: int | None = None, seed: int | None = None):
        super().__init__(message)
        self.upper_bound = upper_bound
        self.budget = budget
        self.seed = seed


@dataclass(frozen=True)
class WeightResult:
    """Minimum-weight scan outcome; exact=False marks a sampled upper bound."""

    weight: int
    exact: bool
    codewords: int
    budget: int
    seed: int | None = None


def enumerate_codewords(code: CyclicCode, budget=None) -> Iterator[RPoly]:
    """Yield every codeword exactly once (the zero word included).

    Walks the basis combinations in reflected mixed-radix Gray order, so
    each step adds or subtracts a single basis row.  Raises
    BudgetExceededError before any work if p^dim exceeds the budget.
    """
    cap = budget_value(budget)
    k = code.dim
    total = code.p ** k
    if total > cap:
        raise BudgetExceededError(
            f"p^dim = {total} exceeds budget {cap}", budget=cap
        )
    p, n = code.p, code.n
    rows = code.basis_matrix()
    current = np.zeros(8 * n, dtype=np.int64)
    yield RPoly.zero(p, n)
    if k == 0:
        return
    # loopless reflected mixed-radix Gray generation (radix p throughout)
    a = [0] * k
    focus = list(range(k + 1))
    direction = [1] * k
    while True:
        j = focus[0]
        focus[0] = 0
        if j == k:
            return
        a[j] += direction[j]
        current = (current + direction[j] * rows[j]) % p
        yield RPoly.from_vector(current, p, n)
        if a[j] == 0 or a[j] == p - 1:
            direction[j] = -direction[j]
            focus[j] = focus[j + 1]
            focus[j + 1] = j + 1


def _hamming_rows(mat: np.ndarray) -> np.ndarray:
    return np.count_nonzero(mat, axis=1)


def _ring_hamming_rows(mat: np.ndarray, n: int) -> np.ndarray:
    # component-major layout: position j of a codeword sits at columns c*n + j
    return (mat.reshape(mat.shape[0], 8, n) != 0).any(axis=1).sum(axis=1)


def scan_min_weight(
    basis: np.ndarray,
    p: int,
    weight_rows: Callable[[np.ndarray], np.ndarray],
    budget=None,
    seed: int = DEFAULT_SAMPLE_SEED,
) -> WeightResult:
    """Minimum of `weight_rows` over the nonzero span of `basis` rows.

    Exact when p^rank fits the budget; otherwise a seeded sampled upper
    bound flagged inexact.  The basis rows must be linearly independent.
    """
    cap = budget_value(budget)
    k, m = basis.shape
    if k == 0:
        raise ValueError("zero code has no nonzero codeword")
    total = p ** k
    mat = (np.asarray(basis, dtype=np.int64) % p).astype(np.uint8)
    if total <= cap:
        best = _scan_exact(mat, p, weight_rows)
        return WeightResult(weight=best, exact=True, codewords=total - 1, budget=cap)
    best = _scan_sampled(mat, p, weight_rows, cap, seed)
    return WeightResult(weight=best, exact=False, codewords=cap, budget=cap, seed=seed)


def _chunk_exponent(p: int, k: int) -> int:
    k2 = 0
    while k2 < k and p ** (k2 + 1) <= _CHUNK_TARGET:
        k2 += 1
    return max(k2, min(k, 1))


def _combo_table(rows: np.ndarray, p: int) -> np.ndarray:
    """All F_p combinations of the given rows, row 0 being the zero vector."""
    m = rows.shape[1]
    table = np.zeros((1, m), dtype=np.uint8)
    for row in rows:
        scaled = [(c * row.astype(np.int64)) % p for c in range(p)]
        table = np.concatenate([(table + s.astype(np.uint8)) % p for s in scaled])
    return table


def _scan_exact(mat: np.ndarray, p: int, weight_rows) -> int:
    k, m = mat.shape
    k2 = _chunk_exponent(p, k)
    k1 = k - k2
    table = _combo_table(mat[k1:], p)
    prefix_rows = mat[:k1].astype(np.int64)
    best = None
    digits = np.zeros(k1, dtype=np.int64)
    for idx in range(p ** k1):
        if k1:
            rem = idx
            for d in range(k1):
                digits[d] = rem % p
                rem //= p
        prefix = (digits @ prefix_rows) % p if k1 else np.zeros(m, dtype=np.int64)
        chunk = table + prefix.astype(np.uint8)
        chunk[chunk >= p] -= p
        weights = weight_rows(chunk)
        if idx == 0:
            weights = weights[1:]  # drop the zero codeword
        w = int(weights.min()) if weights.size else None
        if w is not None and (best is None or w < best):
            best = w
            if best == 1:
                break
    assert best is not None
    return best


def _scan_sampled(mat: np.ndarray, p: int, weight_rows, budget: int, seed: int) -> int:
    rng = np.random.default_rng(seed)
    k, m = mat.shape
    remaining = budget
    best = None
    rows64 = mat.astype(np.int64)
    while remaining > 0 or best is None:
        batch = min(max(remaining, 1), _CHUNK_TARGET)
        digits = rng.integers(0, p, size=(batch, k), dtype=np.int64)
        digits = digits[digits.any(axis=1)]
        remaining -= batch
        if digits.shape[0] == 0:
            continue
        chunk = ((digits @ rows64) % p).astype(np.uint8)
        w = int(weight_rows(chunk).min())
        if best is None or w < best:
            best = w
    assert best is not None
    return best


def min_weight(code: CyclicCode, metric: str = "hamming", budget=None,
               seed: int = DEFAULT_SAMPLE_SEED) -> WeightResult:
    """Minimum Hamming or Lee weight over the nonzero codewords of `code`.

    The Lee scan enumerates Gray images (the Gray map is linear, so the
    image basis spans the image code) and takes plain Hamming weights.
    """
    if code.dim == 0:
        raise ValueError("zero code has no nonzero codeword")
    basis = code.basis_matrix()
    n = code.n
    if metric == "lee":
        rows = np.vstack([gray_image_of_vector(r, code.p, n) for r in basis])
        return scan_min_weight(rows, code.p, _hamming_rows, budget, seed)
    if metric == "hamming":
        return scan_min_weight(
            basis, code.p, lambda m: _ring_hamming_rows(m, n), budget, seed
        )
    raise ValueError(f"unknown metric {metric!r} (expected 'hamming' or 'lee')")


def r_span_equals(gens: Sequence[RPoly], code: CyclicCode) -> bool:
    """True iff the ideal generated by `gens` equals `code`."""
    other = span_closure(code.p, code.n, list(gens))
    return other == code


def module_span_basis(elems: Sequence[RPoly], p: int, n: int) -> SpanBasis:
    """Echelon basis of the R-module span (no x multiplication) of `elems`.

    The span of { mu * e } over the 8 basis monomials mu is already closed
    under multiplication by R, so no fixpoint iteration is needed.
    """
    basis = SpanBasis(8 * n, p)
    for e in elems:
        vec = e.to_vector()
        basis.add(vec)
        for mask in range(1, 8):
            basis.add(mul_monomial_vector(vec, mask, n))
    return basis


def module_span_equals(elems: Sequence[RPoly], code: CyclicCode) -> bool:
    """True iff the R-module span of `elems` (no shifts) equals the code."""
    basis = module_span_basis(elems, code.p, code.n)
    return np.array_equal(basis.matrix(), code.basis_matrix())


@dataclass(frozen=True)
class MinimalityReport:
    minimal: bool
    redundant_index: int | None = None

    def __bool__(self):
        return self.minimal


def verify_rank_minimality(spanning: Sequence[RPoly], code: CyclicCode) -> MinimalityReport:
    """Check that no element of a spanning set is R-redundant.

    Spanning here is as an R-module: coefficients range over R but no
    extra shift by x is allowed (the set itself carries the shifts).
    Assumes the full set spans the code; dropping an element is redundant
    exactly when the remaining module span keeps the full dimension.
    """
    items = list(spanning)
    for idx in range(len(items)):
        rest = items[:idx] + items[idx + 1 :]
        sub = module_span_basis(rest, code.p, code.n)
        if sub.dim == code.dim:
            return MinimalityReport(minimal=False, redundant_index=idx)
    return MinimalityReport(minimal=True)
