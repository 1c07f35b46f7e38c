"""Closed-form analysis: rank, spanning sets, distances, Gray parameters.

The rank formula and its minimal spanning set read everything off the
degrees t_i of the canonical generators, with t_4' = min(t_2, t_3),
t_6' = min(t_2, t_5), t_7' = min(t_3, t_5), t_8' = min(t_4, t_6, t_7).
Absent tower levels carry t_i = n (zero-ideal convention), which zeroes
their contributions.

For length n = p^l every f_i is a power of (x - 1) and the Hamming
distance follows from the base-p digits of t_8 alone; for anything else
the distance falls back to enumerating C_8, using the reduction
w_H(C) = w_H(C_8).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .code import CanonicalGenerators, CyclicCode, tower_ideal
from .gfpoly import FpPoly, frobenius_binomial
from .oracle import (
    BudgetExceededError,
    DEFAULT_SAMPLE_SEED,
    budget_value,
    min_weight,
    scan_min_weight,
    _hamming_rows,
)
from .rpoly import RPoly


@dataclass(frozen=True)
class RankReport:
    """Rank with the shift-multiplicity of each canonical generator.

    counts[i-1] says how many shifts x^k A_i enter the minimal spanning
    set; rank is their sum.
    """

    rank: int
    counts: tuple[int, ...]
    t: tuple[int, ...]
    t_prime: tuple[int, int, int, int]  # t_4', t_6', t_7', t_8'
    spanning_set: tuple[RPoly, ...]

    def to_json(self) -> dict:
        return {
            "rank": self.rank,
            "counts": list(self.counts),
            "t": list(self.t),
            "tprime": {
                "t4'": self.t_prime[0],
                "t6'": self.t_prime[1],
                "t7'": self.t_prime[2],
                "t8'": self.t_prime[3],
            },
        }


def rank_and_spanning_set(cg: CanonicalGenerators) -> RankReport:
    """Rank and minimal spanning set (x-shift multiplicities of the A_i)."""
    n = cg.n
    t = cg.t
    t4p = min(t[1], t[2])
    t6p = min(t[1], t[4])
    t7p = min(t[2], t[4])
    t8p = min(t[3], t[5], t[6])
    counts = (
        n - t[0],
        t[0] - t[1],
        t[0] - t[2],
        t4p - t[3],
        t[0] - t[4],
        t6p - t[5],
        t7p - t[6],
        t8p - t[7],
    )
    for i, c in enumerate(counts, start=1):
        if c < 0:
            raise RuntimeError(
                f"negative spanning multiplicity for A_{i}; divisibility chain violated"
            )
    rank = sum(counts)
    formula = (
        n + 2 * t[0] + t4p + t6p + t7p + t8p
        - t[1] - t[2] - t[3] - t[4] - t[5] - t[6] - t[7]
    )
    assert rank == formula
    spanning: list[RPoly] = []
    for i in range(1, 9):
        if counts[i - 1] == 0:
            continue
        a_i = cg.generator(i)
        assert a_i is not None
        for k in range(counts[i - 1]):
            spanning.append(a_i.times_x(k) if k else a_i)
    return RankReport(
        rank=rank, counts=counts, t=tuple(t), t_prime=(t4p, t6p, t7p, t8p),
        spanning_set=tuple(spanning),
    )


@dataclass(frozen=True)
class PadicClass:
    """Base-p digit classification of t_8 used by the distance theorem."""

    digits: tuple[int, ...]  # b_{l-1}, ..., b_0
    kind: str  # "zero-expansion" | "nonzero-expansion" | "full-expansion"
    q: int

    def to_json(self) -> dict:
        return {"digits": list(self.digits), "kind": self.kind, "q": self.q}


def padic_classify(t8: int, p: int, l: int) -> PadicClass:
    """Classify 0 < t8 < p^l by its leading run of nonzero base-p digits."""
    if not 0 < t8 < p ** l:
        raise ValueError(f"t8 must lie strictly between 0 and p^l = {p ** l}")
    digits = []
    rem = t8
    for _ in range(l):
        digits.append(rem % p)
        rem //= p
    digits.reverse()
    q = 0
    while q < l and digits[q] != 0:
        q += 1
    if q == l:
        kind = "full-expansion"
    elif not any(digits[q:]):
        kind = "zero-expansion"
    else:
        kind = "nonzero-expansion"
    return PadicClass(digits=tuple(digits), kind=kind, q=q)


def _prime_power_exponent(n: int, p: int) -> int:
    l = 0
    m = n
    while m % p == 0:
        m //= p
        l += 1
    if m != 1 or l < 1:
        raise ValueError(f"n = {n} is not a positive power of p = {p}")
    return l


def distance_prime_power(cg: CanonicalGenerators) -> int:
    """Hamming distance of a nonzero code of length p^l from t_8 alone.

    Cases: d = 2 when t_8 <= p^(l-1); otherwise the product of
    (digit + 1) over the leading nonzero digits, doubled for a
    nonzero expansion.  A unit C_8 (t_8 = 0) gives d = 1, reported by
    convention since the classification excludes it.
    """
    p, n = cg.p, cg.n
    l = _prime_power_exponent(n, p)
    t8 = cg.t[7]
    if t8 == n:
        raise ValueError("zero code has no distance")
    if cg.f_poly(8) != frobenius_binomial(p, t8):
        raise ValueError("f_8 is not a power of (x - 1)")
    if t8 == 0:
        return 1
    if t8 <= p ** (l - 1):
        return 2
    cls = padic_classify(t8, p, l)
    d = 1
    for b in cls.digits[: cls.q]:
        d *= b + 1
    if cls.kind == "nonzero-expansion":
        d *= 2
    return d


def hamming_distance(code: CyclicCode, budget=None,
                     seed: int = DEFAULT_SAMPLE_SEED) -> int:
    """Minimum Hamming weight of `code`, via w_H(C) = w_H(C_8).

    C_8 is the F_p cyclic code generated by f_8; its p^(n - t_8) codewords
    are enumerated.  Beyond the budget this raises BudgetExceededError
    carrying the sampled upper bound.
    """
    p, n = code.p, code.n
    f8 = tower_ideal(code, 8)
    t8 = f8.degree
    if t8 == n:
        raise ValueError("zero code has no distance")
    if t8 == 0:
        return 1
    rows = np.zeros((n - t8, n), dtype=np.int64)
    for k in range(n - t8):
        rows[k, k : k + t8 + 1] = f8.coeffs
    result = scan_min_weight(rows, p, _hamming_rows, budget, seed)
    if not result.exact:
        raise BudgetExceededError(
            f"C_8 enumeration needs p^{n - t8} codewords, budget is {result.budget}",
            upper_bound=result.weight,
            budget=result.budget,
            seed=result.seed,
        )
    return result.weight


@dataclass(frozen=True)
class GrayParams:
    """Parameters [length, dimension, distance] of the Gray image."""

    length: int
    dimension: int
    distance: int
    exact: bool
    budget: int
    seed: int | None = None

    def as_triple(self) -> tuple[int, int, int]:
        return (self.length, self.dimension, self.distance)

    def to_json(self) -> dict:
        return {
            "length": self.length,
            "dimension": self.dimension,
            "distance": self.distance,
            "exact": self.exact,
        }


def gray_params(code: CyclicCode, budget=None,
                seed: int = DEFAULT_SAMPLE_SEED) -> GrayParams:
    """[8n, k, d] of the Gray image: k = dim C, d = min Lee weight.

    When p^k exceeds the budget the distance is a sampled upper bound and
    the result is flagged inexact.
    """
    if code.dim == 0:
        raise ValueError("zero code has no Gray parameters")
    result = min_weight(code, metric="lee", budget=budget, seed=seed)
    return GrayParams(
        length=8 * code.n,
        dimension=code.dim,
        distance=result.weight,
        exact=result.exact,
        budget=budget_value(budget),
        seed=result.seed,
    )
