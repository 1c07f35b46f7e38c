"""Shared helpers: random code generators and small brute-force oracles.

The brute oracles here deliberately avoid the library's linear algebra:
closure saturates a python set under ring and shift operations, and the
tower oracle applies the defining membership condition to every candidate
polynomial.  They are only usable on tiny codes, which is the point.
"""

from __future__ import annotations

import itertools
import random

import numpy as np
import pytest

import nilcyclic as nc
from nilcyclic import FpPoly, RPoly


def random_fppoly(rng: random.Random, p: int, max_deg: int) -> FpPoly:
    return FpPoly(p, [rng.randrange(p) for _ in range(max_deg + 1)])


def random_rpoly(rng: random.Random, p: int, n: int, density: float = 0.45) -> RPoly:
    comps = [
        random_fppoly(rng, p, rng.randrange(n)) if rng.random() < density else FpPoly.zero(p)
        for _ in range(8)
    ]
    return RPoly(p, n, comps)


def random_structured_rpoly(rng: random.Random, p: int, n: int) -> RPoly:
    """Sum of monomial * g^k * (random poly) terms, like the table entries."""
    g = RPoly.x(p, n) - RPoly.one(p, n)
    out = RPoly.zero(p, n)
    for _ in range(rng.randrange(1, 4)):
        mask = rng.randrange(8)
        k = rng.randrange(n)
        q = random_fppoly(rng, p, rng.randrange(n))
        term = RPoly.from_component(p, n, mask, FpPoly.one(p))
        for _ in range(k):
            term = term * g
        out = out + term * q
    return out


def random_ideal(rng: random.Random, p: int, n: int) -> nc.CyclicCode:
    gens = [random_structured_rpoly(rng, p, n) for _ in range(rng.randrange(1, 3))]
    return nc.span_closure(p, n, gens)


def brute_closure(gens: list[RPoly], p: int, n: int) -> set[RPoly]:
    """Set-based ideal closure; exponential, for tiny codes only."""
    mons = [RPoly.x(p, n)] + [
        RPoly.from_component(p, n, m, FpPoly.one(p)) for m in (1, 2, 4)
    ]
    seen = {RPoly.zero(p, n)}
    frontier = list(gens)
    while frontier:
        el = frontier.pop()
        if el in seen:
            continue
        new = {el} | {s + el for s in seen}
        for e in new - seen:
            seen.add(e)
            for m in mons:
                frontier.append(m * e)
            for c in range(2, p):
                frontier.append(e * c)
    return seen


def brute_tower_ideal(code: nc.CyclicCode, i: int, budget: int = 1 << 16) -> set[FpPoly]:
    """All f with mu_i f in C mod the level's ideal, straight from the definition."""
    p, n = code.p, code.n
    kept = i  # blocks 1..i survive the mod-list at level i
    patterns = set()
    for word in nc.enumerate_codewords(code, budget):
        vec = tuple(word.to_vector()[: kept * n])
        patterns.add(vec)
    out = set()
    for coeffs in itertools.product(range(p), repeat=n):
        target = (0,) * ((kept - 1) * n) + coeffs
        if target in patterns:
            out.add(FpPoly(p, coeffs))
    return out


@pytest.fixture
def rng():
    return random.Random(20240817)
