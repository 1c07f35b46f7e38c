import itertools
import random

import pytest

import nilcyclic as nc
from nilcyclic import FieldElem, FpPoly, MINUS_INFINITY
from nilcyclic.gfpoly import exact_div


def test_field_axioms_exhaustive_small_primes():
    for p in (2, 3, 5, 7):
        elems = [FieldElem(v, p) for v in range(p)]
        zero, one = elems[0], elems[1 % p]
        for a, b in itertools.product(elems, repeat=2):
            assert a + b == b + a
            assert a * b == b * a
            assert a + zero == a
            assert a * one == a
            assert a + (-a) == zero
            if b.value:
                assert b * b.inverse() == one
        for a, b, c in itertools.product(elems, repeat=3):
            assert (a + b) + c == a + (b + c)
            assert (a * b) * c == a * (b * c)
            assert a * (b + c) == a * b + a * c


def test_nonprime_modulus_rejected():
    for bad in (1, 4, 6, 9, 15):
        with pytest.raises(ValueError):
            FieldElem(1, bad)
        with pytest.raises(ValueError):
            FpPoly(bad, (1,))


def test_field_modulus_mismatch():
    with pytest.raises(ValueError):
        FieldElem(1, 2) + FieldElem(1, 3)


def test_poly_add_char2_cancels():
    f = FpPoly(2, (1, 1))  # x + 1
    assert (f + f).is_zero()


def test_poly_mul_example_mod3():
    # (x - 1)^2 over F_3: x^2 - 2x + 1 == x^2 + x + 1
    f = FpPoly(3, (-1, 1))
    assert f * f == FpPoly(3, (1, 1, 1))


def test_poly_mul_annihilator():
    f = FpPoly(5, (2, 0, 3))
    assert (f * FpPoly.zero(5)).is_zero()


def test_poly_mismatch_raises():
    with pytest.raises(ValueError):
        FpPoly(2, (1,)) * FpPoly(3, (1,))


def test_divmod_example_f2():
    f = FpPoly(2, (-1, 0, 0, 0, 1))  # x^4 - 1
    g = FpPoly(2, (-1, 1))  # x - 1
    q, r = nc.poly_divmod(f, g)
    assert q == FpPoly(2, (1, 1, 1, 1))
    assert r.is_zero()
    assert g * q + r == f


def test_divmod_trivial_cases():
    g = FpPoly(3, (1, 2, 1))
    q, r = nc.poly_divmod(g, g)
    assert q == FpPoly.one(3) and r.is_zero()
    small = FpPoly(3, (2, 1))
    q, r = nc.poly_divmod(small, g)
    assert q.is_zero() and r == small


def test_divmod_by_zero_raises():
    with pytest.raises(ZeroDivisionError):
        nc.poly_divmod(FpPoly(2, (1,)), FpPoly.zero(2))


def test_divmod_reconstruction_random():
    rng = random.Random(11)
    for p in (2, 3, 5):
        for _ in range(200):
            f = FpPoly(p, [rng.randrange(p) for _ in range(rng.randrange(13))])
            g = FpPoly(p, [rng.randrange(p) for _ in range(rng.randrange(1, 13))])
            if g.is_zero():
                continue
            q, r = nc.poly_divmod(f, g)
            assert g * q + r == f
            assert r.degree < g.degree


def test_gcd_examples():
    gm1 = FpPoly(3, (-1, 1))
    assert nc.poly_gcd(gm1 * gm1, gm1 * gm1 * gm1) == (gm1 * gm1).monic()
    f = FpPoly(5, (3, 1))
    assert nc.poly_gcd(f, FpPoly.zero(5)) == f.monic()
    # over F_2: x^2 + 1 = (x+1)^2
    assert nc.poly_gcd(FpPoly(2, (1, 0, 1)), FpPoly(2, (1, 1))) == FpPoly(2, (1, 1))
    with pytest.raises(ValueError):
        nc.poly_gcd(FpPoly.zero(2), FpPoly.zero(2))


def test_gcd_divides_both_and_is_greatest_random():
    rng = random.Random(7)
    for p in (2, 3, 5):
        for _ in range(120):
            d = FpPoly(p, [rng.randrange(p) for _ in range(rng.randrange(1, 5))])
            if d.is_zero():
                continue
            a = d * FpPoly(p, [rng.randrange(p) for _ in range(rng.randrange(1, 9))])
            b = d * FpPoly(p, [rng.randrange(p) for _ in range(rng.randrange(1, 9))])
            if a.is_zero() and b.is_zero():
                continue
            g = nc.poly_gcd(a, b)
            assert g.divides(a) and g.divides(b)
            assert d.divides(g)  # any common divisor divides the gcd


def test_degree_sentinel_below_all_integers():
    assert FpPoly.zero(3).degree == MINUS_INFINITY
    assert MINUS_INFINITY < -(10**9)
    assert FpPoly(3, (7,)).degree == 0


def test_cyclic_generator_examples():
    # span{(1,1,1)} in F_3^3 is the ideal of x^2 + x + 1
    g = nc.cyclic_generator([(1, 1, 1)], 3, 3)
    assert g == FpPoly(3, (1, 1, 1))
    # zero subspace maps to x^n - 1
    assert nc.cyclic_generator([], 4, 2) == FpPoly(2, (1, 0, 0, 0, 1))
    # full space F_2^4 is the unit ideal
    full = [tuple(1 if i == j else 0 for i in range(4)) for j in range(4)]
    assert nc.cyclic_generator(full, 4, 2) == FpPoly.one(2)


def test_cyclic_generator_rejects_non_shift_closed():
    with pytest.raises(ValueError):
        nc.cyclic_generator([(1, 0, 0, 0)], 4, 2)


def test_cyclic_generator_divides_xn1_and_dim_matches():
    rng = random.Random(3)
    for p, n in ((2, 8), (3, 9), (5, 5)):
        xn1 = FpPoly.x_pow_n_minus_1(p, n)
        for _ in range(40):
            d = nc.poly_gcd(
                FpPoly(p, [rng.randrange(p) for _ in range(rng.randrange(1, n))]), xn1
            )
            rows = []
            for k in range(n - d.degree):
                row = [0] * n
                for i, c in enumerate(d.coeffs):
                    row[(i + k) % n] = c
                rows.append(row)
            g = nc.cyclic_generator(rows, n, p)
            assert g == d.monic()
            assert g.divides(xn1)


def test_frobenius_binomial_matches_naive():
    for p in (2, 3, 5):
        gm1 = FpPoly(p, (-1, 1))
        acc = FpPoly.one(p)
        for t in range(26):
            assert nc.frobenius_binomial(p, t) == acc
            acc = acc * gm1


def test_frobenius_binomial_examples():
    assert nc.frobenius_binomial(2, 4) == FpPoly(2, (1, 0, 0, 0, 1))
    assert nc.frobenius_binomial(5, 1) == FpPoly(5, (-1, 1))
    # p=3, t=5: (x^3 - 1)(x - 1)^2 expanded
    gm1 = FpPoly(3, (-1, 1))
    expect = FpPoly(3, (-1, 0, 0, 1)) * gm1 * gm1
    assert nc.frobenius_binomial(3, 5) == expect


def test_exact_div():
    a = FpPoly(3, (1, 1)) * FpPoly(3, (2, 1))
    assert exact_div(a, FpPoly(3, (1, 1))) == FpPoly(3, (2, 1))
    assert exact_div(FpPoly(3, (1, 1)), FpPoly(3, (1, 0, 1))) is None
    assert exact_div(FpPoly.zero(3), FpPoly.zero(3)) == FpPoly.zero(3)
    assert exact_div(FpPoly(3, (1,)), FpPoly.zero(3)) is None
