import itertools
import random

import pytest

import nilcyclic as nc
from nilcyclic import RingElem
from nilcyclic.ring import MONOMIALS, gray_matrix_inverse


def mono(p, name, c=1):
    return RingElem.monomial(p, MONOMIALS.index(name), c)


def all_elems(p):
    for coords in itertools.product(range(p), repeat=8):
        yield RingElem(p, coords)


def test_basis_products():
    u, v, w = mono(2, "u"), mono(2, "v"), mono(2, "w")
    uv, uvw = mono(2, "uv"), mono(2, "uvw")
    assert u * v == uv
    assert uv * w == uvw
    assert uvw * u == RingElem.zero(2)
    assert u * u == RingElem.zero(2)


def test_unit_times_inverse_mod3():
    one, u = RingElem.one(3), mono(3, "u")
    a = (one + u)
    b = (one - u)
    assert a * b == one  # the u^2 term drops


def test_mul_structure_constants_associative_on_basis():
    # bilinearity makes the basis check exhaustive in effect
    for p in (2, 3):
        basis = [RingElem.monomial(p, m) for m in range(8)]
        for a, b in itertools.product(basis, repeat=2):
            assert a * b == b * a
        for a, b, c in itertools.product(basis, repeat=3):
            assert (a * b) * c == a * (b * c)


def test_mul_commutative_exhaustive_p2():
    elems = list(all_elems(2))
    for a, b in itertools.product(elems, repeat=2):
        assert a * b == b * a


def test_mul_associative_random():
    rng = random.Random(2)
    for p in (2, 3, 5):
        for _ in range(300):
            a, b, c = (RingElem(p, [rng.randrange(p) for _ in range(8)]) for _ in range(3))
            assert (a * b) * c == a * (b * c)
            assert a * (b + c) == a * b + a * c


def test_unit_iff_constant_coordinate():
    assert (RingElem.one(2) + mono(2, "u") + mono(2, "v") + mono(2, "w")).is_unit
    assert not (mono(2, "u") + mono(2, "vw")).is_unit


def test_unit_count_p2():
    units = sum(1 for a in all_elems(2) if a.is_unit)
    assert units == 128  # p^7 (p - 1)


def test_inverse_exhaustive_p2():
    one = RingElem.one(2)
    for a in all_elems(2):
        if a.is_unit:
            assert a * a.inverse() == one
        else:
            with pytest.raises(ZeroDivisionError):
                a.inverse()


def test_inverse_random_p3_p5():
    rng = random.Random(5)
    for p in (3, 5):
        one = RingElem.one(p)
        for _ in range(400):
            a = RingElem(p, [rng.randrange(p) for _ in range(8)])
            if a.is_unit:
                assert a * a.inverse() == one


def test_nonunit_fourth_power_vanishes():
    rng = random.Random(9)
    for a in all_elems(2):
        if not a.is_unit:
            assert (a * a * a * a).is_zero()
    for p in (3, 5):
        zero = RingElem.zero(p)
        for _ in range(300):
            a = RingElem(p, [0] + [rng.randrange(p) for _ in range(7)])
            assert a * a * a * a == zero


def test_inverse_of_2_plus_uvw_by_linear_oracle():
    # oracle: solve (2 + uvw)(x + y uvw) = 1 over F_3 by brute force on (x, y)
    p = 3
    a = RingElem(p, (2, 0, 0, 0, 0, 0, 0, 1))
    solutions = [
        (x, y)
        for x in range(p)
        for y in range(p)
        if a * RingElem(p, (x, 0, 0, 0, 0, 0, 0, y)) == RingElem.one(p)
    ]
    assert solutions == [(2, 2)]
    assert a.is_unit
    assert a.inverse() == RingElem(p, (2, 0, 0, 0, 0, 0, 0, 2))


def test_gray_map_examples():
    assert nc.gray_map(RingElem.one(2)) == (0, 0, 0, 0, 0, 0, 0, 1)
    assert nc.gray_map(mono(2, "uvw")) == (1, 1, 1, 1, 1, 1, 1, 1)
    assert nc.gray_map(mono(2, "u")) == (0, 0, 0, 0, 0, 1, 0, 1)
    assert nc.lee_weight(mono(2, "u")) == 2


def test_gray_map_matches_printed_formula_random():
    rng = random.Random(13)
    for p in (2, 3, 5):
        for _ in range(200):
            a = [rng.randrange(p) for _ in range(8)]
            a1, a2, a3, a4, a5, a6, a7, a8 = a
            expected = tuple(
                x % p
                for x in (
                    a8,
                    a6 + a8,
                    a7 + a8,
                    a4 + a8,
                    a5 + a6 + a7 + a8,
                    a2 + a4 + a6 + a8,
                    a3 + a4 + a7 + a8,
                    a1 + a2 + a3 + a4 + a5 + a6 + a7 + a8,
                )
            )
            assert nc.gray_map(RingElem(p, a)) == expected


def test_gray_bijection_exhaustive_p2():
    seen = set()
    for a in all_elems(2):
        img = nc.gray_map(a)
        seen.add(img)
        assert nc.gray_inverse(img, 2) == a
    assert len(seen) == 256


def test_gray_bijection_random_p3_p5():
    rng = random.Random(17)
    for p in (3, 5):
        for _ in range(500):
            a = RingElem(p, [rng.randrange(p) for _ in range(8)])
            assert nc.gray_inverse(nc.gray_map(a), p) == a


def test_gray_linearity():
    rng = random.Random(19)
    for p in (2, 3, 5):
        for _ in range(200):
            a = RingElem(p, [rng.randrange(p) for _ in range(8)])
            b = RingElem(p, [rng.randrange(p) for _ in range(8)])
            c = rng.randrange(p)
            sum_img = tuple((x + y) % p for x, y in zip(nc.gray_map(a), nc.gray_map(b)))
            assert nc.gray_map(a + b) == sum_img
            scaled = tuple((c * x) % p for x in nc.gray_map(a))
            assert nc.gray_map(a * c) == scaled


def test_gray_matrix_invertible_for_supported_primes():
    for p in (2, 3, 5, 7, 11, 13):
        inv = gray_matrix_inverse(p)
        assert inv.shape == (8, 8)


def test_lee_weight_examples():
    assert nc.lee_weight(RingElem.zero(3)) == 0
    assert nc.lee_weight(mono(2, "uvw")) == 8
    for p in (2, 3, 5):
        for a in (RingElem.one(p), mono(p, "vw"), mono(p, "uw", p - 1)):
            assert nc.lee_weight(a) == sum(1 for x in nc.gray_map(a) if x)


def test_lee_weight_zero_iff_zero():
    rng = random.Random(23)
    for p in (2, 3):
        for _ in range(200):
            a = RingElem(p, [rng.randrange(p) for _ in range(8)])
            assert (nc.lee_weight(a) == 0) == a.is_zero()
