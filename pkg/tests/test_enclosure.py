"""Interval layer: outward rounding, exact ops, sqrt, complex rectangles."""

import random
from fractions import Fraction

import pytest

from triboverify.enclosure import (ComplexEnclosure, Enclosure,
                                   round_down, round_up, sqrt_down, sqrt_up,
                                   sqrt_split)


def test_rounding_brackets_value():
    rng = random.Random(20260822)
    for _ in range(300):
        x = Fraction(rng.randint(-10 ** 12, 10 ** 12),
                     rng.randint(1, 10 ** 9))
        for bits in (8, 32, 100):
            lo = round_down(x, bits)
            hi = round_up(x, bits)
            assert lo <= x <= hi
            assert hi - lo <= Fraction(2, 1 << bits) * (1 + abs(x))


def test_rounding_exact_on_grid():
    x = Fraction(5, 8)
    assert round_down(x, 10) == x
    assert round_up(x, 10) == x
    assert round_down(Fraction(0), 50) == 0


def test_rounding_refinement_monotone():
    # doubling bits must never loosen the bracket (nested dyadic grids)
    rng = random.Random(7)
    for _ in range(200):
        x = Fraction(rng.randint(-10 ** 9, 10 ** 9), rng.randint(1, 10 ** 6))
        for bits in (16, 32, 64):
            assert round_down(x, 2 * bits) >= round_down(x, bits)
            assert round_up(x, 2 * bits) <= round_up(x, bits)


def test_sqrt_bounds():
    rng = random.Random(99)
    for _ in range(200):
        x = Fraction(rng.randint(0, 10 ** 10), rng.randint(1, 10 ** 5))
        lo = sqrt_down(x, 80)
        hi = sqrt_up(x, 80)
        assert lo * lo <= x <= hi * hi
        assert lo >= 0


def test_sqrt_two_window():
    lo = sqrt_down(Fraction(2), 200)
    hi = sqrt_up(Fraction(2), 200)
    assert hi - lo < Fraction(1, 1 << 190)


def test_enclosure_invariants():
    e = Enclosure(Fraction(1, 3), Fraction(1, 2))
    assert e.contains(Fraction(2, 5))
    assert not e.contains(Fraction(2))
    assert e.is_positive()
    assert not e.contains_zero()
    with pytest.raises(ValueError):
        Enclosure(Fraction(1), Fraction(0))


def _rand_enclosure(rng, lo=-50, hi=50):
    a = Fraction(rng.randint(lo * 100, hi * 100), 100)
    b = a + Fraction(rng.randint(0, 300), 100)
    return Enclosure(a, b)


def test_arithmetic_encloses_pointwise():
    rng = random.Random(20260822)
    for _ in range(300):
        e1 = _rand_enclosure(rng)
        e2 = _rand_enclosure(rng)
        x1 = e1.lo + (e1.hi - e1.lo) * Fraction(rng.randint(0, 16), 16)
        x2 = e2.lo + (e2.hi - e2.lo) * Fraction(rng.randint(0, 16), 16)
        assert (e1 + e2).contains(x1 + x2)
        assert (e1 - e2).contains(x1 - x2)
        assert (e1 * e2).contains(x1 * x2)
        if not e2.contains_zero():
            assert (e1 / e2).contains(x1 / x2)
        assert e1.square().contains(x1 * x1)
        assert e1.abs().contains(abs(x1))


def test_square_tight_around_zero():
    e = Enclosure(Fraction(-2), Fraction(3))
    sq = e.square()
    assert sq.lo == 0 and sq.hi == 9


def test_inv_rejects_zero_straddle():
    with pytest.raises(ZeroDivisionError):
        Enclosure(Fraction(-1), Fraction(1)).inv()


def test_sqrt_enclosure():
    e = Enclosure(Fraction(2), Fraction(3))
    s = e.sqrt(100)
    assert s.lo * s.lo <= 2 and s.hi * s.hi >= 3
    # a point input gives a sqrt window at the requested precision
    p = Enclosure.point(Fraction(2)).sqrt(100)
    assert p.width() < Fraction(1, 1 << 90)


def test_point_and_comparisons():
    p = Enclosure.point(Fraction(7, 2))
    assert p.width() == 0
    assert p.definitely_lt(4)
    assert p.definitely_gt(3)
    assert not p.definitely_lt(Fraction(7, 2))


def test_complex_mul_encloses():
    rng = random.Random(5)
    for _ in range(200):
        z1 = ComplexEnclosure(_rand_enclosure(rng), _rand_enclosure(rng))
        z2 = ComplexEnclosure(_rand_enclosure(rng), _rand_enclosure(rng))
        a, b = z1.re.mid(), z1.im.mid()
        c, d = z2.re.mid(), z2.im.mid()
        prod = z1 * z2
        assert prod.re.contains(a * c - b * d)
        assert prod.im.contains(a * d + b * c)
        sq = z1.square()
        assert sq.re.contains(a * a - b * b)
        assert sq.im.contains(2 * a * b)


def test_complex_abs_and_inv():
    z = ComplexEnclosure.point(Fraction(3), Fraction(4))
    assert z.abs2().contains(25)
    a = z.abs(100)
    assert a.contains(5)
    w = z.inv()
    assert w.re.contains(Fraction(3, 25))
    assert w.im.contains(Fraction(-4, 25))


def test_complex_div_roundtrip():
    z = ComplexEnclosure.point(Fraction(5), Fraction(-2))
    w = ComplexEnclosure.point(Fraction(1), Fraction(3))
    q = z / w
    back = q * w
    assert back.re.contains(5) and back.im.contains(-2)


def test_sqrt_split_candidates():
    # u + iv or u - iv must square back onto the rectangle
    z = ComplexEnclosure.point(Fraction(-7), Fraction(24))
    u, v = sqrt_split(z, 120)
    # true root of -7+24i is 3+4i
    assert u.contains(3)
    assert v.contains(4)


def test_rounded_keeps_enclosure():
    e = Enclosure(Fraction(10 ** 30 + 1, 10 ** 30), Fraction(10 ** 30 + 7, 10 ** 30))
    r = e.rounded(64)
    assert r.encloses(e)
    assert r.lo.denominator <= 1 << 70
