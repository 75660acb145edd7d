"""Certified constants for the cubic and alpha-power comparisons, checked
against an mpmath oracle at high precision."""

from fractions import Fraction

import mpmath
import pytest

from triboverify.constants import (Cmp, alpha_power, cmp_alpha_power,
                                   constants, floor_log_alpha,
                                   verify_growth, verify_numeric_window)

mpmath.mp.prec = 300
MP_ALPHA = mpmath.findroot(lambda t: t ** 3 - t ** 2 - t - 1, 1.84)


@pytest.fixture(autouse=True)
def _pin_mp_precision():
    # mpmath precision is process-global and other test modules set their
    # own; re-pin for every test here so run order cannot matter
    old = mpmath.mp.prec
    mpmath.mp.prec = 300
    yield
    mpmath.mp.prec = old


def _contains_mp(enc, value, slack=mpmath.mpf(2) ** -250):
    return (mpmath.mpf(enc.lo.numerator) / enc.lo.denominator - slack
            <= value
            <= mpmath.mpf(enc.hi.numerator) / enc.hi.denominator + slack)


def test_alpha_against_oracle():
    cs = constants(256)
    assert _contains_mp(cs.alpha, MP_ALPHA)
    assert cs.alpha.width() <= Fraction(1, 1 << 256)


def test_alpha_width_scales():
    for bits in (64, 128, 512):
        cs = constants(bits)
        assert cs.alpha.width() <= Fraction(1, 1 << bits)
        # defining cubic straddles zero on the interval
        f_lo = cs.alpha.lo ** 3 - cs.alpha.lo ** 2 - cs.alpha.lo - 1
        f_hi = cs.alpha.hi ** 3 - cs.alpha.hi ** 2 - cs.alpha.hi - 1
        assert f_lo <= 0 <= f_hi


def test_beta_against_oracle():
    cs = constants(192)
    disc = mpmath.sqrt((1 - MP_ALPHA) ** 2 - 4 / MP_ALPHA)
    beta = ((1 - MP_ALPHA) + disc) / 2
    assert _contains_mp(cs.beta.re, beta.real)
    assert _contains_mp(cs.beta.im, beta.imag)
    assert cs.beta.im.is_positive()


def test_closed_form_coefficients_against_oracle():
    cs = constants(192)
    a = 1 / (3 * MP_ALPHA ** 2 - 2 * MP_ALPHA - 1)
    assert _contains_mp(cs.a, a)
    disc = mpmath.sqrt((1 - MP_ALPHA) ** 2 - 4 / MP_ALPHA)
    beta = ((1 - MP_ALPHA) + disc) / 2
    gamma = ((1 - MP_ALPHA) - disc) / 2
    b = 1 / ((beta - MP_ALPHA) * (beta - gamma))
    assert _contains_mp(cs.b.re, b.real)
    assert _contains_mp(cs.b.im, b.imag)


def test_alpha_power_against_oracle():
    for p in (0, 1, 2, 7, 40, -1, -13, 100):
        enc = alpha_power(p, 192)
        assert _contains_mp(enc, MP_ALPHA ** p)


def test_alpha_power_multiplicativity():
    e1 = alpha_power(9, 160)
    e2 = alpha_power(16, 160)
    prod = e1 * e2
    assert prod.intersects(alpha_power(25, 160))


def test_cmp_alpha_power_exactness():
    # alpha**2 vs small rationals and a few integer powers of T-values
    assert cmp_alpha_power(2, 1, 3) == Cmp.GREATER
    assert cmp_alpha_power(2, 1, 4) == Cmp.LESS
    assert cmp_alpha_power(0, 1, 1) == Cmp.EQUAL
    assert cmp_alpha_power(-3, 1, 1) == Cmp.LESS
    assert cmp_alpha_power(12, 4, 6) == Cmp.GREATER   # alpha^12 vs 6^4
    # alpha^12 = 1498.97...
    assert cmp_alpha_power(12, 1, 1498) == Cmp.GREATER
    assert cmp_alpha_power(12, 1, 1499) == Cmp.LESS


def test_cmp_alpha_power_never_equal_for_n_ge_2():
    # alpha is irrational so alpha**p = n**(1/q) cannot hold for n >= 2
    for p in range(1, 30):
        for n in (2, 3, 5, 1490):
            assert cmp_alpha_power(p, 1, n) != Cmp.EQUAL


def test_cmp_alpha_power_coarse_start():
    # starting from a deliberately tiny precision must still decide
    assert cmp_alpha_power(100, 1, 10 ** 26, precision_bits=16) == Cmp.GREATER
    assert cmp_alpha_power(100, 1, 10 ** 27, precision_bits=16) == Cmp.LESS


def test_floor_log_alpha():
    cases = {1: 0, 2: 1, 3: 1, 4: 2, 7: 3, 13: 4, 1000: 11}
    for n, want in cases.items():
        assert floor_log_alpha(n) == want
    # cross-check a big one against mpmath
    n = 10 ** 40
    k = floor_log_alpha(n)
    assert mpmath.mpf(MP_ALPHA) ** k <= n < mpmath.mpf(MP_ALPHA) ** (k + 1)


def test_numeric_window_report():
    rep = verify_numeric_window()
    assert rep.all_ok
    names = [c.name for c in rep.checks]
    assert names == ["alpha_window", "beta_abs_window",
                     "beta_abs_is_alpha_inv_sqrt", "a_window",
                     "b_abs_window", "c_abs_window", "conjugate_pairs"]


def test_growth_bounds_small():
    rep = verify_growth(200)
    assert rep.all_ok
    assert rep.checked == 199


def test_growth_equality_edges():
    # T_2 = 1 = alpha^0 and T_3 = 1 = alpha^0: both ends touch
    assert cmp_alpha_power(2 - 2, 1, 1) == Cmp.EQUAL
    assert cmp_alpha_power(3 - 3, 1, 1) == Cmp.EQUAL


def test_growth_rejects_bad_range():
    with pytest.raises(ValueError):
        verify_growth(1)
