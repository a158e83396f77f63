"""Checks for the special-function kernel.

Reference values were computed independently with mpmath at 40 decimal
digits and frozen here as literals.
"""

import math

import pytest

from entrokit import special
from entrokit.errors import RootConvergenceError


# ---------------------------------------------------------------------------
# frozen reference values (mpmath, 40 dps)

DIGAMMA_REFERENCE = {
    1.0: -0.5772156649015329,
    0.5: -1.9635100260214235,
    2.0: 0.4227843350984671,
}

LN_GAMMA_10 = 12.80182748008147
PHI_INV_75 = 0.6744897501960817


def test_digamma_frozen_values():
    for x, ref in DIGAMMA_REFERENCE.items():
        assert special.digamma(x) == pytest.approx(ref, abs=1e-13)


def test_ln_gamma_frozen_value():
    assert special.ln_gamma(10.0) == pytest.approx(LN_GAMMA_10, abs=1e-12)


def test_std_normal_quantile_frozen_value():
    assert special.std_normal_quantile(0.75) == pytest.approx(
        PHI_INV_75, abs=1e-13)


def test_digamma_recurrence():
    # psi(x + 1) - psi(x) = 1/x
    for x in [0.1, 0.37, 0.5, 1.0, 2.5, 7.0, 19.5, 123.0]:
        lhs = special.digamma(x + 1.0) - special.digamma(x)
        assert lhs == pytest.approx(1.0 / x, abs=1e-11)


def test_ln_gamma_recurrence():
    # lnGamma(x + 1) - lnGamma(x) = ln x
    for x in [0.2, 0.9, 1.5, 4.0, 30.0, 250.0]:
        lhs = special.ln_gamma(x + 1.0) - special.ln_gamma(x)
        assert lhs == pytest.approx(math.log(x), abs=1e-11)


def test_ln_beta_symmetry_and_value():
    assert special.ln_beta(2.5, 4.0) == special.ln_beta(4.0, 2.5)
    # B(1, b) = 1/b
    assert special.ln_beta(1.0, 3.0) == pytest.approx(-math.log(3.0), abs=1e-13)


def test_std_normal_cdf_symmetry():
    for y in [0.0, 0.3, 1.0, 2.7, 5.5]:
        s = special.std_normal_cdf(y) + special.std_normal_cdf(-y)
        assert s == pytest.approx(1.0, abs=1e-14)


def test_std_normal_round_trip():
    for p in [1e-8, 1e-3, 0.1, 0.25, 0.5, 0.75, 0.9, 1 - 1e-3]:
        q = special.std_normal_quantile(p)
        assert special.std_normal_cdf(q) == pytest.approx(p, abs=1e-12)


def test_reg_gamma_round_trip():
    for lam in [0.3, 1.0, 2.5, 10.0, 100.0]:
        for p in [1e-6, 0.01, 0.25, 0.5, 0.75, 0.99]:
            y = special.reg_gamma_quantile(lam, p)
            assert special.reg_gamma_cdf(lam, y) == pytest.approx(p, abs=1e-10)


def test_reg_beta_round_trip():
    for ab in [(0.5, 0.5), (0.5, 1.5), (2.0, 3.0), (10.0, 0.7)]:
        for p in [1e-6, 0.01, 0.25, 0.5, 0.75, 0.99]:
            t = special.reg_beta_quantile(*ab, p)
            assert special.reg_beta_cdf(*ab, t) == pytest.approx(p, abs=1e-10)


def test_reg_gamma_cdf_monotone():
    lam = 3.0
    ys = [0.01 * k for k in range(1, 400)]
    vals = [special.reg_gamma_cdf(lam, y) for y in ys]
    assert all(b > a for a, b in zip(vals, vals[1:]))


def test_reg_beta_cdf_monotone():
    ts = [0.002 * k for k in range(1, 500)]
    vals = [special.reg_beta_cdf(1.5, 2.5, t) for t in ts]
    assert all(b > a for a, b in zip(vals, vals[1:]))


def test_domain_errors():
    with pytest.raises(ValueError):
        special.ln_gamma(0.0)
    with pytest.raises(ValueError):
        special.ln_gamma(-1.5)
    with pytest.raises(ValueError):
        special.std_normal_quantile(0.0)
    with pytest.raises(ValueError):
        special.reg_gamma_quantile(2.0, 1.5)


def test_special_value_wrapper():
    sv = special.special_value("digamma", 1.0)
    assert sv.value == pytest.approx(DIGAMMA_REFERENCE[1.0], abs=1e-13)
    assert sv.abs_error_bound > 0
    with pytest.raises(ValueError):
        special.special_value("nonexistent", 1.0)
