"""Checks for quantile inversion, IQnR machinery, and the renormalization
scale rho~, including a brute-force dense-grid oracle for discrete laws."""

import math

import pytest

from entrokit import laws
from entrokit.quantiles import (iqnr, iqrr, quantile, quantile_profile,
                                rho_tilde, rho_tilde_mixture)
from entrokit.errors import DegenerateLawError, MixtureStructureError


def test_continuous_quantile_examples():
    assert quantile(laws.Uniform(a=2.0), 0.3) == pytest.approx(0.6)
    assert quantile(laws.Gaussian(a=1.0), 0.5) == pytest.approx(0.0, abs=1e-14)
    assert quantile(laws.Cauchy(a=3.0), 0.75) == pytest.approx(3.0, abs=1e-12)
    assert quantile(laws.Exponential(a=1.0), 0.5) == pytest.approx(
        math.log(2.0), abs=1e-12)


def test_quantile_round_trip_continuous():
    for law in [laws.Gaussian(a=1.0), laws.Gamma(lam=2.5, a=1.0),
                laws.Laplace(a=2.0), laws.Student(lam=4.0, a=1.0),
                laws.Cauchy(a=0.5)]:
        for p in [0.01, 0.25, 0.5, 0.75, 0.99]:
            assert law.cdf(quantile(law, p)) == pytest.approx(p, abs=1e-10)


def test_discrete_quantile_convention():
    # Q(p) = inf{x : p <= F(x)}: at a cumulative breakpoint the atom itself
    # is returned; just above it, the next atom.
    law = laws.explicit((0.0, 1.0, 2.0), (0.2, 0.3, 0.5))
    assert quantile(law, 0.2) == 0.0
    assert quantile(law, 0.2 + 1e-12) == 1.0
    assert quantile(law, 0.5) == 1.0
    assert quantile(law, 0.6) == 2.0
    assert quantile(law, 1.0 - 1e-12) == 2.0


def test_quantile_domain():
    law = laws.Gaussian(a=1.0)
    with pytest.raises(ValueError):
        quantile(law, 0.0)
    with pytest.raises(ValueError):
        quantile(law, 1.1)


def test_iqnr_nonincreasing_in_p():
    ps = [0.01 * k for k in range(1, 50)]
    for law in [laws.Gaussian(a=1.0), laws.Cauchy(a=1.0),
                laws.binomial(20, 0.3), laws.poisson(7.0)]:
        vals = [iqnr(law, p) for p in ps]
        assert all(b <= a + 1e-12 for a, b in zip(vals, vals[1:]))


def test_iqnr_affine_equivariance():
    base = laws.Gamma(lam=2.0, a=1.0)
    mapped = laws.affine(base, 4.0, -7.0)
    for p in [0.05, 0.1, 0.25]:
        assert iqnr(mapped, p) == pytest.approx(4.0 * iqnr(base, p),
                                                rel=1e-12)


def test_iqrr_values():
    assert iqrr(laws.Uniform(a=1.0)) == pytest.approx(0.5, abs=1e-14)
    assert iqrr(laws.Cauchy(a=1.0)) == pytest.approx(2.0, abs=1e-12)
    assert iqrr(laws.Gaussian(a=1.0)) == pytest.approx(
        2 * 0.6744897501960817, abs=1e-12)


def test_rho_tilde_continuous_is_iqrr():
    law = laws.Laplace(a=1.5)
    assert rho_tilde(law) == iqrr(law)


def test_rho_tilde_discrete_examples():
    # two equal atoms: the only nonzero IQnR is the gap itself
    assert rho_tilde(laws.binomial(1, 0.5)) == pytest.approx(1.0)
    assert rho_tilde(laws.discrete_uniform(4, 1.0)) == pytest.approx(0.5)
    with pytest.raises(DegenerateLawError):
        rho_tilde(laws.degenerate(2.0))


def _dense_grid_rho(law, m=1_000_000):
    smallest = math.inf
    for k in range(1, m // 4 + 1):
        p = k / m
        r = iqnr(law, p)
        if 0.0 < r < smallest:
            smallest = r
    return smallest


@pytest.mark.parametrize("law", [
    laws.binomial(1, 0.5),
    laws.binomial(5, 0.3),
    laws.binomial(11, 0.62),
    laws.poisson(2.0),
    laws.discrete_uniform(4, 1.0),
    laws.discrete_uniform(7, 3.0),
    laws.explicit((0.0, 0.1, 0.5, 2.0), (0.05, 0.2, 0.35, 0.4)),
    laws.explicit((-3.0, -1.0, 0.0, 1.0, 2.5), (0.1, 0.2, 0.4, 0.2, 0.1)),
], ids=laws.law_label)
def test_rho_tilde_matches_dense_grid_oracle(law):
    law = laws.to_discrete(law)
    if len(law.xs) > 12:
        law = laws.explicit(law.xs[:12],
                            tuple(p / sum(law.ps[:12]) for p in law.ps[:12]))
    assert rho_tilde(law) == pytest.approx(_dense_grid_rho(law), abs=0)


def test_rho_tilde_affine_equivariance():
    base = laws.binomial(7, 0.4)
    mapped = laws.to_discrete(laws.affine(base, 2.5, 1.0))
    assert rho_tilde(mapped) == pytest.approx(2.5 * rho_tilde(base),
                                              rel=1e-12)


# ---------------------------------------------------------------------------
# mixtures

def _atom_plus_uniform():
    # (2/3) delta_{1/2} + (1/3) U(0, 1)
    return laws.mixture([(2.0 / 3.0, laws.degenerate(0.5)),
                         (1.0 / 3.0, laws.Uniform(a=1.0))])


def test_mixture_quantile_piecewise_exact():
    mix = _atom_plus_uniform()
    # Q(p) = 3p for p <= 1/6, 1/2 on (1/6, 5/6], 3p - 2 above
    assert quantile(mix, 0.1) == 3.0 * 0.1
    assert quantile(mix, 0.5) == 0.5
    assert quantile(mix, 0.9) == 3.0 * 0.9 - 2.0


def test_mixture_iqrr_vanishes_on_fat_atom():
    mix = _atom_plus_uniform()
    assert iqrr(mix) == 0.0


def test_rho_tilde_mixture_rule():
    mix = _atom_plus_uniform()
    # degenerate discrete part contributes 0; continuous part contributes
    # its weighted IQrR: (1/3) * (1/2) = 1/6
    assert rho_tilde_mixture(mix) == pytest.approx(1.0 / 6.0, abs=1e-15)
    with pytest.raises(MixtureStructureError):
        rho_tilde(mix)


def test_rho_tilde_mixture_nondegenerate_discrete():
    mix = laws.mixture([(0.5, laws.discrete_uniform(4, 1.0)),
                        (0.5, laws.Gaussian(a=1.0))])
    expected = 0.5 * 0.5 + 0.5 * iqrr(laws.Gaussian(a=1.0))
    assert rho_tilde_mixture(mix) == pytest.approx(expected, rel=1e-12)


def test_rho_tilde_mixture_structure_errors():
    two_cont = laws.mixture([(0.5, laws.Uniform(a=1.0)),
                             (0.5, laws.Gaussian(a=1.0))])
    with pytest.raises(MixtureStructureError):
        rho_tilde_mixture(two_cont)


def test_mixture_quantile_general_inversion():
    mix = laws.mixture([(0.3, laws.Uniform(a=1.0)),
                        (0.7, laws.Gaussian(a=1.0))])
    for p in [0.05, 0.3, 0.5, 0.8, 0.95]:
        x = quantile(mix, p)
        assert laws.cdf(mix, x) == pytest.approx(p, abs=1e-10)


def test_quantile_profile():
    smooth = quantile_profile(laws.Gaussian(a=1.0))
    assert smooth.breakpoints == ()
    assert smooth.evaluate(0.5) == pytest.approx(0.0, abs=1e-14)
    jumpy = quantile_profile(laws.explicit((0.0, 1.0), (0.25, 0.75)))
    assert jumpy.breakpoints == (0.25,)
    assert jumpy.evaluate(0.25) == 0.0
    assert jumpy.evaluate(0.3) == 1.0
    mixed = quantile_profile(_atom_plus_uniform())
    assert mixed.breakpoints == (pytest.approx(1.0 / 6.0),
                                 pytest.approx(5.0 / 6.0))
