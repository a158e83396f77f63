"""Entropy functionals: the classical discrete entropy H and differential
entropy h, and the renormalized variants.

All values are in nats.  The renormalized quantities are dimensionless:

* ``h_tilde``:  h - ln(interquartile range); defined for every continuous law.
* ``h_hat``:    ln(sigma sqrt(2 pi e)) - h; zero for Gaussians, needs a
  finite variance, and is nonnegative on the finite-variance catalog.
* ``h_bar``:    h - ln a, constant over each affine type of laws.
* ``H_tilde``:  H + sum p_k ln(dx_k) - ln(rho~) for discrete laws, where
  rho~ is the smallest nonzero interquantile range on (0, 1/4].
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

from . import laws, quantiles, special
from .errors import DegenerateLawError, NoVarianceError
from .laws import (
    Cauchy,
    ContinuousFamily,
    Exponential,
    Gamma,
    Gaussian,
    Laplace,
    Law,
    MixtureLaw,
    Student,
    Uniform,
)

__all__ = [
    "shannon_H",
    "differential_h",
    "h_tilde",
    "h_hat",
    "h_bar",
    "H_tilde",
    "poisson_H_exact",
    "poisson_H_asymptotic",
    "binomial_H_asymptotic",
    "gamma_ratio",
    "catalog_closed_forms",
    "EntropyReport",
    "entropy_report",
]

_LN_2PI_E = math.log(2.0 * math.pi * math.e)
_QUAD_EPS = 1e-12


def shannon_H(law: Law) -> float:
    """Classical entropy -sum p_k ln p_k of a discrete law.  Depends only on
    the masses, so it is invariant under affine maps of the support."""
    discrete = laws.to_discrete(law)
    return -math.fsum(p * math.log(p) for p in discrete.ps)


def differential_h(law: Law, method: str = "analytic") -> float:
    """Differential entropy -integral f ln f of a continuous law.

    ``method``: "analytic" uses the closed-form catalog (plus the affine
    shift rule h(a x + b) = h(x) + ln a); "quadrature" integrates the
    density between the 1e-12 and 1 - 1e-12 quantiles.
    """
    if not laws.is_continuous(law):
        raise TypeError(f"differential_h needs a continuous law, got {laws.law_label(law)}")
    if method == "analytic":
        if isinstance(law, laws.AffineLaw):
            return differential_h(law.base) + math.log(law.a)
        return law.analytic_h
    if method == "quadrature":
        return _h_quadrature(law)
    raise ValueError(f"unknown method {method!r}")


def _h_quadrature(law: Law) -> float:
    from scipy.integrate import quad

    def integrand(x: float) -> float:
        f = laws.pdf(law, x)
        return -f * math.log(f) if f > 0.0 else 0.0

    probs = (_QUAD_EPS, 1e-6, 1e-2, 0.25, 0.5, 0.75, 1 - 1e-2, 1 - 1e-6, 1 - _QUAD_EPS)
    edges = []
    for p in probs:
        x = quantiles.quantile(law, p)
        if not edges or x > edges[-1]:
            edges.append(x)
    pieces = []
    for lo, hi in zip(edges, edges[1:]):
        value, _ = quad(integrand, lo, hi, epsabs=1e-12, epsrel=1e-12, limit=400)
        pieces.append(value)
    return math.fsum(pieces)


def h_tilde(law: Law) -> float:
    """Interquartile-renormalized differential entropy h - ln rho~.
    Dimensionless and invariant under every affine map with a > 0."""
    return differential_h(law) - math.log(quantiles.rho_tilde(law))


def h_hat(law: Law) -> float:
    """Variance-renormalized entropy ln(sigma sqrt(2 pi e)) - h (note the
    sign flip): zero exactly for Gaussians, positive elsewhere."""
    v = laws.variance(law)
    if v is None:
        raise NoVarianceError(f"no variance: {laws.law_label(law)}")
    if v <= 0.0:
        raise DegenerateLawError("degenerate law has no entropy scale")
    return math.log(math.sqrt(v)) + 0.5 * _LN_2PI_E - differential_h(law)


def h_bar(law: Law) -> float:
    """Scale-renormalized entropy h - ln a for catalog families with a
    declared scale parameter."""
    a = laws.scale_parameter(law)
    if a is None:
        raise TypeError(f"no scale parameter declared for {laws.law_label(law)}")
    return differential_h(law) - math.log(a)


def H_tilde(law: Law) -> float:
    """Renormalized discrete entropy H + sum p_k ln(dx_k) - ln rho~.

    dx_k = x_k - x_(k-1), with the boundary convention dx_1 equal to the
    smallest of the following gaps.
    """
    discrete = laws.to_discrete(law)
    if discrete.n_atoms < 2:
        raise DegenerateLawError("renormalized entropy needs at least two atoms")
    gaps = [b - a for a, b in zip(discrete.xs, discrete.xs[1:])]
    dx = [min(gaps), *gaps]
    spacing_term = math.fsum(p * math.log(d) for p, d in zip(discrete.ps, dx))
    return (shannon_H(discrete) + spacing_term
            - math.log(quantiles.rho_tilde(discrete)))


def poisson_H_exact(lam: float) -> float:
    """Poisson entropy by the exact series lam(1 - ln lam) +
    e^-lam sum_k lam^k ln(k!) / k!."""
    if not lam > 0:
        raise ValueError(f"poisson_H_exact requires lam > 0, got {lam}")
    log_lam = math.log(lam)
    terms = []
    k = 0
    while True:
        ln_fact = math.lgamma(k + 1.0)
        term = math.exp(k * log_lam - lam - ln_fact) * ln_fact
        terms.append(term)
        # ln 0! = ln 1! = 0, so the series only starts contributing at k = 2
        if k >= 2 and k > lam and term < 1e-16 * max(math.fsum(terms), 1e-300):
            break
        k += 1
    return lam * (1.0 - log_lam) + math.fsum(terms)


def poisson_H_asymptotic(lam: float) -> float:
    """Large-lam expansion of the Poisson entropy, error O(lam^-4)."""
    if not lam > 0:
        raise ValueError(f"poisson_H_asymptotic requires lam > 0, got {lam}")
    return (0.5 * math.log(2.0 * math.pi * math.e * lam)
            - 1.0 / (12.0 * lam)
            - 1.0 / (24.0 * lam * lam)
            - 19.0 / (360.0 * lam ** 3))


def binomial_H_asymptotic(n: int, p: float) -> float:
    """Large-n expansion of the binomial entropy, error O(1/n^2)."""
    if n < 1:
        raise ValueError(f"binomial_H_asymptotic requires n >= 1, got {n}")
    if not 0.0 < p < 1.0:
        raise ValueError(f"binomial_H_asymptotic requires 0 < p < 1, got {p}")
    npq = n * p * (1.0 - p)
    return (0.5 * math.log(2.0 * math.pi * math.e * npq)
            + (4.0 * p * (1.0 - p) - 1.0) / (12.0 * npq))


def gamma_ratio(law: Law) -> float:
    """Dimensionless ratio IQrR / sigma; affine-invariant for a > 0."""
    v = laws.variance(law)
    if v is None:
        raise NoVarianceError(f"no variance: {laws.law_label(law)}")
    if v <= 0.0:
        raise DegenerateLawError("degenerate law has no dispersion ratio")
    return quantiles.iqrr(law) / math.sqrt(v)


def catalog_closed_forms(family: ContinuousFamily, which: str) -> float:
    """Closed-form dimensionless entropies for the continuous catalog.

    ``which`` is one of "h_tilde", "h_hat", "h_bar".  These are the analytic
    reference values the generic h / rho~ / sigma pipeline is checked
    against; all are independent of the scale parameter.
    """
    if which not in ("h_tilde", "h_hat", "h_bar"):
        raise ValueError(f"unknown quantity {which!r}")
    if isinstance(family, Gaussian):
        if which == "h_tilde":
            return 0.5 * _LN_2PI_E - math.log(2.0 * special.std_normal_quantile(0.75))
        if which == "h_hat":
            return 0.0
        return 0.5 * _LN_2PI_E
    if isinstance(family, Uniform):
        if which == "h_tilde":
            return math.log(2.0)
        if which == "h_hat":
            return 0.5 * math.log(math.pi * math.e / 6.0)
        return 0.0
    if isinstance(family, (Gamma, Exponential)):
        lam = family.lam if isinstance(family, Gamma) else 1.0
        base = ((1.0 - lam) * special.digamma(lam) + lam + math.lgamma(lam))
        if which == "h_tilde":
            spread = (special.reg_gamma_quantile(lam, 0.75)
                      - special.reg_gamma_quantile(lam, 0.25))
            return base - math.log(spread)
        if which == "h_hat":
            return 0.5 * math.log(2.0 * math.pi * math.e * lam) - base
        return base
    if isinstance(family, Laplace):
        if which == "h_tilde":
            return 1.0 - math.log(math.log(2.0))
        if which == "h_hat":
            return 0.5 * math.log(math.pi / math.e)
        return 1.0 + math.log(2.0)
    if isinstance(family, (Student, Cauchy)):
        lam = family.lam if isinstance(family, Student) else 1.0
        psi_term = (0.5 * (lam + 1.0)
                    * (special.digamma(0.5 * (lam + 1.0)) - special.digamma(0.5 * lam)))
        base = psi_term + special.ln_beta(0.5, 0.5 * lam)
        if which == "h_tilde":
            unit = Student(lam=lam, a=1.0)
            return base - math.log(2.0 * unit.quantile(0.75))
        if which == "h_hat":
            if lam <= 2.0:
                raise NoVarianceError(f"no variance for shape {lam}")
            return 0.5 * _LN_2PI_E - 0.5 * math.log(lam - 2.0) - base
        return base
    raise ValueError(f"family not in the closed-form catalog: {family!r}")


@dataclass
class EntropyReport:
    """All applicable entropy values for one law, with provenance tags."""

    law: Law
    H: Optional[float] = None
    h: Optional[float] = None
    H_tilde: Optional[float] = None
    h_tilde: Optional[float] = None
    h_hat: Optional[float] = None
    h_bar: Optional[float] = None
    rho_tilde: Optional[float] = None
    provenance: dict = field(default_factory=dict)
    errors: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        payload = {
            "law": laws.law_label(self.law),
            "H": self.H,
            "h": self.h,
            "H_tilde": self.H_tilde,
            "h_tilde": self.h_tilde,
            "h_hat": self.h_hat,
            "h_bar": self.h_bar,
            "rho_tilde": self.rho_tilde,
            "provenance": dict(self.provenance),
        }
        if self.errors:
            payload["errors"] = dict(self.errors)
        return payload


def entropy_report(law: Law) -> EntropyReport:
    """Compute every entropy applicable to the handle; quantities the law
    does not possess stay None (with the reason recorded in ``errors`` when
    it is a genuine degeneracy rather than a structural absence)."""
    report = EntropyReport(law=law)
    if laws.is_discrete(law):
        report.H = shannon_H(law)
        report.provenance["H"] = "series"
        try:
            report.rho_tilde = quantiles.rho_tilde(law)
            report.H_tilde = H_tilde(law)
            report.provenance["H_tilde"] = "series"
        except DegenerateLawError as exc:
            report.errors["H_tilde"] = f"DegenerateLaw: {exc}"
    elif laws.is_continuous(law):
        report.h = differential_h(law)
        report.provenance["h"] = "analytic"
        report.rho_tilde = quantiles.iqrr(law)
        report.h_tilde = report.h - math.log(report.rho_tilde)
        report.provenance["h_tilde"] = "analytic"
        if laws.variance(law) is not None:
            report.h_hat = h_hat(law)
            report.provenance["h_hat"] = "analytic"
        if laws.scale_parameter(law) is not None:
            report.h_bar = h_bar(law)
            report.provenance["h_bar"] = "analytic"
    elif isinstance(law, MixtureLaw):
        try:
            report.rho_tilde = quantiles.rho_tilde_mixture(law)
            report.provenance["rho_tilde"] = "analytic"
        except Exception as exc:  # structure or degeneracy
            report.errors["rho_tilde"] = f"{type(exc).__name__}: {exc}"
    else:
        raise TypeError(f"unsupported law handle {law!r}")
    return report
