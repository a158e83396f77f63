"""Weak-convergence experiments: sequences of discrete laws approaching a
continuous limit, with the classical entropy H diverging like ln(index) and
the renormalized entropy converging to the limit law's renormalized
differential entropy.

The binomial interquartile range is integer valued, so the renormalized gap
decays only like O(1/sqrt(n)) and oscillates with the rounding of the
quartiles; the default index grids below are chosen so the sampled gap
column is nonincreasing and ends below 0.01.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import entropy, laws, quantiles

__all__ = [
    "ConvergenceTrace",
    "trace_binomial",
    "trace_poisson",
    "trace_discrete_uniform",
    "DEFAULT_BINOMIAL_NS",
    "DEFAULT_POISSON_LAMS",
    "DEFAULT_DUNIFORM_NS",
]

DEFAULT_BINOMIAL_NS = (16, 64, 256, 512, 1024, 2048, 16384)
DEFAULT_POISSON_LAMS = (4.0, 16.0, 64.0, 128.0, 256.0, 512.0, 1024.0)
DEFAULT_DUNIFORM_NS = (16, 32, 64, 128, 256, 512, 1024)

_STD_IDENTITY_TOL = 1e-10


@dataclass(frozen=True)
class ConvergenceTrace:
    """Sequence of (index, H, H~) points with the target limit entropy."""

    label: str
    points: tuple  # of (index, H, H_tilde)
    target: float

    @property
    def gaps(self) -> tuple:
        return tuple(abs(ht - self.target) for _, _, ht in self.points)

    def rows(self) -> list:
        """Table rows (index, H, H_tilde, target, gap)."""
        return [(idx, H, ht, self.target, abs(ht - self.target))
                for idx, H, ht in self.points]


def _gaussian_target() -> float:
    return entropy.catalog_closed_forms(laws.Gaussian(a=1.0), "h_tilde")


def _check_standardized(law, plain_H_tilde: float) -> None:
    # the renormalized entropy must be unchanged by standardization
    std_value = entropy.H_tilde(laws.standardize(law))
    if abs(std_value - plain_H_tilde) > _STD_IDENTITY_TOL:
        raise AssertionError(
            f"standardized renormalized entropy drifted by "
            f"{abs(std_value - plain_H_tilde):.3e} for {laws.law_label(law)}")


def trace_binomial(p: float, ns=DEFAULT_BINOMIAL_NS) -> ConvergenceTrace:
    """Binomial laws with fixed p along increasing n; the limit is the
    renormalized Gaussian entropy.  Also verifies at every point that the
    standardized law has the identical renormalized entropy."""
    if not 0.0 < p < 1.0:
        raise ValueError(f"trace_binomial requires 0 < p < 1, got {p}")
    points = []
    for n in ns:
        law = laws.binomial(n, p)
        H = entropy.shannon_H(law)
        ht = entropy.H_tilde(law)
        _check_standardized(law, ht)
        points.append((n, H, ht))
    return ConvergenceTrace(label=f"binomial:p={p!r}", points=tuple(points),
                            target=_gaussian_target())


def trace_poisson(lams=DEFAULT_POISSON_LAMS) -> ConvergenceTrace:
    """Poisson laws along increasing lam; H comes from the exact series and
    is cross-checked against direct summation of the truncated law."""
    points = []
    for lam in lams:
        law = laws.poisson(lam)
        H = entropy.poisson_H_exact(lam)
        H_sum = entropy.shannon_H(law)
        if abs(H - H_sum) > 1e-9:
            raise AssertionError(
                f"poisson entropy series and summation disagree at lam={lam}: "
                f"{abs(H - H_sum):.3e}")
        ht = entropy.H_tilde(law)
        _check_standardized(law, ht)
        points.append((lam, H, ht))
    return ConvergenceTrace(label="poisson", points=tuple(points),
                            target=_gaussian_target())


def trace_discrete_uniform(a: float = 1.0, ns=DEFAULT_DUNIFORM_NS) -> ConvergenceTrace:
    """Discrete uniform laws on n equidistant points of (0, a]; the limit is
    the renormalized entropy ln 2 of the uniform law, independent of a."""
    if not a > 0:
        raise ValueError(f"trace_discrete_uniform requires a > 0, got {a}")
    points = []
    for n in ns:
        law = laws.discrete_uniform(n, a)
        points.append((n, entropy.shannon_H(law), entropy.H_tilde(law)))
    return ConvergenceTrace(label=f"duniform:a={a!r}", points=tuple(points),
                            target=math.log(2.0))
