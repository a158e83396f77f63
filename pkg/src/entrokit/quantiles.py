"""Quantile function with jump/flat-spot semantics, interquantile ranges and
the renormalization scale selection rules.

The quantile is the generalized inverse Q(p) = inf{x : p <= F(x)}.  It jumps
where the CDF has flat spots and is flat where the CDF jumps; for a discrete
law a probability exactly equal to a cumulative mass c_k resolves to x_k.
"""

from __future__ import annotations

import math
from bisect import bisect_left
from dataclasses import dataclass
from typing import Callable, Optional

from . import laws
from .errors import DegenerateLawError, MixtureStructureError
from .laws import AffineLaw, DiscreteLaw, Law, MixtureLaw

__all__ = [
    "QuantileProfile",
    "quantile",
    "iqnr",
    "iqrr",
    "rho_tilde",
    "rho_tilde_mixture",
    "quantile_profile",
]


def quantile(law: Law, p: float) -> float:
    """Generalized inverse CDF at probability p in (0, 1)."""
    if not 0.0 < p < 1.0:
        raise ValueError(f"quantile requires 0 < p < 1, got {p}")
    return _quantile(law, p)


def _quantile(law: Law, p: float) -> float:
    if isinstance(law, DiscreteLaw):
        cum = law.cumulative
        idx = bisect_left(cum, p)
        if idx >= len(cum):
            idx = len(cum) - 1
        return law.xs[idx]
    if isinstance(law, AffineLaw):
        return law.a * _quantile(law.base, p) + law.b
    if isinstance(law, MixtureLaw):
        return _mixture_quantile(law, p)
    return law.quantile(p)


def _continuous_cdf(law: MixtureLaw, x: float) -> float:
    return math.fsum(q * laws.cdf(part, x) for q, part in law.continuous_parts)


def _solve_continuous(law: MixtureLaw, target: float, lo: Optional[float],
                      hi: Optional[float]) -> float:
    """Solve sum_j q_j F_j(x) = target on an atom-free stretch (lo, hi)."""
    parts = law.continuous_parts
    if not parts:
        raise MixtureStructureError("mixture has no continuous part to invert")
    if len(parts) == 1:
        q, part = parts[0]
        return _quantile(part, target / q)
    # several continuous parts: bracketed bisection on the smooth CDF
    total = math.fsum(q for q, _ in parts)
    u = target / total
    u = min(max(u, 1e-15), 1.0 - 1e-15)
    candidates = [_quantile(part, u) for _, part in parts]
    left = lo if lo is not None else min(candidates) - 1.0
    right = hi if hi is not None else max(candidates) + 1.0
    while _continuous_cdf(law, left) > target:
        left -= max(1.0, right - left)
    while _continuous_cdf(law, right) < target:
        right += max(1.0, right - left)
    for _ in range(200):
        mid = 0.5 * (left + right)
        if _continuous_cdf(law, mid) >= target:
            right = mid
        else:
            left = mid
        if right - left <= 1e-15 * max(1.0, abs(right)):
            break
    return right


def _mixture_quantile(law: MixtureLaw, p: float) -> float:
    atoms = law.atoms
    cum_before = 0.0
    prev_atom = None
    for x, w in atoms:
        f_minus = _continuous_cdf(law, x) + cum_before
        if p <= f_minus:
            return _solve_continuous(law, p - cum_before, prev_atom, x)
        if p <= f_minus + w:
            return x
        cum_before += w
        prev_atom = x
    return _solve_continuous(law, p - cum_before, prev_atom, None)


def iqnr(law: Law, p: float) -> float:
    """Interquantile range Q(1-p) - Q(p) for 0 < p < 1/2."""
    if not 0.0 < p < 0.5:
        raise ValueError(f"iqnr requires 0 < p < 1/2, got {p}")
    return _quantile(law, 1.0 - p) - _quantile(law, p)


def iqrr(law: Law) -> float:
    """Interquartile range, the p = 1/4 interquantile range."""
    return iqnr(law, 0.25)


def _discrete_rho_candidates(law: DiscreteLaw) -> list:
    """Values taken by the IQnR on (0, 1/4]: one interior point of each
    constancy interval plus the endpoint 1/4 itself."""
    breakpoints = set()
    for c in law.cumulative[:-1]:
        for b in (c, 1.0 - c):
            if 0.0 < b < 0.25:
                breakpoints.add(b)
    grid = sorted(breakpoints)
    edges = [0.0, *grid, 0.25]
    points = []
    for lo, hi in zip(edges, edges[1:]):
        mid = 0.5 * (lo + hi)
        # lo + hi can underflow for subnormal cumulative masses
        if lo < mid < hi:
            points.append(mid)
    points.append(0.25)
    return [iqnr(law, p) for p in points]


def rho_tilde(law: Law) -> float:
    """Renormalization scale: the IQrR for continuous laws, the smallest
    nonzero IQnR value on (0, 1/4] for discrete laws."""
    if isinstance(law, MixtureLaw):
        raise MixtureStructureError(
            "rho_tilde is defined per component for mixtures; use rho_tilde_mixture")
    if laws.is_continuous(law):
        return iqrr(law)
    discrete = laws.to_discrete(law)
    nonzero = [rho for rho in _discrete_rho_candidates(discrete) if rho > 0.0]
    if not nonzero:
        raise DegenerateLawError(
            "all interquantile ranges vanish: law is concentrated on one point")
    return min(nonzero)


def rho_tilde_mixture(mix: MixtureLaw) -> float:
    """Convex-combination scale q rho_d + (1-q) rho_c for a two-part
    (discrete, continuous) mixture; a degenerate discrete part contributes 0."""
    if not isinstance(mix, MixtureLaw):
        raise MixtureStructureError(f"expected a mixture, got {mix!r}")
    discrete = [(q, law) for q, law in mix.components if isinstance(law, DiscreteLaw)]
    continuous = [(q, law) for q, law in mix.components if not isinstance(law, DiscreteLaw)]
    if len(discrete) != 1 or len(continuous) != 1:
        raise MixtureStructureError(
            "rho_tilde_mixture needs exactly one discrete and one continuous part")
    q, d_law = discrete[0]
    qc, c_law = continuous[0]
    rho_d = 0.0 if d_law.n_atoms == 1 else rho_tilde(d_law)
    rho_c = iqrr(c_law)
    return q * rho_d + qc * rho_c


@dataclass(frozen=True)
class QuantileProfile:
    """Evaluated quantile structure of a law: the probabilities where Q jumps
    or changes slope, plus an evaluator."""

    law: Law
    breakpoints: tuple
    evaluate: Callable[[float], float]


def quantile_profile(law: Law) -> QuantileProfile:
    if laws.is_discrete(law):
        discrete = laws.to_discrete(law)
        breaks = tuple(c for c in discrete.cumulative[:-1] if 0.0 < c < 1.0)
    elif isinstance(law, MixtureLaw):
        breaks = set()
        cum = 0.0
        for x, w in law.atoms:
            lo = _continuous_cdf(law, x) + cum
            cum += w
            breaks.update((lo, lo + w))
        breaks = tuple(sorted(b for b in breaks if 0.0 < b < 1.0))
    else:
        breaks = ()
    return QuantileProfile(law=law, breakpoints=breaks,
                           evaluate=lambda p: quantile(law, p))
