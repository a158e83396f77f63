"""Scalar special functions used by the law catalog.

Everything here is a pure function of its float arguments.  Accuracy targets
are absolute: 1e-12 (or better) on the domains exercised by the catalog.
Log-gamma and the normal CDF come from the C math library; the digamma,
regularized incomplete gamma/beta functions and all the inverses are
implemented locally with classical algorithms (asymptotic series with
recurrence shift, series/continued-fraction split, bracketed safeguarded
Newton).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import RootConvergenceError

__all__ = [
    "SpecialValue",
    "special_value",
    "ln_gamma",
    "digamma",
    "ln_beta",
    "std_normal_cdf",
    "std_normal_quantile",
    "reg_gamma_cdf",
    "reg_gamma_quantile",
    "reg_beta_cdf",
    "reg_beta_quantile",
]

_SQRT2 = math.sqrt(2.0)
_SQRT_2PI = math.sqrt(2.0 * math.pi)


@dataclass(frozen=True)
class SpecialValue:
    """A scalar result together with the absolute error bound it was
    computed to."""

    value: float
    abs_error_bound: float


# Conservative per-function bounds, valid on the catalog domains.
_ERROR_BOUNDS = {
    "ln_gamma": 1e-13,
    "digamma": 1e-13,
    "ln_beta": 1e-13,
    "std_normal_cdf": 1e-15,
    "std_normal_quantile": 1e-13,
    "reg_gamma_cdf": 1e-13,
    "reg_gamma_quantile": 1e-12,
    "reg_beta_cdf": 1e-13,
    "reg_beta_quantile": 1e-12,
}


def special_value(name: str, *args: float) -> SpecialValue:
    """Evaluate the named special function, attaching its error bound."""
    if name not in _ERROR_BOUNDS:
        raise ValueError(f"unknown special function {name!r}")
    fn = globals()[name]
    return SpecialValue(value=fn(*args), abs_error_bound=_ERROR_BOUNDS[name])


def ln_gamma(x: float) -> float:
    """Natural log of the gamma function for x > 0."""
    if x <= 0:
        raise ValueError(f"ln_gamma requires x > 0, got {x}")
    return math.lgamma(x)


def ln_beta(alpha: float, beta: float) -> float:
    """ln B(alpha, beta) = ln G(alpha) + ln G(beta) - ln G(alpha+beta)."""
    if alpha <= 0 or beta <= 0:
        raise ValueError(f"ln_beta requires positive arguments, got ({alpha}, {beta})")
    return math.lgamma(alpha) + math.lgamma(beta) - math.lgamma(alpha + beta)


def digamma(x: float) -> float:
    """Digamma function psi(x) for x > 0.

    Recurrence shift to x >= 10, then the Bernoulli asymptotic series.
    """
    if x <= 0:
        raise ValueError(f"digamma requires x > 0, got {x}")
    acc = 0.0
    while x < 10.0:
        acc -= 1.0 / x
        x += 1.0
    inv = 1.0 / x
    inv2 = inv * inv
    tail = inv2 * (
        1.0 / 12.0
        - inv2 * (
            1.0 / 120.0
            - inv2 * (
                1.0 / 252.0
                - inv2 * (
                    1.0 / 240.0
                    - inv2 * (
                        1.0 / 132.0
                        - inv2 * (691.0 / 32760.0 - inv2 / 12.0)
                    )
                )
            )
        )
    )
    return acc + math.log(x) - 0.5 * inv - tail


def std_normal_cdf(y: float) -> float:
    """Standard normal CDF Phi(y)."""
    return 0.5 * math.erfc(-y / _SQRT2)


# Acklam's rational approximation to the normal quantile, refined below.
_ACKLAM_A = (-3.969683028665376e+01, 2.209460984245205e+02,
             -2.759285104469687e+02, 1.383577518672690e+02,
             -3.066479806614716e+01, 2.506628277459239e+00)
_ACKLAM_B = (-5.447609879822406e+01, 1.615858368580409e+02,
             -1.556989798598866e+02, 6.680131188771972e+01,
             -1.328068155288572e+01)
_ACKLAM_C = (-7.784894002430293e-03, -3.223964580411365e-01,
             -2.400758277161838e+00, -2.549732539343734e+00,
             4.374664141464968e+00, 2.938163982698783e+00)
_ACKLAM_D = (7.784695709041462e-03, 3.224671290700398e-01,
             2.445134137142996e+00, 3.754408661907416e+00)
_ACKLAM_PLOW = 0.02425


def _acklam(p: float) -> float:
    a, b, c, d = _ACKLAM_A, _ACKLAM_B, _ACKLAM_C, _ACKLAM_D
    if p < _ACKLAM_PLOW:
        q = math.sqrt(-2.0 * math.log(p))
        return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) / \
               ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0)
    if p > 1.0 - _ACKLAM_PLOW:
        q = math.sqrt(-2.0 * math.log(1.0 - p))
        return -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) / \
               ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0)
    q = p - 0.5
    r = q * q
    return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q / \
           (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0)


def std_normal_quantile(p: float) -> float:
    """Inverse of the standard normal CDF for 0 < p < 1."""
    if not 0.0 < p < 1.0:
        raise ValueError(f"std_normal_quantile requires 0 < p < 1, got {p}")
    y = _acklam(p)
    # One Halley step drives the residual to machine level.
    err = std_normal_cdf(y) - p
    u = err * _SQRT_2PI * math.exp(0.5 * y * y)
    if math.isfinite(u):
        y -= u / (1.0 + 0.5 * y * u)
    return y


def _gamma_series(lam: float, y: float) -> float:
    # Lower regularized gamma by power series; good for y < lam + 1.
    ap = lam
    term = 1.0 / lam
    total = term
    for _ in range(10_000):
        ap += 1.0
        term *= y / ap
        total += term
        if abs(term) < abs(total) * 1e-17:
            break
    else:
        raise RootConvergenceError(f"incomplete gamma series stalled at lam={lam}, y={y}")
    log_val = lam * math.log(y) - y - math.lgamma(lam)
    return total * math.exp(log_val)


def _gamma_cont_frac(lam: float, y: float) -> float:
    # Upper regularized gamma by modified Lentz continued fraction.
    tiny = 1e-300
    b = y + 1.0 - lam
    c = 1.0 / tiny
    d = 1.0 / b if b != 0 else 1.0 / tiny
    h = d
    for i in range(1, 10_000):
        an = -i * (i - lam)
        b += 2.0
        d = an * d + b
        if abs(d) < tiny:
            d = tiny
        c = b + an / c
        if abs(c) < tiny:
            c = tiny
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < 1e-17:
            break
    else:
        raise RootConvergenceError(f"incomplete gamma CF stalled at lam={lam}, y={y}")
    log_val = lam * math.log(y) - y - math.lgamma(lam)
    return h * math.exp(log_val)


def reg_gamma_cdf(lam: float, y: float) -> float:
    """Lower regularized incomplete gamma P(lam, y), i.e. the CDF of a
    standard (unit scale) gamma law with shape lam."""
    if lam <= 0:
        raise ValueError(f"reg_gamma_cdf requires lam > 0, got {lam}")
    if y < 0:
        raise ValueError(f"reg_gamma_cdf requires y >= 0, got {y}")
    if y == 0.0:
        return 0.0
    if y < lam + 1.0:
        p = _gamma_series(lam, y)
    else:
        p = 1.0 - _gamma_cont_frac(lam, y)
    return min(1.0, max(0.0, p))


def reg_gamma_quantile(lam: float, p: float) -> float:
    """Inverse of reg_gamma_cdf in y, resolved by bracketed Newton."""
    if lam <= 0:
        raise ValueError(f"reg_gamma_quantile requires lam > 0, got {lam}")
    if not 0.0 < p < 1.0:
        raise ValueError(f"reg_gamma_quantile requires 0 < p < 1, got {p}")
    # Wilson-Hilferty starting point; series inversion when it collapses.
    z = std_normal_quantile(p)
    t = 1.0 - 1.0 / (9.0 * lam) + z / (3.0 * math.sqrt(lam))
    if t > 0.03:
        y = lam * t ** 3
    else:
        y = math.exp((math.log(p) + math.lgamma(lam + 1.0)) / lam)
    y = max(y, 1e-300)

    lo, hi = 0.0, y
    for _ in range(200):
        if reg_gamma_cdf(lam, hi) >= p:
            break
        lo = hi
        hi *= 2.0
    else:
        raise RootConvergenceError(f"no upper bracket for gamma quantile lam={lam}, p={p}")
    if not lo < y < hi:
        y = 0.5 * (lo + hi)

    log_gamma_lam = math.lgamma(lam)
    residual = math.inf
    for _ in range(200):
        residual = reg_gamma_cdf(lam, y) - p
        if residual >= 0:
            hi = min(hi, y)
        else:
            lo = max(lo, y)
        if abs(residual) < 1e-15:
            return y
        density = math.exp((lam - 1.0) * math.log(y) - y - log_gamma_lam) if y > 0 else 0.0
        if density > 0 and math.isfinite(density):
            y_new = y - residual / density
        else:
            y_new = 0.5 * (lo + hi)
        if not lo < y_new < hi:
            y_new = 0.5 * (lo + hi)
        if y_new == y:
            break
        y = y_new
    if abs(residual) <= 1e-12:
        return y
    raise RootConvergenceError(
        f"gamma quantile did not converge: lam={lam}, p={p}, residual={residual:.3e}")


def _beta_cont_frac(a: float, b: float, x: float) -> float:
    tiny = 1e-300
    qab = a + b
    qap = a + 1.0
    qam = a - 1.0
    c = 1.0
    d = 1.0 - qab * x / qap
    if abs(d) < tiny:
        d = tiny
    d = 1.0 / d
    h = d
    for m in range(1, 10_000):
        m2 = 2 * m
        aa = m * (b - m) * x / ((qam + m2) * (a + m2))
        d = 1.0 + aa * d
        if abs(d) < tiny:
            d = tiny
        c = 1.0 + aa / c
        if abs(c) < tiny:
            c = tiny
        d = 1.0 / d
        h *= d * c
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2))
        d = 1.0 + aa * d
        if abs(d) < tiny:
            d = tiny
        c = 1.0 + aa / c
        if abs(c) < tiny:
            c = tiny
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < 1e-17:
            return h
    raise RootConvergenceError(f"incomplete beta CF stalled at a={a}, b={b}, x={x}")


def reg_beta_cdf(alpha: float, beta: float, t: float) -> float:
    """Regularized incomplete beta I_t(alpha, beta) on t in [0, 1]."""
    if alpha <= 0 or beta <= 0:
        raise ValueError(f"reg_beta_cdf requires positive shapes, got ({alpha}, {beta})")
    if not 0.0 <= t <= 1.0:
        raise ValueError(f"reg_beta_cdf requires t in [0, 1], got {t}")
    if t == 0.0:
        return 0.0
    if t == 1.0:
        return 1.0
    log_front = (math.lgamma(alpha + beta) - math.lgamma(alpha) - math.lgamma(beta)
                 + alpha * math.log(t) + beta * math.log1p(-t))
    front = math.exp(log_front)
    if t < (alpha + 1.0) / (alpha + beta + 2.0):
        val = front * _beta_cont_frac(alpha, beta, t) / alpha
    else:
        val = 1.0 - front * _beta_cont_frac(beta, alpha, 1.0 - t) / beta
    return min(1.0, max(0.0, val))


def reg_beta_quantile(alpha: float, beta: float, p: float) -> float:
    """Inverse of reg_beta_cdf in t, resolved by bracketed Newton on [0, 1]."""
    if alpha <= 0 or beta <= 0:
        raise ValueError(f"reg_beta_quantile requires positive shapes, got ({alpha}, {beta})")
    if not 0.0 < p < 1.0:
        raise ValueError(f"reg_beta_quantile requires 0 < p < 1, got {p}")
    lo, hi = 0.0, 1.0
    t = alpha / (alpha + beta)
    log_b = ln_beta(alpha, beta)
    residual = math.inf
    for _ in range(300):
        residual = reg_beta_cdf(alpha, beta, t) - p
        if residual >= 0:
            hi = min(hi, t)
        else:
            lo = max(lo, t)
        if abs(residual) < 1e-15:
            return t
        if 0.0 < t < 1.0:
            density = math.exp((alpha - 1.0) * math.log(t)
                               + (beta - 1.0) * math.log1p(-t) - log_b)
        else:
            density = 0.0
        if density > 0 and math.isfinite(density):
            t_new = t - residual / density
        else:
            t_new = 0.5 * (lo + hi)
        if not lo < t_new < hi:
            t_new = 0.5 * (lo + hi)
        if t_new == t:
            break
        t = t_new
    if abs(residual) <= 1e-12:
        return t
    raise RootConvergenceError(
        f"beta quantile did not converge: a={alpha}, b={beta}, p={p}, residual={residual:.3e}")
