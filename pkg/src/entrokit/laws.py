"""Law catalog: continuous families, discrete laws, affine transforms and
discrete-continuous mixtures behind one handle.

Every handle is immutable.  Continuous families expose ``pdf``, ``cdf``,
``quantile``, ``mean``, ``variance`` (``None`` when it does not exist),
``scale`` and the closed-form differential entropy ``analytic_h``.  The
module-level generics (:func:`cdf`, :func:`pdf`, :func:`variance`,
:func:`mean`, ...) dispatch over all handle kinds.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from itertools import accumulate
from typing import Optional, Union

from . import special
from .errors import (
    DegenerateLawError,
    LawSpecError,
    MixtureStructureError,
    NoVarianceError,
)

_LN_2PI_E = math.log(2.0 * math.pi * math.e)
_MASS_TOL = 1e-12
_POISSON_TAIL = 1e-15


# ---------------------------------------------------------------------------
# continuous families
# ---------------------------------------------------------------------------

def _check_scale(a: float) -> None:
    if not a > 0:
        raise ValueError(f"scale parameter must be positive, got {a}")


@dataclass(frozen=True)
class Gaussian:
    """Centered Gaussian with standard deviation a."""

    a: float = 1.0

    def __post_init__(self):
        _check_scale(self.a)

    def pdf(self, x: float) -> float:
        z = x / self.a
        return math.exp(-0.5 * z * z) / (self.a * math.sqrt(2.0 * math.pi))

    def cdf(self, x: float) -> float:
        return special.std_normal_cdf(x / self.a)

    def quantile(self, p: float) -> float:
        return self.a * special.std_normal_quantile(p)

    @property
    def mean(self) -> float:
        return 0.0

    @property
    def variance(self) -> float:
        return self.a * self.a

    @property
    def scale(self) -> float:
        return self.a

    @property
    def analytic_h(self) -> float:
        return math.log(self.a) + 0.5 * _LN_2PI_E


@dataclass(frozen=True)
class Uniform:
    """Uniform on [0, a]."""

    a: float = 1.0

    def __post_init__(self):
        _check_scale(self.a)

    def pdf(self, x: float) -> float:
        return 1.0 / self.a if 0.0 <= x <= self.a else 0.0

    def cdf(self, x: float) -> float:
        if x <= 0.0:
            return 0.0
        if x >= self.a:
            return 1.0
        return x / self.a

    def quantile(self, p: float) -> float:
        return self.a * p

    @property
    def mean(self) -> float:
        return 0.5 * self.a

    @property
    def variance(self) -> float:
        return self.a * self.a / 12.0

    @property
    def scale(self) -> float:
        return self.a

    @property
    def analytic_h(self) -> float:
        return math.log(self.a)


@dataclass(frozen=True)
class Gamma:
    """Gamma law with shape lam and scale a, supported on x > 0."""

    lam: float
    a: float = 1.0

    def __post_init__(self):
        _check_scale(self.a)
        if not self.lam > 0:
            raise ValueError(f"gamma shape must be positive, got {self.lam}")

    def pdf(self, x: float) -> float:
        if x <= 0.0:
            return 0.0
        y = x / self.a
        return math.exp((self.lam - 1.0) * math.log(y) - y
                        - math.lgamma(self.lam)) / self.a

    def cdf(self, x: float) -> float:
        if x <= 0.0:
            return 0.0
        return special.reg_gamma_cdf(self.lam, x / self.a)

    def quantile(self, p: float) -> float:
        return self.a * special.reg_gamma_quantile(self.lam, p)

    @property
    def mean(self) -> float:
        return self.lam * self.a

    @property
    def variance(self) -> float:
        return self.lam * self.a * self.a

    @property
    def scale(self) -> float:
        return self.a

    @property
    def analytic_h(self) -> float:
        lam = self.lam
        return ((1.0 - lam) * special.digamma(lam) + lam
                + math.log(self.a) + math.lgamma(lam))


@dataclass(frozen=True)
class Exponential:
    """Exponential with scale a (the lam = 1 gamma law)."""

    a: float = 1.0

    def __post_init__(self):
        _check_scale(self.a)

    def pdf(self, x: float) -> float:
        return math.exp(-x / self.a) / self.a if x >= 0.0 else 0.0

    def cdf(self, x: float) -> float:
        return -math.expm1(-x / self.a) if x > 0.0 else 0.0

    def quantile(self, p: float) -> float:
        return -self.a * math.log1p(-p)

    @property
    def mean(self) -> float:
        return self.a

    @property
    def variance(self) -> float:
        return self.a * self.a

    @property
    def scale(self) -> float:
        return self.a

    @property
    def analytic_h(self) -> float:
        return 1.0 + math.log(self.a)


@dataclass(frozen=True)
class Laplace:
    """Centered Laplace with scale a."""

    a: float = 1.0

    def __post_init__(self):
        _check_scale(self.a)

    def pdf(self, x: float) -> float:
        return math.exp(-abs(x) / self.a) / (2.0 * self.a)

    def cdf(self, x: float) -> float:
        if x < 0.0:
            return 0.5 * math.exp(x / self.a)
        return 1.0 - 0.5 * math.exp(-x / self.a)

    def quantile(self, p: float) -> float:
        if p < 0.5:
            return self.a * math.log(2.0 * p)
        return -self.a * math.log(2.0 * (1.0 - p))

    @property
    def mean(self) -> float:
        return 0.0

    @property
    def variance(self) -> float:
        return 2.0 * self.a * self.a

    @property
    def scale(self) -> float:
        return self.a

    @property
    def analytic_h(self) -> float:
        return 1.0 + math.log(2.0 * self.a)


@dataclass(frozen=True)
class Student:
    """Student law with shape lam > 0 and scale a.

    Density proportional to (a^2 / (a^2 + x^2))^((lam+1)/2); this is the
    classical t law with lam degrees of freedom rescaled by a / sqrt(lam).
    """

    lam: float
    a: float = 1.0

    def __post_init__(self):
        _check_scale(self.a)
        if not self.lam > 0:
            raise ValueError(f"student shape must be positive, got {self.lam}")

    def pdf(self, x: float) -> float:
        a2 = self.a * self.a
        log_core = 0.5 * (self.lam + 1.0) * math.log(a2 / (a2 + x * x))
        return math.exp(log_core - special.ln_beta(0.5, 0.5 * self.lam)) / self.a

    def cdf(self, x: float) -> float:
        a2 = self.a * self.a
        w = a2 / (a2 + x * x)
        half_tail = 0.5 * special.reg_beta_cdf(0.5 * self.lam, 0.5, w)
        return 1.0 - half_tail if x >= 0.0 else half_tail

    def quantile(self, p: float) -> float:
        if p == 0.5:
            return 0.0
        tail = 2.0 * (1.0 - p) if p > 0.5 else 2.0 * p
        w = special.reg_beta_quantile(0.5 * self.lam, 0.5, tail)
        mag = self.a * math.sqrt((1.0 - w) / w)
        return mag if p > 0.5 else -mag

    @property
    def mean(self) -> Optional[float]:
        return 0.0 if self.lam > 1.0 else None

    @property
    def variance(self) -> Optional[float]:
        if self.lam > 2.0:
            return self.a * self.a / (self.lam - 2.0)
        return None

    @property
    def scale(self) -> float:
        return self.a

    @property
    def analytic_h(self) -> float:
        lam = self.lam
        return (0.5 * (lam + 1.0)
                * (special.digamma(0.5 * (lam + 1.0)) - special.digamma(0.5 * lam))
                + math.log(self.a) + special.ln_beta(0.5, 0.5 * lam))


@dataclass(frozen=True)
class Cauchy:
    """Centered Cauchy with scale a (the lam = 1 Student law)."""

    a: float = 1.0

    def __post_init__(self):
        _check_scale(self.a)

    def pdf(self, x: float) -> float:
        return self.a / (math.pi * (self.a * self.a + x * x))

    def cdf(self, x: float) -> float:
        return 0.5 + math.atan(x / self.a) / math.pi

    def quantile(self, p: float) -> float:
        return self.a * math.tan(math.pi * (p - 0.5))

    @property
    def mean(self) -> None:
        return None

    @property
    def variance(self) -> None:
        return None

    @property
    def scale(self) -> float:
        return self.a

    @property
    def analytic_h(self) -> float:
        return math.log(4.0 * math.pi * self.a)


ContinuousFamily = Union[Gaussian, Uniform, Gamma, Exponential, Laplace, Student, Cauchy]

_CONTINUOUS_TYPES = (Gaussian, Uniform, Gamma, Exponential, Laplace, Student, Cauchy)


# ---------------------------------------------------------------------------
# discrete laws
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DiscreteLaw:
    """Finite discrete law: strictly increasing atoms with positive masses.

    ``mean_value`` / ``sigma_value`` carry the family-exact moments when the
    law was built by a catalog factory (used for standardization); otherwise
    moments are computed from the atoms.
    """

    xs: tuple
    ps: tuple
    label: str = "explicit"
    mean_value: Optional[float] = None
    sigma_value: Optional[float] = None

    def __post_init__(self):
        if len(self.xs) != len(self.ps) or not self.xs:
            raise ValueError("discrete law needs matching, non-empty atoms and masses")
        if any(p <= 0 for p in self.ps):
            raise ValueError("discrete masses must be positive (zero atoms are dropped)")
        if any(b <= a for a, b in zip(self.xs, self.xs[1:])):
            raise ValueError("discrete support must be strictly increasing")
        total = math.fsum(self.ps)
        if abs(total - 1.0) > _MASS_TOL:
            raise ValueError(f"discrete masses must sum to 1, got {total!r}")

    @cached_property
    def cumulative(self) -> tuple:
        return tuple(accumulate(self.ps))

    def cdf(self, x: float) -> float:
        # right-continuous step function
        count = _bisect_right(self.xs, x)
        return self.cumulative[count - 1] if count else 0.0

    @property
    def mean(self) -> float:
        if self.mean_value is not None:
            return self.mean_value
        return math.fsum(p * x for x, p in zip(self.xs, self.ps))

    @property
    def variance(self) -> float:
        if self.sigma_value is not None:
            return self.sigma_value ** 2
        m = self.mean
        return math.fsum(p * (x - m) ** 2 for x, p in zip(self.xs, self.ps))

    @property
    def n_atoms(self) -> int:
        return len(self.xs)


def _bisect_right(seq, x):
    lo, hi = 0, len(seq)
    while lo < hi:
        mid = (lo + hi) // 2
        if x < seq[mid]:
            hi = mid
        else:
            lo = mid + 1
    return lo


def explicit(xs, ps, label: str = "explicit") -> DiscreteLaw:
    """Discrete law from raw atoms; zero-mass atoms are dropped."""
    pairs = [(float(x), float(p)) for x, p in zip(xs, ps) if p != 0.0]
    return DiscreteLaw(xs=tuple(x for x, _ in pairs),
                       ps=tuple(p for _, p in pairs), label=label)


def degenerate(c: float) -> DiscreteLaw:
    """Law concentrated at a single point."""
    return DiscreteLaw(xs=(float(c),), ps=(1.0,), label=f"degenerate:x={c!r}")


def binomial(n: int, p: float) -> DiscreteLaw:
    """Binomial law on x_k = k with masses C(n, k) p^k (1-p)^(n-k)."""
    if n < 1 or int(n) != n:
        raise ValueError(f"binomial requires integer n >= 1, got {n}")
    if not 0.0 < p < 1.0:
        raise ValueError(f"binomial requires 0 < p < 1, got {p}")
    n = int(n)
    log_p, log_q = math.log(p), math.log1p(-p)
    lg_n1 = math.lgamma(n + 1.0)
    xs, ps = [], []
    for k in range(n + 1):
        log_mass = (lg_n1 - math.lgamma(k + 1.0) - math.lgamma(n - k + 1.0)
                    + k * log_p + (n - k) * log_q)
        mass = math.exp(log_mass)
        if mass > 0.0:
            xs.append(float(k))
            ps.append(mass)
    total = math.fsum(ps)
    if abs(total - 1.0) > 1e-15:
        # mass lost to underflow in the extreme tails (large asymmetric n)
        ps = [mass / total for mass in ps]
    return DiscreteLaw(xs=tuple(xs), ps=tuple(ps),
                       label=f"binomial:n={n},p={p!r}",
                       mean_value=n * p,
                       sigma_value=math.sqrt(n * p * (1.0 - p)))


def poisson(lam: float) -> DiscreteLaw:
    """Poisson law truncated where the tail mass drops below 1e-15."""
    if not lam > 0:
        raise ValueError(f"poisson requires lam > 0, got {lam}")
    log_lam = math.log(lam)

    def log_mass(k: int) -> float:
        return k * log_lam - lam - math.lgamma(k + 1.0)

    # scan upward from the mean for the truncation point K: for K + 2 > lam
    # the tail beyond K is bounded by pmf(K+1) / (1 - lam / (K + 2)).
    k_cut = int(math.ceil(lam)) + 1
    while True:
        bound = math.exp(log_mass(k_cut + 1)) / (1.0 - lam / (k_cut + 2.0))
        if bound < _POISSON_TAIL:
            break
        k_cut += 1
    xs, ps = [], []
    for k in range(k_cut + 1):
        mass = math.exp(log_mass(k))
        if mass > 0.0:
            xs.append(float(k))
            ps.append(mass)
    return DiscreteLaw(xs=tuple(xs), ps=tuple(ps),
                       label=f"poisson:lam={lam!r}",
                       mean_value=lam, sigma_value=math.sqrt(lam))


def discrete_uniform(n: int, a: float) -> DiscreteLaw:
    """Equal masses 1/n on the points k a / n, k = 1..n."""
    if n < 1 or int(n) != n:
        raise ValueError(f"discrete uniform requires integer n >= 1, got {n}")
    _check_scale(a)
    n = int(n)
    xs = tuple(k * a / n for k in range(1, n + 1))
    return DiscreteLaw(xs=xs, ps=(1.0 / n,) * n,
                       label=f"duniform:n={n},a={a!r}")


# ---------------------------------------------------------------------------
# affine transforms and mixtures
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class AffineLaw:
    """The law of y = a x + b for x distributed as ``base`` (a > 0)."""

    base: "Law"
    a: float
    b: float

    def __post_init__(self):
        _check_scale(self.a)


def affine(base: "Law", a: float, b: float) -> "Law":
    """Affine transform, flattening nested transforms."""
    if isinstance(base, AffineLaw):
        return affine(base.base, a * base.a, a * base.b + b)
    if a == 1.0 and b == 0.0:
        return base
    return AffineLaw(base=base, a=float(a), b=float(b))


@dataclass(frozen=True)
class MixtureLaw:
    """Convex combination of discrete and continuous leaves."""

    components: tuple  # of (weight, law) pairs

    def __post_init__(self):
        if not self.components:
            raise ValueError("mixture needs at least one component")
        total = math.fsum(q for q, _ in self.components)
        if abs(total - 1.0) > _MASS_TOL:
            raise ValueError(f"mixture weights must sum to 1, got {total!r}")
        for q, _ in self.components:
            if not 0.0 < q <= 1.0:
                raise ValueError(f"mixture weights must lie in (0, 1], got {q}")

    @cached_property
    def atoms(self) -> tuple:
        """Merged (position, weighted mass) pairs of all discrete parts."""
        merged: dict = {}
        for q, law in self.components:
            if isinstance(law, DiscreteLaw):
                for x, p in zip(law.xs, law.ps):
                    merged[x] = merged.get(x, 0.0) + q * p
        return tuple(sorted(merged.items()))

    @cached_property
    def continuous_parts(self) -> tuple:
        return tuple((q, law) for q, law in self.components
                     if not isinstance(law, DiscreteLaw))


def mixture(components) -> MixtureLaw:
    """Mixture from (weight, law) pairs; nested mixtures are flattened and
    affine-wrapped discrete parts are materialized."""
    flat = []

    def add(q, law):
        if isinstance(law, MixtureLaw):
            for qi, li in law.components:
                add(q * qi, li)
        else:
            law = _materialize_discrete(law)
            if not isinstance(law, (DiscreteLaw, *_CONTINUOUS_TYPES, AffineLaw)):
                raise MixtureStructureError(f"unsupported mixture component {law!r}")
            flat.append((float(q), law))

    for q, law in components:
        add(q, law)
    return MixtureLaw(components=tuple(flat))


def _materialize_discrete(law):
    if isinstance(law, AffineLaw) and isinstance(law.base, DiscreteLaw):
        return to_discrete(law)
    return law


Law = Union[ContinuousFamily, DiscreteLaw, AffineLaw, MixtureLaw]


# ---------------------------------------------------------------------------
# generic operations over handles
# ---------------------------------------------------------------------------

def is_discrete(law: Law) -> bool:
    if isinstance(law, DiscreteLaw):
        return True
    return isinstance(law, AffineLaw) and is_discrete(law.base)


def is_continuous(law: Law) -> bool:
    if isinstance(law, _CONTINUOUS_TYPES):
        return True
    return isinstance(law, AffineLaw) and is_continuous(law.base)


def to_discrete(law: Law) -> DiscreteLaw:
    """Materialize a (possibly affine-wrapped) discrete law: masses are kept,
    support points are mapped pointwise."""
    if isinstance(law, DiscreteLaw):
        return law
    if isinstance(law, AffineLaw) and is_discrete(law.base):
        base = to_discrete(law.base)
        mean_value = None if base.mean_value is None else law.a * base.mean_value + law.b
        sigma_value = None if base.sigma_value is None else law.a * base.sigma_value
        return DiscreteLaw(xs=tuple(law.a * x + law.b for x in base.xs),
                           ps=base.ps, label=base.label,
                           mean_value=mean_value, sigma_value=sigma_value)
    raise TypeError(f"not a discrete law: {law!r}")


def pdf(law: Law, x: float) -> float:
    """Density of a continuous handle (0 outside the support)."""
    if isinstance(law, _CONTINUOUS_TYPES):
        return law.pdf(x)
    if isinstance(law, AffineLaw) and is_continuous(law.base):
        return pdf(law.base, (x - law.b) / law.a) / law.a
    raise TypeError(f"pdf is only defined for continuous handles, got {law!r}")


def cdf(law: Law, x: float) -> float:
    if isinstance(law, _CONTINUOUS_TYPES + (DiscreteLaw,)):
        return law.cdf(x)
    if isinstance(law, AffineLaw):
        return cdf(law.base, (x - law.b) / law.a)
    if isinstance(law, MixtureLaw):
        return math.fsum(q * cdf(part, x) for q, part in law.components)
    raise TypeError(f"unsupported law handle {law!r}")


def mean(law: Law) -> Optional[float]:
    if isinstance(law, _CONTINUOUS_TYPES + (DiscreteLaw,)):
        return law.mean
    if isinstance(law, AffineLaw):
        m = mean(law.base)
        return None if m is None else law.a * m + law.b
    if isinstance(law, MixtureLaw):
        parts = [mean(part) for _, part in law.components]
        if any(m is None for m in parts):
            return None
        return math.fsum(q * m for (q, _), m in zip(law.components, parts))
    raise TypeError(f"unsupported law handle {law!r}")


def variance(law: Law) -> Optional[float]:
    """Variance when it exists; None marks absence (Cauchy, Student lam <= 2)."""
    if isinstance(law, _CONTINUOUS_TYPES + (DiscreteLaw,)):
        return law.variance
    if isinstance(law, AffineLaw):
        v = variance(law.base)
        return None if v is None else law.a * law.a * v
    if isinstance(law, MixtureLaw):
        moments = []
        for q, part in law.components:
            m, v = mean(part), variance(part)
            if m is None or v is None:
                return None
            moments.append((q, m, v))
        mu = math.fsum(q * m for q, m, _ in moments)
        second = math.fsum(q * (v + m * m) for q, m, v in moments)
        return second - mu * mu
    raise TypeError(f"unsupported law handle {law!r}")


def scale_parameter(law: Law) -> Optional[float]:
    """The scale locating a catalog law within its affine type."""
    if isinstance(law, _CONTINUOUS_TYPES):
        return law.scale
    if isinstance(law, AffineLaw) and is_continuous(law.base):
        base_scale = scale_parameter(law.base)
        return None if base_scale is None else law.a * base_scale
    return None


def standardize(law: Law) -> Law:
    """Affine transform to zero mean and unit variance."""
    m, v = mean(law), variance(law)
    if m is None or v is None:
        raise NoVarianceError(f"cannot standardize a law without moments: {law_label(law)}")
    if v <= 0.0:
        raise DegenerateLawError("cannot standardize a degenerate law")
    sigma = math.sqrt(v)
    return affine(law, 1.0 / sigma, -m / sigma)


# ---------------------------------------------------------------------------
# law specification strings
# ---------------------------------------------------------------------------

_FAMILY_PARAMS = {
    "gaussian": ("a",),
    "uniform": ("a",),
    "gamma": ("lam", "a"),
    "exponential": ("a",),
    "laplace": ("a",),
    "student": ("lam", "a"),
    "cauchy": ("a",),
    "binomial": ("n", "p"),
    "poisson": ("lam",),
    "duniform": ("n", "a"),
    "degenerate": ("x",),
}


def _split_top_level(text: str, sep: str) -> list:
    parts, depth, start = [], 0, 0
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise LawSpecError(f"unbalanced ')' in {text!r}", token=")")
        elif ch == sep and depth == 0:
            parts.append(text[start:i])
            start = i + 1
    if depth != 0:
        raise LawSpecError(f"unbalanced '(' in {text!r}", token="(")
    parts.append(text[start:])
    return parts


def _parse_params(body: str, names: tuple, context: str) -> dict:
    values = {}
    if body:
        for item in body.split(","):
            if "=" not in item:
                raise LawSpecError(f"expected name=value in {context!r}", token=item)
            key, _, raw = item.partition("=")
            if key not in names:
                raise LawSpecError(f"unknown parameter {key!r} for {context!r}", token=key)
            if key in values:
                raise LawSpecError(f"duplicate parameter {key!r} in {context!r}", token=key)
            try:
                values[key] = float(raw)
            except ValueError:
                raise LawSpecError(f"bad numeric value {raw!r} in {context!r}", token=raw)
    missing = [name for name in names if name not in values]
    if missing:
        raise LawSpecError(f"missing parameter {missing[0]!r} for {context!r}",
                           token=missing[0])
    return values


def _parse_base(segment: str) -> Law:
    name, _, body = segment.partition(":")
    name = name.strip()
    if name == "mix":
        return _parse_mixture(body)
    if name not in _FAMILY_PARAMS:
        raise LawSpecError(f"unknown law family {name!r}", token=name)
    params = _parse_params(body, _FAMILY_PARAMS[name], name)
    if name == "gaussian":
        return Gaussian(a=params["a"])
    if name == "uniform":
        return Uniform(a=params["a"])
    if name == "gamma":
        return Gamma(lam=params["lam"], a=params["a"])
    if name == "exponential":
        return Exponential(a=params["a"])
    if name == "laplace":
        return Laplace(a=params["a"])
    if name == "student":
        return Student(lam=params["lam"], a=params["a"])
    if name == "cauchy":
        return Cauchy(a=params["a"])
    if name == "binomial":
        return binomial(int(params["n"]), params["p"])
    if name == "poisson":
        return poisson(params["lam"])
    if name == "degenerate":
        return degenerate(params["x"])
    return discrete_uniform(int(params["n"]), params["a"])


def _parse_mixture(body: str) -> MixtureLaw:
    parts = _split_top_level(body, ",")
    if len(parts) != 3 or not parts[0].startswith("q="):
        raise LawSpecError("mixture needs the form mix:q=Q,(SPEC),(SPEC)", token=body)
    try:
        q = float(parts[0][2:])
    except ValueError:
        raise LawSpecError(f"bad mixture weight {parts[0][2:]!r}", token=parts[0][2:])
    if not 0.0 < q < 1.0:
        raise LawSpecError(f"mixture weight must be in (0, 1), got {q}", token=parts[0][2:])
    specs = []
    for part in parts[1:]:
        part = part.strip()
        if not (part.startswith("(") and part.endswith(")")):
            raise LawSpecError(f"mixture component must be parenthesized: {part!r}",
                               token=part)
        specs.append(parse_law(part[1:-1]))
    return mixture([(q, specs[0]), (1.0 - q, specs[1])])


def parse_law(spec: str) -> Law:
    """Parse a law specification string such as ``gamma:lam=3,a=1|std``."""
    spec = spec.strip()
    if not spec:
        raise LawSpecError("empty law specification", token="")
    segments = _split_top_level(spec, "|")
    law = _parse_base(segments[0].strip())
    for modifier in segments[1:]:
        modifier = modifier.strip()
        if modifier == "std":
            law = standardize(law)
        elif modifier.startswith("affine:"):
            params = _parse_params(modifier[len("affine:"):], ("a", "b"), "affine")
            law = affine(law, params["a"], params["b"])
        else:
            raise LawSpecError(f"unknown modifier {modifier!r}", token=modifier)
    return law


def law_label(law: Law) -> str:
    """Canonical specification string for a handle (display/report key)."""
    if isinstance(law, Gaussian):
        return f"gaussian:a={law.a!r}"
    if isinstance(law, Uniform):
        return f"uniform:a={law.a!r}"
    if isinstance(law, Gamma):
        return f"gamma:lam={law.lam!r},a={law.a!r}"
    if isinstance(law, Exponential):
        return f"exponential:a={law.a!r}"
    if isinstance(law, Laplace):
        return f"laplace:a={law.a!r}"
    if isinstance(law, Student):
        return f"student:lam={law.lam!r},a={law.a!r}"
    if isinstance(law, Cauchy):
        return f"cauchy:a={law.a!r}"
    if isinstance(law, DiscreteLaw):
        return law.label
    if isinstance(law, AffineLaw):
        return f"{law_label(law.base)}|affine:a={law.a!r},b={law.b!r}"
    if isinstance(law, MixtureLaw):
        if len(law.components) == 2:
            (q, first), (_, second) = law.components
            return f"mix:q={q!r},({law_label(first)}),({law_label(second)})"
        inner = ",".join(f"({q!r})*({law_label(part)})" for q, part in law.components)
        return f"mix[{inner}]"
    return repr(law)
