"""Exit-time laws of planar Brownian motion from the tangent polygons P_Omega.

Each law is identified by an :class:`ExitLaw`.  Depending on what is known in
closed form a law supports some of: Laplace transform E[exp(-lam^2 T / 2)],
survival P(T > t), density, and the moment E[T^(-1/2)].

Theta-type series converge fast for large t and slowly for small t; the
Gaussian (image) series do the opposite.  Where both exist the crossover sits
where the two are equally fast, and the tests pin their agreement there.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from bmhull import specfn
from bmhull.quadrature import integrate_to_infinity
from bmhull.specfn import SQRT2, SQRT_2_OVER_PI, sum_series

SQRT3 = math.sqrt(3.0)
TRIANGLE_UNIT_A = 1.0 / (4.0 * SQRT3)
# P_Omega triangle has side 2 sqrt(3) against side 1 for the unit triangle
TRIANGLE_POMEGA_SCALE = 12.0


class UnsupportedLawError(ValueError):
    pass


class LawKind(str, Enum):
    HALF_PLANE = "halfplane"
    STRIP = "strip"
    CONE60 = "cone60"
    TRIANGLE_UNIT = "triangle-unit"
    TRIANGLE_POMEGA = "triangle-pomega"
    BESSEL3 = "bessel3"
    DISK = "disk"


@dataclass(frozen=True)
class ExitLaw:
    kind: LawKind
    a: float | None = None

    def __post_init__(self):
        if self.kind is LawKind.BESSEL3:
            if self.a is None or not self.a > 0:
                raise ValueError("Bessel3Hitting needs a positive start level a")
        elif self.a is not None:
            raise ValueError(f"{self.kind.value} takes no parameter")

    @classmethod
    def parse(cls, name: str) -> "ExitLaw":
        """Parse CLI names such as ``strip`` or ``bessel3=0.5``."""
        base, _, arg = name.partition("=")
        try:
            kind = LawKind(base)
        except ValueError:
            valid = ", ".join(k.value for k in LawKind)
            raise ValueError(f"unknown shape {name!r}; valid shapes: {valid} (bessel3=<a>)") from None
        if kind is LawKind.BESSEL3:
            if not arg:
                raise ValueError("bessel3 needs a start level, e.g. bessel3=0.5")
            return cls(kind, float(arg))
        if arg:
            raise ValueError(f"{base} takes no parameter")
        return cls(kind)

    @property
    def name(self) -> str:
        if self.kind is LawKind.BESSEL3:
            return f"bessel3={self.a!r}"
        return self.kind.value


HALF_PLANE = ExitLaw(LawKind.HALF_PLANE)
STRIP = ExitLaw(LawKind.STRIP)
CONE60 = ExitLaw(LawKind.CONE60)
TRIANGLE_UNIT = ExitLaw(LawKind.TRIANGLE_UNIT)
TRIANGLE_POMEGA = ExitLaw(LawKind.TRIANGLE_POMEGA)
DISK = ExitLaw(LawKind.DISK)


def bessel3(a: float) -> ExitLaw:
    """First hitting time of 3a by a 3-dimensional Bessel process started at a."""
    return ExitLaw(LawKind.BESSEL3, float(a))


def _unsupported(law: ExitLaw, what: str):
    raise UnsupportedLawError(f"{what} is not available for the {law.name} exit law")


def _check_t(t: float):
    if not t > 0:
        raise ValueError(f"t must be positive, got {t!r}")


def _nonzero_chi3():
    n = 1
    while True:
        yield n, 1
        yield n + 1, -1
        n += 3


# ----------------------------------------------------------------------- Laplace

def _sinh_ratio(x: float) -> float:
    """3 sinh(x) / sinh(3x), stable for large x."""
    if x == 0.0:
        return 1.0
    return 3.0 * math.exp(-2.0 * x) * (-math.expm1(-2.0 * x)) / (-math.expm1(-6.0 * x))


def bessel3_level(law: ExitLaw) -> float:
    """Start level a of the Bessel-3 hitting time equal in law to ``law``."""
    if law.kind is LawKind.BESSEL3:
        return law.a
    if law.kind is LawKind.TRIANGLE_UNIT:
        return TRIANGLE_UNIT_A
    if law.kind is LawKind.TRIANGLE_POMEGA:
        return 0.5
    raise UnsupportedLawError(f"{law.name} is not a Bessel-3 hitting time")


def laplace_transform(law: ExitLaw, lam: float) -> float:
    """E[exp(-lam^2 T / 2)]."""
    if lam < 0:
        raise ValueError("lambda must be nonnegative")
    if lam == 0:
        if law.kind is LawKind.CONE60:
            _unsupported(law, "the Laplace transform")
        return 1.0
    k = law.kind
    if k is LawKind.HALF_PLANE:
        return math.exp(-lam)
    if k is LawKind.STRIP:
        e = math.exp(-2.0 * lam)
        return 2.0 * math.exp(-lam) / (1.0 + e)
    if k is LawKind.DISK:
        return math.exp(-lam) / specfn.bessel_i0e(lam)
    if k is LawKind.TRIANGLE_POMEGA:
        return _sinh_ratio(lam / 2.0)
    if k in (LawKind.TRIANGLE_UNIT, LawKind.BESSEL3):
        return _sinh_ratio(lam * bessel3_level(law))
    _unsupported(law, "the Laplace transform")


# ---------------------------------------------------------------- series bodies

def _peak_terms(c: float) -> int:
    # n * exp(-c n^2) increases up to n = 1/sqrt(2c); do not stop before that
    return int(1.0 / math.sqrt(2.0 * c)) + 2 if c > 0 else 1


def triangle_survival_theta(t: float) -> float:
    """(3 sqrt 3 / pi) sum chi3(n)/n exp(-8 pi^2 n^2 t / 3) for the unit triangle."""
    _check_t(t)
    c = 8.0 * math.pi**2 * t / 3.0
    terms = (chi / n * math.exp(-c * n * n) for n, chi in _nonzero_chi3())
    return 3.0 * SQRT3 / math.pi * sum_series(terms)


def triangle_density_theta(t: float) -> float:
    _check_t(t)
    c = 8.0 * math.pi**2 * t / 3.0
    terms = (chi * n * math.exp(-c * n * n) for n, chi in _nonzero_chi3())
    return 8.0 * SQRT3 * math.pi * sum_series(terms, min_terms=_peak_terms(c))


def bessel3_survival_exp(a: float, t: float) -> float:
    _check_t(t)
    c = math.pi**2 * t / (18.0 * a * a)
    terms = (chi / n * math.exp(-c * n * n) for n, chi in _nonzero_chi3())
    return 3.0 * SQRT3 / math.pi * sum_series(terms)


def bessel3_density_exp(a: float, t: float) -> float:
    _check_t(t)
    c = math.pi**2 * t / (18.0 * a * a)
    terms = (chi * n * math.exp(-c * n * n) for n, chi in _nonzero_chi3())
    return 3.0 * SQRT3 * math.pi / (18.0 * a * a) * sum_series(terms, min_terms=_peak_terms(c))


def bessel3_survival_gauss(a: float, t: float) -> float:
    """1 - 3 sum chi3(n) P(hit level 2na before t): the image-series form."""
    _check_t(t)
    w = SQRT2 * a / math.sqrt(t)
    terms = (chi * math.erfc(n * w) for n, chi in _nonzero_chi3())
    return 1.0 - 3.0 * sum_series(terms)


def bessel3_density_gauss(a: float, t: float) -> float:
    _check_t(t)
    c = 2.0 * a * a / t
    terms = (chi * n * math.exp(-c * n * n) for n, chi in _nonzero_chi3())
    return 6.0 * a / math.sqrt(2.0 * math.pi * t**3) * sum_series(terms, min_terms=_peak_terms(c))


def bessel3_crossover(a: float) -> float:
    """Time where the exponential and Gaussian series decay at the same rate."""
    return 6.0 * a * a / math.pi


def strip_density_theta(t: float) -> float:
    _check_t(t)
    c = math.pi**2 * t / 2.0

    def terms():
        n = 0
        while True:
            h = n + 0.5
            yield (-1) ** n * h * math.exp(-h * h * c)
            n += 1

    return math.pi * sum_series(terms(), min_terms=_peak_terms(c))


def strip_density_gauss(t: float) -> float:
    _check_t(t)

    def terms():
        k = 0
        while True:
            m = 2 * k + 1
            yield (-1) ** k * m * math.exp(-m * m / (2.0 * t))
            k += 1

    return 2.0 / math.sqrt(2.0 * math.pi * t**3) * sum_series(terms(), min_terms=_peak_terms(0.5 / t))


STRIP_CROSSOVER = 1.0


# ---------------------------------------------------------------- survival, cdf

def _cone_cdf(t: float) -> float:
    # 1 - S with S = 2 erf(x / sqrt2) - erf(sqrt2 x), x = 1 / sqrt(t)
    x = 1.0 / math.sqrt(t)
    if x >= 1.0:
        return 2.0 * math.erfc(x / SQRT2) - math.erfc(SQRT2 * x)
    return 1.0 - (2.0 * math.erf(x / SQRT2) - math.erf(SQRT2 * x))


def survival(law: ExitLaw, t: float) -> float:
    """P(T > t)."""
    _check_t(t)
    k = law.kind
    if k is LawKind.HALF_PLANE:
        return math.erf(1.0 / math.sqrt(2.0 * t))
    if k is LawKind.STRIP:
        return specfn.max_abs_cdf(1.0 / math.sqrt(t))
    if k is LawKind.CONE60:
        return 1.0 - _cone_cdf(t)
    if k is LawKind.TRIANGLE_POMEGA:
        return survival(TRIANGLE_UNIT, t / TRIANGLE_POMEGA_SCALE)
    if k is LawKind.TRIANGLE_UNIT:
        if t >= bessel3_crossover(TRIANGLE_UNIT_A):
            return triangle_survival_theta(t)
        return bessel3_survival_gauss(TRIANGLE_UNIT_A, t)
    if k is LawKind.BESSEL3:
        if t >= bessel3_crossover(law.a):
            return bessel3_survival_exp(law.a, t)
        return bessel3_survival_gauss(law.a, t)
    _unsupported(law, "the survival function")


def cdf(law: ExitLaw, t: float) -> float:
    """P(T <= t), computed without cancellation where a direct form exists."""
    _check_t(t)
    k = law.kind
    if k is LawKind.HALF_PLANE:
        return math.erfc(1.0 / math.sqrt(2.0 * t))
    if k is LawKind.STRIP:
        return specfn.max_abs_sf(1.0 / math.sqrt(t))
    if k is LawKind.CONE60:
        return _cone_cdf(t)
    return 1.0 - survival(law, t)


def density(law: ExitLaw, t: float) -> float:
    _check_t(t)
    k = law.kind
    if k is LawKind.HALF_PLANE:
        return math.exp(-0.5 / t) / math.sqrt(2.0 * math.pi * t**3)
    if k is LawKind.STRIP:
        return strip_density_theta(t) if t >= STRIP_CROSSOVER else strip_density_gauss(t)
    if k is LawKind.TRIANGLE_POMEGA:
        return density(TRIANGLE_UNIT, t / TRIANGLE_POMEGA_SCALE) / TRIANGLE_POMEGA_SCALE
    if k is LawKind.TRIANGLE_UNIT:
        if t >= bessel3_crossover(TRIANGLE_UNIT_A):
            return triangle_density_theta(t)
        return bessel3_density_gauss(TRIANGLE_UNIT_A, t)
    if k is LawKind.BESSEL3:
        if t >= bessel3_crossover(law.a):
            return bessel3_density_exp(law.a, t)
        return bessel3_density_gauss(law.a, t)
    _unsupported(law, "the density")


# ------------------------------------------------------------------------ moments

def inv_sqrt_moment(law: ExitLaw, route: str | None = None) -> float:
    """E[T^(-1/2)].

    ``laplace`` route: sqrt(2/pi) * integral of the Laplace transform over
    lambda >= 0.  ``survival`` route: with x = t^(-1/2),
    E[T^(-1/2)] = integral over x >= 0 of P(T < 1/x^2).  By default the Laplace
    route is used when the law has one.
    """
    if route is None:
        route = "survival" if law.kind is LawKind.CONE60 else "laplace"
    if route == "laplace":
        laplace_transform(law, 1.0)  # raises for unsupported laws
        val, _ = integrate_to_infinity(lambda lam: laplace_transform(law, lam))
        return SQRT_2_OVER_PI * val
    if route == "survival":
        cdf(law, 1.0)
        val, _ = integrate_to_infinity(lambda x: cdf(law, 1.0 / (x * x)) if x > 0 else 1.0)
        return val
    raise ValueError(f"unknown route {route!r}")


def mellin_triangle(s: float) -> float:
    """E[T^s] for the unit-triangle exit time, s > -1/2.

    Term-wise Mellin transform of the theta density:
    3^(s+3/2) 8^(-s) pi^(-2s-1) Gamma(s+1) L(2s+1, chi3).
    """
    if s <= -0.5:
        raise ValueError("mellin_triangle requires s > -1/2")
    return (
        3.0 ** (s + 1.5)
        * 8.0 ** (-s)
        * math.pi ** (-2.0 * s - 1.0)
        * math.gamma(s + 1.0)
        * specfn.dirichlet_l_chi3(2.0 * s + 1.0)
    )


def mellin_triangle_printed(s: float) -> float:
    """Variant with prefactor pi^(-2s) 8^(1-s) 3^(s+1/2).

    Off from :func:`mellin_triangle` by the constant factor 8 pi / 3, so it
    fails E[T^0] = 1.  Kept only to document that discrepancy.
    """
    return (
        math.pi ** (-2.0 * s)
        * 8.0 ** (1.0 - s)
        * 3.0 ** (s + 0.5)
        * math.gamma(s + 1.0)
        * specfn.dirichlet_l_chi3(2.0 * s + 1.0)
    )


__all__ = [
    "CONE60", "DISK", "ExitLaw", "HALF_PLANE", "LawKind", "STRIP", "TRIANGLE_POMEGA",
    "TRIANGLE_UNIT", "UnsupportedLawError", "bessel3", "cdf", "density", "inv_sqrt_moment",
    "laplace_transform", "mellin_triangle", "survival"
]
