"""Analytic values of the mean-perimeter constants ell_Omega.

ell_Omega is defined by E[L(C_Omega(t))] = ell_Omega * sqrt(8 pi t).  Three
independent routes are available:

* closed forms and lattice sums (:func:`analytic_ell`);
* the Laplace-transform quadrature ell = int_0^inf E[exp(-lam^2 T/2)] dlam
  (:func:`ell_via_laplace`);
* for the axis-aligned sets, where the support value in direction 0 is a max
  of independent one-dimensional maxima, ell = sqrt(pi/2) int_0^inf (1 - F(z)) dz
  with F a product of the laws H and L of max W and max |W| (:func:`ell_via_max_cdf`).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

from scipy import integrate
from scipy.special import k1

from bmhull import exitdist, specfn
from bmhull.exitdist import ExitLaw
from bmhull.geom import AngleSet
from bmhull.quadrature import integrate_to_infinity

# E[A(C_1(t))] / t for the hull of a single path; quoted, not computed here
MEAN_AREA_C1_OVER_T = math.pi / 2.0


class OmegaPreset(str, Enum):
    ONE = "one"
    TWO = "two"
    PERP = "perp"
    CONE = "cone"
    THREE_QUARTERS = "three-quarters"
    TRIANGLE = "triangle"
    SQUARE = "square"
    CIRCLE = "circle"

    @property
    def angle_set(self) -> AngleSet:
        if self is OmegaPreset.CIRCLE:
            return AngleSet.circle()
        return AngleSet(tuple(math.pi * f for f in _PRESET_FRACTIONS[self]))

    @classmethod
    def parse(cls, name: str) -> "OmegaPreset":
        try:
            return cls(name)
        except ValueError:
            valid = ", ".join(p.value for p in cls)
            raise ValueError(f"unknown preset {name!r}; valid presets: {valid}") from None


# angles as multiples of pi
_PRESET_FRACTIONS = {
    OmegaPreset.ONE: (0.0,),
    OmegaPreset.TWO: (0.0, 1.0),
    OmegaPreset.PERP: (0.0, 0.5),
    OmegaPreset.CONE: (0.0, 2.0 / 3.0),
    OmegaPreset.THREE_QUARTERS: (0.0, 0.5, 1.0),
    OmegaPreset.TRIANGLE: (0.0, 2.0 / 3.0, 4.0 / 3.0),
    OmegaPreset.SQUARE: (0.0, 0.5, 1.0, 1.5),
}


@dataclass(frozen=True)
class EllValue:
    value: float
    route: str
    est_abs_error: float = 0.0

    def __post_init__(self):
        if not (self.value > 0 and math.isfinite(self.value)):
            raise ValueError("ell must be positive and finite")
        if self.route not in ("closed_form", "quadrature", "lattice_sum"):
            raise ValueError(f"unknown route {self.route!r}")
        if self.est_abs_error < 0:
            raise ValueError("est_abs_error must be nonnegative")


# --------------------------------------------------------------- lattice sums

def lattice_I(k: int, n: int) -> float:
    """Integral of (u^2+v^2)^(-3/2) over the square [4k-1, 4k+1] x [4n+1, 4n+3]."""
    return specfn.rect_integral(4 * k - 1, 4 * k + 1, 4 * n + 1, 4 * n + 3)


def _u(m: int) -> float:
    x = 1.0 / (2 * m + 1)
    # sqrt(1 + x^2) - 1 without cancellation
    return x * x / (math.sqrt(1.0 + x * x) + 1.0)


def series_S0() -> float:
    """Sum of I(0, n) over all n: 4 * sum (-1)^m u_m, u_m = sqrt(1 + 1/(2m+1)^2) - 1."""
    return 4.0 * specfn.euler_alternating_sum(_u, n=40)


def series_S0_partial(m_max: int) -> float:
    return 4.0 * math.fsum((-1) ** m * _u(m) for m in range(m_max + 1))


def _column_correction(k: int) -> tuple[float, float]:
    # oscillating part of the column sum over n of I(k, n), from Poisson summation
    # in v: sum_n int_{4n+1}^{4n+3} (u^2+v^2)^(-3/2) dv = 1/u^2 - (2/u) sum_j (-1)^j K1((2j+1) pi u/2)
    def f(u):
        acc = []
        j = 0
        while True:
            t = (-1) ** j * k1((2 * j + 1) * math.pi * u / 2.0)
            acc.append(t)
            if abs(t) < 1e-18:
                break
            j += 1
        return 2.0 / u * math.fsum(acc)

    return integrate.quad(f, 4 * k - 1, 4 * k + 1, epsabs=1e-17, epsrel=1e-13, limit=200)


@lru_cache(maxsize=None)
def _series_S1() -> tuple[float, float]:
    # S1 = 2 sum_{k>=1} sum_{n in Z} I(k, n); the 1/u^2 parts telescope to 1 - pi/4
    corrections = []
    err = 0.0
    k = 1
    while True:
        c, e = _column_correction(k)
        corrections.append(c)
        err += e
        if abs(c) < 1e-17:
            break
        k += 1
    value = 2.0 * (1.0 - math.pi / 4.0) - 2.0 * math.fsum(corrections)
    return value, 2.0 * err + 1e-15


def series_S1() -> float:
    """4 * sum_{n>=0} sum_{k>=1} I(k, n).

    The double sum decays like r^-3 over a two-dimensional lattice, so plain
    truncation at radius R leaves an error near pi / (2R).  Each full column
    over n is instead resummed in closed form up to a K1 Bessel correction
    that is exponentially small in k.
    """
    return _series_S1()[0]


def series_S1_partial(k_max: int, n_max: int) -> float:
    """Plain truncated double sum, k in 1..k_max and n in 0..n_max-1."""
    return 4.0 * math.fsum(lattice_I(k, n) for k in range(1, k_max + 1) for n in range(n_max))


# ----------------------------------------------------------------- quadratures

def ell_via_laplace(law: ExitLaw) -> EllValue:
    exitdist.laplace_transform(law, 1.0)
    val, err = integrate_to_infinity(lambda lam: exitdist.laplace_transform(law, lam))
    return EllValue(val, "quadrature", err)


_MAX_FACTORS = {
    OmegaPreset.ONE: ("H",),
    OmegaPreset.TWO: ("L",),
    OmegaPreset.PERP: ("H", "H"),
    OmegaPreset.THREE_QUARTERS: ("L", "H"),
    OmegaPreset.SQUARE: ("L", "L"),
}


def ell_via_max_cdf(preset: OmegaPreset) -> EllValue:
    """sqrt(pi/2) * int_0^inf (1 - prod F_i(z)) dz for the axis-aligned presets."""
    try:
        factors = _MAX_FACTORS[preset]
    except KeyError:
        raise ValueError(f"{preset.value} is not a product of independent maxima") from None
    sf = {"H": specfn.max_sf, "L": specfn.max_abs_sf}

    def tail(z: float) -> float:
        if z == 0.0:
            return 1.0
        # 1 - prod(1 - s_i), expanded to avoid cancellation
        prod_cdf = 1.0
        for f in factors:
            prod_cdf *= 1.0 - sf[f](z)
        if prod_cdf > 0.5:
            s = [sf[f](z) for f in factors]
            return s[0] if len(s) == 1 else s[0] + s[1] - s[0] * s[1]
        return 1.0 - prod_cdf

    val, err = integrate_to_infinity(tail)
    c = math.sqrt(math.pi / 2.0)
    return EllValue(c * val, "quadrature", c * err)


def _ell_circle() -> EllValue:
    return ell_via_laplace(exitdist.DISK)


def analytic_ell(preset: OmegaPreset) -> EllValue:
    p = OmegaPreset(preset)
    if p is OmegaPreset.ONE:
        return EllValue(1.0, "closed_form")
    if p is OmegaPreset.TWO:
        return EllValue(math.pi / 2.0, "closed_form")
    if p is OmegaPreset.PERP:
        return EllValue(math.sqrt(2.0), "closed_form")
    if p is OmegaPreset.CONE:
        return EllValue(1.5, "closed_form")
    if p is OmegaPreset.TRIANGLE:
        return EllValue(math.pi / math.sqrt(3.0), "closed_form")
    if p is OmegaPreset.THREE_QUARTERS:
        # pi/2 + 1 - (pi/2 - S0/2): the g(inf, .) corner terms contribute pi/2
        return EllValue(1.0 + series_S0() / 2.0, "lattice_sum", 1e-14)
    if p is OmegaPreset.SQUARE:
        s1, err = _series_S1()
        return EllValue(series_S0() + s1, "lattice_sum", err + 1e-14)
    return _ell_circle()


def all_analytic() -> dict[OmegaPreset, EllValue]:
    return {p: analytic_ell(p) for p in OmegaPreset}


# ------------------------------------------------------------------- disk area

def disk_area_constant() -> float:
    """int_0^inf ds / I0(sqrt(2 s)), via s = lam^2 / 2: int_0^inf lam / I0(lam) dlam."""
    val, _ = integrate_to_infinity(lambda lam: lam * math.exp(-lam) / specfn.bessel_i0e(lam))
    return val


def disk_area_constant_direct() -> float:
    def f(s: float) -> float:
        r = math.sqrt(2.0 * s)
        return math.exp(-r) / specfn.bessel_i0e(r)

    val, _ = integrate_to_infinity(f, start=8.0)
    return val
