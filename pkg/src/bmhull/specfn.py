"""Special functions and integral kernels used by the analytic routes.

Everything here is scalar and pure.  Series are accumulated with
``math.fsum`` and stop once a term drops below the tolerance; hitting
``max_terms`` first raises :class:`SeriesConvergenceError`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Iterator

SQRT2 = math.sqrt(2.0)
SQRT_2_OVER_PI = math.sqrt(2.0 / math.pi)


class SeriesConvergenceError(ArithmeticError):
    pass


@dataclass(frozen=True)
class Tolerance:
    abs_tol: float = 1e-14
    rel_tol: float = 1e-14
    max_terms: int = 1_000_000

    def __post_init__(self):
        if not (0 < self.abs_tol < 1 and 0 < self.rel_tol < 1):
            raise ValueError("tolerances must lie in (0, 1)")
        if self.max_terms < 1:
            raise ValueError("max_terms must be >= 1")


DEFAULT_TOL = Tolerance()


def sum_series(terms: Iterator[float], tol: Tolerance = DEFAULT_TOL, min_terms: int = 1) -> float:
    """Compensated sum of ``terms`` until one is below ``tol.abs_tol`` in magnitude."""
    acc = []
    for i, t in enumerate(terms):
        acc.append(t)
        if i + 1 >= min_terms and abs(t) < tol.abs_tol:
            return math.fsum(acc)
        if i + 1 >= tol.max_terms:
            break
    else:
        return math.fsum(acc)
    raise SeriesConvergenceError(f"series did not converge within {tol.max_terms} terms")


# --------------------------------------------------------------------- Bessel I0

_I0_SERIES_MAX_X = 15.0
I0_MAX_ARG = 700.0


def _i0_power_series(x: float) -> float:
    q = 0.25 * x * x
    term = total = 1.0
    acc = [term]
    k = 0
    while k < q or term > 1e-17 * total:
        k += 1
        term *= q / (k * k)
        total += term
        acc.append(term)
    return math.fsum(acc)


def _i0_asymptotic_scaled(x: float) -> float:
    # sqrt(2 pi x) e^{-x} I0(x) = sum_k ((2k-1)!!)^2 / (k! 8^k x^k); stop at the smallest term
    term = 1.0
    acc = [term]
    k = 0
    while True:
        nxt = term * (2 * k + 1) ** 2 / ((k + 1) * 8.0 * x)
        if nxt >= term or nxt < 1e-17:
            break
        term = nxt
        acc.append(term)
        k += 1
    return math.fsum(acc)


def bessel_i0e(x: float) -> float:
    """Exponentially scaled ``exp(-|x|) * I0(x)``; no overflow guard needed."""
    x = abs(x)
    if x <= _I0_SERIES_MAX_X:
        return _i0_power_series(x) * math.exp(-x)
    return _i0_asymptotic_scaled(x) / math.sqrt(2.0 * math.pi * x)


def bessel_i0(x: float) -> float:
    """Modified Bessel function I0 for 0 <= x <= 700.

    Power series below x = 15, the large-argument asymptotic expansion above.
    """
    if not (0.0 <= x <= I0_MAX_ARG):
        raise ValueError(f"bessel_i0 domain is [0, {I0_MAX_ARG}], got {x!r}")
    if x <= _I0_SERIES_MAX_X:
        return _i0_power_series(x)
    return _i0_asymptotic_scaled(x) * math.exp(x) / math.sqrt(2.0 * math.pi * x)


# ------------------------------------------------------------------ Gaussian CDFs

def normal_cdf(z: float) -> float:
    return 0.5 * math.erfc(-z / SQRT2)


def max_cdf(z: float) -> float:
    """H(z) = 2 Phi(z) - 1: law of max of W on [0, 1] (for z >= 0)."""
    return math.erf(z / SQRT2)


def max_sf(z: float) -> float:
    """1 - H(z), without cancellation for large z."""
    return math.erfc(z / SQRT2)


MAX_ABS_CROSSOVER = 1.0


def max_abs_cdf_theta(z: float, tol: Tolerance = DEFAULT_TOL) -> float:
    """L(z) from the strip survival theta series, good for small z."""
    if z <= 0:
        raise ValueError("max_abs_cdf requires z > 0")
    c = math.pi * math.pi / (8.0 * z * z)

    def terms():
        n = 0
        while True:
            k = 2 * n + 1
            yield (4.0 / math.pi) * (-1) ** n / k * math.exp(-c * k * k)
            n += 1

    return sum_series(terms(), tol)


def max_abs_sf_gauss(z: float, tol: Tolerance = DEFAULT_TOL) -> float:
    """1 - L(z) from the reflected Gaussian windows, good for large z."""
    if z <= 0:
        raise ValueError("max_abs_cdf requires z > 0")
    w = z / SQRT2

    def terms():
        n = 0
        while True:
            yield 2.0 * (math.erfc((4 * n + 1) * w) - math.erfc((4 * n + 3) * w))
            n += 1

    return sum_series(terms(), tol)


def max_abs_cdf_gauss(z: float, tol: Tolerance = DEFAULT_TOL) -> float:
    return 1.0 - max_abs_sf_gauss(z, tol)


def max_abs_cdf(z: float) -> float:
    """L(z) = P(max over [0,1] of |W| <= z)."""
    if z <= 0:
        raise ValueError("max_abs_cdf requires z > 0")
    if z < MAX_ABS_CROSSOVER:
        return max_abs_cdf_theta(z)
    return max_abs_cdf_gauss(z)


def max_abs_sf(z: float) -> float:
    """1 - L(z), accurate in the upper tail."""
    if z <= 0:
        raise ValueError("max_abs_sf requires z > 0")
    if z < MAX_ABS_CROSSOVER:
        return 1.0 - max_abs_cdf_theta(z)
    return max_abs_sf_gauss(z)


# ------------------------------------------------------------ chi_3 and L(s, chi_3)

def chi3(n: int) -> int:
    r = n % 3
    return 0 if r == 0 else (1 if r == 1 else -1)


# Bernoulli numbers B_2, B_4, ... for the Euler-Maclaurin tail
_BERNOULLI_EVEN = (1 / 6, -1 / 30, 1 / 42, -1 / 30, 5 / 66, -691 / 2730, 7 / 6, -3617 / 510)


def _power_derivative(s: float, c: float, k: float, m: int) -> float:
    """m-th derivative in k of (3k + c)^(-s)."""
    coef = 1.0
    for j in range(m):
        coef *= -(s + j) * 3.0
    return coef * (3.0 * k + c) ** (-s - m)


def dirichlet_l_chi3(s: float, n_blocks: int = 64) -> float:
    """L(s, chi_3) = sum chi_3(n) n^-s for real s > 0.

    The first ``n_blocks`` period-3 blocks are summed directly; the rest of the
    block sum f(k) = (3k+1)^-s - (3k+2)^-s is closed with Euler-Maclaurin,
    which keeps s near 1 (where plain summation stalls at ~1e-8) at full precision.
    """
    if s <= 0:
        raise ValueError("dirichlet_l_chi3 requires s > 0")
    N = n_blocks
    head = math.fsum((3 * k + 1) ** -s - (3 * k + 2) ** -s for k in range(N))
    # int_N^inf f = (x^(1-s) - y^(1-s)) / (3(s-1)), x = 3N+1, y = 3N+2, via expm1 near s = 1
    log_ratio = math.log1p(1.0 / (3 * N + 1))
    if s == 1.0:
        integral = log_ratio / 3.0
    else:
        integral = -((3 * N + 1) ** (1 - s)) * math.expm1((1 - s) * log_ratio) / (3.0 * (s - 1.0))
    tail = [integral, 0.5 * ((3 * N + 1) ** -s - (3 * N + 2) ** -s)]
    fact = 1.0
    for j, b2j in enumerate(_BERNOULLI_EVEN, start=1):
        fact *= (2 * j - 1) * (2 * j)
        m = 2 * j - 1
        deriv = _power_derivative(s, 1.0, N, m) - _power_derivative(s, 2.0, N, m)
        tail.append(-b2j / fact * deriv)
    return math.fsum([head, *tail])


def gamma_real(s: float) -> float:
    if s <= 0:
        raise ValueError("gamma_real requires s > 0")
    return math.gamma(s)


# ------------------------------------------------------- g and rectangle integrals

def g_fn(x: float, y: float) -> float:
    if x == 0 or y == 0:
        raise ValueError("g(x, y) is undefined on the coordinate axes")
    return math.hypot(x, y) / (x * y)


def _band(y: float, a: float, b: float) -> float:
    # g(a, y) - g(b, y) for 0 < a < b <= inf, 0 < y <= inf, without the 1/y cancellation
    if math.isinf(y):
        return 1.0 / a - (0.0 if math.isinf(b) else 1.0 / b)
    if math.isinf(b):
        return y / (a * a) / (math.hypot(1.0, y / a) + 1.0)
    k = (b - a) / (a * b) * (b + a) / (a * b)
    return y * k / (math.hypot(1.0, y / a) + math.hypot(1.0, y / b))


def _rect_first_quadrant(a: float, b: float, c: float, d: float) -> float:
    # 0 <= a < b <= inf, 0 <= c < d <= inf, origin not in the closed rectangle
    if a == 0.0 and c == 0.0:
        raise ValueError("rectangle touches the origin; the integral diverges")
    # g is symmetric, so the axis-touching cases are single bands
    if a == 0.0:
        return _band(b, c, d)
    if c == 0.0:
        return _band(d, a, b)
    return _band(d, a, b) - _band(c, a, b)


def _fold(lo: float, hi: float) -> list[tuple[float, float]]:
    # split [lo, hi] at 0 and reflect the negative part
    if lo >= 0:
        return [(lo, hi)]
    if hi <= 0:
        return [(-hi, -lo)]
    return [(0.0, -lo), (0.0, hi)]


def rect_integral(a: float, b: float, c: float, d: float) -> float:
    """Exact integral of (u^2 + v^2)^(-3/2) over [a, b] x [c, d].

    Uses the mixed antiderivative -g(u, v).  Infinite endpoints are allowed;
    rectangles crossing an axis are split at zero and folded into the first
    quadrant by symmetry.
    """
    if not (a < b and c < d):
        raise ValueError("rect_integral requires a < b and c < d")
    if a <= 0 <= b and c <= 0 <= d:
        raise ValueError("origin inside the rectangle; the integral diverges")
    parts = [
        _rect_first_quadrant(u0, u1, v0, v1)
        for u0, u1 in _fold(a, b)
        for v0, v1 in _fold(c, d)
    ]
    return max(math.fsum(parts), 0.0)


def euler_alternating_sum(a: Callable[[int], float], n: int = 40) -> float:
    """sum_{k>=0} (-1)^k a(k) by the Cohen-Villegas-Zagier acceleration."""
    d = (3.0 + math.sqrt(8.0)) ** n
    d = 0.5 * (d + 1.0 / d)
    b = -1.0
    c = -d
    acc = []
    for k in range(n):
        c = b - c
        acc.append(c * a(k))
        b = (k + n) * (k - n) * b / ((k + 0.5) * (k + 1.0))
    return math.fsum(acc) / d
