"""Semi-infinite quadrature for smooth, eventually decaying integrands."""

from __future__ import annotations

from typing import Callable

from scipy import integrate

CUTOFF_FLOOR = 1e-16


def decay_cutoff(f: Callable[[float], float], start: float = 1.0, floor: float = CUTOFF_FLOOR) -> float:
    x = start
    while abs(f(x)) > floor:
        x *= 2.0
        if x > 1e8:
            raise ArithmeticError("integrand does not decay below the cutoff floor")
    return x


def integrate_to_infinity(
    f: Callable[[float], float],
    lo: float = 0.0,
    start: float = 1.0,
    epsabs: float = 1e-14,
    epsrel: float = 1e-13,
) -> tuple[float, float]:
    """Integrate ``f`` over [lo, inf) as adaptive Gauss-Kronrod on [lo, X].

    X is the first doubling of ``start`` where |f| < 1e-16.  Returns the value
    and an error estimate that includes a crude tail allowance ``|f(X)| * X``.
    """
    hi = decay_cutoff(f, max(start, lo + start))
    val, err = integrate.quad(f, lo, hi, epsabs=epsabs, epsrel=epsrel, limit=1000)
    return val, err + abs(f(hi)) * hi
