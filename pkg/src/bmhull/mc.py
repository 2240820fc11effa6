"""Monte Carlo estimates of ell_Omega from simulated paths.

Two estimators:

* ``hull``: perimeter of the hull of the union of rotated copies of the path,
  divided by sqrt(8 pi t);
* ``support``: 2 pi times max over omega of the path's maximal projection on
  direction omega, divided by sqrt(8 pi t).  Only for finite angle sets.

Path ``i`` is drawn from its own counter-based stream, so the per-path values
do not depend on the worker count or scheduling.  The final reduction runs in
path-index order.
"""

from __future__ import annotations

import logging
import math
import os
import warnings
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass
from typing import Sequence

import numpy as np

from bmhull.bm import PathConfig, sample_points
from bmhull.constants import OmegaPreset, analytic_ell
from bmhull.geom import AngleSet, as_points, path_hull, rotated_hull_perimeter, union_hull_perimeter

log = logging.getLogger(__name__)

DEFAULT_STEPS = 2**16
DEFAULT_PATHS = 20_000
DEFAULT_SEED = 7
DEFAULT_REL_TOL = 0.015
THREADS_ENV = "BMHULL_THREADS"
_CHUNK = 64


class BiasModelWarning(UserWarning):
    """A hull estimate sits significantly above its analytic value.

    Discrete hulls are contained in the continuous hull, so the estimator
    should only be biased low.
    """


@dataclass(frozen=True)
class Estimate:
    mean: float
    std_error: float
    n_paths: int
    n_steps: int
    total_time: float
    estimator: str


def resolve_workers(workers: int | None = None) -> int:
    if workers is None:
        env = os.environ.get(THREADS_ENV)
        workers = int(env) if env else (os.cpu_count() or 1)
    if workers < 1:
        raise ValueError("worker count must be >= 1")
    return workers


def _norm(total_time: float) -> float:
    return math.sqrt(8.0 * math.pi * total_time)


def path_ell_hull(points, omega: AngleSet, total_time: float = 1.0) -> float:
    """One path's contribution to the hull estimator."""
    return rotated_hull_perimeter(points, omega) / _norm(total_time)


def _support_max(vertices: np.ndarray, omega: AngleSet) -> float:
    w = np.asarray(omega.angles)
    proj = vertices[:, :1] * np.cos(w) + vertices[:, 1:] * np.sin(w)
    return float(proj.max())


def path_ell_support(points, omega: AngleSet, total_time: float = 1.0) -> float:
    """One path's contribution to the support estimator."""
    if omega.full_circle:
        raise ValueError("the support estimator needs a finite angle set; use the hull estimator")
    return 2.0 * math.pi * _support_max(as_points(points), omega) / _norm(total_time)


def _check_budget(n_steps: int, n_paths: int):
    if n_steps < 1:
        raise ValueError("n_steps must be >= 1")
    if n_paths < 2:
        raise ValueError("n_paths must be >= 2")


def simulate(
    omegas: Sequence[AngleSet],
    n_steps: int = DEFAULT_STEPS,
    n_paths: int = DEFAULT_PATHS,
    seed: int = DEFAULT_SEED,
    total_time: float = 1.0,
    estimator: str = "hull",
    workers: int | None = None,
) -> np.ndarray:
    """Per-path contributions, shape ``(n_paths, len(omegas))``.

    Every angle set is evaluated on the same paths, so column j equals the
    values a single-set run with the same seed would produce.
    """
    _check_budget(n_steps, n_paths)
    if estimator not in ("hull", "support"):
        raise ValueError(f"unknown estimator {estimator!r}")
    if estimator == "support" and any(o.full_circle for o in omegas):
        raise ValueError("the support estimator needs finite angle sets; use the hull estimator")
    omegas = list(omegas)
    out = np.empty((n_paths, len(omegas)))
    if estimator == "hull":
        scale = 1.0 / _norm(total_time)
    else:
        scale = 2.0 * math.pi / _norm(total_time)

    def run(start: int):
        for i in range(start, min(start + _CHUNK, n_paths)):
            pts = sample_points(PathConfig(n_steps, total_time, seed, i))
            hull = path_hull(pts).vertices
            for j, om in enumerate(omegas):
                if estimator == "hull":
                    out[i, j] = union_hull_perimeter(hull, om) * scale
                else:
                    out[i, j] = _support_max(hull, om) * scale

    starts = range(0, n_paths, _CHUNK)
    n_workers = resolve_workers(workers)
    if n_workers == 1:
        for s in starts:
            run(s)
    else:
        with ThreadPoolExecutor(n_workers) as pool:
            list(pool.map(run, starts))
    return out


def summarize(values: np.ndarray, n_steps: int, total_time: float, estimator: str) -> Estimate:
    values = np.asarray(values, dtype=np.float64)
    n = len(values)
    if n < 2:
        raise ValueError("need at least two paths for a standard error")
    mean = math.fsum(values) / n
    var = math.fsum((values - mean) ** 2) / (n - 1)
    return Estimate(mean, math.sqrt(var / n), n, n_steps, total_time, estimator)


def estimate_ell_hull(
    omega: AngleSet,
    n_steps: int = DEFAULT_STEPS,
    n_paths: int = DEFAULT_PATHS,
    seed: int = DEFAULT_SEED,
    total_time: float = 1.0,
    workers: int | None = None,
) -> Estimate:
    vals = simulate([omega], n_steps, n_paths, seed, total_time, "hull", workers)[:, 0]
    return summarize(vals, n_steps, total_time, "hull")


def estimate_ell_support(
    omega: AngleSet,
    n_steps: int = DEFAULT_STEPS,
    n_paths: int = DEFAULT_PATHS,
    seed: int = DEFAULT_SEED,
    total_time: float = 1.0,
    workers: int | None = None,
) -> Estimate:
    if omega.full_circle:
        raise ValueError("the support estimator needs a finite angle set; use the hull estimator")
    vals = simulate([omega], n_steps, n_paths, seed, total_time, "support", workers)[:, 0]
    return summarize(vals, n_steps, total_time, "support")


# ------------------------------------------------------------------ verification

@dataclass(frozen=True)
class VerifyRow:
    preset: str
    analytic: float
    estimate: float
    std_error: float
    rel_error: float
    passed: bool


@dataclass(frozen=True)
class VerifyReport:
    rows: tuple[VerifyRow, ...]
    n_steps: int
    n_paths: int
    seed: int
    rel_tol: float

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.rows)

    def records(self) -> list[dict]:
        return [asdict(r) for r in self.rows]


def verify_all(
    n_steps: int = DEFAULT_STEPS,
    n_paths: int = DEFAULT_PATHS,
    seed: int = DEFAULT_SEED,
    rel_tol: float = DEFAULT_REL_TOL,
    workers: int | None = None,
) -> VerifyReport:
    """Hull estimates for all eight presets against :func:`analytic_ell`.

    A preset passes when |mc - analytic| / analytic <= rel_tol.  The presets
    share one path ensemble; each column is identical to what
    :func:`estimate_ell_hull` returns for that preset and seed.
    """
    if not (0.0 < rel_tol <= 0.1):
        raise ValueError("rel_tol must lie in (0, 0.1]")
    presets = list(OmegaPreset)
    values = simulate([p.angle_set for p in presets], n_steps, n_paths, seed, 1.0, "hull", workers)
    rows = []
    for j, p in enumerate(presets):
        est = summarize(values[:, j], n_steps, 1.0, "hull")
        ref = analytic_ell(p).value
        rel = abs(est.mean - ref) / ref
        if est.mean - 3.0 * est.std_error > ref:
            warnings.warn(
                f"{p.value}: estimate {est.mean:.6f} exceeds analytic {ref:.6f} by more than 3 standard errors",
                BiasModelWarning,
                stacklevel=2,
            )
        rows.append(VerifyRow(p.value, ref, est.mean, est.std_error, rel, rel <= rel_tol))
        log.info("%s: mc=%.6f +- %.6f analytic=%.6f", p.value, est.mean, est.std_error, ref)
    return VerifyReport(tuple(rows), n_steps, n_paths, seed, rel_tol)
