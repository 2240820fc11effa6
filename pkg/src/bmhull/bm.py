"""Seeded discrete planar Brownian paths on a counter-based stream.

Every path owns a Philox stream keyed by ``seed`` whose counter carries the
path index in word 2, so path ``i`` is the same no matter which thread or
process draws it, or in what order.  Word 3 tags the stream family (paths vs.
half-plane exit samples).

Path increments use numpy's ziggurat normals on that stream.  Half-plane exit
samples use one 64-bit draw per index through the inverse normal CDF, so the
i-th sample can be produced on its own or as part of a vectorised batch.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import ndtri

_PATH_STREAM = 0
_HALFPLANE_STREAM = 1
_MASK64 = (1 << 64) - 1


@dataclass(frozen=True)
class PathConfig:
    n_steps: int
    total_time: float = 1.0
    seed: int = 0
    path_index: int = 0

    def __post_init__(self):
        if self.n_steps < 1:
            raise ValueError("n_steps must be >= 1")
        if not self.total_time > 0:
            raise ValueError("total_time must be positive")
        if not (0 <= self.seed <= _MASK64 and 0 <= self.path_index <= _MASK64):
            raise ValueError("seed and path_index must be 64-bit unsigned integers")


@dataclass(frozen=True, eq=False)
class Path:
    points: np.ndarray
    total_time: float
    n_steps: int

    def __len__(self):
        return len(self.points)


def _key(seed: int) -> np.ndarray:
    return np.array([seed & _MASK64, 0], dtype=np.uint64)


def path_rng(seed: int, path_index: int) -> np.random.Generator:
    counter = np.array([0, 0, path_index & _MASK64, _PATH_STREAM], dtype=np.uint64)
    return np.random.Generator(np.random.Philox(key=_key(seed), counter=counter))


def sample_increments(config: PathConfig) -> np.ndarray:
    scale = math.sqrt(config.total_time / config.n_steps)
    z = path_rng(config.seed, config.path_index).standard_normal((config.n_steps, 2))
    z *= scale
    return z


def sample_points(config: PathConfig) -> np.ndarray:
    pts = np.empty((config.n_steps + 1, 2))
    pts[0] = 0.0
    np.cumsum(sample_increments(config), axis=0, out=pts[1:])
    return pts


def sample_path(config: PathConfig) -> Path:
    return Path(sample_points(config), config.total_time, config.n_steps)


def _raw_to_normal(raw: np.ndarray) -> np.ndarray:
    # 53-bit midpoint uniform in (0, 1), never 0 or 1
    u = ((raw >> np.uint64(11)).astype(np.float64) + 0.5) * 2.0**-53
    return ndtri(u)


def halfplane_exit_from_normal(z):
    """First hitting time of level 1 by standard BM, written as 1 / Z**2."""
    return 1.0 / np.square(z)


def halfplane_normals(seed: int, count: int, start: int = 0) -> np.ndarray:
    # one Philox block per index; the first word of block `start + i` feeds sample i
    counter = np.array([start & _MASK64, 0, 0, _HALFPLANE_STREAM], dtype=np.uint64)
    raw = np.random.Philox(key=_key(seed), counter=counter).random_raw(4 * count)
    return _raw_to_normal(raw[::4])


def sample_halfplane_exit(seed: int, index: int) -> float:
    return float(halfplane_exit_from_normal(halfplane_normals(seed, 1, start=index)[0]))


def sample_halfplane_exits(seed: int, count: int, start: int = 0) -> np.ndarray:
    """Vectorised :func:`sample_halfplane_exit` over indices ``start .. start+count-1``."""
    return halfplane_exit_from_normal(halfplane_normals(seed, count, start))
