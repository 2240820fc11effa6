"""Planar convex geometry: hulls, support functions, perimeters and rotations.

Point lists are ``(n, 2)`` float arrays throughout; anything array-like is
accepted on input.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple, Sequence

import numpy as np

from bmhull import _kernels

TWO_PI = 2.0 * math.pi


class Point2(NamedTuple):
    x: float
    y: float


def as_points(points) -> np.ndarray:
    pts = np.asarray(points, dtype=np.float64)
    if pts.size == 0:
        return pts.reshape(0, 2)
    pts = np.atleast_2d(pts)
    if pts.ndim != 2 or pts.shape[1] != 2:
        raise ValueError(f"expected an (n, 2) array of points, got shape {pts.shape}")
    if not np.all(np.isfinite(pts)):
        raise ValueError("point coordinates must be finite")
    return pts


@dataclass(frozen=True, eq=False)
class ConvexPolygon:
    """Hull vertices in counterclockwise order.

    Degenerate hulls are allowed: 0 vertices (empty), 1 (point), 2 (segment).
    """

    vertices: np.ndarray

    def __len__(self):
        return len(self.vertices)

    def __eq__(self, other):
        if not isinstance(other, ConvexPolygon):
            return NotImplemented
        return self.vertices.shape == other.vertices.shape and bool(np.all(self.vertices == other.vertices))

    @property
    def signed_area(self) -> float:
        v = self.vertices
        if len(v) < 3:
            return 0.0
        x, y = v[:, 0], v[:, 1]
        return 0.5 * float(np.dot(x, np.roll(y, -1)) - np.dot(np.roll(x, -1), y))


@dataclass(frozen=True)
class AngleSet:
    """A finite set of rotation angles in [0, 2 pi), or the full circle."""

    angles: tuple[float, ...] = ()
    full_circle: bool = False

    def __post_init__(self):
        if self.full_circle:
            if self.angles:
                raise ValueError("a full-circle AngleSet carries no explicit angles")
            return
        a = self.angles
        if not a:
            raise ValueError("a finite AngleSet must be non-empty")
        if any(not (0.0 <= w < TWO_PI) for w in a):
            raise ValueError("angles must lie in [0, 2 pi)")
        if any(a[i] >= a[i + 1] for i in range(len(a) - 1)):
            raise ValueError("angles must be strictly increasing")

    @classmethod
    def finite(cls, angles: Sequence[float]) -> "AngleSet":
        norm = sorted({float(w) % TWO_PI for w in angles})
        return cls(tuple(norm))

    @classmethod
    def from_degrees(cls, degrees: Sequence[float]) -> "AngleSet":
        return cls.finite([math.radians(d) for d in degrees])

    @classmethod
    def circle(cls) -> "AngleSet":
        return cls(full_circle=True)

    def __len__(self):
        return len(self.angles)


def convex_hull(points) -> ConvexPolygon:
    """Monotone-chain hull; collinear boundary points are removed."""
    pts = as_points(points)
    if len(pts) == 0:
        raise ValueError("empty point set")
    idx = _kernels.hull_indices(np.ascontiguousarray(pts[:, 0]), np.ascontiguousarray(pts[:, 1]))
    return ConvexPolygon(pts[idx])


def path_hull(points) -> ConvexPolygon:
    """Same hull as :func:`convex_hull`, faster on long Brownian paths."""
    pts = as_points(points)
    if len(pts) == 0:
        raise ValueError("empty point set")
    idx = _kernels.path_hull_indices(np.ascontiguousarray(pts[:, 0]), np.ascontiguousarray(pts[:, 1]))
    return ConvexPolygon(pts[idx])


def perimeter(poly: ConvexPolygon) -> float:
    """Boundary length; a point has perimeter 0 and a segment of length L has 2L."""
    v = poly.vertices
    if len(v) < 2:
        return 0.0
    if len(v) == 2:
        return 2.0 * math.hypot(*(v[1] - v[0]))
    d = np.roll(v, -1, axis=0) - v
    return math.fsum(np.hypot(d[:, 0], d[:, 1]))


def support_value(points, theta: float) -> float:
    pts = as_points(points)
    if len(pts) == 0:
        raise ValueError("empty point set")
    return float(np.max(pts[:, 0] * math.cos(theta) + pts[:, 1] * math.sin(theta)))


def rotate_points(points, omega: float) -> np.ndarray:
    pts = as_points(points)
    c, s = math.cos(omega), math.sin(omega)
    out = np.empty_like(pts)
    out[:, 0] = pts[:, 0] * c - pts[:, 1] * s
    out[:, 1] = pts[:, 0] * s + pts[:, 1] * c
    return out


def _points_of(path) -> np.ndarray:
    return as_points(getattr(path, "points", path))


def union_hull_perimeter(hull_vertices: np.ndarray, omega: AngleSet) -> float:
    """Perimeter of the hull of the rotated copies of an already-convex vertex set."""
    if omega.full_circle:
        return TWO_PI * float(np.max(np.hypot(hull_vertices[:, 0], hull_vertices[:, 1])))
    if len(omega) == 1:
        # rotation preserves lengths
        return perimeter(ConvexPolygon(hull_vertices))
    union = np.concatenate([rotate_points(hull_vertices, w) for w in omega.angles])
    return perimeter(convex_hull(union))


def rotated_hull_perimeter(path, omega: AngleSet) -> float:
    """Perimeter of the hull of the union of ``R_w path`` over w in ``omega``.

    The full circle gives the centred disk of radius max |p|.  The hull of the
    path is taken first: rotating and re-hulling its vertices gives the same set.
    """
    pts = _points_of(path)
    if len(pts) == 0:
        raise ValueError("empty point set")
    if omega.full_circle:
        return TWO_PI * float(np.max(np.hypot(pts[:, 0], pts[:, 1])))
    return union_hull_perimeter(path_hull(pts).vertices, omega)
