"""Compiled hull kernels.

``hull_indices`` is Andrew's monotone chain; ``path_hull_indices`` adds an
Akl-Toussaint octagon prefilter, which discards almost every point of a long
Brownian path before the sort.
"""

import numba
import numpy as np


@numba.njit(cache=True, nogil=True)
def _cross(ox, oy, ax, ay, bx, by):
    return (ax - ox) * (by - oy) - (ay - oy) * (bx - ox)


@numba.njit(cache=True, nogil=True)
def hull_indices(x, y):
    """Indices of the strict hull vertices, counterclockwise from the lexicographic minimum.

    Collinear and duplicate points are dropped; one index for a point set,
    two for a segment.
    """
    n = x.shape[0]
    if n == 0:
        return np.empty(0, dtype=np.int64)
    order = np.argsort(y, kind="mergesort")
    order = order[np.argsort(x[order], kind="mergesort")]

    # drop exact duplicates
    uniq = np.empty(n, dtype=np.int64)
    m = 0
    for i in range(n):
        j = order[i]
        if m > 0 and x[j] == x[uniq[m - 1]] and y[j] == y[uniq[m - 1]]:
            continue
        uniq[m] = j
        m += 1
    if m <= 2:
        return uniq[:m].copy()

    hull = np.empty(2 * m, dtype=np.int64)
    k = 0
    for i in range(m):
        j = uniq[i]
        while k >= 2 and _cross(x[hull[k - 2]], y[hull[k - 2]], x[hull[k - 1]], y[hull[k - 1]], x[j], y[j]) <= 0.0:
            k -= 1
        hull[k] = j
        k += 1
    lower_end = k + 1
    for i in range(m - 2, -1, -1):
        j = uniq[i]
        while k >= lower_end and _cross(x[hull[k - 2]], y[hull[k - 2]], x[hull[k - 1]], y[hull[k - 1]], x[j], y[j]) <= 0.0:
            k -= 1
        hull[k] = j
        k += 1
    # last point repeats the first
    return hull[: k - 1].copy()


@numba.njit(cache=True, nogil=True)
def path_hull_indices(x, y):
    n = x.shape[0]
    if n < 16:
        return hull_indices(x, y)
    # extreme points in the directions 0, 45, ..., 315 degrees, in angular order
    ext = np.zeros(8, dtype=np.int64)
    best = np.full(8, -np.inf)
    for i in range(n):
        xi = x[i]
        yi = y[i]
        p0 = xi
        p1 = xi + yi
        p2 = yi
        p3 = yi - xi
        if p0 > best[0]:
            best[0] = p0
            ext[0] = i
        if p1 > best[1]:
            best[1] = p1
            ext[1] = i
        if p2 > best[2]:
            best[2] = p2
            ext[2] = i
        if p3 > best[3]:
            best[3] = p3
            ext[3] = i
        if -p0 > best[4]:
            best[4] = -p0
            ext[4] = i
        if -p1 > best[5]:
            best[5] = -p1
            ext[5] = i
        if -p2 > best[6]:
            best[6] = -p2
            ext[6] = i
        if -p3 > best[7]:
            best[7] = -p3
            ext[7] = i

    ax = np.empty(8)
    ay = np.empty(8)
    dx = np.empty(8)
    dy = np.empty(8)
    ne = 0
    for e in range(8):
        a = ext[e]
        b = ext[(e + 1) % 8]
        if x[a] == x[b] and y[a] == y[b]:
            continue
        ax[ne] = x[a]
        ay[ne] = y[a]
        dx[ne] = x[b] - x[a]
        dy[ne] = y[b] - y[a]
        ne += 1
    if ne < 3:
        # point or segment: no interior to filter against
        return hull_indices(x, y)

    keep = np.empty(n, dtype=np.int64)
    m = 0
    for i in range(n):
        xi = x[i]
        yi = y[i]
        for e in range(ne):
            if dx[e] * (yi - ay[e]) - dy[e] * (xi - ax[e]) <= 0.0:
                keep[m] = i
                m += 1
                break
    sub = keep[:m]
    local = hull_indices(x[sub], y[sub])
    return sub[local]
