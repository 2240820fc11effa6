"""Tabulate exit-time survival functions and E[T^(-1/2)] for every exit law.

    python scripts/dist_tables.py --points 12
"""

import argparse
import math

import numpy as np

from bmhull import exitdist
from bmhull.exitdist import CONE60, DISK, HALF_PLANE, STRIP, TRIANGLE_POMEGA, TRIANGLE_UNIT, UnsupportedLawError


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--points", type=int, default=12)
    ap.add_argument("--tmin", type=float, default=0.01)
    ap.add_argument("--tmax", type=float, default=10.0)
    args = ap.parse_args()

    laws = [HALF_PLANE, STRIP, CONE60, TRIANGLE_UNIT, TRIANGLE_POMEGA]
    grid = np.geomspace(args.tmin, args.tmax, args.points)
    print("P(T > t)")
    print(f"{'t':>9} " + " ".join(f"{law.name:>16}" for law in laws))
    for t in grid:
        print(f"{t:9.4f} " + " ".join(f"{exitdist.survival(law, t):16.12f}" for law in laws))

    print("\nE[T^(-1/2)] and the matching mean-perimeter constant sqrt(pi/2) E[T^(-1/2)]")
    for law in laws + [DISK]:
        try:
            m = exitdist.inv_sqrt_moment(law)
        except UnsupportedLawError as e:
            print(f"{law.name:>16}: {e}")
            continue
        print(f"{law.name:>16}: {m:.12f}  {math.sqrt(math.pi / 2) * m:.12f}")

    print("\nE[T^s] for the unit triangle")
    for s in (-0.25, 0.0, 0.5, 1.0, 2.0):
        print(f"  s = {s:5.2f}: {exitdist.mellin_triangle(s):.12e}")


if __name__ == "__main__":
    main()
