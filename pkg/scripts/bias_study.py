"""Discretisation bias of the hull estimator as the step count grows.

The sampled hull sits inside the continuous one, so estimates approach the
analytic constants from below, with a gap shrinking roughly like
n_steps ** -1/2.  Every row reuses the same seed.

    python scripts/bias_study.py --paths 4000 --max-exp 12
"""

import argparse

import numpy as np

from bmhull import mc
from bmhull.constants import OmegaPreset, analytic_ell


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--paths", type=int, default=4000)
    ap.add_argument("--seed", type=int, default=11)
    ap.add_argument("--min-exp", type=int, default=4)
    ap.add_argument("--max-exp", type=int, default=12)
    ap.add_argument("--threads", type=int)
    args = ap.parse_args()

    presets = list(OmegaPreset)
    exact = np.array([analytic_ell(p).value for p in presets])
    print("relative gap (estimate - analytic) / analytic")
    print(f"{'steps':>7} " + " ".join(f"{p.value:>14}" for p in presets) + f" {'gap*sqrt(n)':>12}")
    for e in range(args.min_exp, args.max_exp + 1, 2):
        n = 2**e
        vals = mc.simulate([p.angle_set for p in presets], n, args.paths, args.seed, workers=args.threads)
        gap = vals.mean(axis=0) / exact - 1.0
        # rescaled gap of the one-direction set; flat if the n^-1/2 law holds
        print(f"{n:>7} " + " ".join(f"{g:>14.4%}" for g in gap) + f" {gap[0] * np.sqrt(n):>12.3f}")


if __name__ == "__main__":
    main()
