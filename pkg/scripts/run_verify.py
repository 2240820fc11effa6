"""Run the Monte Carlo gate and print a table of estimates against analytic values.

    python scripts/run_verify.py --steps 65536 --paths 20000 --seed 7
"""

import argparse
import logging
import time

from bmhull import mc


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--steps", type=int, default=mc.DEFAULT_STEPS)
    ap.add_argument("--paths", type=int, default=mc.DEFAULT_PATHS)
    ap.add_argument("--seed", type=int, default=mc.DEFAULT_SEED)
    ap.add_argument("--tol", type=float, default=mc.DEFAULT_REL_TOL)
    ap.add_argument("--threads", type=int)
    args = ap.parse_args()
    logging.basicConfig(level=logging.INFO, format="%(message)s")

    t0 = time.perf_counter()
    rep = mc.verify_all(args.steps, args.paths, args.seed, args.tol, args.threads)
    elapsed = time.perf_counter() - t0

    print(f"{'preset':>15} {'analytic':>10} {'estimate':>10} {'std err':>9} {'rel err':>8}  ok")
    for r in rep.rows:
        print(f"{r.preset:>15} {r.analytic:10.6f} {r.estimate:10.6f} {r.std_error:9.2e} {r.rel_error:8.4%}  {r.passed}")
    print(f"{args.paths} paths x {args.steps} steps, seed {args.seed}: {elapsed:.1f} s, "
          f"{'PASS' if rep.passed else 'FAIL'}")


if __name__ == "__main__":
    main()
