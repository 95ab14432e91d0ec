"""Compare the numba and numpy kernel backends on identical runs.

Usage: python benchmarks/bench_kernels.py [--delta 2.0] [--horizon 0.5] [--repeat 3]

Both backends run the same driver source, so the trajectories should agree
to rounding; the script reports wall time per backend (numba excluding its
first-call compilation) and the largest neck/height discrepancy.
"""
import argparse
import time

import numpy as np

from mcflow import curve as cv
from mcflow import evolver as ev
from mcflow.kernels import get_driver

ALPHA = 8.424705944643781


def run(backend, delta, R, horizon, cadence):
    c = cv.build_initial_curve(delta, R, ALPHA)
    traj, out = ev.evolve(c, horizon, cadence=cadence, backend=backend)
    return traj, out


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--delta", type=float, default=2.0)
    ap.add_argument("--R", type=float, default=10.0)
    ap.add_argument("--horizon", type=float, default=0.5)
    ap.add_argument("--cadence", type=float, default=0.05)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    t0 = time.perf_counter()
    get_driver("numba")
    run("numba", args.delta, args.R, 1e-3, 1e-3)
    print(f"numba compile + warm-up: {time.perf_counter() - t0:.2f} s")

    results = {}
    for backend in ("numba", "numpy"):
        times = []
        for _ in range(args.repeat):
            t0 = time.perf_counter()
            traj, out = run(backend, args.delta, args.R, args.horizon, args.cadence)
            times.append(time.perf_counter() - t0)
        steps = traj.rows[-1]["steps"]
        results[backend] = traj
        print(f"{backend:6s} best {min(times):8.3f} s  median {np.median(times):8.3f} s  "
              f"steps {steps}  outcome {out.kind}")
    a, b = results["numba"], results["numpy"]
    n = min(len(a.states), len(b.states))
    dn = np.max(np.abs(a.necks[:n] - b.necks[:n]))
    dh = np.max(np.abs(a.heights[:n] - b.heights[:n]))
    print(f"max |neck difference| {dn:.3e}   max |height difference| {dh:.3e}")


if __name__ == "__main__":
    main()
