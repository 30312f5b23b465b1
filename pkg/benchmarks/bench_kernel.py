"""Compare the compiled and pure-Python kernels on the worst-case family.

    python3 benchmarks/bench_kernel.py [--sizes 50 100 200] [--repeat 3]

Prints one row per size with the best wall time of each backend, the
speedup, and the log-log slope of each backend's times.
"""

import argparse
import time

import numpy as np

from hallgame import kernel
from hallgame.assign import compute_assignment, tightness_instance


def best_time(ga, backend, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        compute_assignment(ga, backend=backend)
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--sizes", type=int, nargs="+", default=[50, 100, 200])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    backends = list(kernel.AVAILABLE)
    print("n vertices " + " ".join(f"{b}_s" for b in backends) + " speedup")
    times = {b: [] for b in backends}
    for n in args.sizes:
        ga = tightness_instance(n)
        row = {b: best_time(ga, b, args.repeat) for b in backends}
        for b in backends:
            times[b].append(row[b])
        speed = row["python"] / row["cython"] if "cython" in row else 1.0
        print(f"{n} {ga.vertex_count} " + " ".join(f"{row[b]:.4f}" for b in backends)
              + f" {speed:.1f}x")
    if len(args.sizes) > 1:
        x = np.log(args.sizes)
        for b in backends:
            slope = np.polyfit(x, np.log(times[b]), 1)[0]
            print(f"slope {b} {slope:.2f}")


if __name__ == "__main__":
    main()
