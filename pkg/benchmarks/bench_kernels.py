"""Time the numpy and numba kernel paths against each other.

    python3 benchmarks/bench_kernels.py [--levels 101] [--repeat 2000]

Sizes match typical use: a handful of basis elements on a 101-level grid.
The jit path is warmed up before timing so compilation is excluded.
"""
import argparse
import timeit

import numpy as np

from sliring import _kernels as K


def cases(levels, rng):
    alphas = np.linspace(0.0, 1.0, levels)
    n = 5
    lowers = np.cumsum(rng.uniform(0, 1, (n, levels)), axis=1)
    uppers = lowers[:, ::-1] + 50.0
    coeffs = rng.uniform(-10, 10, n)
    query = np.sort(rng.uniform(0, 1, levels))
    corners = rng.normal(size=(levels, 8))
    return {
        "combine_cuts": (coeffs, lowers, uppers),
        "sup_distance": (lowers[0], uppers[0], lowers[1], uppers[1]),
        "resample": (alphas, lowers[0], uppers[0], query),
        "row_extrema": (corners,),
        "midpoint_matrix": (lowers, uppers),
    }


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--levels", type=int, default=101)
    ap.add_argument("--repeat", type=int, default=2000)
    args = ap.parse_args()

    rng = np.random.default_rng(0)
    print(f"levels={args.levels} repeat={args.repeat} (microseconds per call)")
    print(f"{'kernel':<16} {'numpy':>10} {'numba':>10} {'speedup':>9}")
    for name, call_args in cases(args.levels, rng).items():
        f_np, f_nb = getattr(K, name + "_np"), getattr(K, name + "_nb")
        f_nb(*call_args)  # compile
        t_np = min(timeit.repeat(lambda: f_np(*call_args), number=args.repeat, repeat=3)) / args.repeat * 1e6
        t_nb = min(timeit.repeat(lambda: f_nb(*call_args), number=args.repeat, repeat=3)) / args.repeat * 1e6
        print(f"{name:<16} {t_np:>10.2f} {t_nb:>10.2f} {t_np / t_nb:>8.1f}x")


if __name__ == "__main__":
    main()
