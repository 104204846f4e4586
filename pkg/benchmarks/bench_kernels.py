"""Compare numba and numpy kernels, and the float backend against exact rationals.

    python3 benchmarks/bench_kernels.py [--n 100000] [--repeat 5]
"""

import argparse
import random
import sys
import time

import numpy as np

from comporder import _kernels
from comporder.floatback import solve_total_float
from comporder.functions import AffineFn
from comporder.numeric import normalize
from comporder.solvers import solve_exact_k, solve_total_linear


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t)
    return min(times)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=100_000)
    ap.add_argument("--k-n", type=int, default=300, help="size of the exact-k instance")
    ap.add_argument("--k", type=int, default=100)
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args(argv)

    rng = np.random.default_rng(0)
    a = rng.integers(0, 5, args.n) / 4.0  # slopes <= 1 keep float64 values finite
    b = rng.integers(-32, 33, args.n) / 4.0
    ka, kb = a[: args.k_n].copy(), b[: args.k_n].copy()

    rows = []
    kernels = [
        ("rotation_values", lambda m: getattr(_kernels, f"rotation_values_{m}")(a, b, 1.0)),
        ("hull_fold", lambda m: getattr(_kernels, f"hull_fold_{m}")(a, b, 1.0)),
        ("exact_k_rows", lambda m: getattr(_kernels, f"exact_k_rows_{m}")(ka, kb, 1.0, args.k)),
    ]
    for name, call in kernels:
        t_np = best_of(lambda: call("numpy"), args.repeat)
        if _kernels.HAVE_NUMBA:
            call("numba")  # compile
            t_nb = best_of(lambda: call("numba"), args.repeat)
        else:
            t_nb = float("nan")
        rows.append((name, t_np, t_nb))

    print(f"{'kernel':<18}{'numpy [s]':>12}{'numba [s]':>12}{'speedup':>10}")
    for name, t_np, t_nb in rows:
        print(f"{name:<18}{t_np:>12.4f}{t_nb:>12.4f}{t_np / t_nb:>10.1f}")

    prng = random.Random(0)
    fs = [AffineFn(normalize(prng.randint(0, 8), 4), normalize(prng.randint(-32, 32), 4)) for _ in range(10_000)]
    fa = np.array([float(f.slope) for f in fs])
    fb = np.array([float(f.intercept) for f in fs])
    t_exact = best_of(lambda: solve_total_linear(fs, 1), 1)
    t_float = best_of(lambda: solve_total_float(fa, fb, 1.0), args.repeat)
    t_k = best_of(lambda: solve_exact_k(fs[: args.k_n], 1, args.k), 1)
    print()
    print(f"total n=10^4: exact {t_exact:.3f}s, float {t_float:.4f}s")
    print(f"exact-k n={args.k_n} k={args.k}: exact {t_k:.2f}s")
    return 0


if __name__ == "__main__":
    sys.exit(main())
