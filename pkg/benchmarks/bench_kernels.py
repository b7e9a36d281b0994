"""Compiled kernels vs the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat N]

Also times the end-to-end operations that use the kernels (integer
factorization and a regulator) under each backend.
"""
import argparse
import importlib
import random
import timeit

from equiareal import _kernels_py as py

try:
    compiled = importlib.import_module("equiareal._kernels")
except ImportError:
    compiled = None


def kernel_cases():
    rng = random.Random(1)
    a = [rng.randrange(-(10**40), 10**40) for _ in range(40)]
    b = [rng.randrange(-(10**40), 10**40) for _ in range(40)]
    semiprime = 1000000007 * 998244353
    smooth = 2624072905728 * 1000003 * 999983
    return {
        "poly_mul 40x40 (40-digit)": lambda m: m.poly_mul(a, b),
        "pollard_brent 1e9 x 1e9": lambda m: m.pollard_brent(semiprime, 1, 2, 2_000_000),
        "trial_division to 1e5": lambda m: m.trial_division(smooth, 100_000),
    }


def bench(fn, repeat):
    timer = timeit.Timer(fn)
    number, _ = timer.autorange()
    return min(timer.repeat(repeat, number)) / number


def end_to_end(repeat):
    import os
    import subprocess
    import sys

    code = (
        "import time;from equiareal import BACKEND;from equiareal.algebra import factor_integer;"
        "from equiareal.suites import e2_data;from equiareal.heights import HeightContext, regulator;"
        "t=time.perf_counter();[factor_integer(1000000007*998244353*k) for k in range(1,40)];f=time.perf_counter()-t;"
        "c,P,_=e2_data();t=time.perf_counter();regulator(HeightContext(c),P);r=time.perf_counter()-t;"
        "print(BACKEND, f, r)"
    )
    rows = []
    for pure in ("0", "1"):
        env = dict(os.environ, EQUIAREAL_PURE_PYTHON=pure) if pure == "1" else {k: v for k, v in os.environ.items() if k != "EQUIAREAL_PURE_PYTHON"}
        best = None
        for _ in range(repeat):
            out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True).stdout.split()
            vals = (out[0], float(out[1]), float(out[2]))
            best = vals if best is None else (vals[0], min(best[1], vals[1]), min(best[2], vals[2]))
        rows.append(best)
    return rows


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()
    print(f"{'kernel':32} {'python':>12} {'compiled':>12} {'speedup':>8}")
    for name, fn in kernel_cases().items():
        tp = bench(lambda: fn(py), args.repeat)
        if compiled is None:
            print(f"{name:32} {tp * 1e6:10.1f}us {'n/a':>12}")
            continue
        tc = bench(lambda: fn(compiled), args.repeat)
        print(f"{name:32} {tp * 1e6:10.1f}us {tc * 1e6:10.1f}us {tp / tc:7.1f}x")
    print()
    print(f"{'backend':10} {'factor 39 semiprimes':>22} {'E2 regulator':>14}")
    for backend, f, r in end_to_end(max(1, args.repeat // 2)):
        print(f"{backend:10} {f * 1e3:20.1f}ms {r * 1e3:12.1f}ms")


if __name__ == "__main__":
    main()
