#!/usr/bin/env python3
"""Benchmark the compiled prime-field kernels against the pure-Python
fallback.

Runs rref and matmul on random matrices at a few sizes and prints a small
table with the speedup.  The compiled extension is loaded directly, so this
works regardless of the GLSW_PURE setting.
"""

import argparse
import random
import time

from glsw import _fp_fallback

try:
    from glsw import _fpcore
except ImportError:
    _fpcore = None


def bench(fn, repeat, *args):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--sizes", default="50,100,200")
    parser.add_argument("--prime", type=int, default=101)
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    rng = random.Random(args.seed)
    p = args.prime
    print(f"prime = {p}, compiled kernel available: {_fpcore is not None}")
    header = f"{'op':<8}{'size':>6}{'python':>12}{'compiled':>12}{'speedup':>10}"
    print(header)
    print("-" * len(header))
    for n in (int(s) for s in args.sizes.split(",")):
        a = [rng.randrange(p) for _ in range(n * n)]
        b = [rng.randrange(p) for _ in range(n * n)]

        t_py = bench(_fp_fallback.rref, args.repeat, list(a), n, n, p)
        if _fpcore is not None:
            t_c = bench(_fpcore.rref, args.repeat, list(a), n, n, p)
            print(f"{'rref':<8}{n:>6}{t_py:>12.4f}{t_c:>12.4f}{t_py / t_c:>9.1f}x")
        else:
            print(f"{'rref':<8}{n:>6}{t_py:>12.4f}{'-':>12}{'-':>10}")

        t_py = bench(_fp_fallback.matmul, args.repeat, a, b, n, n, n, p)
        if _fpcore is not None:
            t_c = bench(_fpcore.matmul, args.repeat, a, b, n, n, n, p)
            print(f"{'matmul':<8}{n:>6}{t_py:>12.4f}{t_c:>12.4f}{t_py / t_c:>9.1f}x")
        else:
            print(f"{'matmul':<8}{n:>6}{t_py:>12.4f}{'-':>12}{'-':>10}")

    if _fpcore is not None:
        # agreement spot check
        n = 20
        a = [rng.randrange(p) for _ in range(n * n)]
        b = [rng.randrange(p) for _ in range(n * n)]
        a1, a2 = list(a), list(a)
        piv1 = _fp_fallback.rref(a1, n, n, p)
        piv2 = _fpcore.rref(a2, n, n, p)
        same = list(piv1) == list(piv2) and a1 == list(a2)
        same = same and list(_fpcore.matmul(a, b, n, n, n, p)) == _fp_fallback.matmul(
            a, b, n, n, n, p
        )
        print(f"kernels agree on random input: {same}")


if __name__ == "__main__":
    main()
