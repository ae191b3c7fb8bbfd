#!/usr/bin/env python3
"""Compare the compiled kernels against the pure-Python twin.

Run after building the extension:

    python benchmarks/bench_backends.py
"""

import time

import ducci._kernels_py as pure

try:
    import ducci._kernels as compiled
except ImportError:
    compiled = None


def timeit(fn, repeats=3):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def bench_brent(mod):
    # The pre-period sweep grid: worst cell is m=23, n=9 (per > 10^5).
    for n in (1, 3, 5, 7, 9):
        for m in range(2, 25):
            mod.brent_lenper([0] * (n - 1) + [1], m, 10**8)


def bench_rows(mod):
    mod.coeff_row_mod(24, 9, 200_000)


def bench_successors(mod):
    mod.successor_array(4, 9)  # 262144 nodes


def bench_sweep(mod):
    mod.sweep_kernel(8, 5, 3, 0, 8**5, 10**8)


CASES = [
    ("orbit racing, basic-tuple grid m<=24 odd n<=9", bench_brent),
    ("coefficient row march to r=200000 (m=24, n=9)", bench_rows),
    ("successor array for Z_4^9", bench_successors),
    ("kernel sweep over Z_8^5", bench_sweep),
]


def main():
    if compiled is None:
        print("compiled extension not available; showing pure-Python only")
    rows = []
    for name, fn in CASES:
        t_pure = timeit(lambda: fn(pure))
        if compiled is not None:
            t_comp = timeit(lambda: fn(compiled))
            rows.append((name, t_pure, t_comp, t_pure / t_comp))
        else:
            rows.append((name, t_pure, None, None))
    width = max(len(name) for name, *_ in rows)
    print(f"{'case':<{width}}  {'pure':>9}  {'cython':>9}  {'speedup':>8}")
    for name, t_pure, t_comp, ratio in rows:
        if t_comp is None:
            print(f"{name:<{width}}  {t_pure:>8.3f}s  {'-':>9}  {'-':>8}")
        else:
            print(f"{name:<{width}}  {t_pure:>8.3f}s  {t_comp:>8.3f}s  {ratio:>7.1f}x")


if __name__ == "__main__":
    main()
