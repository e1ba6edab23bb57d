"""Compare the compiled integer kernels against the pure Python fallback.

Runs matrix product, determinant, characteristic polynomial, and pfaffian
on identical random integer inputs and reports per-call timing for each
backend.  Usage:

    python benchmarks/bench_kernels.py --sizes 4,8,12 --repeats 20
"""
import argparse
import random
import time

from sympair.exact import _purekernels

try:
    from sympair.exact import _ckernels
except ImportError:
    _ckernels = None


def rand_flat(rng, n, bound):
    return [rng.randint(-bound, bound) for _ in range(n * n)]


def rand_skew_flat(rng, n, bound):
    a = [0] * (n * n)
    for i in range(n):
        for j in range(i + 1, n):
            v = rng.randint(-bound, bound)
            a[i * n + j] = v
            a[j * n + i] = -v
    return a


def time_call(fn, repeats, *args):
    best = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn(*args)
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return best * 1e6


def bench_size(n, repeats, bound, seed):
    rng = random.Random(seed)
    a = rand_flat(rng, n, bound)
    b = rand_flat(rng, n, bound)
    skew = rand_skew_flat(rng, 2 * (n // 2) or 2, bound)
    sn = 2 * (n // 2) or 2
    ops = [
        ("matmul", lambda k: k.imatmul(a, b, n, n, n)),
        ("det", lambda k: k.idet(list(a), n)),
        ("charpoly", lambda k: k.icharpoly(a, n)),
        ("pfaffian", lambda k: k.ipfaffian(list(skew), sn)),
    ]
    rows = []
    for name, call in ops:
        pure_us = time_call(lambda: call(_purekernels), repeats)
        if _ckernels is not None:
            c_us = time_call(lambda: call(_ckernels), repeats)
            ratio = pure_us / c_us if c_us else float("inf")
            rows.append((name, pure_us, c_us, ratio))
        else:
            rows.append((name, pure_us, None, None))
    return rows


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sizes", default="4,8,12",
                        help="comma list of matrix sizes")
    parser.add_argument("--repeats", type=int, default=20,
                        help="repeats per op, best time kept")
    parser.add_argument("--bound", type=int, default=9,
                        help="entry bound for random integers")
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args(argv)

    sizes = [int(s) for s in args.sizes.split(",")]
    if _ckernels is None:
        print("compiled backend unavailable; timing pure backend only")
    header = f"{'size':>5} {'op':>9} {'pure (us)':>12} {'compiled (us)':>14} {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for n in sizes:
        for name, pure_us, c_us, ratio in bench_size(
                n, args.repeats, args.bound, args.seed):
            if c_us is None:
                print(f"{n:>5} {name:>9} {pure_us:>12.1f} {'-':>14} {'-':>8}")
            else:
                print(f"{n:>5} {name:>9} {pure_us:>12.1f} {c_us:>14.1f} "
                      f"{ratio:>7.2f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
