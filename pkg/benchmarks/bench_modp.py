#!/usr/bin/env python3
"""Compare the compiled and pure-Python mod-p kernels (matmul + rref).

Run:  python3 benchmarks/bench_modp.py [--size N] [--reps R] [--prime P]
"""

import argparse
import random
import time

from hopfgalois import _modp_py
from hopfgalois.linalg import BACKEND

try:
    from hopfgalois import _modp_fast
except ImportError:
    _modp_fast = None


def bench(fn, reps):
    best = float("inf")
    out = None
    for _ in range(reps):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--size", type=int, default=120)
    ap.add_argument("--reps", type=int, default=5)
    ap.add_argument("--prime", type=int, default=10007)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    n, p = args.size, args.prime
    rng = random.Random(args.seed)
    a = [rng.randrange(p) for _ in range(n * n)]
    b = [rng.randrange(p) for _ in range(n * n)]

    print(f"active backend at import: {BACKEND}")
    print(f"matrices: {n}x{n} over F_{p}, best of {args.reps}\n")

    backends = [("pure", _modp_py)]
    if _modp_fast is not None:
        backends.append(("compiled", _modp_fast))

    results = {}
    for name, mod in backends:
        t_mm, out_mm = bench(lambda: mod.matmul_modp(a, n, n, b, n, n, p),
                             args.reps)
        t_rr, out_rr = bench(lambda: mod.rref_modp(list(a), n, n, p),
                             args.reps)
        results[name] = (t_mm, t_rr, out_mm, out_rr)
        print(f"{name:9}  matmul {t_mm*1e3:9.2f} ms   rref {t_rr*1e3:9.2f} ms")

    if len(results) == 2:
        pm, pr = results["pure"][0], results["pure"][1]
        cm, cr = results["compiled"][0], results["compiled"][1]
        print(f"\nspeedup    matmul {pm/cm:8.1f}x    rref {pr/cr:8.1f}x")
        assert results["pure"][2] == results["compiled"][2], "matmul mismatch"
        assert results["pure"][3][0] == list(results["compiled"][3][0]), \
            "rref mismatch"
        assert list(results["pure"][3][1]) == list(results["compiled"][3][1])
        print("agreement: identical results from both backends")
    else:
        print("\ncompiled backend unavailable; benchmarked pure only")


if __name__ == "__main__":
    main()
