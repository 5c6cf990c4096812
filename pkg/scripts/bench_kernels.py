#!/usr/bin/env python
"""Benchmark the compiled term-arithmetic kernels against the pure-Python
fallback.

Run after installing the package:

    python scripts/bench_kernels.py
"""

import random
import time

from orediamond import _kernel_py
from orediamond.rational import Q

try:
    from orediamond import _kernel_c
except ImportError:
    _kernel_c = None


def random_terms(rng, nterms, maxdeg, maxcoef=50):
    terms = {}
    while len(terms) < nterms:
        exp = (rng.randrange(maxdeg + 1), rng.randrange(maxdeg + 1))
        c = Q(rng.randrange(-maxcoef, maxcoef + 1) or 1, rng.randrange(1, 8))
        terms[exp] = c
    return terms


def bench(kernel, pairs, reps):
    start = time.perf_counter()
    for _ in range(reps):
        for a, b in pairs:
            prod = kernel.kmul(a, b)
            kernel.kadd(prod, a)
            kernel.ksub(prod, b)
    return time.perf_counter() - start


def main():
    rng = random.Random(20260824)
    sizes = [(10, 6), (40, 12), (120, 20)]
    reps = 20
    print(f"{'terms':>6} {'maxdeg':>7} {'python (s)':>11} {'compiled (s)':>13} {'speedup':>8}")
    for nterms, maxdeg in sizes:
        pairs = [
            (random_terms(rng, nterms, maxdeg), random_terms(rng, nterms, maxdeg))
            for _ in range(10)
        ]
        t_py = bench(_kernel_py, pairs, reps)
        if _kernel_c is None:
            print(f"{nterms:>6} {maxdeg:>7} {t_py:>11.4f} {'unavailable':>13} {'-':>8}")
            continue
        t_c = bench(_kernel_c, pairs, reps)
        # sanity: both backends agree
        for a, b in pairs:
            assert _kernel_py.kmul(a, b) == _kernel_c.kmul(a, b)
        print(f"{nterms:>6} {maxdeg:>7} {t_py:>11.4f} {t_c:>13.4f} {t_py / t_c:>8.2f}x")


if __name__ == "__main__":
    main()
