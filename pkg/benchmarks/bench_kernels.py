#!/usr/bin/env python3
"""Benchmark the compiled term kernel against the pure-Python fallback.

Runs representative workloads (big multiplications, binomial divisions, a
full arity-4 word expansion, and a certificate build + verification) under
each available kernel and prints a comparison table.

    python benchmarks/bench_kernels.py [--repeat N]
"""

from __future__ import annotations

import argparse
import random
import time

from intshuffle import _kernel
from intshuffle.conditions import ideal_certificate, verify_ideal_certificate, _cofactors
from intshuffle.generators import reduce3, verify_certificate, _reduce3_shifted
from intshuffle.poly import LaurentPoly, exact_div, z
from intshuffle.shuffle import _shuffle_word_cached, shuffle_word


def _random_poly(rng: random.Random, nvars: int, nterms: int) -> LaurentPoly:
    terms = {}
    for _ in range(nterms):
        mono = tuple(rng.randint(-3, 3) for _ in range(2 + nvars))
        terms[mono] = rng.randint(-9, 9) or 1
    return LaurentPoly(terms)


def _clear_caches() -> None:
    _shuffle_word_cached.cache_clear()
    _reduce3_shifted.cache_clear()
    _cofactors.cache_clear()


def bench_mul(rng: random.Random) -> None:
    a = _random_poly(rng, 4, 600)
    b = _random_poly(rng, 4, 600)
    a * b


def bench_div(rng: random.Random) -> None:
    q = _random_poly(rng, 4, 4000)
    d = z(1) - z(2)
    exact_div(q * d, d)


def bench_word(rng: random.Random) -> None:
    _clear_caches()
    shuffle_word([2, 0, 1, 2])


def bench_reduce3(rng: random.Random) -> None:
    _clear_caches()
    verify_certificate(reduce3([3, 1, 0]))


def bench_ideal_cert(rng: random.Random) -> None:
    _clear_caches()
    verify_ideal_certificate(ideal_certificate([1, 0, 2]))


BENCHES = [
    ("mul 600x600 terms", bench_mul),
    ("exact_div by z1-z2", bench_div),
    ("expand sh[2,0,1,2]", bench_word),
    ("reduce3 + verify [3,1,0]", bench_reduce3),
    ("ideal cert + verify [1,0,2]", bench_ideal_cert),
]


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    kernels = _kernel.available()
    print(f"kernels: {', '.join(kernels)}\n")
    header = f"{'benchmark':<28}" + "".join(f"{k:>12}" for k in kernels)
    if len(kernels) > 1:
        header += f"{'speedup':>10}"
    print(header)
    print("-" * len(header))
    for name, fn in BENCHES:
        best: dict[str, float] = {}
        for kernel in kernels:
            _kernel.use(kernel)
            times = []
            for _ in range(args.repeat):
                rng = random.Random(7)
                t0 = time.perf_counter()
                fn(rng)
                times.append(time.perf_counter() - t0)
            best[kernel] = min(times)
        row = f"{name:<28}" + "".join(f"{best[k]:>11.3f}s" for k in kernels)
        if "cython" in best and "python" in best and best["cython"] > 0:
            row += f"{best['python'] / best['cython']:>9.1f}x"
        print(row)
    _kernel.use("cython" if "cython" in kernels else "python")


if __name__ == "__main__":
    main()
