#!/usr/bin/env python3
"""Benchmark the compiled modular charpoly kernel against the numpy fallback.

Times the per-prime kernel on random symmetric integer matrices, the full
exact characteristic polynomial through each backend, and one end-to-end
torsion computation.  Run after `pip install -e . --no-build-isolation`:

    python3 benchmarks/bench_kernels.py
"""

import random
import time

import numpy as np

from graphtorsion._kernels import HAVE_COMPILED, charpoly_mod, charpoly_mod_fallback
from graphtorsion.chains import build_chain
from graphtorsion.constructors import cross_polytope
from graphtorsion.exact import ExactMatrix, char_poly_berkowitz, char_poly_modular
from graphtorsion.simplicial import clique_complex
from graphtorsion.torsion import torsion_dirac

PRIME = 33554393


def random_symmetric(n: int, seed: int) -> ExactMatrix:
    rng = random.Random(seed)
    a = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1):
            a[i][j] = a[j][i] = rng.randint(-4, 4)
    return ExactMatrix.from_rows(a)


def time_call(fn, *args, repeat=3):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    print(f"compiled kernel available: {HAVE_COMPILED}")
    print()
    print("per-prime kernel (one charpoly mod p)")
    print(f"{'n':>6} {'compiled':>12} {'numpy':>12} {'speedup':>9}")
    for n in (50, 100, 200, 400, 800):
        m = random_symmetric(n, n).to_int64() % PRIME
        t_fast = time_call(charpoly_mod, m, PRIME)
        t_slow = time_call(charpoly_mod_fallback, m, PRIME)
        same = np.array_equal(charpoly_mod(m, PRIME),
                              charpoly_mod_fallback(m, PRIME))
        assert same, "kernels disagree"
        print(f"{n:>6} {t_fast:>11.4f}s {t_slow:>11.4f}s {t_slow / t_fast:>8.2f}x")

    print()
    print("full exact charpoly: Berkowitz (pure) vs modular CRT")
    print(f"{'n':>6} {'berkowitz':>12} {'modular':>12}")
    for n in (16, 32, 64):
        m = random_symmetric(n, 2 * n)
        t_b = time_call(char_poly_berkowitz, m, repeat=1)
        t_m = time_call(char_poly_modular, m, repeat=1)
        assert char_poly_berkowitz(m).coeffs == char_poly_modular(m).coeffs
        print(f"{n:>6} {t_b:>11.4f}s {t_m:>11.4f}s")

    print()
    cd = build_chain(clique_complex(cross_polytope(4)))
    t0 = time.perf_counter()
    a = torsion_dirac(cd)
    print(f"end-to-end: torsion of the 4-dimensional cross polytope "
          f"(largest block 80x80): {a} in {time.perf_counter() - t0:.2f}s")


if __name__ == "__main__":
    main()
